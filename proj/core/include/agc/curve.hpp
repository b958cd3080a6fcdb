#ifndef AGC_CURVE_HPP
#define AGC_CURVE_HPP

#include <optional>

#include "agc/elimination.hpp"
#include "agc/factor.hpp"
#include "agc/io.hpp"

namespace agc {

/// A closed point of the projective plane lying on a curve, presented in the
/// lowest chart containing it (chart i = set X_i to 1; a point belongs to the
/// chart of its first nonzero coordinate).  Coordinates live in the residue
/// field, reached from the curve's base tower by the recorded extensions.
struct ClosedPoint {
    int chart = 2;
    LevelPtr level;      // residue field (tower level over the curve base)
    FieldElement x, y;   // affine coordinates: the two non-chart variables in order
    int degree = 1;      // [k(P) : F]
    std::string key;     // canonical defining data (deterministic, unique)
    std::string id;      // short hash of key, used in place labels

    /// Projective coordinates (x0:x1:x2) over `level`.
    std::vector<FieldElement> projective() const;
    /// Human-readable point display.
    std::string display() const;
};

ClosedPoint make_closed_point(const FieldTower& base, int chart, const LevelPtr& level,
                              const FieldElement& x, const FieldElement& y);

class PlaneCurve {
public:
    enum class Irreducibility { verified, assumed };

    /// Validates homogeneity and (probabilistically) irreducibility over the
    /// base field; absolute irreducibility is a declared precondition of the
    /// whole pipeline and is not decided here.
    static PlaneCurve make(FieldTower base, MultiPoly form, Rng& rng,
                           bool check_irreducible = true);

    const FieldTower& base() const { return base_; }
    const MultiPoly& form() const { return form_; }
    int degree() const { return form_.total_degree(); }
    Irreducibility irreducibility() const { return irred_; }

    /// Dehomogenized equation on chart i, in the two remaining variables.
    MultiPoly chart_equation(int chart) const;

private:
    FieldTower base_;
    MultiPoly form_;
    Irreducibility irred_ = Irreducibility::assumed;
};

/// Exactly the closed points where the curve is singular, one entry per
/// Galois orbit, attributed to the lowest chart.  Rejects curves with a
/// multiple component.
std::vector<ClosedPoint> singular_points(const PlaneCurve& c, Rng& rng);

/// All points of the curve over the given extension level of the base tower,
/// as canonically normalized projective triples, sorted.
std::vector<std::vector<FieldElement>> rational_points(const PlaneCurve& c,
                                                       const LevelPtr& ext, Rng& rng);

/// Extension of the base tower of relative degree k (k = 1 gives the base).
LevelPtr extension_level(const PlaneCurve& c, int k, Rng& rng);

/// Local bivariate equation with the point moved to the origin.
MultiPoly translate_to_origin(const PlaneCurve& c, const ClosedPoint& pt);

/// Chart attribution test and canonical normalization of projective triples.
int chart_of(const std::vector<FieldElement>& projective);
std::vector<FieldElement> normalize_point(const std::vector<FieldElement>& projective);

/// Closed point from a projective triple over some extension level.
ClosedPoint closed_point_from_projective(const PlaneCurve& c,
                                         const std::vector<FieldElement>& proj);

} // namespace agc

#endif
