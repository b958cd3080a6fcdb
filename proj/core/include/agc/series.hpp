#ifndef AGC_SERIES_HPP
#define AGC_SERIES_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>

#include "agc/multipoly.hpp"

namespace agc {

/// Lazily evaluated univariate power series.
///
/// A series owns a coefficient cache and a deterministic producer that
/// extends it on demand.  Coefficients never change once produced; forcing is
/// serialized by an internal lock so concurrent access behaves like some
/// sequential order.  Producers may read their own previously produced prefix
/// through the cache reference they are handed, but must not call coeff() on
/// themselves.
class LazySeries {
public:
    /// Producer contract: extend `cache` so indices 0..target are present.
    using Producer = std::function<void(int target, std::vector<FieldElement>& cache)>;

    LazySeries() = default;
    LazySeries(LevelPtr level, Producer producer);

    static LazySeries zero(const LevelPtr& level);
    static LazySeries constant(const FieldElement& c);
    /// Finite series: the given coefficients, then zeros.
    static LazySeries from_coefficients(LevelPtr level, std::vector<FieldElement> coeffs);
    /// t^k
    static LazySeries monomial(const LevelPtr& level, int k);

    const LevelPtr& level() const;
    /// Coefficient of t^k (forces up to k).
    FieldElement coeff(int k) const;
    void ensure(int n) const;
    int known_precision() const;
    /// Coefficients 0..n as a vector (forces).
    std::vector<FieldElement> prefix(int n) const;

    LazySeries operator+(const LazySeries& rhs) const;
    LazySeries operator-(const LazySeries& rhs) const;
    LazySeries operator*(const LazySeries& rhs) const;
    LazySeries operator*(const FieldElement& c) const;
    /// Multiply by t^k.
    LazySeries shifted(int k) const;
    /// Formal derivative.
    LazySeries derivative() const;
    /// Division; the divisor's trailing zeros are stripped first, so this is
    /// valid whenever ord(rhs) <= ord(*this) up to the forced precision.
    /// `ord_rhs` must be the exact order of rhs (caller-established).
    LazySeries divided_by(const LazySeries& rhs, int ord_rhs) const;

private:
    struct State {
        LevelPtr level;
        std::vector<FieldElement> cache;
        Producer producer;
        std::mutex lock;
    };
    std::shared_ptr<State> st_;
};

/// Least exponent with a nonzero coefficient, probed up to `bound`
/// (inclusive).  Returns nullopt when the prefix is identically zero — an
/// explicit "exceeds bound" outcome, never silently infinite.
std::optional<int> series_order(const LazySeries& s, int bound);

/// Composition f(x(t), y(t)) for a 2-variable polynomial f, as a lazy series.
LazySeries compose_series(const MultiPoly& f, const LazySeries& x, const LazySeries& y);

/// Truncated composition: coefficients 0..N of f(x(t), y(t)).
std::vector<FieldElement> series_subst(const MultiPoly& f, const LazySeries& x,
                                       const LazySeries& y, int N);

/// The unique series W with W(0) = 0 and g(s, W(s)) = 0, where g is a
/// 2-variable polynomial (variable 0 = the parameter s, variable 1 = the
/// solved variable) with g(0,0) = 0 and dg/dW(0,0) != 0.  Computed by Newton
/// lifting; coefficients agree with indeterminate-coefficient expansion.
LazySeries solve_implicit(const MultiPoly& g);

} // namespace agc

#endif
