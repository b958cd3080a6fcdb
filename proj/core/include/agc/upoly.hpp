#ifndef AGC_UPOLY_HPP
#define AGC_UPOLY_HPP

#include <vector>

#include "agc/field.hpp"

namespace agc {

/// Dense univariate polynomial over a tower level.  Coefficients are stored
/// constant-first with no trailing zeros; the zero polynomial has an empty
/// coefficient vector.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(LevelPtr level) : level_(std::move(level)) {}
    UPoly(LevelPtr level, std::vector<FieldElement> coeffs);

    static UPoly zero(const LevelPtr& level) { return UPoly(level); }
    static UPoly constant(const LevelPtr& level, const FieldElement& c);
    static UPoly monomial(const LevelPtr& level, int deg, const FieldElement& c);
    /// The variable x itself.
    static UPoly x(const LevelPtr& level);

    const LevelPtr& level() const { return level_; }
    int degree() const { return (int)coeffs_.size() - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const FieldElement& leading() const;
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    UPoly embedded_into(const LevelPtr& target) const;

    UPoly operator+(const UPoly& rhs) const;
    UPoly operator-(const UPoly& rhs) const;
    UPoly operator*(const UPoly& rhs) const;
    UPoly operator*(const FieldElement& c) const;
    bool operator==(const UPoly& rhs) const;
    bool operator!=(const UPoly& rhs) const { return !(*this == rhs); }

    UPoly monic() const;
    UPoly derivative() const;
    FieldElement evaluate(const FieldElement& x) const;
    /// Substitute x -> x^k.
    UPoly inflate(int k) const;
    /// Reverse coefficients: x^deg * f(1/x).
    UPoly reversed() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    LevelPtr level_;
    std::vector<FieldElement> coeffs_;
};

/// Division with remainder; the divisor may be non-monic.
struct UPolyDivMod { UPoly quotient, remainder; };
UPolyDivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
bool divides(const UPoly& a, const UPoly& b); // a | b

/// Monic gcd.
UPoly gcd(const UPoly& a, const UPoly& b);

/// a^e mod m (e as plain integer).
UPoly powmod(const UPoly& a, uint64_t e, const UPoly& m);
/// a^(p^k) mod m via repeated p-th powers; avoids huge exponents.
UPoly frobenius_powmod(const UPoly& a, unsigned k, const UPoly& m);

/// Canonical comparison for deterministic orderings: by degree, then by
/// coefficients from the leading one down.
bool upoly_less(const UPoly& a, const UPoly& b);

} // namespace agc

#endif
