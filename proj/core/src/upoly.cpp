#include "agc/upoly.hpp"

#include <sstream>

namespace agc {

UPoly::UPoly(LevelPtr level, std::vector<FieldElement> coeffs)
    : level_(std::move(level)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = c.embedded_into(level_);
    normalize();
}

UPoly UPoly::constant(const LevelPtr& level, const FieldElement& c) {
    return UPoly(level, {c});
}

UPoly UPoly::monomial(const LevelPtr& level, int deg, const FieldElement& c) {
    std::vector<FieldElement> v((size_t)deg + 1, FieldElement::zero(level));
    v[deg] = c;
    return UPoly(level, std::move(v));
}

UPoly UPoly::x(const LevelPtr& level) {
    return monomial(level, 1, FieldElement::one(level));
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const FieldElement& UPoly::leading() const {
    check_internal(!coeffs_.empty(), "leading coefficient of zero polynomial");
    return coeffs_.back();
}

FieldElement UPoly::coeff(int i) const {
    if (i < 0 || i >= (int)coeffs_.size()) return FieldElement::zero(level_);
    return coeffs_[i];
}

UPoly UPoly::embedded_into(const LevelPtr& target) const {
    UPoly out(target);
    out.coeffs_.reserve(coeffs_.size());
    for (auto& c : coeffs_) out.coeffs_.push_back(c.embedded_into(target));
    return out;
}

UPoly UPoly::operator+(const UPoly& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    UPoly a = embedded_into(L), b = rhs.embedded_into(L);
    if (a.coeffs_.size() < b.coeffs_.size()) std::swap(a, b);
    for (size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    a.normalize();
    return a;
}

UPoly UPoly::operator-(const UPoly& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    UPoly a = embedded_into(L), b = rhs.embedded_into(L);
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    a.coeffs_.resize(n, FieldElement::zero(L));
    for (size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    a.normalize();
    return a;
}

UPoly UPoly::operator*(const UPoly& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    if (is_zero() || rhs.is_zero()) return UPoly(L);
    UPoly a = embedded_into(L), b = rhs.embedded_into(L);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                  FieldElement::zero(L));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(L, std::move(out));
}

UPoly UPoly::operator*(const FieldElement& c) const {
    UPoly out = *this;
    for (auto& a : out.coeffs_) a = a * c;
    out.normalize();
    return out;
}

bool UPoly::operator==(const UPoly& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == rhs.coeffs_[i])) return false;
    return true;
}

UPoly UPoly::monic() const {
    check_internal(!is_zero(), "monic() of zero polynomial");
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly(level_);
    std::vector<FieldElement> out(coeffs_.size() - 1, FieldElement::zero(level_));
    for (size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * FieldElement::from_integer(level_, (int64_t)i);
    return UPoly(level_, std::move(out));
}

FieldElement UPoly::evaluate(const FieldElement& x) const {
    LevelPtr L = join_levels(level_, x.level());
    FieldElement acc = FieldElement::zero(L);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UPoly UPoly::inflate(int k) const {
    if (is_zero()) return *this;
    std::vector<FieldElement> out((coeffs_.size() - 1) * (size_t)k + 1,
                                  FieldElement::zero(level_));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * (size_t)k] = coeffs_[i];
    return UPoly(level_, std::move(out));
}

UPoly UPoly::reversed() const {
    std::vector<FieldElement> out(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(level_, std::move(out));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        bool unit = coeffs_[i].is_one();
        if (i == 0 || !unit) {
            std::string s = coeffs_[i].to_string();
            bool needs_parens = s.find('+') != std::string::npos && i > 0;
            if (needs_parens) os << "(" << s << ")";
            else os << s;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

UPolyDivMod divmod(const UPoly& a, const UPoly& b) {
    require(!b.is_zero(), "division by zero polynomial");
    LevelPtr L = join_levels(a.level(), b.level());
    UPoly rem = a.embedded_into(L), bb = b.embedded_into(L);
    int db = bb.degree();
    if (rem.degree() < db) return {UPoly(L), rem};
    FieldElement lcinv = bb.leading().inverse();
    std::vector<FieldElement> q((size_t)(rem.degree() - db) + 1, FieldElement::zero(L));
    std::vector<FieldElement> r = rem.coeffs();
    for (int k = (int)r.size() - 1; k >= db; --k) {
        if (r[k].is_zero()) continue;
        FieldElement f = r[k] * lcinv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * bb.coeff(j);
    }
    return {UPoly(L, std::move(q)), UPoly(L, std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }
UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).quotient; }

bool divides(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

UPoly powmod(const UPoly& a, uint64_t e, const UPoly& m) {
    UPoly base = a % m;
    UPoly acc = UPoly::constant(m.level(), FieldElement::one(m.level()));
    while (e) {
        if (e & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return acc;
}

UPoly frobenius_powmod(const UPoly& a, unsigned k, const UPoly& m) {
    UPoly out = a % m;
    uint64_t p = m.level()->characteristic();
    for (unsigned i = 0; i < k; ++i) out = powmod(out, p, m);
    return out;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) == b.coeff(i)) continue;
        return a.coeff(i) < b.coeff(i);
    }
    return false;
}

} // namespace agc
