#include "agc/field.hpp"

#include <algorithm>
#include <sstream>

namespace agc {

namespace {

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t invm(uint64_t a, uint64_t p) {
    // extended Euclid; p prime, a != 0
    int64_t t = 0, newt = 1;
    int64_t r = (int64_t)p, newr = (int64_t)a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

using Span = const uint64_t*;

// out += a*b at the given level; `out` must hold level->flat_size() digits and
// is accumulated into.  Scratch space comes from the caller's stack vectors.
void mul_acc(const FieldLevel* L, Span a, Span b, uint64_t* out);

void mul_acc(const FieldLevel* L, Span a, Span b, uint64_t* out) {
    const uint64_t p = L->characteristic();
    if (L->is_prime_field()) {
        out[0] = addm(out[0], mulm(a[0], b[0], p), p);
        return;
    }
    const int d = L->degree();
    const size_t s = L->parent()->flat_size();
    const FieldLevel* P = L->parent().get();
    // school-book product into 2d-1 parent-sized chunks
    std::vector<uint64_t> tmp((2 * d - 1) * s, 0);
    for (int i = 0; i < d; ++i) {
        // skip zero chunks
        bool az = true;
        for (size_t t = 0; t < s; ++t) if (a[i * s + t]) { az = false; break; }
        if (az) continue;
        for (int j = 0; j < d; ++j) {
            bool bz = true;
            for (size_t t = 0; t < s; ++t) if (b[j * s + t]) { bz = false; break; }
            if (bz) continue;
            mul_acc(P, a + i * s, b + j * s, tmp.data() + (size_t)(i + j) * s);
        }
    }
    // reduce chunks 2d-2 .. d by the monic modulus: x^d = -sum m_r x^r
    std::vector<uint64_t> c(s), prod(s);
    for (int t = 2 * d - 2; t >= d; --t) {
        uint64_t* chunk = tmp.data() + (size_t)t * s;
        bool z = true;
        for (size_t k = 0; k < s; ++k) if (chunk[k]) { z = false; break; }
        if (z) continue;
        std::copy(chunk, chunk + s, c.begin());
        std::fill(chunk, chunk + s, 0);
        for (int r = 0; r < d; ++r) {
            const auto& m = L->modulus_digit(r);
            bool mz = true;
            for (size_t k = 0; k < s; ++k) if (m[k]) { mz = false; break; }
            if (mz) continue;
            std::fill(prod.begin(), prod.end(), 0);
            mul_acc(P, c.data(), m.data(), prod.data());
            uint64_t* dst = tmp.data() + (size_t)(t - d + r) * s;
            for (size_t k = 0; k < s; ++k) dst[k] = subm(dst[k], prod[k], p);
        }
    }
    for (size_t k = 0; k < (size_t)d * s; ++k) out[k] = addm(out[k], tmp[k], p);
}

} // namespace

LevelPtr FieldLevel::prime_field(uint64_t p) {
    require(p >= 2, "characteristic must be at least 2");
    require(p < (1ull << 31), "characteristic too large");
    for (uint64_t d = 2; d * d <= p; ++d)
        require(p % d != 0, "characteristic must be prime");
    auto lvl = std::shared_ptr<FieldLevel>(new FieldLevel());
    lvl->p_ = p;
    return lvl;
}

LevelPtr FieldLevel::extension(LevelPtr parent, std::string name,
                               std::vector<FieldElement> modulus_coeffs) {
    require(parent != nullptr, "extension needs a parent level");
    require(modulus_coeffs.size() >= 2, "extension degree must be at least 2");
    auto lvl = std::shared_ptr<FieldLevel>(new FieldLevel());
    lvl->parent_ = parent;
    lvl->p_ = parent->p_;
    lvl->index_ = parent->index_ + 1;
    lvl->degree_ = (int)modulus_coeffs.size();
    lvl->flat_size_ = parent->flat_size_ * lvl->degree_;
    lvl->name_ = std::move(name);
    lvl->modulus_flat_.reserve(modulus_coeffs.size());
    for (auto& c : modulus_coeffs) {
        FieldElement e = c.embedded_into(parent);
        lvl->modulus_flat_.push_back(e.digits());
    }
    return lvl;
}

FieldElement FieldLevel::modulus_coefficient(int i) const {
    return FieldElement::from_digits(parent_, modulus_flat_[i]);
}

bool FieldLevel::has_ancestor(const FieldLevel* other) const {
    for (const FieldLevel* l = this; l != nullptr; l = l->parent_.get())
        if (l == other) return true;
    return false;
}

std::string FieldLevel::cardinality_string() const {
    std::ostringstream os;
    os << p_;
    if (flat_size_ > 1) os << "^" << flat_size_;
    return os.str();
}

uint64_t FieldLevel::cardinality() const {
    uint64_t c = 1;
    for (size_t i = 0; i < flat_size_; ++i) {
        check_internal(c <= (1ull << 62) / p_, "cardinality exceeds 2^62");
        c *= p_;
    }
    return c;
}

FieldElement FieldElement::zero(const LevelPtr& level) {
    FieldElement e;
    e.level_ = level;
    e.digits_.assign(level->flat_size(), 0);
    return e;
}

FieldElement FieldElement::one(const LevelPtr& level) { return from_integer(level, 1); }

FieldElement FieldElement::from_integer(const LevelPtr& level, int64_t n) {
    FieldElement e = zero(level);
    int64_t p = (int64_t)level->characteristic();
    int64_t r = n % p;
    if (r < 0) r += p;
    e.digits_[0] = (uint64_t)r;
    return e;
}

FieldElement FieldElement::generator(const LevelPtr& level) {
    require(!level->is_prime_field(), "prime field has no generator variable");
    FieldElement e = zero(level);
    e.digits_[level->parent()->flat_size()] = 1; // the class of the new variable
    return e;
}

FieldElement FieldElement::from_digits(const LevelPtr& level, std::vector<uint64_t> digits) {
    require(digits.size() == level->flat_size(), "digit vector has wrong length");
    for (auto d : digits) require(d < level->characteristic(), "digit out of range");
    FieldElement e;
    e.level_ = level;
    e.digits_ = std::move(digits);
    return e;
}

bool FieldElement::is_zero() const {
    for (auto d : digits_) if (d) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (digits_.empty() || digits_[0] != 1) return false;
    for (size_t i = 1; i < digits_.size(); ++i) if (digits_[i]) return false;
    return true;
}

std::vector<FieldElement> FieldElement::parent_coefficients() const {
    require(!level_->is_prime_field(), "prime-field element has no parent coefficients");
    const auto& P = level_->parent();
    size_t s = P->flat_size();
    std::vector<FieldElement> out;
    out.reserve(level_->degree());
    for (int i = 0; i < level_->degree(); ++i) {
        std::vector<uint64_t> chunk(digits_.begin() + (size_t)i * s,
                                    digits_.begin() + (size_t)(i + 1) * s);
        out.push_back(from_digits(P, std::move(chunk)));
    }
    return out;
}

std::vector<FieldElement> FieldElement::coordinates_over(const LevelPtr& base) const {
    require(level_->has_ancestor(base.get()), "base is not an ancestor level");
    size_t s = base->flat_size();
    size_t n = level_->flat_size() / s;
    std::vector<FieldElement> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint64_t> chunk(digits_.begin() + i * s, digits_.begin() + (i + 1) * s);
        out.push_back(from_digits(base, std::move(chunk)));
    }
    return out;
}

FieldElement FieldElement::embedded_into(const LevelPtr& target) const {
    if (target == level_) return *this;
    require(target->has_ancestor(level_.get()), "element does not embed into target level");
    FieldElement e = zero(target);
    std::copy(digits_.begin(), digits_.end(), e.digits_.begin());
    return e;
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    uint64_t p = level_->characteristic();
    for (auto& d : e.digits_) d = d ? p - d : 0;
    return e;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    FieldElement a = embedded_into(L), b = rhs.embedded_into(L);
    uint64_t p = L->characteristic();
    for (size_t i = 0; i < a.digits_.size(); ++i)
        a.digits_[i] = addm(a.digits_[i], b.digits_[i], p);
    return a;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    FieldElement a = embedded_into(L), b = rhs.embedded_into(L);
    uint64_t p = L->characteristic();
    for (size_t i = 0; i < a.digits_.size(); ++i)
        a.digits_[i] = subm(a.digits_[i], b.digits_[i], p);
    return a;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    LevelPtr L = join_levels(level_, rhs.level_);
    FieldElement a = embedded_into(L), b = rhs.embedded_into(L);
    FieldElement out = zero(L);
    mul_acc(L.get(), a.digits_.data(), b.digits_.data(), out.digits_.data());
    return out;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

FieldElement FieldElement::inverse() const {
    require(!is_zero(), "division by zero");
    const LevelPtr& L = level_;
    if (L->is_prime_field()) {
        FieldElement e = *this;
        e.digits_[0] = invm(digits_[0], L->characteristic());
        return e;
    }
    // Extended Euclid on (this-as-poly, modulus) over the parent level.
    const LevelPtr& P = L->parent();
    int d = L->degree();
    auto coeffs = parent_coefficients();
    std::vector<FieldElement> r0(d + 1), r1 = coeffs;
    for (int i = 0; i < d; ++i) r0[i] = L->modulus_coefficient(i);
    r0[d] = FieldElement::one(P);
    auto deg = [](const std::vector<FieldElement>& v) {
        for (int i = (int)v.size() - 1; i >= 0; --i)
            if (!v[i].is_zero()) return i;
        return -1;
    };
    std::vector<FieldElement> t0{FieldElement::zero(P)}, t1{FieldElement::one(P)};
    while (true) {
        int d1 = deg(r1);
        check_internal(d1 >= 0, "modulus not invertible: reducible extension");
        if (d1 == 0) break;
        // r0 = q*r1 + r; long division
        int d0 = deg(r0);
        std::vector<FieldElement> q((size_t)std::max(d0 - d1 + 1, 1), FieldElement::zero(P));
        std::vector<FieldElement> rem = r0;
        FieldElement lc_inv = r1[d1].inverse();
        for (int k = d0; k >= d1; --k) {
            if (rem[k].is_zero()) continue;
            FieldElement f = rem[k] * lc_inv;
            q[k - d1] = f;
            for (int j = 0; j <= d1; ++j) rem[k - d1 + j] = rem[k - d1 + j] - f * r1[j];
        }
        // (t0, t1) = (t1, t0 - q*t1)
        std::vector<FieldElement> t2(std::max(t0.size(), q.size() + t1.size()),
                                     FieldElement::zero(P));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j)
                t2[i + j] = t2[i + j] - q[i] * t1[j];
        r0 = std::move(r1); r1 = std::move(rem);
        while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r1 is a nonzero constant; inverse = t1 / r1[0]
    FieldElement c = r1[0].inverse();
    FieldElement out = zero(L);
    size_t s = P->flat_size();
    for (size_t i = 0; i < t1.size() && i < (size_t)d; ++i) {
        FieldElement v = t1[i] * c;
        std::copy(v.digits().begin(), v.digits().end(), out.digits_.begin() + i * s);
    }
    return out;
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement base = *this;
    FieldElement acc = one(level_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::frobenius(unsigned k) const {
    FieldElement out = *this;
    for (unsigned i = 0; i < k; ++i) out = out.pow(level_->characteristic());
    return out;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (level_ == rhs.level_) return digits_ == rhs.digits_;
    // compare across related levels by embedding
    if (level_ && rhs.level_ && level_->has_ancestor(rhs.level_.get()))
        return digits_ == rhs.embedded_into(level_).digits_;
    if (level_ && rhs.level_ && rhs.level_->has_ancestor(level_.get()))
        return embedded_into(rhs.level_).digits_ == rhs.digits_;
    return false;
}

bool FieldElement::operator<(const FieldElement& rhs) const {
    if (level_ != rhs.level_) {
        if (level_ && rhs.level_) {
            if (level_->flat_size() != rhs.level_->flat_size())
                return level_->flat_size() < rhs.level_->flat_size();
        }
        return level_.get() < rhs.level_.get();
    }
    // most-significant digit first
    for (size_t i = digits_.size(); i-- > 0;)
        if (digits_[i] != rhs.digits_[i]) return digits_[i] < rhs.digits_[i];
    return false;
}

namespace {

// printing: recursive over parent coefficients
void print_element(std::ostream& os, const FieldElement& e, bool parenthesize_sums);

bool is_simple(const FieldElement& e) {
    // single term at this level?
    if (e.level()->is_prime_field()) return true;
    auto cs = e.parent_coefficients();
    int nonzero = 0;
    for (auto& c : cs) if (!c.is_zero()) ++nonzero;
    if (nonzero > 1) return false;
    for (auto& c : cs) if (!c.is_zero()) return is_simple(c);
    return true;
}

void print_element(std::ostream& os, const FieldElement& e, bool parenthesize_sums) {
    const auto& L = e.level();
    if (L->is_prime_field()) {
        os << e.digits()[0];
        return;
    }
    if (e.is_zero()) { os << "0"; return; }
    auto cs = e.parent_coefficients();
    bool sum = !is_simple(e);
    if (sum && parenthesize_sums) os << "(";
    bool first = true;
    for (int i = (int)cs.size() - 1; i >= 0; --i) {
        if (cs[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            print_element(os, cs[i], parenthesize_sums);
            continue;
        }
        if (!cs[i].is_one()) {
            print_element(os, cs[i], true);
            os << "*";
        }
        os << L->name();
        if (i > 1) os << "^" << i;
    }
    if (sum && parenthesize_sums) os << ")";
}

} // namespace

std::string FieldElement::to_string() const {
    std::ostringstream os;
    if (!level_) return "<null>";
    print_element(os, *this, false);
    return os.str();
}

std::vector<LevelPtr> FieldTower::levels() const {
    std::vector<LevelPtr> out;
    for (LevelPtr l = top_; l != nullptr; l = l->parent()) out.push_back(l);
    std::reverse(out.begin(), out.end());
    return out;
}

LevelPtr join_levels(const LevelPtr& a, const LevelPtr& b) {
    require(a != nullptr && b != nullptr, "null field level");
    if (a == b) return a;
    if (a->has_ancestor(b.get())) return a;
    if (b->has_ancestor(a.get())) return b;
    throw precondition_error("elements of unrelated field towers");
}

std::vector<FieldElement> all_elements(const LevelPtr& level) {
    size_t n = level->flat_size();
    uint64_t p = level->characteristic();
    double count = 1;
    for (size_t i = 0; i < n; ++i) count *= (double)p;
    require(count <= double(1 << 22), "field too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve((size_t)count);
    std::vector<uint64_t> digits(n, 0);
    while (true) {
        out.push_back(FieldElement::from_digits(level, digits));
        size_t i = 0;
        while (i < n && ++digits[i] == p) digits[i++] = 0;
        if (i == n) break;
    }
    return out;
}

} // namespace agc
