#ifndef AGC_FIELD_HPP
#define AGC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "agc/error.hpp"

namespace agc {

class FieldLevel;
using LevelPtr = std::shared_ptr<const FieldLevel>;

class FieldElement;

/// One level of a tower of finite fields.
///
/// The bottom level is the prime field F_p.  Every further level is
/// F_next = F_prev[name]/(modulus) for a monic irreducible modulus over
/// F_prev.  Levels are immutable and identified by object identity, so two
/// towers built independently never interoperate even if their defining
/// polynomials coincide.
///
/// Elements are stored flat: an element of a level of absolute degree N over
/// F_p is a vector of N digits in [0,p), the coordinates with respect to the
/// product basis of the tower.  The first `parent_size` digits of a level-k
/// element are exactly its constant coefficient as a level-(k-1) element,
/// which makes embedding a zero-pad and base-field expansion a regrouping.
class FieldLevel : public std::enable_shared_from_this<FieldLevel> {
public:
    static LevelPtr prime_field(uint64_t p);

    /// Extension by a monic polynomial, given as its coefficient list over
    /// the parent level (constant first, WITHOUT the leading 1).
    /// Irreducibility is the caller's responsibility; FieldTower::extend
    /// checks it.
    static LevelPtr extension(LevelPtr parent, std::string name,
                              std::vector<FieldElement> modulus_coeffs);

    uint64_t characteristic() const { return p_; }
    const LevelPtr& parent() const { return parent_; }
    bool is_prime_field() const { return parent_ == nullptr; }
    int index() const { return index_; }             // 0 = prime field
    int degree() const { return degree_; }           // over the parent
    size_t flat_size() const { return flat_size_; }  // degree over F_p
    const std::string& name() const { return name_; }

    /// Modulus coefficient i (0 <= i < degree), flat over the parent level.
    const std::vector<uint64_t>& modulus_digit(int i) const { return modulus_flat_[i]; }
    FieldElement modulus_coefficient(int i) const;

    /// True if `other` is this level or an ancestor of it.
    bool has_ancestor(const FieldLevel* other) const;

    /// Cardinality rendered as "p^k" (the number itself may not fit).
    std::string cardinality_string() const;
    /// Cardinality as an integer; throws if it exceeds 2^62.
    uint64_t cardinality() const;

private:
    FieldLevel() = default;

    LevelPtr parent_;
    uint64_t p_ = 0;
    int index_ = 0;
    int degree_ = 1;
    size_t flat_size_ = 1;
    std::string name_;
    std::vector<std::vector<uint64_t>> modulus_flat_;
};

/// An element of some tower level, in canonical (fully reduced) form.
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const LevelPtr& level);
    static FieldElement one(const LevelPtr& level);
    static FieldElement from_integer(const LevelPtr& level, int64_t n);
    /// The residue class of the level's own generator variable.
    static FieldElement generator(const LevelPtr& level);
    /// Element from flat F_p digits (length must equal level->flat_size()).
    static FieldElement from_digits(const LevelPtr& level, std::vector<uint64_t> digits);

    const LevelPtr& level() const { return level_; }
    const std::vector<uint64_t>& digits() const { return digits_; }
    bool is_zero() const;
    bool is_one() const;

    /// Coefficients over the immediate parent level (length = level degree).
    std::vector<FieldElement> parent_coefficients() const;
    /// Coordinates over an ancestor level `base` (length = flat ratio).
    std::vector<FieldElement> coordinates_over(const LevelPtr& base) const;

    /// Reinterpret in `target`, which must be a descendant of this element's
    /// level (or the level itself).
    FieldElement embedded_into(const LevelPtr& target) const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    /// pow(p^k) — Frobenius iterate, avoids big exponents.
    FieldElement frobenius(unsigned k = 1) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    /// Canonical total order (level identity, then digits); used for
    /// deterministic sorting only.
    bool operator<(const FieldElement& rhs) const;

    /// Renders as a polynomial expression in the level names, e.g. "a^2+a+1"
    /// or "(a+1)*b+a".  Parses back with parse_field_element.
    std::string to_string() const;

private:
    friend class FieldLevel;
    LevelPtr level_;
    std::vector<uint64_t> digits_;
};

/// A chain of symbolic extensions of a prime field.  Thin immutable handle on
/// the top FieldLevel; grows through FieldTower::extend (see factor.hpp for
/// the irreducibility machinery it relies on).
class FieldTower {
public:
    FieldTower() = default;
    explicit FieldTower(LevelPtr top) : top_(std::move(top)) {}
    static FieldTower prime(uint64_t p) { return FieldTower(FieldLevel::prime_field(p)); }

    const LevelPtr& top() const { return top_; }
    uint64_t characteristic() const { return top_->characteristic(); }
    /// Levels bottom-up, starting at the prime field.
    std::vector<LevelPtr> levels() const;

    bool same_tower(const FieldTower& other) const { return top_ == other.top_; }

private:
    LevelPtr top_;
};

/// Pick the higher of two levels, requiring one to be an ancestor of the
/// other.  Throws precondition_error on unrelated levels.
LevelPtr join_levels(const LevelPtr& a, const LevelPtr& b);

/// Enumerate all elements of a level in canonical (digit-counter) order.
/// Throws if the cardinality exceeds 2^22 (enumeration would be unreasonable).
std::vector<FieldElement> all_elements(const LevelPtr& level);

} // namespace agc

#endif
