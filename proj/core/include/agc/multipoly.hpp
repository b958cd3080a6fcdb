#ifndef AGC_MULTIPOLY_HPP
#define AGC_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "agc/upoly.hpp"

namespace agc {

using Exponents = std::vector<int>;

/// Graded lexicographic, descending (largest term first): higher total degree
/// wins, ties broken lexicographically on the exponent vector.
struct GrLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over a tower level with named variables.
/// Terms are kept in descending graded-lex order; no zero coefficients are
/// stored, so equality is structural.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElement, GrLexDesc>;

    MultiPoly() = default;
    MultiPoly(LevelPtr level, std::vector<std::string> vars);

    static MultiPoly zero(const LevelPtr& level, std::vector<std::string> vars);
    static MultiPoly constant(const LevelPtr& level, std::vector<std::string> vars,
                              const FieldElement& c);
    static MultiPoly variable(const LevelPtr& level, std::vector<std::string> vars,
                              const std::string& name);

    const LevelPtr& level() const { return level_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int nvars() const { return (int)vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for zero
    int degree_in(int var_index) const;
    bool is_homogeneous() const;

    FieldElement coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const FieldElement& c);
    void add_term(const Exponents& e, const FieldElement& c);

    MultiPoly embedded_into(const LevelPtr& target) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const FieldElement& c) const;
    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    /// Collect as a dense univariate polynomial in variable `var_index` whose
    /// coefficients are polynomials in the remaining variables.
    std::vector<MultiPoly> collect(int var_index) const;

    /// For polynomials in one effective variable: conversion to UPoly.
    UPoly to_upoly(int var_index) const;
    static MultiPoly from_upoly(const UPoly& p, std::vector<std::string> vars,
                                int var_index);

    std::string to_string() const;

private:
    LevelPtr level_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Ring-homomorphism substitution: variables present as keys are replaced by
/// the given polynomials (all over one common variable list); variables not
/// mentioned must exist in the target variable list and map to themselves.
MultiPoly poly_subst(const MultiPoly& f,
                     const std::map<std::string, MultiPoly>& assignments);

MultiPoly partial_derivative(const MultiPoly& f, const std::string& var);

/// Set variable `chart` of a homogeneous form to 1; the two remaining
/// variables keep their names.
MultiPoly dehomogenize(const MultiPoly& form, int chart);

/// Homogenize a 2-variable polynomial back into the 3-variable form of the
/// given degree, inserting the chart variable.
MultiPoly homogenize(const MultiPoly& f, const std::vector<std::string>& vars3,
                     int chart, int degree);

} // namespace agc

#endif
