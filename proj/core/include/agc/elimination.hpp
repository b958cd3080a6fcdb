#ifndef AGC_ELIMINATION_HPP
#define AGC_ELIMINATION_HPP

#include "agc/multipoly.hpp"

namespace agc {

/// Resultant of two 2-variable polynomials with respect to the variable of
/// index `elim`, as a univariate polynomial in the remaining variable.
/// Subresultant PRS; exact over the coefficient level.
UPoly resultant(const MultiPoly& f, const MultiPoly& g, int elim);

/// Content of f seen in R[y], y = variable `var`: gcd of its coefficients,
/// monic, as a polynomial in the other variable.
UPoly content_in(const MultiPoly& f, int var);

/// Gcd of two 2-variable polynomials (primitive-part PRS in the variable
/// `var`, contents handled by univariate gcd).  Normalized so the leading
/// y-coefficient is monic.
MultiPoly bivariate_gcd(const MultiPoly& f, const MultiPoly& g, int var);

} // namespace agc

#endif
