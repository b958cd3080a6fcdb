#ifndef AGC_FACTOR_HPP
#define AGC_FACTOR_HPP

#include <random>
#include <utility>
#include <vector>

#include "agc/upoly.hpp"

namespace agc {

/// All randomized routines take the RNG explicitly so results are
/// reproducible from a seed.
using Rng = std::mt19937_64;

FieldElement random_element(const LevelPtr& level, Rng& rng);
UPoly random_upoly(const LevelPtr& level, int max_degree, Rng& rng);

struct Factorization {
    FieldElement unit;                          // leading coefficient of the input
    std::vector<std::pair<UPoly, int>> factors; // monic irreducible, multiplicity
};

/// Squarefree decomposition: f = unit * prod g_i^{m_i} with the g_i monic,
/// squarefree and pairwise coprime.  Works in any characteristic.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Distinct-degree factorization of a squarefree monic polynomial:
/// list of (product of all irreducible factors of degree d, d).
std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f);

/// Equal-degree splitting (Cantor-Zassenhaus): f monic squarefree, all
/// irreducible factors of degree d.
std::vector<UPoly> equal_degree_factorization(const UPoly& f, int d, Rng& rng);

/// Full factorization into monic irreducibles; factors sorted canonically.
Factorization factor(const UPoly& f, Rng& rng);

bool is_irreducible(const UPoly& f);

/// Roots in the coefficient level, with multiplicities.
std::vector<std::pair<FieldElement, int>> roots(const UPoly& f, Rng& rng);

/// Random monic irreducible of exact degree.
UPoly find_irreducible(const LevelPtr& level, int degree, Rng& rng);

struct ExtendResult {
    FieldTower tower;    // unchanged when phi has degree 1
    FieldElement root;   // a symbolic (or in-place, for degree 1) root of phi
    bool extended;
};

/// Extend a tower by a monic irreducible phi over its top level.  Degree-1
/// polynomials are resolved in place: the root already lives in the current
/// top level and the tower is returned unchanged.  Reducible phi is rejected
/// with its factorization quoted as evidence.
ExtendResult extend(const FieldTower& tower, const UPoly& phi, Rng& rng,
                    const std::string& name = "");

} // namespace agc

#endif
