#include "agc/factor.hpp"

#include <algorithm>
#include <sstream>

namespace agc {

FieldElement random_element(const LevelPtr& level, Rng& rng) {
    std::vector<uint64_t> digits(level->flat_size());
    std::uniform_int_distribution<uint64_t> dist(0, level->characteristic() - 1);
    for (auto& d : digits) d = dist(rng);
    return FieldElement::from_digits(level, std::move(digits));
}

UPoly random_upoly(const LevelPtr& level, int max_degree, Rng& rng) {
    std::vector<FieldElement> c;
    c.reserve((size_t)max_degree + 1);
    for (int i = 0; i <= max_degree; ++i) c.push_back(random_element(level, rng));
    return UPoly(level, std::move(c));
}

namespace {

// p-th root of a polynomial that is a p-th power; over a perfect field the
// coefficientwise p-th root of the x^{pi} coefficients.
UPoly pth_root(const UPoly& f) {
    const LevelPtr& L = f.level();
    uint64_t p = L->characteristic();
    unsigned N = (unsigned)L->flat_size();
    std::vector<FieldElement> out;
    out.reserve(f.degree() / (int)p + 1);
    for (int i = 0; i * (int)p <= f.degree(); ++i) {
        for (int j = 1; j < (int)p; ++j)
            check_internal(f.coeff(i * (int)p + j).is_zero() || i * (int)p + j > f.degree(),
                           "pth_root of a non-p-th-power");
        // a^(p^(N-1)) is the p-th root in a field of p^N elements
        out.push_back(f.coeff(i * (int)p).frobenius(N - 1));
    }
    return UPoly(L, std::move(out));
}

} // namespace

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    require(!f.is_zero(), "squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> result;
    UPoly g = f.monic();
    uint64_t p = f.level()->characteristic();
    int e = 1;
    while (g.degree() > 0) {
        UPoly gp = g.derivative();
        if (gp.is_zero()) {
            g = pth_root(g);
            e *= (int)p;
            continue;
        }
        UPoly c = gcd(g, gp);
        UPoly w = g / c;
        int i = 1;
        while (w.degree() > 0) {
            UPoly y = gcd(w, c);
            UPoly z = w / y;
            if (z.degree() > 0) result.emplace_back(z.monic(), i * e);
            w = y;
            c = c / y;
            ++i;
        }
        if (c.degree() == 0) break;
        g = pth_root(c);
        e *= (int)p;
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return upoly_less(a.first, b.first);
    });
    return result;
}

std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f) {
    const LevelPtr& L = f.level();
    unsigned N = (unsigned)L->flat_size();
    std::vector<std::pair<UPoly, int>> result;
    UPoly rem = f.monic();
    UPoly h = UPoly::x(L);
    int d = 0;
    while (rem.degree() > 0 && 2 * (d + 1) <= rem.degree()) {
        ++d;
        h = frobenius_powmod(h, N, rem); // h = x^(q^d) mod rem
        UPoly g = gcd(h - UPoly::x(L), rem);
        if (g.degree() > 0) {
            result.emplace_back(g, d);
            rem = rem / g;
            h = h % rem;
        }
    }
    if (rem.degree() > 0) result.emplace_back(rem, rem.degree());
    return result;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f, int d, Rng& rng) {
    const LevelPtr& L = f.level();
    uint64_t p = L->characteristic();
    unsigned N = (unsigned)L->flat_size();
    std::vector<UPoly> todo{f.monic()}, done;
    while (!todo.empty()) {
        UPoly g = todo.back();
        todo.pop_back();
        if (g.degree() == d) {
            done.push_back(g);
            continue;
        }
        UPoly split(L);
        while (true) {
            UPoly a = random_upoly(L, g.degree() - 1, rng) % g;
            if (a.degree() < 1) continue; // constants never split
            // trace to the prime field: T = sum_{i<N*d} a^(p^i) mod g
            UPoly T = a, cur = a;
            for (unsigned i = 1; i < N * (unsigned)d; ++i) {
                cur = powmod(cur, p, g);
                T = (T + cur) % g;
            }
            UPoly cand;
            if (p == 2) {
                cand = gcd(T, g);
            } else {
                if (T.is_zero()) continue;
                UPoly b = powmod(T, (p - 1) / 2, g);
                cand = gcd(b - UPoly::constant(L, FieldElement::one(L)), g);
            }
            if (cand.degree() > 0 && cand.degree() < g.degree()) {
                split = cand;
                break;
            }
        }
        todo.push_back(split);
        todo.push_back(g / split);
    }
    std::sort(done.begin(), done.end(), upoly_less);
    return done;
}

bool is_irreducible(const UPoly& f) {
    require(!f.is_zero(), "irreducibility of zero polynomial");
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const LevelPtr& L = f.level();
    unsigned N = (unsigned)L->flat_size();
    UPoly g = f.monic();
    UPoly x = UPoly::x(L);
    // Rabin: x^(q^n) = x mod f, and gcd(x^(q^(n/l)) - x, f) = 1 for primes l|n
    UPoly h = frobenius_powmod(x, N * (unsigned)n, g);
    if (!(h == x % g)) return false;
    int m = n;
    for (int l = 2; l * l <= m; ++l) {
        if (m % l) continue;
        while (m % l == 0) m /= l;
        UPoly hl = frobenius_powmod(x, N * (unsigned)(n / l), g);
        if (gcd(hl - x, g).degree() != 0) return false;
    }
    if (m > 1) {
        UPoly hl = frobenius_powmod(x, N * (unsigned)(n / m), g);
        if (gcd(hl - x, g).degree() != 0) return false;
    }
    return true;
}

Factorization factor(const UPoly& f, Rng& rng) {
    require(!f.is_zero(), "factorization of the zero polynomial");
    Factorization out;
    out.unit = f.leading();
    for (auto& [g, mult] : squarefree_decomposition(f)) {
        for (auto& [h, d] : distinct_degree_factorization(g)) {
            for (auto& irr : equal_degree_factorization(h, d, rng))
                out.factors.emplace_back(irr, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return upoly_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<FieldElement, int>> roots(const UPoly& f, Rng& rng) {
    std::vector<std::pair<FieldElement, int>> out;
    for (auto& [g, mult] : factor(f, rng).factors) {
        if (g.degree() != 1) continue;
        out.emplace_back(-g.coeff(0), mult);
    }
    return out;
}

UPoly find_irreducible(const LevelPtr& level, int degree, Rng& rng) {
    require(degree >= 1, "degree must be positive");
    for (int attempt = 0; attempt < 4096; ++attempt) {
        UPoly cand = random_upoly(level, degree - 1, rng) +
                     UPoly::monomial(level, degree, FieldElement::one(level));
        if (is_irreducible(cand)) return cand;
    }
    throw internal_error("failed to find an irreducible polynomial");
}

ExtendResult extend(const FieldTower& tower, const UPoly& phi, Rng& rng,
                    const std::string& name) {
    require(phi.degree() >= 1, "extension polynomial must be nonconstant");
    require(phi.is_monic(), "extension polynomial must be monic");
    require(phi.level() == tower.top() || tower.top()->has_ancestor(phi.level().get()),
            "extension polynomial must live over the tower");
    if (phi.degree() == 1) {
        // resolved in place: the root is already an element of the top level
        FieldElement root = (-phi.coeff(0)).embedded_into(tower.top());
        return {tower, root, false};
    }
    UPoly p = phi.embedded_into(tower.top());
    if (!is_irreducible(p)) {
        Factorization fz = factor(p, rng);
        std::ostringstream os;
        os << "reducible extension polynomial: " << p.to_string() << " = ";
        for (size_t i = 0; i < fz.factors.size(); ++i) {
            if (i) os << " * ";
            os << "(" << fz.factors[i].first.to_string() << ")";
            if (fz.factors[i].second > 1) os << "^" << fz.factors[i].second;
        }
        throw precondition_error(os.str());
    }
    std::string n = name;
    if (n.empty()) n = "w" + std::to_string(tower.top()->index() + 1);
    std::vector<FieldElement> coeffs(p.coeffs().begin(), p.coeffs().end() - 1);
    LevelPtr lvl = FieldLevel::extension(tower.top(), n, std::move(coeffs));
    return {FieldTower(lvl), FieldElement::generator(lvl), true};
}

} // namespace agc
