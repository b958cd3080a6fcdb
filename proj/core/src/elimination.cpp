#include "agc/elimination.hpp"

namespace agc {

namespace {

// f as a dense vector in the eliminated variable; entries are univariate in
// the kept variable.
std::vector<UPoly> split_by(const MultiPoly& f, int elim) {
    require(f.nvars() == 2, "elimination expects two variables");
    int keep = 1 - elim;
    int d = f.degree_in(elim);
    std::vector<std::vector<FieldElement>> cs((size_t)std::max(d + 1, 0));
    for (auto& [e, c] : f.terms()) {
        auto& v = cs[e[elim]];
        if ((int)v.size() <= e[keep]) v.resize(e[keep] + 1, FieldElement::zero(f.level()));
        v[e[keep]] = c;
    }
    std::vector<UPoly> out;
    out.reserve(cs.size());
    for (auto& v : cs) out.emplace_back(f.level(), std::move(v));
    return out;
}

int deg_of(const std::vector<UPoly>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

void trim(std::vector<UPoly>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly upoly_pow(UPoly base, int e) {
    UPoly acc = UPoly::constant(base.level(), FieldElement::one(base.level()));
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// pseudo-remainder of a by b in R[y]: lc(b)^(da-db+1) * a mod b
std::vector<UPoly> prem(std::vector<UPoly> r, const std::vector<UPoly>& b, const LevelPtr& L) {
    (void)L;
    trim(r);
    int da = deg_of(r), db = deg_of(b);
    check_internal(db >= 0, "pseudo-division by zero");
    if (da < db) return r;
    const UPoly& lb = b[db];
    int owed = da - db + 1;
    while (true) {
        trim(r);
        int dr = deg_of(r);
        if (dr < db) break;
        UPoly lr = r[dr];
        for (auto& c : r) c = c * lb;
        for (int j = 0; j <= db; ++j)
            r[dr - db + j] = r[dr - db + j] - lr * b[j];
        --owed; // the top coefficient cancels exactly
    }
    if (owed > 0) {
        UPoly mult = upoly_pow(lb, owed);
        for (auto& c : r) c = c * mult;
    }
    trim(r);
    return r;
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    check_internal(r.is_zero(), "inexact division in subresultant chain");
    return q;
}

UPoly gcd_list(const std::vector<UPoly>& v) {
    UPoly g = UPoly::zero(v.empty() ? nullptr : v.front().level());
    for (auto& c : v) g = gcd(g, c);
    return g;
}

} // namespace

UPoly content_in(const MultiPoly& f, int var) {
    auto parts = split_by(f, var);
    return gcd_list(parts);
}

UPoly resultant(const MultiPoly& f, const MultiPoly& g, int elim) {
    const LevelPtr L = join_levels(f.level(), g.level());
    std::vector<UPoly> A = split_by(f.embedded_into(L), elim);
    std::vector<UPoly> B = split_by(g.embedded_into(L), elim);
    trim(A);
    trim(B);
    int da = deg_of(A), db = deg_of(B);
    if (da < 0 || db < 0) return UPoly::zero(L);
    bool negate = false;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) negate = true;
    }
    if (db == 0) {
        UPoly r = upoly_pow(B[0], da);
        if (negate) r = r * (-FieldElement::one(L));
        return r;
    }
    UPoly one = UPoly::constant(L, FieldElement::one(L));
    UPoly gg = one, hh = one;
    bool sign = negate;
    while (true) {
        da = deg_of(A);
        db = deg_of(B);
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = !sign;
        std::vector<UPoly> R = prem(A, B, L);
        if (deg_of(R) < 0) return UPoly::zero(L); // common factor
        A = std::move(B);
        UPoly div = gg * upoly_pow(hh, delta);
        B = std::move(R);
        for (auto& c : B) c = exact_div(c, div);
        trim(B);
        gg = A[deg_of(A)];
        if (delta > 0) hh = exact_div(upoly_pow(gg, delta), upoly_pow(hh, delta - 1));
        if (deg_of(B) <= 0) break;
    }
    if (deg_of(B) < 0) return UPoly::zero(L);
    int dA = deg_of(A);
    UPoly res = exact_div(upoly_pow(B[0], dA), upoly_pow(hh, dA - 1));
    if (sign) res = res * (-FieldElement::one(L));
    return res;
}

MultiPoly bivariate_gcd(const MultiPoly& f, const MultiPoly& g, int var) {
    const LevelPtr L = join_levels(f.level(), g.level());
    if (f.is_zero()) return g.embedded_into(L);
    if (g.is_zero()) return f.embedded_into(L);
    MultiPoly F = f.embedded_into(L), G = g.embedded_into(L);
    UPoly cf = content_in(F, var), cg = content_in(G, var);
    UPoly cont = gcd(cf, cg);
    std::vector<UPoly> A = split_by(F, var), B = split_by(G, var);
    for (auto& c : A) c = exact_div(c, cf);
    for (auto& c : B) c = exact_div(c, cg);
    trim(A);
    trim(B);
    if (deg_of(A) < deg_of(B)) std::swap(A, B);
    while (deg_of(B) >= 0) {
        std::vector<UPoly> R = prem(A, B, L);
        trim(R);
        // primitive part of R
        UPoly c = gcd_list(R);
        if (!c.is_zero())
            for (auto& x : R) x = exact_div(x, c);
        A = std::move(B);
        B = std::move(R);
    }
    // A is the primitive gcd; normalize leading coefficient monic
    int dA = deg_of(A);
    FieldElement lead = A[dA].leading();
    for (auto& c : A) c = c * lead.inverse();
    // multiply back the content gcd
    int keep = 1 - var;
    MultiPoly out(L, f.vars());
    for (int i = 0; i <= dA; ++i) {
        UPoly ci = A[i] * cont;
        for (int j = 0; j <= ci.degree(); ++j) {
            if (ci.coeff(j).is_zero()) continue;
            Exponents e(2, 0);
            e[var] = i;
            e[keep] = j;
            out.add_term(e, ci.coeff(j));
        }
    }
    return out;
}

} // namespace agc
