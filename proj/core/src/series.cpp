#include "agc/series.hpp"

#include <algorithm>

namespace agc {

namespace {

using Coeffs = std::vector<FieldElement>;

// truncated product of coefficient vectors, to index `n` inclusive
Coeffs mul_trunc(const LevelPtr& L, const Coeffs& a, const Coeffs& b, int n) {
    Coeffs out((size_t)n + 1, FieldElement::zero(L));
    int da = std::min((int)a.size() - 1, n);
    for (int i = 0; i <= da; ++i) {
        if (a[i].is_zero()) continue;
        int jmax = std::min((int)b.size() - 1, n - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

// evaluate a 2-variable polynomial at truncated series (to index n)
Coeffs eval_poly_at(const LevelPtr& L, const MultiPoly& f, const Coeffs& xs,
                    const Coeffs& ys, int n) {
    // powers of x and y on demand
    std::vector<Coeffs> xp{Coeffs{FieldElement::one(L)}};
    std::vector<Coeffs> yp{Coeffs{FieldElement::one(L)}};
    auto pow_of = [&](std::vector<Coeffs>& cache, const Coeffs& base, int k) -> const Coeffs& {
        while ((int)cache.size() <= k)
            cache.push_back(mul_trunc(L, cache.back(), base, n));
        return cache[k];
    };
    Coeffs acc((size_t)n + 1, FieldElement::zero(L));
    for (auto& [e, c] : f.terms()) {
        const Coeffs& px = pow_of(xp, xs, e[0]);
        const Coeffs& py = pow_of(yp, ys, e[1]);
        Coeffs t = mul_trunc(L, px, py, n);
        FieldElement cc = c.embedded_into(L);
        for (int i = 0; i <= n; ++i)
            if (!t[i].is_zero()) acc[i] = acc[i] + t[i] * cc;
    }
    return acc;
}

} // namespace

LazySeries::LazySeries(LevelPtr level, Producer producer) : st_(std::make_shared<State>()) {
    st_->level = std::move(level);
    st_->producer = std::move(producer);
}

LazySeries LazySeries::zero(const LevelPtr& level) {
    return from_coefficients(level, {});
}

LazySeries LazySeries::constant(const FieldElement& c) {
    return from_coefficients(c.level(), {c});
}

LazySeries LazySeries::from_coefficients(LevelPtr level, std::vector<FieldElement> coeffs) {
    return LazySeries(level, [level, coeffs = std::move(coeffs)](int target, Coeffs& cache) {
        for (int i = (int)cache.size(); i <= target; ++i) {
            if (i < (int)coeffs.size()) cache.push_back(coeffs[i].embedded_into(level));
            else cache.push_back(FieldElement::zero(level));
        }
    });
}

LazySeries LazySeries::monomial(const LevelPtr& level, int k) {
    std::vector<FieldElement> c((size_t)k + 1, FieldElement::zero(level));
    c[k] = FieldElement::one(level);
    return from_coefficients(level, std::move(c));
}

const LevelPtr& LazySeries::level() const { return st_->level; }

void LazySeries::ensure(int n) const {
    check_internal(st_ != nullptr, "empty series handle");
    std::lock_guard<std::mutex> g(st_->lock);
    if ((int)st_->cache.size() > n) return;
    // grow geometrically so repeated small requests stay cheap
    int target = std::max(n, 2 * (int)st_->cache.size() + 4);
    st_->producer(target, st_->cache);
    check_internal((int)st_->cache.size() > n, "series producer under-delivered");
}

FieldElement LazySeries::coeff(int k) const {
    ensure(k);
    std::lock_guard<std::mutex> g(st_->lock);
    return st_->cache[k];
}

int LazySeries::known_precision() const {
    std::lock_guard<std::mutex> g(st_->lock);
    return (int)st_->cache.size() - 1;
}

std::vector<FieldElement> LazySeries::prefix(int n) const {
    ensure(n);
    std::lock_guard<std::mutex> g(st_->lock);
    return Coeffs(st_->cache.begin(), st_->cache.begin() + n + 1);
}

LazySeries LazySeries::operator+(const LazySeries& rhs) const {
    LevelPtr L = join_levels(level(), rhs.level());
    LazySeries a = *this, b = rhs;
    return LazySeries(L, [L, a, b](int target, Coeffs& cache) {
        auto xa = a.prefix(target);
        auto xb = b.prefix(target);
        for (int i = (int)cache.size(); i <= target; ++i)
            cache.push_back(xa[i].embedded_into(L) + xb[i].embedded_into(L));
    });
}

LazySeries LazySeries::operator-(const LazySeries& rhs) const {
    LevelPtr L = join_levels(level(), rhs.level());
    LazySeries a = *this, b = rhs;
    return LazySeries(L, [L, a, b](int target, Coeffs& cache) {
        auto xa = a.prefix(target);
        auto xb = b.prefix(target);
        for (int i = (int)cache.size(); i <= target; ++i)
            cache.push_back(xa[i].embedded_into(L) - xb[i].embedded_into(L));
    });
}

LazySeries LazySeries::operator*(const LazySeries& rhs) const {
    LevelPtr L = join_levels(level(), rhs.level());
    LazySeries a = *this, b = rhs;
    return LazySeries(L, [L, a, b](int target, Coeffs& cache) {
        auto xa = a.prefix(target);
        auto xb = b.prefix(target);
        for (auto& v : xa) v = v.embedded_into(L);
        for (auto& v : xb) v = v.embedded_into(L);
        Coeffs prod = mul_trunc(L, xa, xb, target);
        for (int i = (int)cache.size(); i <= target; ++i) cache.push_back(prod[i]);
    });
}

LazySeries LazySeries::operator*(const FieldElement& c) const {
    LevelPtr L = join_levels(level(), c.level());
    LazySeries a = *this;
    FieldElement cc = c.embedded_into(L);
    return LazySeries(L, [L, a, cc](int target, Coeffs& cache) {
        auto xa = a.prefix(target);
        for (int i = (int)cache.size(); i <= target; ++i)
            cache.push_back(xa[i].embedded_into(L) * cc);
    });
}

LazySeries LazySeries::shifted(int k) const {
    LevelPtr L = level();
    LazySeries a = *this;
    return LazySeries(L, [L, a, k](int target, Coeffs& cache) {
        for (int i = (int)cache.size(); i <= target; ++i) {
            if (i < k) cache.push_back(FieldElement::zero(L));
            else cache.push_back(a.coeff(i - k));
        }
    });
}

LazySeries LazySeries::derivative() const {
    LevelPtr L = level();
    LazySeries a = *this;
    return LazySeries(L, [L, a](int target, Coeffs& cache) {
        auto xa = a.prefix(target + 1);
        for (int i = (int)cache.size(); i <= target; ++i)
            cache.push_back(xa[i + 1] * FieldElement::from_integer(L, i + 1));
    });
}

LazySeries LazySeries::divided_by(const LazySeries& rhs, int ord_rhs) const {
    LevelPtr L = join_levels(level(), rhs.level());
    LazySeries a = *this, b = rhs;
    return LazySeries(L, [L, a, b, ord_rhs](int target, Coeffs& cache) {
        // q = a/b where b = t^ord_rhs * unit; requires ord(a) >= ord_rhs.
        int n = target + ord_rhs;
        auto xa = a.prefix(n);
        auto xb = b.prefix(n);
        for (int i = 0; i < ord_rhs; ++i) {
            check_internal(xb[i].is_zero(), "divisor order larger than declared");
            check_internal(xa[i].is_zero(), "series division with negative order result");
        }
        FieldElement lead = xb[ord_rhs].embedded_into(L);
        check_internal(!lead.is_zero(), "divisor order smaller than declared");
        FieldElement inv = lead.inverse();
        Coeffs q((size_t)target + 1, FieldElement::zero(L));
        for (int k = 0; k <= target; ++k) {
            FieldElement acc = xa[k + ord_rhs].embedded_into(L);
            for (int j = 0; j < k; ++j) {
                if (q[j].is_zero()) continue;
                acc = acc - q[j] * xb[k - j + ord_rhs].embedded_into(L);
            }
            q[k] = acc * inv;
        }
        for (int i = (int)cache.size(); i <= target; ++i) cache.push_back(q[i]);
    });
}

std::optional<int> series_order(const LazySeries& s, int bound) {
    require(bound >= 0, "order probe bound must be nonnegative");
    auto p = s.prefix(bound);
    for (int i = 0; i <= bound; ++i)
        if (!p[i].is_zero()) return i;
    return std::nullopt;
}

LazySeries compose_series(const MultiPoly& f, const LazySeries& x, const LazySeries& y) {
    require(f.nvars() == 2, "compose_series expects a 2-variable polynomial");
    LevelPtr L = join_levels(join_levels(f.level(), x.level()), y.level());
    MultiPoly ff = f.embedded_into(L);
    LazySeries xx = x, yy = y;
    return LazySeries(L, [L, ff, xx, yy](int target, Coeffs& cache) {
        auto xs = xx.prefix(target);
        auto ys = yy.prefix(target);
        for (auto& v : xs) v = v.embedded_into(L);
        for (auto& v : ys) v = v.embedded_into(L);
        Coeffs r = eval_poly_at(L, ff, xs, ys, target);
        // coefficients already produced must be reproduced identically
        for (size_t i = 0; i < cache.size(); ++i)
            check_internal(cache[i] == r[i], "series cache consistency violated");
        for (int i = (int)cache.size(); i <= target; ++i) cache.push_back(r[i]);
    });
}

std::vector<FieldElement> series_subst(const MultiPoly& f, const LazySeries& x,
                                       const LazySeries& y, int N) {
    require(N >= 0, "precision must be nonnegative");
    return compose_series(f, x, y).prefix(N);
}

LazySeries solve_implicit(const MultiPoly& g) {
    require(g.nvars() == 2, "solve_implicit expects a 2-variable polynomial");
    const LevelPtr& L = g.level();
    Exponents zero2(2, 0), dw(2, 0);
    dw[1] = 1;
    require(g.coeff(zero2).is_zero(), "implicit equation must vanish at the origin");
    require(!g.coeff(dw).is_zero(), "implicit equation must be solvable: dg/dw(0,0) = 0");
    MultiPoly gw = partial_derivative(g, g.vars()[1]);
    return LazySeries(L, [L, g, gw](int target, Coeffs& cache) {
        // Newton lifting on W: start from the known prefix, double precision.
        Coeffs W = cache; // previously determined coefficients
        if (W.empty()) W.push_back(FieldElement::zero(L));
        int prec = (int)W.size() - 1;
        while (prec < target) {
            // one Newton step upgrades "correct mod s^(prec+1)" to 2*prec+2
            int next = std::min(2 * prec + 1, target);
            if (next <= prec) next = prec + 1;
            // residual and derivative at current approximation, to order `next`
            Coeffs s((size_t)next + 1, FieldElement::zero(L));
            if (next >= 1) s[1] = FieldElement::one(L);
            Coeffs r = eval_poly_at(L, g, s, W, next);
            Coeffs d = eval_poly_at(L, gw, s, W, next);
            // W -= r / d  (d has unit constant term)
            FieldElement inv = d[0].inverse();
            Coeffs q((size_t)next + 1, FieldElement::zero(L));
            for (int k = 0; k <= next; ++k) {
                FieldElement acc = r[k];
                for (int j = 0; j < k; ++j)
                    if (!q[j].is_zero()) acc = acc - q[j] * d[k - j];
                q[k] = acc * inv;
            }
            W.resize((size_t)next + 1, FieldElement::zero(L));
            for (int k = 0; k <= next; ++k) W[k] = W[k] - q[k];
            prec = next;
        }
        check_internal(W[0].is_zero(), "implicit solution must vanish at 0");
        for (size_t i = 0; i < cache.size(); ++i)
            check_internal(cache[i] == W[i], "implicit solver rewrote its prefix");
        for (int i = (int)cache.size(); i <= target; ++i) cache.push_back(W[i]);
    });
}

} // namespace agc
