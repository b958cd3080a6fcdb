#include "agc/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace agc {

bool GrLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(LevelPtr level, std::vector<std::string> vars)
    : level_(std::move(level)), vars_(std::move(vars)) {}

MultiPoly MultiPoly::zero(const LevelPtr& level, std::vector<std::string> vars) {
    return MultiPoly(level, std::move(vars));
}

MultiPoly MultiPoly::constant(const LevelPtr& level, std::vector<std::string> vars,
                              const FieldElement& c) {
    MultiPoly f(level, std::move(vars));
    f.add_term(Exponents(f.nvars(), 0), c.embedded_into(level));
    return f;
}

MultiPoly MultiPoly::variable(const LevelPtr& level, std::vector<std::string> vars,
                              const std::string& name) {
    MultiPoly f(level, std::move(vars));
    auto it = std::find(f.vars_.begin(), f.vars_.end(), name);
    require(it != f.vars_.end(), "unknown variable: " + name);
    Exponents e(f.nvars(), 0);
    e[it - f.vars_.begin()] = 1;
    f.add_term(e, FieldElement::one(level));
    return f;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.begin()->first; // largest in grlex
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(int var_index) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement::zero(level_);
    return it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const FieldElement& c) {
    require((int)e.size() == nvars(), "exponent arity mismatch");
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c.embedded_into(level_);
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
    require((int)e.size() == nvars(), "exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c.embedded_into(level_));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::embedded_into(const LevelPtr& target) const {
    MultiPoly out(target, vars_);
    for (auto& [e, c] : terms_) out.terms_.emplace(e, c.embedded_into(target));
    return out;
}

namespace {
void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    require(a.vars() == b.vars(), "variable lists differ");
}
} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    check_same_vars(*this, rhs);
    LevelPtr L = join_levels(level_, rhs.level_);
    MultiPoly out = embedded_into(L);
    for (auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(level_, vars_);
    for (auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_same_vars(*this, rhs);
    LevelPtr L = join_levels(level_, rhs.level_);
    MultiPoly out(L, vars_);
    Exponents e((size_t)nvars());
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
    LevelPtr L = join_levels(level_, c.level());
    MultiPoly out(L, vars_);
    if (c.is_zero()) return out;
    for (auto& [e, a] : terms_) out.add_term(e, a * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    if (vars_ != rhs.vars_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    require((int)point.size() == nvars(), "evaluation arity mismatch");
    LevelPtr L = level_;
    for (auto& x : point) L = join_levels(L, x.level());
    FieldElement acc = FieldElement::zero(L);
    for (auto& [e, c] : terms_) {
        FieldElement t = c.embedded_into(L);
        for (int i = 0; i < nvars(); ++i)
            if (e[i]) t = t * point[i].embedded_into(L).pow((uint64_t)e[i]);
        acc = acc + t;
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::collect(int var_index) const {
    int d = degree_in(var_index);
    std::vector<MultiPoly> out((size_t)std::max(d + 1, 1), MultiPoly(level_, vars_));
    for (auto& [e, c] : terms_) {
        Exponents r = e;
        int k = r[var_index];
        r[var_index] = 0;
        out[k].add_term(r, c);
    }
    return out;
}

UPoly MultiPoly::to_upoly(int var_index) const {
    std::vector<FieldElement> coeffs((size_t)std::max(degree_in(var_index) + 1, 0),
                                     FieldElement::zero(level_));
    for (auto& [e, c] : terms_) {
        for (int i = 0; i < nvars(); ++i)
            require(i == var_index || e[i] == 0, "polynomial is not univariate");
        coeffs[e[var_index]] = c;
    }
    return UPoly(level_, std::move(coeffs));
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, std::vector<std::string> vars,
                                int var_index) {
    MultiPoly out(p.level(), std::move(vars));
    Exponents e((size_t)out.nvars(), 0);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        e[var_index] = i;
        out.add_term(e, p.coeff(i));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << "+";
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        bool wrote = false;
        if (!any_var || !c.is_one()) {
            std::string s = c.to_string();
            if (s.find('+') != std::string::npos && any_var) os << "(" << s << ")";
            else os << s;
            wrote = true;
        }
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

MultiPoly poly_subst(const MultiPoly& f,
                     const std::map<std::string, MultiPoly>& assignments) {
    // Determine the target variable list and level.
    const std::vector<std::string>* tvars = nullptr;
    LevelPtr L = f.level();
    for (auto& [name, g] : assignments) {
        bool known = std::find(f.vars().begin(), f.vars().end(), name) != f.vars().end();
        require(known, "unknown variable in assignment: " + name);
        if (!tvars) tvars = &g.vars();
        else require(*tvars == g.vars(), "assignment images use different variable lists");
        L = join_levels(L, g.level());
    }
    std::vector<std::string> target = tvars ? *tvars : f.vars();
    // images per variable of f
    std::vector<MultiPoly> image;
    for (auto& v : f.vars()) {
        auto it = assignments.find(v);
        if (it != assignments.end()) {
            image.push_back(it->second.embedded_into(L));
        } else {
            require(std::find(target.begin(), target.end(), v) != target.end(),
                    "variable " + v + " is not assigned and missing from target space");
            image.push_back(MultiPoly::variable(L, target, v));
        }
    }
    // Horner-free term evaluation with per-variable power caches.
    std::vector<std::vector<MultiPoly>> powers(image.size());
    auto power = [&](int vi, int k) -> const MultiPoly& {
        auto& cache = powers[vi];
        if (cache.empty()) cache.push_back(MultiPoly::constant(L, target, FieldElement::one(L)));
        while ((int)cache.size() <= k) cache.push_back(cache.back() * image[vi]);
        return cache[k];
    };
    MultiPoly acc = MultiPoly::zero(L, target);
    for (auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(L, target, c.embedded_into(L));
        for (int i = 0; i < f.nvars(); ++i)
            if (e[i]) t = t * power(i, e[i]);
        acc = acc + t;
    }
    return acc;
}

MultiPoly partial_derivative(const MultiPoly& f, const std::string& var) {
    auto it = std::find(f.vars().begin(), f.vars().end(), var);
    require(it != f.vars().end(), "unknown variable: " + var);
    int vi = (int)(it - f.vars().begin());
    MultiPoly out(f.level(), f.vars());
    for (auto& [e, c] : f.terms()) {
        if (e[vi] == 0) continue;
        Exponents d = e;
        d[vi] -= 1;
        out.add_term(d, c * FieldElement::from_integer(f.level(), e[vi]));
    }
    return out;
}

MultiPoly dehomogenize(const MultiPoly& form, int chart) {
    require(form.is_homogeneous(), "dehomogenize requires a homogeneous form");
    require(form.nvars() == 3, "dehomogenize expects a form in three variables");
    require(chart >= 0 && chart < 3, "chart index out of range");
    std::vector<std::string> rest;
    for (int i = 0; i < 3; ++i)
        if (i != chart) rest.push_back(form.vars()[i]);
    MultiPoly out(form.level(), rest);
    for (auto& [e, c] : form.terms()) {
        Exponents r;
        for (int i = 0; i < 3; ++i)
            if (i != chart) r.push_back(e[i]);
        out.add_term(r, c);
    }
    return out;
}

MultiPoly homogenize(const MultiPoly& f, const std::vector<std::string>& vars3,
                     int chart, int degree) {
    require(f.nvars() == 2, "homogenize expects two variables");
    MultiPoly out(f.level(), vars3);
    for (auto& [e, c] : f.terms()) {
        int d = e[0] + e[1];
        require(d <= degree, "degree too small to homogenize");
        Exponents full(3, 0);
        int j = 0;
        for (int i = 0; i < 3; ++i) {
            if (i == chart) full[i] = degree - d;
            else full[i] = e[j++];
        }
        out.add_term(full, c);
    }
    return out;
}

} // namespace agc
