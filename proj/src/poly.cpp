#include "nilform/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilform {

VarsPtr Poly::empty_vars() {
    static const VarsPtr e = std::make_shared<const VarList>();
    return e;
}

Poly::Poly(VarsPtr vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(ExpVec(vars_->size(), 0u), c);
}

Poly Poly::variable(VarsPtr vars, const std::string& name, unsigned power) {
    Poly p(vars);
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end()) throw std::invalid_argument("Poly::variable: unknown indeterminate " + name);
    ExpVec e(vars->size(), 0u);
    e[size_t(it - vars->begin())] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Poly::constant_term() const {
    ExpVec zero(vars_->size(), 0u);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::to_rational() const {
    if (!is_constant()) throw std::domain_error("Poly::to_rational: not constant: " + str());
    return constant_term();
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    if (!terms_.empty())
        for (unsigned e : terms_.begin()->first) d += e;  // grlex leading term has max degree
    return d;
}

unsigned Poly::degree_in(size_t var_index) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

bool Poly::depends_on(size_t var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] > 0) return true;
    return false;
}

int Poly::index_of(const std::string& name) const {
    auto it = std::find(vars_->begin(), vars_->end(), name);
    return it == vars_->end() ? -1 : int(it - vars_->begin());
}

Rational Poly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool same_vars(const Poly& a, const Poly& b) {
    return a.vars_ptr() == b.vars_ptr() || a.vars() == b.vars();
}

static void require_same_vars(const Poly& a, const Poly& b, const char* op) {
    if (!same_vars(a, b))
        throw std::invalid_argument(std::string("Poly ") + op + ": mismatched indeterminate lists");
}

void Poly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    if (e.size() != vars_->size()) throw std::invalid_argument("Poly::add_term: exponent arity mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_vars(*this, o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_vars(*this, o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_vars(a, b, "*");
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_vars(*this, o)) return false;
    return terms_ == o.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly r(vars_, 1);
    Poly base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

Rational Poly::evaluate(const Assignment& a) const {
    std::vector<Rational> vals(vars_->size());
    for (size_t i = 0; i < vars_->size(); ++i) {
        auto it = a.find((*vars_)[i]);
        if (it != a.end()) {
            vals[i] = it->second;
        } else if (depends_on(i)) {
            throw std::invalid_argument("Poly::evaluate: unassigned indeterminate " + (*vars_)[i]);
        }
    }
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= rational_pow(vals[i], int(e[i]));
        r += t;
    }
    return r;
}

Poly Poly::substitute(const Assignment& a) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        ExpVec rest(e.size(), 0u);
        for (size_t i = 0; i < e.size(); ++i) {
            auto it = a.find((*vars_)[i]);
            if (it != a.end()) {
                if (e[i]) t *= rational_pow(it->second, int(e[i]));
            } else {
                rest[i] = e[i];
            }
        }
        r.add_term(rest, t);
    }
    return r;
}

Poly Poly::substitute(size_t var_index, const Poly& value) const {
    require_same_vars(*this, value, "substitute");
    Poly r(vars_);
    std::vector<Poly> powers = {Poly(vars_, 1)};
    for (const auto& [e, c] : terms_) {
        unsigned k = e[var_index];
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        ExpVec rest = e;
        rest[var_index] = 0;
        Poly t(vars_);
        t.terms_.emplace(rest, c);
        r += t * powers[k];
    }
    return r;
}

Poly Poly::extended(const VarsPtr& bigger) const {
    std::vector<size_t> where(vars_->size());
    for (size_t i = 0; i < vars_->size(); ++i) {
        auto it = std::find(bigger->begin(), bigger->end(), (*vars_)[i]);
        if (it == bigger->end())
            throw std::invalid_argument("Poly::extended: target lacks indeterminate " + (*vars_)[i]);
        where[i] = size_t(it - bigger->begin());
    }
    Poly r(bigger);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(bigger->size(), 0u);
        for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (!any_var || a != 1) {
            os << to_string(a);
            if (any_var) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Poly exact_div(const Poly& a, const Poly& b) {
    require_same_vars(a, b, "exact_div");
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    Poly rem = a, q(a.vars_ptr());
    const auto& bt = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms().begin();
        ExpVec e(rt.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (rt.first[i] < bt.first[i])
                throw std::domain_error("exact_div: inexact division");
            e[i] = rt.first[i] - bt.first[i];
        }
        Poly t(a.vars_ptr());
        t.add_term(e, rt.second / bt.second);
        q += t;
        rem -= t * b;
    }
    return q;
}

namespace {

// Coefficient of x_m^k, as a polynomial over the same variable list.
Poly coefficient_in(const Poly& p, size_t m, unsigned k) {
    Poly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        if (e[m] != k) continue;
        ExpVec ne = e;
        ne[m] = 0;
        r.add_term(ne, c);
    }
    return r;
}

Poly content_in(const Poly& p, size_t m) {
    Poly g(p.vars_ptr());
    for (unsigned k = 0; k <= p.degree_in(m); ++k) {
        Poly c = coefficient_in(p, m, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
    }
    return g;
}

// Pseudo-remainder of a by b in variable m: lc(b)^(da-db+1) * a mod b.
Poly pseudo_rem(Poly a, const Poly& b, size_t m) {
    unsigned db = b.degree_in(m);
    Poly lcb = coefficient_in(b, m, db);
    while (!a.is_zero() && a.degree_in(m) >= db) {
        unsigned da = a.degree_in(m);
        Poly lca = coefficient_in(a, m, da);
        Poly xshift = Poly(a.vars_ptr(), 1);
        {
            ExpVec e(a.vars().size(), 0u);
            e[m] = da - db;
            Poly t(a.vars_ptr());
            t.add_term(e, 1);
            xshift = t;
        }
        a = a * lcb - b * (lca * xshift);
    }
    return a;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    Poly r = p;
    r *= 1 / p.leading_coefficient();
    return r;
}

}  // namespace

namespace {

// Primitive pseudo-remainder sequence over Z for polynomials that are
// univariate in variable m; avoids rational coefficient growth.
Poly gcd_univariate(const Poly& a, const Poly& b, size_t m) {
    auto dense = [&](const Poly& p) {
        std::vector<Integer> v(p.degree_in(m) + 1, Integer(0));
        Integer denlcm = 1;
        for (const auto& [e, c] : p.terms()) denlcm = lcm(denlcm, den(c));
        for (const auto& [e, c] : p.terms()) v[e[m]] = num(c * Rational(denlcm));
        Integer g = 0;
        for (const auto& x : v) g = gcd(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
        return v;
    };
    auto trim = [](std::vector<Integer>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto content = [](const std::vector<Integer>& v) {
        Integer g = 0;
        for (const auto& x : v) g = gcd(g, x);
        return g;
    };
    std::vector<Integer> A = dense(a), B = dense(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        // primitive pseudo-remainder of A by B
        std::vector<Integer> R = A;
        while (R.size() >= B.size()) {
            Integer t = R.back();
            size_t shift = R.size() - B.size();
            const Integer& lcb = B.back();
            for (auto& x : R) x *= lcb;
            for (size_t k = 0; k < B.size(); ++k) R[shift + k] -= t * B[k];
            trim(R);
            Integer g = content(R);
            if (g > 1)
                for (auto& x : R) x /= g;
        }
        A = std::move(B);
        B = std::move(R);
    }
    Poly g(a.vars_ptr());
    for (size_t k = 0; k < A.size(); ++k) {
        if (A[k] == 0) continue;
        ExpVec e(a.vars().size(), 0u);
        e[m] = unsigned(k);
        g.add_term(e, Rational(A[k]));
    }
    return monic(g);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_vars(a, b, "gcd");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(a.vars_ptr(), 1);

    // Main variable: highest-index indeterminate occurring in either.
    size_t m = 0;
    int occupied = 0;
    for (size_t i = a.vars().size(); i-- > 0;) {
        if (a.depends_on(i) || b.depends_on(i)) {
            if (!occupied) m = i;
            ++occupied;
        }
    }
    if (occupied == 1) return gcd_univariate(a, b, m);
    Poly ca = content_in(a, m), cb = content_in(b, m);
    Poly c = poly_gcd(ca, cb);
    Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
    if (pa.degree_in(m) < pb.degree_in(m)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, m);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            Poly cr = content_in(r, m);
            pb = monic(exact_div(r, cr));
        }
    }
    return monic(c * pa);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.vars_ptr());
    return monic(exact_div(a * b, poly_gcd(a, b)));
}

std::vector<Rational> positive_rational_roots(const Poly& p, const std::string& var) {
    std::vector<Rational> roots;
    int vi = p.index_of(var);
    if (vi < 0 || p.is_zero()) return roots;
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (int(i) != vi && p.depends_on(i)) return roots;  // not univariate in var
    if (!p.depends_on(size_t(vi))) return roots;

    // Clear denominators and the trailing power of var.
    unsigned lo = ~0u, hi = 0;
    Integer denlcm = 1;
    for (const auto& [e, c] : p.terms()) {
        lo = std::min(lo, e[size_t(vi)]);
        hi = std::max(hi, e[size_t(vi)]);
        denlcm = lcm(denlcm, den(c));
    }
    std::vector<Integer> coef(hi - lo + 1, Integer(0));
    for (const auto& [e, c] : p.terms()) {
        Rational v = c * Rational(denlcm);
        coef[e[size_t(vi)] - lo] = num(v);
    }
    auto divisors = [](Integer n) {
        if (n < 0) n = -n;
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    auto eval_at = [&](const Rational& x) {
        Rational acc = 0;
        for (size_t k = coef.size(); k-- > 0;) acc = acc * x + Rational(coef[k]);
        return acc;
    };
    for (const Integer& pn : divisors(coef.front()))        // divides constant term
        for (const Integer& qd : divisors(coef.back())) {   // divides leading term
            Rational cand(pn, qd);
            if (eval_at(cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace nilform
