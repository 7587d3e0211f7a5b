#include "nilform/presentation.hpp"

#include <stdexcept>

namespace nilform {

Presentation Presentation::abelian(int n) {
    return Presentation("abelian", Context::rational(), n);
}

void Presentation::set_constant(int j, int i, int k, const CScalar& value) {
    if (j < 1 || j > n_ || i < 1 || i > n_ || k < 1 || k > n_ || i == k)
        throw std::invalid_argument("Presentation: generator index out of range");
    if (!value.is_rational_function())
        throw std::invalid_argument("Presentation: structure constants must be real rational functions");
    CScalar v = value;
    if (i > k) {
        std::swap(i, k);
        v = -v;
    }
    auto key = std::make_tuple(j, i, k);
    if (v.is_zero())
        constants_.erase(key);
    else
        constants_[key] = v;
}

CScalar Presentation::constant(int j, int i, int k) const {
    int sign = 1;
    if (i > k) {
        std::swap(i, k);
        sign = -1;
    }
    auto it = constants_.find(std::make_tuple(j, i, k));
    if (it == constants_.end()) return CScalar(ctx_, 0);
    return sign < 0 ? -it->second : it->second;
}

bool Presentation::strictly_triangular() const {
    for (const auto& [key, v] : constants_) {
        auto [j, i, k] = key;
        if (i >= j || k >= j) return false;
    }
    return true;
}

Form Presentation::d_generator(int j) const {
    Form r(ctx_, n_);
    for (const auto& [key, v] : constants_) {
        auto [jj, i, k] = key;
        if (jj != j) continue;
        r.add_term(Blade((1u << (i - 1)) | (1u << (k - 1))), v);
    }
    return r;
}

Presentation Presentation::specialized(const Assignment& at) const {
    return specialized(at, Context::rational());
}

Presentation Presentation::specialized(const Assignment& at, const CtxPtr& target) const {
    Presentation q(name_, target, n_);
    for (const auto& [key, v] : constants_) {
        auto [j, i, k] = key;
        q.set_constant(j, i, k, convert_scalar(v, at, target));
    }
    return q;
}

Form differential(const Presentation& p, const Form& a) {
    if (a.dimension() != p.dimension())
        throw std::invalid_argument("differential: form dimension mismatch");
    Form r = p.zero_form();
    for (const auto& [b, c] : a.terms()) {
        // d(e^A) = sum_{j in A} (-1)^{pos(j)} de^j ^ e^{A \ j}
        for (Blade rest = b; rest; rest &= Blade(rest - 1)) {
            int bit = __builtin_ctz(rest);
            int pos = __builtin_popcount(b & ((1u << bit) - 1));
            Form dj = p.d_generator(bit + 1);
            if (dj.is_zero()) continue;
            Form tail(p.ctx(), p.dimension());
            tail.add_term(Blade(b & ~(1u << bit)), (pos & 1) ? -c : c);
            r += wedge(dj, tail);
        }
    }
    return r;
}

DSquaredReport check_d_squared(const Presentation& p) {
    DSquaredReport rep;
    for (int j = 1; j <= p.dimension(); ++j) {
        Form dd = differential(p, p.d_generator(j));
        if (!dd.is_zero()) {
            rep.pass = false;
            rep.failures.emplace_back(j, dd);
        }
    }
    return rep;
}

Presentation change_basis(const Presentation& p, const Matrix<CScalar>& M) {
    int n = p.dimension();
    if (int(M.size()) != n) throw std::invalid_argument("change_basis: matrix size mismatch");
    // e^j expressed in the new coframe: column j of M^{-1}.
    Matrix<CScalar> Minv = field_inverse(M, CScalar(p.ctx(), 0), CScalar(p.ctx(), 1));
    std::vector<Form> e_in_f(size_t(n), Form(p.ctx(), n));
    for (int j = 0; j < n; ++j) {
        Form img(p.ctx(), n);
        for (int i = 0; i < n; ++i) img += Minv[size_t(j)][size_t(i)] * Form::generator(p.ctx(), n, i + 1);
        e_in_f[size_t(j)] = img;
    }
    Presentation q(p.name() + "'", p.ctx(), n);
    for (int i = 1; i <= n; ++i) {
        // d f^i = sum_j M[i][j] de^j, rewritten in f-blades
        Form dfi(p.ctx(), n);
        for (int j = 1; j <= n; ++j) {
            const CScalar& c = M[size_t(i - 1)][size_t(j - 1)];
            if (!c.is_zero()) dfi += c * p.d_generator(j);
        }
        Form in_f = apply_linear(dfi, e_in_f);
        for (const auto& [b, c] : in_f.terms()) {
            int lo = __builtin_ctz(b) + 1;
            int hi = 31 - __builtin_clz(unsigned(b)) + 1;
            q.set_constant(i, lo, hi, c);
        }
    }
    return q;
}

Presentation g_alpha_family(const CtxPtr& ctx, const std::string& param) {
    CScalar one(ctx, 1);
    CScalar a = CScalar::variable(ctx, param);
    Presentation p("g_alpha", ctx, 8);
    p.set_constant(5, 1, 2, one);
    p.set_constant(6, 1, 5, one);
    p.set_constant(6, 2, 4, one - a);
    p.set_constant(7, 1, 4, -(one + a));
    p.set_constant(7, 2, 3, -one);
    p.set_constant(7, 2, 5, one + a);
    p.set_constant(8, 1, 6, one);
    p.set_constant(8, 2, 7, one);
    p.set_constant(8, 3, 4, one);
    p.set_constant(8, 4, 5, CScalar(ctx, -2));
    return p;
}

Presentation g_alpha_at(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("g_alpha_at: the parameter must be a positive rational");
    auto vars = make_vars({"alpha"});
    Poly r = Poly::variable(vars, "alpha") + Poly(vars, 3);
    auto ctx = Context::make({"alpha"}, r);
    return g_alpha_family(ctx, "alpha").specialized({{"alpha", q}});
}

}  // namespace nilform
