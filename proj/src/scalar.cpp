#include "nilform/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilform {

std::shared_ptr<const Context> Context::make(VarList names, std::optional<Poly> radicand) {
    auto vars = make_vars(std::move(names));
    Context c;
    c.vars = vars;
    if (radicand) {
        if (!(radicand->vars() == *vars))
            throw std::invalid_argument("Context: radicand over a different indeterminate list");
        c.radicand = *radicand;
    } else {
        c.radicand = Poly(vars);
    }
    if (c.radicand.is_constant()) {
        if (auto r = rational_sqrt(c.radicand.constant_term())) c.radicand_sqrt = *r;
    }
    return std::make_shared<const Context>(std::move(c));
}

std::shared_ptr<const Context> Context::rational() {
    static const CtxPtr c = Context::make({});
    return c;
}

ExtScalar ExtScalar::root(const CtxPtr& ctx) {
    return ExtScalar(ctx, RatFunc(ctx->vars, 0), RatFunc(ctx->vars, 1));
}

void ExtScalar::check() const {
    if (!(a_.vars_ptr() == ctx_->vars || *a_.vars_ptr() == *ctx_->vars) ||
        !(b_.vars_ptr() == ctx_->vars || *b_.vars_ptr() == *ctx_->vars))
        throw std::invalid_argument("ExtScalar: component over a different indeterminate list");
}

void ExtScalar::fold() {
    if (!b_.is_zero() && ctx_->radicand_sqrt) {
        a_ += b_ * RatFunc(ctx_->vars, *ctx_->radicand_sqrt);
        b_ = mk(0);
    }
}

static void require_ctx(const ExtScalar& x, const ExtScalar& y) {
    if (x.ctx() != y.ctx() && !(*x.ctx()->vars == *y.ctx()->vars && x.ctx()->radicand == y.ctx()->radicand))
        throw std::invalid_argument("ExtScalar: mismatched contexts");
}

ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
    require_ctx(x, y);
    return ExtScalar(x.ctx_, x.a_ + y.a_, x.b_ + y.b_);
}

ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
    require_ctx(x, y);
    return ExtScalar(x.ctx_, x.a_ - y.a_, x.b_ - y.b_);
}

ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
    require_ctx(x, y);
    RatFunc r{x.ctx_->radicand};
    return ExtScalar(x.ctx_, x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_);
}

RatFunc ExtScalar::norm() const {
    return a_ * a_ - b_ * b_ * RatFunc{ctx_->radicand};
}

ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) {
    require_ctx(x, y);
    if (y.is_zero()) throw std::domain_error("ExtScalar: division by zero");
    if (y.b_.is_zero()) return ExtScalar(x.ctx_, x.a_ / y.a_, x.b_ / y.a_);
    // Rationalize by the conjugate a - b*s.
    RatFunc n = y.norm();
    if (n.is_zero())
        throw std::domain_error(
            "ExtScalar: division by a zero divisor (norm a^2 - b^2*r is the zero rational function)");
    ExtScalar conj(y.ctx_, y.a_, -y.b_);
    ExtScalar num = x * conj;
    return ExtScalar(x.ctx_, num.a_ / n, num.b_ / n);
}

std::string ExtScalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = "(" + b_.str() + ")*s";
    if (a_.is_zero()) return s;
    return a_.str() + "+" + s;
}

const RatFunc& CScalar::as_ratfunc() const {
    if (!is_rational_function())
        throw std::domain_error("CScalar: not a plain rational function: " + str());
    return re_.rational_part();
}

CScalar operator+(const CScalar& x, const CScalar& y) { return CScalar(x.re_ + y.re_, x.im_ + y.im_); }
CScalar operator-(const CScalar& x, const CScalar& y) { return CScalar(x.re_ - y.re_, x.im_ - y.im_); }

CScalar operator*(const CScalar& x, const CScalar& y) {
    return CScalar(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
}

CScalar operator/(const CScalar& x, const CScalar& y) {
    if (y.is_zero()) throw std::domain_error("CScalar: division by zero");
    if (y.im_.is_zero()) return CScalar(x.re_ / y.re_, x.im_ / y.re_);
    ExtScalar n = y.re_ * y.re_ + y.im_ * y.im_;
    if (n.is_zero()) throw std::domain_error("CScalar: division by a zero divisor");
    CScalar num = x * conjugate(y);
    return CScalar(num.re_ / n, num.im_ / n);
}

CScalar CScalar::pow(int e) const {
    if (e < 0) return CScalar(ctx(), 1) / pow(-e);
    CScalar r(ctx(), 1), base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

CScalar conjugate(const CScalar& x) { return CScalar(x.real_part(), -x.imag_part()); }

std::string CScalar::str() const {
    if (im_.is_zero()) return re_.str();
    std::string i = "(" + im_.str() + ")*i";
    if (re_.is_zero()) return i;
    return re_.str() + "+" + i;
}

namespace {

ExtScalar eval_ext(const ExtScalar& x, const Assignment& a) {
    RatFunc ra = x.rational_part().substitute(a);
    RatFunc rb = x.root_part().substitute(a);
    const CtxPtr& ctx = x.ctx();
    if (rb.is_zero()) return ExtScalar(ctx, ra, rb);
    Poly r = ctx->radicand.substitute(a);
    if (!r.is_constant())
        throw std::invalid_argument("evaluate: assignment leaves the radicand " + r.str() + " symbolic");
    auto root = rational_sqrt(r.to_rational());
    if (!root)
        throw std::domain_error("evaluate: radicand " + ctx->radicand.str() +
                                " is not a perfect rational square at the assignment; use numeric mode");
    return ExtScalar(ctx, ra + rb * RatFunc(ctx->vars, *root), RatFunc(ctx->vars, 0));
}

}  // namespace

CScalar evaluate_exact(const CScalar& x, const Assignment& a) {
    return CScalar(eval_ext(x.real_part(), a), eval_ext(x.imag_part(), a));
}

CScalar convert_scalar(const CScalar& x, const Assignment& a, const CtxPtr& target) {
    auto move_ratfunc = [&](const RatFunc& f) {
        RatFunc s = f.substitute(a);
        // Drop assigned variables, then inject into the target list.
        Poly n(target->vars), d(target->vars);
        auto inject = [&](const Poly& p) {
            Poly r(target->vars);
            for (const auto& [e, c] : p.terms()) {
                ExpVec ne(target->vars->size(), 0u);
                for (size_t i = 0; i < e.size(); ++i) {
                    if (!e[i]) continue;
                    auto it = std::find(target->vars->begin(), target->vars->end(), p.vars()[i]);
                    if (it == target->vars->end())
                        throw std::invalid_argument("convert_scalar: unassigned indeterminate " +
                                                    p.vars()[i]);
                    ne[size_t(it - target->vars->begin())] = e[i];
                }
                r.add_term(ne, c);
            }
            return r;
        };
        return RatFunc(inject(s.num()), inject(s.den()));
    };
    auto move_ext = [&](const ExtScalar& e) {
        RatFunc b = move_ratfunc(e.root_part());
        if (!b.is_zero()) {
            Poly r = e.ctx()->radicand.substitute(a);
            Poly rt = move_ratfunc(RatFunc(r)).num();
            if (!(rt == target->radicand))
                throw std::invalid_argument("convert_scalar: radicand mismatch between contexts");
        }
        return ExtScalar(target, move_ratfunc(e.rational_part()), b);
    };
    return CScalar(move_ext(x.real_part()), move_ext(x.imag_part()));
}

std::complex<double> evaluate_numeric(const CScalar& x, const Assignment& a) {
    auto ext_num = [&](const ExtScalar& e) {
        Rational pa = e.rational_part().evaluate(a);
        double v = static_cast<double>(pa);
        if (!e.root_part().is_zero()) {
            Rational r = RatFunc{e.ctx()->radicand}.evaluate(a);
            if (r < 0) throw std::domain_error("evaluate: negative radicand in numeric mode");
            v += static_cast<double>(e.root_part().evaluate(a)) * std::sqrt(static_cast<double>(r));
        }
        return v;
    };
    return {ext_num(x.real_part()), ext_num(x.imag_part())};
}

}  // namespace nilform
