#pragma once

#include <complex>
#include <memory>
#include <optional>

#include "nilform/ratfunc.hpp"

namespace nilform {

// Shared coefficient context: the indeterminate list plus the radicand
// r of the quadratic extension Q(vars)[s]/(s^2 - r). When the radicand
// is a rational perfect square, s folds to its positive root and the
// extension stays an integral domain.
struct Context {
    VarsPtr vars;
    Poly radicand;                          // over vars; default 3+alpha
    std::optional<Rational> radicand_sqrt;  // set when radicand is a constant square

    static std::shared_ptr<const Context> make(VarList names, std::optional<Poly> radicand = {});
    static std::shared_ptr<const Context> rational();  // no indeterminates, radicand 0
};
using CtxPtr = std::shared_ptr<const Context>;

// Element a + b*s of the quadratic extension.
class ExtScalar {
public:
    ExtScalar() : ctx_(Context::rational()), a_(), b_() {}
    explicit ExtScalar(CtxPtr ctx) : ctx_(std::move(ctx)), a_(mk(0)), b_(mk(0)) {}
    ExtScalar(CtxPtr ctx, RatFunc a) : ctx_(std::move(ctx)), a_(std::move(a)), b_(mk(0)) { check(); }
    ExtScalar(CtxPtr ctx, RatFunc a, RatFunc b)
        : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {
        check();
        fold();
    }

    static ExtScalar root(const CtxPtr& ctx);  // the element s

    const CtxPtr& ctx() const { return ctx_; }
    const RatFunc& rational_part() const { return a_; }
    const RatFunc& root_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational_function() const { return b_.is_zero(); }

    ExtScalar operator-() const { return ExtScalar(ctx_, -a_, -b_); }
    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y);
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y);
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y);
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y);
    bool operator==(const ExtScalar& y) const { return a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const ExtScalar& y) const { return !(*this == y); }

    // Norm to the base field: a^2 - b^2 r.
    RatFunc norm() const;

    std::string str() const;

private:
    CtxPtr ctx_;
    RatFunc a_, b_;
    RatFunc mk(const Rational& c) const { return RatFunc(ctx_->vars, c); }
    void check() const;
    void fold();  // apply s -> sqrt(r) when the radicand is a constant square
    friend class CScalar;
};

// Element re + i*im over the quadratic extension; the single numeric
// currency of the library.
class CScalar {
public:
    CScalar() : re_(), im_() {}
    explicit CScalar(CtxPtr ctx) : re_(ctx), im_(std::move(ctx)) {}
    /* implicit */ CScalar(ExtScalar re) : re_(std::move(re)), im_(re_.ctx()) {}
    CScalar(ExtScalar re, ExtScalar im) : re_(std::move(re)), im_(std::move(im)) {
        if (re_.ctx() != im_.ctx() && !(re_.ctx()->vars == im_.ctx()->vars ||
                                        *re_.ctx()->vars == *im_.ctx()->vars))
            throw std::invalid_argument("CScalar: mismatched contexts");
    }
    CScalar(const CtxPtr& ctx, const Rational& c) : re_(ctx, RatFunc(ctx->vars, c)), im_(ctx) {}

    static CScalar from_ratfunc(const CtxPtr& ctx, RatFunc f) { return CScalar(ExtScalar(ctx, std::move(f))); }
    static CScalar variable(const CtxPtr& ctx, const std::string& name) {
        return from_ratfunc(ctx, RatFunc::variable(ctx->vars, name));
    }
    static CScalar i(const CtxPtr& ctx) { return CScalar(ExtScalar(ctx), ExtScalar(ctx, RatFunc(ctx->vars, 1))); }
    static CScalar root(const CtxPtr& ctx) { return CScalar(ExtScalar::root(ctx)); }

    const CtxPtr& ctx() const { return re_.ctx(); }
    const ExtScalar& real_part() const { return re_; }
    const ExtScalar& imag_part() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    // Real, with no s component: a plain rational function.
    bool is_rational_function() const { return is_real() && re_.is_rational_function(); }
    const RatFunc& as_ratfunc() const;
    Rational to_rational() const { return as_ratfunc().to_rational(); }

    CScalar operator-() const { return CScalar(-re_, -im_); }
    friend CScalar operator+(const CScalar& x, const CScalar& y);
    friend CScalar operator-(const CScalar& x, const CScalar& y);
    friend CScalar operator*(const CScalar& x, const CScalar& y);
    friend CScalar operator/(const CScalar& x, const CScalar& y);
    CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
    CScalar& operator-=(const CScalar& o) { return *this = *this - o; }
    CScalar& operator*=(const CScalar& o) { return *this = *this * o; }
    CScalar& operator/=(const CScalar& o) { return *this = *this / o; }
    bool operator==(const CScalar& y) const { return re_ == y.re_ && im_ == y.im_; }
    bool operator!=(const CScalar& y) const { return !(*this == y); }

    CScalar pow(int e) const;

    std::string str() const;

private:
    ExtScalar re_, im_;
};

CScalar conjugate(const CScalar& x);

// Exact evaluation: substitutes the assignment; s maps to the positive
// rational square root of the evaluated radicand (error if irrational).
CScalar evaluate_exact(const CScalar& x, const Assignment& a);

// Floating cross-check mode: s maps to the positive real root.
std::complex<double> evaluate_numeric(const CScalar& x, const Assignment& a);

// Substitute an assignment and re-express the result over another
// context (whose variables must cover the remaining indeterminates and
// whose radicand must match when an s component survives).
CScalar convert_scalar(const CScalar& x, const Assignment& a, const CtxPtr& target);

}  // namespace nilform
