#include "nilform/ratfunc.hpp"

#include <stdexcept>

namespace nilform {

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (!same_vars(num_, den_))
        throw std::invalid_argument("RatFunc: mismatched indeterminate lists");
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(num_.vars_ptr(), 1);
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        num_ *= 1 / lc;
        den_ *= 1 / lc;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatFunc: 0^negative");
        return RatFunc(den_, num_).pow(-e);
    }
    return RatFunc(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

Rational RatFunc::evaluate(const Assignment& a) const {
    Rational d = den_.evaluate(a);
    if (d == 0)
        throw std::domain_error("pole: denominator " + den_.str() + " vanishes at the assignment");
    return num_.evaluate(a) / d;
}

RatFunc RatFunc::substitute(const Assignment& a) const {
    Poly d = den_.substitute(a);
    if (d.is_zero())
        throw std::domain_error("pole: denominator " + den_.str() + " vanishes at the assignment");
    return RatFunc(num_.substitute(a), d);
}

RatFunc RatFunc::extended(const VarsPtr& bigger) const {
    return RatFunc(num_.extended(bigger), den_.extended(bigger));
}

std::string RatFunc::str() const {
    if (is_polynomial()) {
        Rational d = den_.to_rational();
        if (d == 1) return num_.str();
        Poly scaled = num_;
        scaled *= 1 / d;
        return scaled.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace nilform
