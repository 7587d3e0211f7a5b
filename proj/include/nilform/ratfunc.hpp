#pragma once

#include "nilform/poly.hpp"

namespace nilform {

// Reduced fraction of polynomials. The denominator is nonzero, coprime
// to the numerator and normalized with grlex-leading coefficient 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::empty_vars(), 1) {}
    RatFunc(Poly n, Poly d);
    /* implicit */ RatFunc(Poly n) : num_(std::move(n)), den_(num_.vars_ptr(), 1) {}
    RatFunc(VarsPtr vars, const Rational& c) : num_(vars, c), den_(vars, 1) {}

    static RatFunc variable(VarsPtr vars, const std::string& name) {
        return RatFunc(Poly::variable(vars, name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    VarsPtr vars_ptr() const { return num_.vars_ptr(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational to_rational() const { return num_.to_rational() / den_.to_rational(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(int e) const;

    // Exact evaluation; throws naming the vanishing denominator.
    Rational evaluate(const Assignment& a) const;
    RatFunc substitute(const Assignment& a) const;
    RatFunc extended(const VarsPtr& bigger) const;

    std::string str() const;

private:
    Poly num_, den_;
    void reduce();
};

}  // namespace nilform
