#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nilform/rational.hpp"

namespace nilform {

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;
using ExpVec = std::vector<unsigned>;
using Assignment = std::map<std::string, Rational>;

inline VarsPtr make_vars(VarList names) {
    return std::make_shared<const VarList>(std::move(names));
}

// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Multivariate polynomial with rational coefficients over a fixed,
// ordered indeterminate list. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexGreater>;

    Poly() : vars_(empty_vars()) {}
    explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}
    Poly(VarsPtr vars, const Rational& c);

    static Poly constant(const Rational& c) { return Poly(empty_vars(), c); }
    static Poly variable(VarsPtr vars, const std::string& name, unsigned power = 1);

    const VarList& vars() const { return *vars_; }
    VarsPtr vars_ptr() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (degree-zero coefficient).
    Rational constant_term() const;
    // As a rational, failing if any variable occurs.
    Rational to_rational() const;

    unsigned total_degree() const;
    unsigned degree_in(size_t var_index) const;
    bool depends_on(size_t var_index) const;
    int index_of(const std::string& name) const;  // -1 if absent

    Rational leading_coefficient() const;  // grlex-leading; 0 for zero poly

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const;

    // Full evaluation; every occurring variable must be assigned.
    Rational evaluate(const Assignment& a) const;
    // Substitute assigned variables, keep the rest symbolic.
    Poly substitute(const Assignment& a) const;
    // Substitute one variable by a polynomial over the same list.
    Poly substitute(size_t var_index, const Poly& value) const;

    // Re-express over a larger variable list containing all current names.
    Poly extended(const VarsPtr& bigger) const;

    void add_term(const ExpVec& e, const Rational& c);

    std::string str() const;

    static VarsPtr empty_vars();

private:
    VarsPtr vars_;
    TermMap terms_;
};

bool same_vars(const Poly& a, const Poly& b);

// Exact quotient a / b; throws if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Multivariate gcd (content / primitive-part recursion), normalized so
// the grlex-leading coefficient is 1.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Positive rational roots of a polynomial that is univariate in the
// named variable (rational root theorem). Empty when the polynomial has
// no such variable or depends on others.
std::vector<Rational> positive_rational_roots(const Poly& p, const std::string& var);

}  // namespace nilform
