#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nilform/scalar.hpp"

namespace nilform {

// Basis blade of the exterior algebra on n <= 16 generators: bit j set
// means the generator e^{j+1} is present, canonical ascending order.
using Blade = std::uint16_t;

inline int blade_degree(Blade b) { return __builtin_popcount(b); }

// Sign of e_A ^ e_B for disjoint ascending blades: parity of the number
// of transpositions needed to merge the index sequences.
inline int merge_sign(Blade a, Blade b) {
    int inv = 0;
    for (Blade t = b; t; t &= Blade(t - 1)) {
        int i = __builtin_ctz(t);
        inv += __builtin_popcount(a >> (i + 1));
    }
    return (inv & 1) ? -1 : 1;
}

constexpr int kMaxGenerators = 16;

// Sparse polyform (mixed degree allowed) over CScalar coefficients.
class Form {
public:
    Form() : ctx_(Context::rational()), n_(0) {}
    Form(CtxPtr ctx, int n);

    static Form zero(const CtxPtr& ctx, int n) { return Form(ctx, n); }
    static Form unit(const CtxPtr& ctx, int n);                        // the scalar 1
    static Form generator(const CtxPtr& ctx, int n, int index);        // e^index, 1-based
    static Form blade(const CtxPtr& ctx, int n, std::initializer_list<int> indices);

    const CtxPtr& ctx() const { return ctx_; }
    int dimension() const { return n_; }
    const std::map<Blade, CScalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    CScalar coefficient(Blade b) const;
    void add_term(Blade b, const CScalar& c);

    // Degree of a homogeneous form; -1 for 0, throws if mixed.
    int homogeneous_degree() const;
    int max_degree() const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const CScalar& c, const Form& a);
    friend Form operator*(const Form& a, const CScalar& c) { return c * a; }
    bool operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    std::string str() const;

private:
    CtxPtr ctx_;
    int n_;
    std::map<Blade, CScalar> terms_;
};

// Polyvectors share the sparse representation, read over the dual basis.
using Polyvector = Form;

Form wedge(const Form& a, const Form& b);
Form wedge_pow(const Form& a, int k);
Form grade_project(const Form& a, int k);
CScalar top_coefficient(const Form& a);
Form conj_form(const Form& a);

// exp(B) = sum B^m / m!, truncated at degree n. Every term of B must
// have even degree >= 2.
Form exp_even(const Form& B);

// Contraction by a polyvector; iota_{e_j} e^k = delta_{jk} as a graded
// derivation, and iota_{X^Y} = iota_Y o iota_X on decomposables.
Form contract(const Polyvector& p, const Form& a);

// Algebra morphism extending e^i -> images[i-1] (each a 1-form, possibly
// over a different generator space of the same context).
Form apply_linear(const Form& a, const std::vector<Form>& images);

// Substitute coefficients (evaluate the scalar parameters exactly).
Form evaluate_form(const Form& a, const Assignment& at, const CtxPtr& target_ctx);

}  // namespace nilform
