#pragma once

#include <string>
#include <tuple>

#include "nilform/form.hpp"
#include "nilform/matrix.hpp"

namespace nilform {

// Lie algebra presentation: de^j = sum a^j_{ik} e^i ^ e^k with i < k.
// Constants are real rational functions of the declared parameters.
class Presentation {
public:
    Presentation(std::string name, CtxPtr ctx, int n)
        : name_(std::move(name)), ctx_(std::move(ctx)), n_(n) {}

    static Presentation abelian(int n);

    const std::string& name() const { return name_; }
    const CtxPtr& ctx() const { return ctx_; }
    int dimension() const { return n_; }
    const std::map<std::tuple<int, int, int>, CScalar>& constants() const { return constants_; }

    // a^j_{ik}; i < k normalization with sign flip is applied.
    void set_constant(int j, int i, int k, const CScalar& value);
    CScalar constant(int j, int i, int k) const;

    bool has_parameters() const { return !ctx_->vars->empty(); }
    // True when every pair (i,k) with a nonzero a^j_{ik} satisfies i,k < j.
    bool strictly_triangular() const;

    Form d_generator(int j) const;  // de^j as a 2-form
    Form zero_form() const { return Form(ctx_, n_); }

    Presentation specialized(const Assignment& at) const;
    Presentation specialized(const Assignment& at, const CtxPtr& target) const;

    bool operator==(const Presentation& o) const {
        return n_ == o.n_ && constants_ == o.constants_;
    }

private:
    std::string name_;
    CtxPtr ctx_;
    int n_;
    std::map<std::tuple<int, int, int>, CScalar> constants_;
};

// The Chevalley-Eilenberg differential, extended to polyforms by the
// Leibniz rule.
Form differential(const Presentation& p, const Form& a);

struct DSquaredReport {
    bool pass = true;
    std::vector<std::pair<int, Form>> failures;  // generator j, d(de^j)
};

// d^2 = 0 on generators, which certifies it on all of the algebra.
DSquaredReport check_d_squared(const Presentation& p);

// Pushforward along the coframe change f^i = sum_j M[i][j] e^j (M an
// invertible scalar matrix); structure constants transform accordingly.
Presentation change_basis(const Presentation& p, const Matrix<CScalar>& M);

// The paper's one-parameter family on 8 generators, over a context whose
// variable list contains `param`.
Presentation g_alpha_family(const CtxPtr& ctx, const std::string& param);
// Specialized family member at a rational value q > 0.
Presentation g_alpha_at(const Rational& q);

}  // namespace nilform
