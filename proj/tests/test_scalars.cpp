#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilform/scalar.hpp"

using namespace nilform;

namespace {

CtxPtr alpha_ctx() {
    auto vars = make_vars({"alpha"});
    Poly r(vars, 3);
    r += Poly::variable(vars, "alpha");
    static const CtxPtr ctx = Context::make({"alpha"}, r);
    return ctx;
}

std::mt19937 rng(20240811);

Rational rand_rational() {
    std::uniform_int_distribution<int> n(-9, 9), d(1, 9);
    return Rational(n(rng), d(rng));
}

Poly rand_poly(const VarsPtr& vars) {
    std::uniform_int_distribution<int> nterms(0, 2), expo(0, 1);
    Poly p(vars);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        ExpVec e(vars->size());
        for (auto& x : e) x = unsigned(expo(rng));
        p.add_term(e, rand_rational());
    }
    return p;
}

RatFunc rand_ratfunc(const VarsPtr& vars) {
    Poly d = rand_poly(vars);
    while (d.is_zero()) d = rand_poly(vars);
    return RatFunc(rand_poly(vars), d);
}

CScalar rand_cscalar(const CtxPtr& ctx) {
    return CScalar(ExtScalar(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars)),
                   ExtScalar(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars)));
}

}  // namespace

TEST_CASE("difference of squares with the reduction rule") {
    auto ctx = alpha_ctx();
    CScalar half(ctx, Rational(1, 2));
    CScalar s = CScalar::root(ctx);
    CScalar prod = (half + s) * (half - s);
    // 1/4 - (3+alpha) = -11/4 - alpha
    CScalar expect = CScalar(ctx, Rational(-11, 4)) - CScalar::variable(ctx, "alpha");
    CHECK(prod == expect);
}

TEST_CASE("gcd cancellation in rational functions") {
    auto vars = make_vars({"alpha"});
    Poly a = Poly::variable(vars, "alpha");
    RatFunc f(a * a - Poly(vars, 1), a - Poly(vars, 1));  // (alpha^2-1)/(alpha-1)
    CHECK(f == RatFunc(a + Poly(vars, 1)));
    CHECK(f.str() == "alpha+1");
}

TEST_CASE("i*i = -1") {
    auto ctx = alpha_ctx();
    CScalar i = CScalar::i(ctx);
    CHECK(i * i == CScalar(ctx, -1));
}

TEST_CASE("division requires nonzero norm") {
    auto ctx = alpha_ctx();
    CScalar one(ctx, 1);
    CHECK_THROWS(one / CScalar(ctx, 0));
    // Zero-divisor detection needs a perfect-square radicand that is not
    // folded, i.e. a non-constant one: r = alpha^2 gives (alpha-s)(alpha+s)=0.
    auto vars = make_vars({"alpha"});
    Poly a = Poly::variable(vars, "alpha");
    auto ctx2 = Context::make({"alpha"}, a * a);
    CScalar z = CScalar::variable(ctx2, "alpha") - CScalar::root(ctx2);
    CHECK_THROWS_WITH_AS(one / (one - one), "CScalar: division by zero", std::domain_error);
    CHECK_THROWS(CScalar(ctx2, 1) / z);
}

TEST_CASE("evaluate: perfect square radicand") {
    auto ctx = alpha_ctx();
    CScalar s = CScalar::root(ctx);
    CScalar v = evaluate_exact(s, {{"alpha", 1}});
    CHECK(v == CScalar(ctx, 2));
}

TEST_CASE("evaluate: paper coefficient 2a/(1+a)^2 at alpha=1") {
    auto ctx = alpha_ctx();
    CScalar a = CScalar::variable(ctx, "alpha");
    CScalar one(ctx, 1);
    CScalar f = (CScalar(ctx, 2) * a) / ((one + a) * (one + a));
    CHECK(evaluate_exact(f, {{"alpha", 1}}).to_rational() == Rational(1, 2));
}

TEST_CASE("evaluate: pole detection") {
    auto ctx = alpha_ctx();
    CScalar a = CScalar::variable(ctx, "alpha");
    CScalar f = CScalar(ctx, 1) / (CScalar(ctx, 1) + a);
    CHECK_THROWS_AS(evaluate_exact(f, {{"alpha", -1}}), std::domain_error);
}

TEST_CASE("evaluate: irrational root suggests numeric mode") {
    auto ctx = alpha_ctx();
    CScalar s = CScalar::root(ctx);
    CHECK_THROWS_WITH_AS(evaluate_exact(s, {{"alpha", 2}}),
                         "evaluate: radicand alpha+3 is not a perfect rational square at the "
                         "assignment; use numeric mode",
                         std::domain_error);
    auto v = evaluate_numeric(s, {{"alpha", 2}});
    CHECK(v.real() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(v.imag() == 0.0);
}

TEST_CASE("conjugation fixes s and parameters, flips i") {
    auto ctx = alpha_ctx();
    CScalar one(ctx, 1);
    CScalar is = CScalar::i(ctx) * CScalar::root(ctx);
    CHECK(conjugate(one + is) == one - is);
    CScalar a = CScalar::variable(ctx, "alpha");
    CScalar f = a / (one + a);
    CHECK(conjugate(f) == f);
}

TEST_CASE("ring axioms on random triples") {
    auto ctx = alpha_ctx();
    for (int t = 0; t < 1000; ++t) {
        CScalar x = rand_cscalar(ctx), y = rand_cscalar(ctx), z = rand_cscalar(ctx);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
    }
}

TEST_CASE("canonical form is unique: x - x is the stored zero") {
    auto ctx = alpha_ctx();
    for (int t = 0; t < 200; ++t) {
        CScalar x = rand_cscalar(ctx);
        CHECK((x - x).is_zero());
        CHECK(x - x == CScalar(ctx, 0));
    }
}

TEST_CASE("conjugate is an involutive ring homomorphism") {
    auto ctx = alpha_ctx();
    for (int t = 0; t < 200; ++t) {
        CScalar x = rand_cscalar(ctx), y = rand_cscalar(ctx);
        CHECK(conjugate(conjugate(x)) == x);
        CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
        CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    auto ctx = alpha_ctx();
    Assignment at{{"alpha", 1}};  // 3+alpha = 4, exact mode available
    int done = 0;
    for (int t = 0; t < 400 && done < 200; ++t) {
        CScalar x = rand_cscalar(ctx), y = rand_cscalar(ctx);
        CScalar ex, ey;
        try {
            ex = evaluate_exact(x, at);
            ey = evaluate_exact(y, at);
        } catch (const std::domain_error&) {
            continue;  // random denominator hit a pole at alpha=1
        }
        CHECK(evaluate_exact(x * y, at) == ex * ey);
        CHECK(evaluate_exact(x + y, at) == ex + ey);
        ++done;
    }
    CHECK(done >= 100);
}

TEST_CASE("reduction confluence: products of ExtScalars stay linear in s") {
    auto ctx = alpha_ctx();
    for (int t = 0; t < 200; ++t) {
        ExtScalar p(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars));
        for (int k = 0; k < 3; ++k)
            p = p * ExtScalar(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars));
        // representation is (a, b): any product normalizes to degree <= 1 in s;
        // cross-check against the two-route expansion ((x*y)*z == x*(y*z)).
        ExtScalar x(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars));
        ExtScalar y(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars));
        ExtScalar z(ctx, rand_ratfunc(ctx->vars), rand_ratfunc(ctx->vars));
        CHECK((x * y) * z == x * (y * z));
        CHECK(((x * y) * (x * z)) == (x * x) * (y * z));
    }
}

TEST_CASE("perfect-square constant radicand folds s to a rational") {
    auto ctx = Context::make({}, Poly(Poly::empty_vars(), 4));
    CHECK(CScalar::root(ctx) == CScalar(ctx, 2));
    CHECK((CScalar::root(ctx) - CScalar(ctx, 2)).is_zero());
}
