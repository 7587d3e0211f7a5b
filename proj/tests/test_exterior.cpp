#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilform/form.hpp"

using namespace nilform;

namespace {

const CtxPtr& Q() {
    static const CtxPtr c = Context::rational();
    return c;
}

std::mt19937 rng(7351);

Form rand_homogeneous(int n, int deg, int nterms = 3) {
    std::uniform_int_distribution<int> coef(-5, 5), pick(0, n - 1);
    Form f(Q(), n);
    for (int t = 0; t < nterms; ++t) {
        Blade b = 0;
        while (blade_degree(b) < deg) b |= Blade(1u << pick(rng));
        f.add_term(b, CScalar(Q(), coef(rng)));
    }
    return f;
}

Form rand_form(int n) {
    std::uniform_int_distribution<int> deg(0, n);
    Form f(Q(), n);
    for (int t = 0; t < 3; ++t) f += rand_homogeneous(n, deg(rng), 1);
    return f;
}

}  // namespace

TEST_CASE("wedge of generators and nilpotency") {
    Form e1 = Form::generator(Q(), 8, 1), e2 = Form::generator(Q(), 8, 2);
    CHECK(wedge(e1, e2) == Form::blade(Q(), 8, {1, 2}));
    Form e12 = Form::blade(Q(), 8, {1, 2});
    CHECK(wedge(e12, e12).is_zero());
    Form x = e12 + Form::blade(Q(), 8, {3, 4});
    CHECK(wedge(x, x) == CScalar(Q(), 2) * Form::blade(Q(), 8, {1, 2, 3, 4}));
}

TEST_CASE("wedge dimension mismatch is an error") {
    CHECK_THROWS(wedge(Form::generator(Q(), 8, 1), Form::generator(Q(), 6, 1)));
}

TEST_CASE("grade projection and top coefficient") {
    Form a = Form::unit(Q(), 8) + Form::blade(Q(), 8, {1, 2});
    CHECK(grade_project(a, 2) == Form::blade(Q(), 8, {1, 2}));
    CHECK(grade_project(a, 0) == Form::unit(Q(), 8));
    Form top = CScalar(Q(), 5) * Form::blade(Q(), 8, {1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(top_coefficient(top) == CScalar(Q(), 5));
    CHECK(top_coefficient(a).is_zero());
}

TEST_CASE("exp_even basics") {
    CHECK(exp_even(Form(Q(), 8)) == Form::unit(Q(), 8));
    Form B = Form::blade(Q(), 8, {1, 2}) + Form::blade(Q(), 8, {3, 4});
    Form expB = exp_even(B);
    Form expect = Form::unit(Q(), 8) + Form::blade(Q(), 8, {1, 2}) + Form::blade(Q(), 8, {3, 4}) +
                  Form::blade(Q(), 8, {1, 2, 3, 4});
    CHECK(expB == expect);
    CHECK_THROWS(exp_even(Form::generator(Q(), 8, 1)));
}

TEST_CASE("conjugation of forms") {
    CScalar i = CScalar::i(Q());
    Form a = i * Form::blade(Q(), 8, {1, 2});
    CHECK(conj_form(a) == -a);
    for (int t = 0; t < 50; ++t) {
        Form f = rand_form(6);
        Form g = i * rand_form(6) + f;
        CHECK(conj_form(conj_form(g)) == g);
    }
}

TEST_CASE("contraction against the dual basis") {
    Form e1 = Form::generator(Q(), 4, 1), e2 = Form::generator(Q(), 4, 2);
    Polyvector x1 = Form::generator(Q(), 4, 1);
    CHECK(contract(x1, e1) == Form::unit(Q(), 4));
    CHECK(contract(x1, e2).is_zero());
}

TEST_CASE("contraction by a bivector vs exponential, fixed convention") {
    // iota_{X3^X4} = iota_{X4} o iota_{X3} on theta^{1234}-like blades
    Polyvector beta = Form::blade(Q(), 4, {3, 4});
    Form top = Form::blade(Q(), 4, {1, 2, 3, 4});
    Form contracted = contract(beta, top);
    CHECK(contracted == Form::blade(Q(), 4, {1, 2}));
    Form lhs = top + contracted;  // (1 + iota_beta) applied
    Form rhs = wedge(exp_even(Form::blade(Q(), 4, {3, 4})), Form::blade(Q(), 4, {1, 2}));
    bool equal = lhs == rhs;
    bool equal_up_to_sign = equal || (lhs == -rhs);
    CHECK(equal_up_to_sign);
    CHECK(equal);  // with this convention the global sign is +1
}

TEST_CASE("graded commutativity on random homogeneous forms") {
    std::uniform_int_distribution<int> deg(0, 5);
    for (int t = 0; t < 200; ++t) {
        int da = deg(rng), db = deg(rng);
        Form a = rand_homogeneous(6, da), b = rand_homogeneous(6, db);
        Form ab = wedge(a, b), ba = wedge(b, a);
        if ((da * db) % 2 == 1)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
    }
}

TEST_CASE("associativity of wedge") {
    for (int t = 0; t < 200; ++t) {
        Form a = rand_form(6), b = rand_form(6), c = rand_form(6);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("exponential is a homomorphism on 2-forms") {
    for (int t = 0; t < 100; ++t) {
        Form B = rand_homogeneous(8, 2), C = rand_homogeneous(8, 2);
        CHECK(wedge(exp_even(B), exp_even(C)) == exp_even(B + C));
    }
}

TEST_CASE("contraction by a vector is a graded derivation") {
    std::uniform_int_distribution<int> deg(0, 4), pick(1, 6);
    for (int t = 0; t < 200; ++t) {
        int da = deg(rng);
        Form a = rand_homogeneous(6, da), b = rand_form(6);
        Polyvector x = Form::generator(Q(), 6, pick(rng));
        Form lhs = contract(x, wedge(a, b));
        Form rhs = wedge(contract(x, a), b);
        Form sign_part = wedge(a, contract(x, b));
        rhs += (da % 2 == 1) ? -sign_part : sign_part;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("top coefficient as a pairing detector") {
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> deg(0, 6);
        int d = deg(rng);
        Form a = rand_homogeneous(6, d, 1), b = rand_homogeneous(6, 6 - d, 1);
        CScalar c = top_coefficient(wedge(a, b));
        // nonzero iff the two blades are complementary with nonzero coefficients
        bool complementary = false;
        for (const auto& [ba, ca] : a.terms())
            for (const auto& [bb, cb] : b.terms())
                if ((ba | bb) == Blade((1u << 6) - 1) && !(ba & bb)) complementary = true;
        CHECK(c.is_zero() == !complementary);
    }
}

TEST_CASE("apply_linear extends a coframe substitution") {
    // e1 -> e1 + e2, e2 -> e2: (e1^e2) -> e1^e2
    std::vector<Form> images = {Form::generator(Q(), 2, 1) + Form::generator(Q(), 2, 2),
                                Form::generator(Q(), 2, 2)};
    CHECK(apply_linear(Form::blade(Q(), 2, {1, 2}), images) == Form::blade(Q(), 2, {1, 2}));
}
