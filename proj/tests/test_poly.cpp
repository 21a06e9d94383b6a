#include <doctest.h>

#include "skewinv/polynomial.hpp"

using namespace skewinv;

namespace {

Polynomial var(const Ctx& ctx, int i, int j, int k) {
    return Polynomial::variable(ctx.nvars(), ctx.var_index(i, j, k));
}

} // namespace

TEST_CASE("variable indexing and order") {
    Ctx ctx{3, 2};
    CHECK(ctx.pairs() == 3);
    CHECK(ctx.nvars() == 6);
    CHECK(ctx.var_index(1, 2, 1) == 0);
    CHECK(ctx.var_index(1, 3, 1) == 1);
    CHECK(ctx.var_index(2, 3, 1) == 2);
    CHECK(ctx.var_index(1, 2, 2) == 3);
    Variable v = ctx.var_of_index(4);
    CHECK(v.i == 1);
    CHECK(v.j == 3);
    CHECK(v.k == 2);
    CHECK(ctx.var_name(0) == "x_12(1)");
    CHECK(ctx.var_name(5) == "x_23(2)");
    CHECK_THROWS_AS(ctx.var_index(2, 2, 1), Error);
    CHECK_THROWS_AS(ctx.var_index(1, 2, 3), Error);

    // smaller flat index = larger variable: x_12(1) beats x_13(1) beats x_12(2)
    Polynomial f = var(ctx, 1, 3, 1) - var(ctx, 1, 2, 1);
    CHECK(hterm(f) == hterm(var(ctx, 1, 2, 1)));
    Polynomial g = var(ctx, 1, 2, 2) + var(ctx, 2, 3, 1);
    CHECK(hterm(g) == hterm(var(ctx, 2, 3, 1)));
}

TEST_CASE("polynomial arithmetic canonical forms") {
    Ctx ctx{3, 2};
    Polynomial x = var(ctx, 1, 2, 1);
    Polynomial y = var(ctx, 1, 3, 2);

    CHECK((x + (-x)).is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + x * y.scaled(GaussianRational(2)) + y * y);
    CHECK(x.pow(0) == Polynomial::constant(ctx.nvars(), GaussianRational(1)));

    Polynomial p = (x + y) * (x + y) - x * x - y * y;
    CHECK(p.term_count() == 1);
    CHECK(p.coeff(hterm(p)) == GaussianRational(2));
    CHECK(p.degree() == 2);

    // multiplication respects the grading
    CHECK(mdeg(x * y, ctx) == (mdeg(x, ctx) + mdeg(y, ctx)));
}

TEST_CASE("mdeg reads the shared multidegree and rejects mixtures") {
    Ctx ctx{3, 2};
    Polynomial f = var(ctx, 1, 2, 1) * var(ctx, 1, 3, 2);
    MultiDegree md = mdeg(f, ctx);
    CHECK(md.size() == 2);
    CHECK(md[0] == 1);
    CHECK(md[1] == 1);
    CHECK(md.total() == 2);
    CHECK(md.str() == "(1,1)");

    CHECK_THROWS_AS(mdeg(var(ctx, 1, 2, 1) + var(ctx, 1, 3, 2), ctx), Error);
    CHECK_THROWS_AS(mdeg(Polynomial(ctx.nvars()), ctx), Error);
    CHECK(is_multihomogeneous(var(ctx, 1, 2, 1) + var(ctx, 1, 3, 1), ctx));
    CHECK(!is_multihomogeneous(var(ctx, 1, 2, 1) + var(ctx, 1, 3, 2), ctx));
}

TEST_CASE("hterm on zero or inhomogeneous input throws") {
    Ctx ctx{3, 1};
    CHECK_THROWS_AS(hterm(Polynomial(ctx.nvars())), Error);
    Polynomial mixed = var(ctx, 1, 2, 1) + var(ctx, 1, 2, 1) * var(ctx, 1, 3, 1);
    CHECK_THROWS_AS(hterm(mixed), Error);
}

TEST_CASE("substitution, derivative, evaluation") {
    Ctx ctx{3, 1};
    Polynomial x = var(ctx, 1, 2, 1);
    Polynomial y = var(ctx, 1, 3, 1);
    Polynomial z = var(ctx, 2, 3, 1);

    Polynomial f = x * x + x * y + z;
    // substitute x := -y
    Polynomial g = f.substituted(ctx.var_index(1, 2, 1), -y);
    CHECK(g == z);

    Polynomial df = f.derivative(ctx.var_index(1, 2, 1));
    CHECK(df == x.scaled(GaussianRational(2)) + y);
    CHECK(f.derivative(ctx.var_index(2, 3, 1)) ==
          Polynomial::constant(ctx.nvars(), GaussianRational(1)));

    std::vector<GaussianRational> pt = {GaussianRational(2), GaussianRational(-1),
                                        GaussianRational(Rational(1, 2))};
    CHECK(f.eval(pt) == GaussianRational(Rational(5, 2)));

    CHECK(f.degree_in(ctx.var_index(1, 2, 1)) == 2);
    CHECK(f.degree_in(ctx.var_index(2, 3, 1)) == 1);
}

TEST_CASE("hterm is multiplicative on homogeneous polynomials") {
    Ctx ctx{4, 1};
    Polynomial f = var(ctx, 1, 2, 1) * var(ctx, 3, 4, 1) + var(ctx, 1, 3, 1) * var(ctx, 2, 4, 1);
    Polynomial g = var(ctx, 1, 2, 1) + var(ctx, 2, 3, 1);
    CHECK(hterm(f * g) == hterm(f) * hterm(g));
}

TEST_CASE("polynomial display uses variable names") {
    Ctx ctx{3, 2};
    Polynomial f = var(ctx, 1, 2, 1) * var(ctx, 1, 2, 1) - var(ctx, 2, 3, 2).scaled(gr_i());
    std::string s = f.str(ctx);
    CHECK(s.find("x_12(1)^2") != std::string::npos);
    CHECK(s.find("x_23(2)") != std::string::npos);
}
