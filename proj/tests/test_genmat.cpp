#include <doctest.h>

#include "skewinv/genmat.hpp"

using namespace skewinv;

namespace {

Polynomial var(const Ctx& ctx, int i, int j, int k) {
    return Polynomial::variable(ctx.nvars(), ctx.var_index(i, j, k));
}

GaussianRational gr(long v) { return GaussianRational(v); }

} // namespace

TEST_CASE("generic skew matrices") {
    Ctx ctx{2, 1};
    PolyMat y = generic_skew(ctx, 1);
    CHECK(y.at(0, 0).is_zero());
    CHECK(y.at(0, 1) == var(ctx, 1, 2, 1));
    CHECK(y.at(1, 0) == -var(ctx, 1, 2, 1));

    Ctx c32{3, 2};
    PolyMat y2 = generic_skew(c32, 2);
    CHECK(y2.at(0, 1) == var(c32, 1, 2, 2));
    CHECK(y2.at(1, 2) == var(c32, 2, 3, 2));
    CHECK(y2.transposed() == y2.scaled(Polynomial::constant(c32.nvars(), gr(-1))));

    CHECK_THROWS_AS(generic_skew(c32, 3), Error);
}

TEST_CASE("skew_from_upper fills row-major upper triangle") {
    GaussianRational one_plus_i(Rational(1), Rational(1));
    GaussianRational minus_one_plus_i(Rational(-1), Rational(1));
    NumMat m = skew_from_upper({one_plus_i, gr_zero(), minus_one_plus_i});
    CHECK(m.n() == 3);
    CHECK(m.at(0, 1) == one_plus_i);
    CHECK(m.at(0, 2) == gr_zero());
    CHECK(m.at(1, 2) == minus_one_plus_i);
    CHECK(m.at(1, 0) == -one_plus_i);
    CHECK(is_skew(m));

    NumMat z = skew_from_upper({gr_zero(), gr_zero(), gr_zero()});
    CHECK(z.is_zero());

    CHECK_THROWS_AS(skew_from_upper({gr(1), gr(2), gr(3), gr(4)}), Error);
}

TEST_CASE("word products") {
    Ctx ctx{2, 1};
    Polynomial x = var(ctx, 1, 2, 1);
    PolyMat sq = word_product(ctx, {1, 1});
    PolyMat expect = identity_poly(ctx).scaled(-(x * x));
    CHECK(sq == expect);

    Ctx c32{3, 2};
    CHECK(word_product(c32, {1}) == generic_skew(c32, 1));
    CHECK(word_product(c32, {1, 2}) == generic_skew(c32, 1) * generic_skew(c32, 2));

    WordProductCache cache(c32);
    CHECK(cache.product({1, 2, 1, 2}) == cache.product({1, 2}) * cache.product({1, 2}));
}

TEST_CASE("trace oracles") {
    Ctx c22{2, 2};
    Polynomial expect2 = -(var(c22, 1, 2, 1) * var(c22, 1, 2, 2)).scaled(gr(2));
    CHECK(trace_word(c22, {1, 2}) == expect2);

    Ctx c32{3, 2};
    Polynomial expect3 = -(var(c32, 1, 2, 1) * var(c32, 1, 2, 2) +
                           var(c32, 1, 3, 1) * var(c32, 1, 3, 2) +
                           var(c32, 2, 3, 1) * var(c32, 2, 3, 2))
                              .scaled(gr(2));
    CHECK(trace_word(c32, {1, 2}) == expect3);

    CHECK(trace_word(c32, {1}).is_zero());
    CHECK(trace_word(c32, {1, 1, 1}).is_zero());
    CHECK(trace_word(c32, {1, 2, 2}).is_zero());
    CHECK(trace_word(c32, {1, 1, 2}).is_zero());

    // odd length alone does not force zero: the triple trace is the
    // determinant of the 3x3 array of upper entries
    Ctx c33{3, 3};
    Polynomial det(c33.nvars());
    const int perms[6][4] = {{1, 2, 3, 1},  {1, 3, 2, -1}, {2, 1, 3, -1},
                             {2, 3, 1, 1},  {3, 1, 2, 1},  {3, 2, 1, -1}};
    for (const auto& p : perms) {
        Polynomial term = var(c33, 1, 2, p[0]) * var(c33, 1, 3, p[1]) * var(c33, 2, 3, p[2]);
        det += term.scaled(gr(p[3]));
    }
    CHECK(trace_word(c33, {1, 2, 3}) == det);
    CHECK(trace_word(c33, {1, 3, 2}) == -det);
}

TEST_CASE("sigma oracles") {
    Ctx c31{3, 1};
    Polynomial expect = var(c31, 1, 2, 1).pow(2) + var(c31, 1, 3, 1).pow(2) +
                        var(c31, 2, 3, 1).pow(2);
    CHECK(sigma_word(c31, 2, {1}) == expect);
    CHECK(sigma_word(c31, 1, {1}).is_zero());
    CHECK(sigma_word(c31, 3, {1}).is_zero());

    Ctx c21{2, 1};
    CHECK(sigma_word(c21, 2, {1}) == var(c21, 1, 2, 1).pow(2));

    CHECK_THROWS_AS(sigma_word(c31, 0, {1}), Error);
    CHECK_THROWS_AS(sigma_word(c31, 4, {1}), Error);

    // Lemma 2.5 shape at n=4: highest term of sigma_4(Y1) is x_12^2 x_34^2
    Ctx c41{4, 1};
    Polynomial s4 = sigma_word(c41, 4, {1});
    Monomial expect_ht(c41.nvars());
    expect_ht.bump(c41.var_index(1, 2, 1), 2);
    expect_ht.bump(c41.var_index(3, 4, 1), 2);
    CHECK(hterm(s4) == expect_ht);
    CHECK(s4.coeff(expect_ht) == gr(1));
}

TEST_CASE("sigma symmetry under shift and reversal") {
    Ctx c32{3, 2};
    CHECK(sigma_word(c32, 2, {1, 2}) == sigma_word(c32, 2, {2, 1}));

    Ctx c33{3, 3};
    CHECK(sigma_word(c33, 2, {1, 2, 3}) == sigma_word(c33, 2, {3, 2, 1}));
    CHECK(sigma_word(c33, 3, {1, 2, 3}) == -sigma_word(c33, 3, {3, 2, 1}));
}

TEST_CASE("trace matches canonical representative with sign") {
    for (int n : {3, 4}) {
        Ctx ctx{n, 3};
        WordProductCache cache(ctx);
        for (const auto& cls : enumerate_words(3, 4, false)) {
            Polynomial rep_tr = cache.trace(cls.representative);
            for (const auto& w : cls.members) {
                CanonicalWord c = canonical_rep(w);
                Polynomial scaled = rep_tr.scaled(gr(c.trace_sign));
                CHECK(cache.trace(w) == scaled);
            }
        }
    }
}

TEST_CASE("newton identity for sigma_2") {
    for (int n : {3, 4}) {
        Ctx ctx{n, 3};
        std::vector<Word> words = {{1}, {1, 2}, {1, 2, 3}};
        for (const auto& w : words) {
            Word doubled = w;
            doubled.insert(doubled.end(), w.begin(), w.end());
            Polynomial lhs = sigma_word(ctx, 2, w).scaled(gr(2));
            Polynomial tr = trace_word(ctx, w);
            Polynomial rhs = tr * tr - trace_word(ctx, doubled);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluation at numeric assignments") {
    Ctx ctx{3, 2};
    NumMat a = skew_from_upper({gr(1), gr_zero(), gr_zero()});
    Assignment assign = make_assignment({a, a});
    Invariant tr12 = make_invariant(ctx, 1, {1, 2});
    CHECK(evaluate(ctx, tr12, assign) == gr(-2));
    CHECK(evaluate_direct(ctx, tr12, assign) == gr(-2));

    Invariant s2 = make_invariant(ctx, 2, {1});
    CHECK(evaluate(ctx, s2, assign) == gr(1));
    CHECK(evaluate(ctx, s2, assign) == evaluate_direct(ctx, s2, assign));

    NumMat z = skew_from_upper({gr_zero(), gr_zero(), gr_zero()});
    Assignment zero = make_assignment({z, z});
    CHECK(evaluate(ctx, tr12, zero).is_zero());

    NumMat bad(3, gr_zero());
    bad.at(0, 1) = gr(1); // not skew
    CHECK_THROWS_AS(make_assignment({bad}), Error);

    NumMat small = skew_from_upper({gr(1)});
    CHECK_THROWS_AS(evaluate(ctx, tr12, make_assignment({small, small})), Error);
}

TEST_CASE("invariant metadata") {
    Ctx ctx{3, 2};
    Invariant inv = make_invariant(ctx, 1, {1, 2, 2});
    CHECK(inv.mdeg.t == std::vector<int>{1, 2});
    CHECK(inv.label == "tr(Y1 Y2 Y2)");
    CHECK(inv.value.is_zero());

    Invariant s2 = make_invariant(ctx, 2, {1, 2});
    CHECK(s2.mdeg.t == std::vector<int>{2, 2});
    CHECK(s2.label == "σ2(Y1 Y2)");
    CHECK(mdeg(s2.value, ctx) == s2.mdeg);
}

TEST_CASE("cayley-hamilton residual vanishes") {
    for (int n : {2, 3, 4}) {
        PolyMat r = cayley_hamilton_residual(n);
        CHECK(r.is_zero());
    }
    CHECK_THROWS_AS(cayley_hamilton_residual(1), Error);
    CHECK_THROWS_AS(cayley_hamilton_residual(7), Error);
}

TEST_CASE("evaluate agrees with direct numeric invariant on random-looking data") {
    Ctx ctx{4, 2};
    NumMat a1 = skew_from_upper({gr(2), gr(-1), gr(3), gr_i(), gr(0), gr(1)});
    NumMat a2 = skew_from_upper(
        {gr(1), gr(1), gr(-2), gr(5), GaussianRational(Rational(1, 2)), gr(-3)});
    Assignment assign = make_assignment({a1, a2});
    for (int t : {1, 2}) {
        for (Word w : {Word{1, 2}, Word{1, 1, 2, 2}, Word{1, 2, 1, 2}}) {
            Invariant inv = make_invariant(ctx, t, w);
            CHECK(evaluate(ctx, inv, assign) == evaluate_direct(ctx, inv, assign));
        }
    }
}
