#include <doctest.h>

#include "skewinv/invbase.hpp"

using namespace skewinv;

namespace {

MultiDegree md(std::vector<int> t) {
    MultiDegree m;
    m.t = std::move(t);
    return m;
}

} // namespace

TEST_CASE("invariant spans of small components") {
    GradedComponent c11 = invariant_span(3, 2, md({1, 1}));
    CHECK(c11.dimension == 1);
    CHECK(c11.decomposable_dimension == 0);
    REQUIRE(c11.rows.size() >= 1);
    CHECK(c11.rows[0].source == "tr(Y1 Y2)");

    GradedComponent odd = invariant_span(3, 1, md({1}));
    CHECK(odd.dimension == 0);

    // both degree-4 products at n=2 are multiples of x1^2 x2^2
    GradedComponent c22 = invariant_span(2, 2, md({2, 2}));
    CHECK(c22.dimension == 1);
    CHECK(c22.decomposable_dimension == 1);

    GradedComponent deep = invariant_span(3, 2, md({2, 2}));
    CHECK(deep.dimension >= 2);

    CHECK_THROWS_AS(invariant_span(3, 2, md({5, 4})), Error);
    CHECK_THROWS_AS(invariant_span(3, 2, md({1, 1, 1})), Error);
}

TEST_CASE("span dimension grows with n in bidegree (2,2)") {
    // at n=2 everything collapses to one line; at n=4 the four products
    // tr(Y1^2Y2^2), s2(Y1Y2), s2(Y1)s2(Y2), tr(Y1Y2)^2 are independent
    CHECK(invariant_span(2, 2, md({2, 2})).dimension == 1);
    CHECK(invariant_span(4, 2, md({2, 2})).dimension == 4);
}

TEST_CASE("quadruple trace decomposes by the two-pairings identity") {
    Ctx ctx{3, 4};
    InvariantOracle oracle(ctx);
    Invariant target = make_invariant(ctx, 1, {1, 2, 3, 4});
    auto cert = is_decomposable(oracle, target, {});
    REQUIRE(cert.has_value());
    REQUIRE(cert->combination.size() == 2);
    for (const auto& piece : cert->combination) {
        CHECK(piece.coeff == GaussianRational(Rational(1, 4)));
        REQUIRE(piece.factors.size() == 2);
    }
    // 4 tr(Y1Y2Y3Y4) = tr(Y1Y2) tr(Y3Y4) + tr(Y1Y4) tr(Y2Y3); no (13)(24) term
    std::vector<std::vector<Word>> factor_words;
    for (const auto& piece : cert->combination) {
        std::vector<Word> ws;
        for (const auto& f : piece.factors) ws.push_back(f.word);
        std::sort(ws.begin(), ws.end());
        factor_words.push_back(ws);
    }
    std::sort(factor_words.begin(), factor_words.end());
    CHECK(factor_words[0] == std::vector<Word>{{1, 2}, {3, 4}});
    CHECK(factor_words[1] == std::vector<Word>{{1, 4}, {2, 3}});
    CHECK(replay_decomposition(*cert));
}

TEST_CASE("degree-2 and degree-3 generators are indecomposable at n=3") {
    Ctx ctx{3, 3};
    InvariantOracle oracle(ctx);
    CHECK(!is_decomposable(oracle, make_invariant(ctx, 2, {1}), {}).has_value());
    CHECK(!is_decomposable(oracle, make_invariant(ctx, 1, {1, 2, 3}), {}).has_value());
    CHECK(!is_decomposable(oracle, make_invariant(ctx, 1, {1, 2}), {}).has_value());
}

TEST_CASE("identically zero invariants decompose with the empty combination") {
    Ctx ctx{3, 2};
    InvariantOracle oracle(ctx);
    Invariant zero = make_invariant(ctx, 1, {1, 2, 2});
    REQUIRE(zero.value.is_zero());
    auto cert = is_decomposable(oracle, zero, {});
    REQUIRE(cert.has_value());
    CHECK(cert->combination.empty());
    CHECK(replay_decomposition(*cert));
}

TEST_CASE("mutated certificates fail replay") {
    Ctx ctx{3, 4};
    InvariantOracle oracle(ctx);
    auto cert = is_decomposable(oracle, make_invariant(ctx, 1, {1, 2, 3, 4}), {});
    REQUIRE(cert.has_value());
    DecompositionCertificate bad = *cert;
    bad.combination[0].coeff = bad.combination[0].coeff * GaussianRational(2);
    CHECK(!replay_decomposition(bad));
    DecompositionCertificate dropped = *cert;
    dropped.combination.pop_back();
    CHECK(!replay_decomposition(dropped));
}

TEST_CASE("minimal generators at n=2") {
    GeneratorReport rep = minimal_generators(2, 2, 4);
    CHECK(rep.total_new() == 3);
    std::vector<std::string> labels;
    for (const auto& e : rep.entries)
        for (const auto& r : e.representatives) labels.push_back(r);
    REQUIRE(labels.size() == 3);
    // entries are graded-lex by multidegree: (0,2), (1,1), (2,0)
    CHECK(labels[0] == "σ2(Y2)");
    CHECK(labels[1] == "tr(Y1 Y2)");
    CHECK(labels[2] == "σ2(Y1)");
    for (const auto& e : rep.entries)
        if (e.mdeg.total() >= 3) CHECK(e.new_generators == 0);
}

TEST_CASE("minimal generators at n=3, d=2 up to degree 4") {
    GeneratorReport rep = minimal_generators(3, 2, 4);
    // sigma2(Y1), sigma2(Y2), tr(Y1Y2); triple traces need d >= 3
    CHECK(rep.total_new() == 3);
    for (const auto& e : rep.entries)
        if (e.mdeg.total() > 2) CHECK(e.new_generators == 0);
}

TEST_CASE("generation checks") {
    Ctx ctx{3, 2};
    Invariant s1 = make_invariant(ctx, 2, {1});
    Invariant s2 = make_invariant(ctx, 2, {2});
    Invariant t12 = make_invariant(ctx, 1, {1, 2});

    GenerationCheck missing = verify_generation({s1}, 3, 2, 2);
    CHECK(!missing.ok);
    REQUIRE(missing.failing.has_value());
    CHECK(missing.failing->t == std::vector<int>{0, 2});

    GenerationCheck ok = verify_generation({s1, s2, t12}, 3, 2, 4);
    CHECK(ok.ok);
    CHECK(!ok.failing.has_value());

    CHECK_THROWS_AS(verify_generation({s1}, 3, 2, 9), Error);
}

TEST_CASE("linear ranks of invariant families") {
    Ctx ctx{4, 2};
    Invariant a = make_invariant(ctx, 1, {1, 1, 2, 2});
    Invariant b = make_invariant(ctx, 2, {1, 2});
    Invariant f = make_invariant(ctx, 2, {1});
    CHECK(linear_rank({a, a}) == 1);
    CHECK(linear_rank({a, b}) == 2);
    CHECK_THROWS_AS(linear_rank({a, f}), Error);

    Ctx c33{3, 3};
    Invariant t123 = make_invariant(c33, 1, {1, 2, 3});
    Invariant t132 = make_invariant(c33, 1, {1, 3, 2});
    CHECK(linear_rank({t123, t132}) == 1);
}
