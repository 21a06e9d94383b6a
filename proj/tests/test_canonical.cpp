#include <doctest.h>

#include "skewinv/canonical.hpp"
#include "skewinv/errors.hpp"

using namespace skewinv;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

// Upper-triangle literal scaled by 1/2, matching the Skew(...) shorthand for
// the canonical representatives.
NumMat half_skew(const std::vector<GaussianRational>& upper) {
    std::vector<GaussianRational> halved;
    halved.reserve(upper.size());
    const GaussianRational half(Rational(1, 2));
    for (const auto& v : upper) halved.push_back(half * v);
    return skew_from_upper(halved);
}

int nonzero_count(const NumMat& m) {
    int c = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m.at(i, j) != gr_zero()) ++c;
    return c;
}

} // namespace

TEST_CASE("building blocks A, B, C") {
    // A(p): super/sub diagonal +-1, 2(p-1) nonzeros.
    NumMat a4 = block_A(4);
    CHECK(a4.at(0, 1) == gr(1));
    CHECK(a4.at(1, 0) == gr(-1));
    CHECK(a4.at(2, 3) == gr(1));
    CHECK(a4.at(3, 2) == gr(-1));
    CHECK(a4.at(0, 2) == gr_zero());
    CHECK(a4.transposed() == a4.scaled(gr(-1)));
    CHECK(block_A(1).is_zero());

    // B(p): ones on the anti-diagonals row+col = p and p+2 (1-based); identity
    // at p = 2, zero at p = 1, symmetric, 2(p-1) nonzeros.
    CHECK(block_B(1).is_zero());
    CHECK(block_B(2) == identity_num(2));
    NumMat b4 = block_B(4);
    CHECK(b4.at(0, 2) == gr(1));
    CHECK(b4.at(1, 1) == gr(1));
    CHECK(b4.at(2, 0) == gr(1));
    CHECK(b4.at(1, 3) == gr(1));
    CHECK(b4.at(2, 2) == gr(1));
    CHECK(b4.at(3, 1) == gr(1));
    CHECK(b4.at(0, 3) == gr_zero());
    CHECK(b4.at(0, 0) == gr_zero());
    CHECK(b4.transposed() == b4);

    for (int p = 1; p <= 6; ++p) {
        CHECK(nonzero_count(block_A(p)) == 2 * (p - 1));
        CHECK(nonzero_count(block_B(p)) == 2 * (p - 1));
    }

    // C(p): anti-diagonal ones.
    NumMat c3 = block_C(3);
    CHECK(c3.at(0, 2) == gr(1));
    CHECK(c3.at(1, 1) == gr(1));
    CHECK(c3.at(2, 0) == gr(1));
    CHECK(nonzero_count(c3) == 3);
    CHECK(c3.transposed() == c3);

    CHECK_THROWS_AS(block_A(0), Error);
    CHECK_THROWS_AS(block_B(-1), Error);
    CHECK_THROWS_AS(block_C(0), Error);
}

TEST_CASE("block literals") {
    // Size-4 block at mu = 0 equals 1/2 Skew(1, i, 0, 0, i, -1).
    CHECK(build_block(k_even(2)) ==
          half_skew({gr(1), gr(0, 1), gr(0), gr(0), gr(0, 1), gr(-1)}));

    // Size-3 block equals 1/2 Skew(1+i, 0, -1+i).
    CHECK(build_block(k_odd(1)) == half_skew({gr(1, 1), gr(0), gr(-1, 1)}));

    // Size-5 block equals 1/2 Skew(1, 0, i, 0, 1+i, 0, i, -1+i, 0, -1).
    CHECK(build_block(k_odd(2)) ==
          half_skew({gr(1), gr(0), gr(0, 1), gr(0), gr(1, 1), gr(0), gr(0, 1), gr(-1, 1),
                     gr(0), gr(-1)}));

    // Size-2 block: A, B are 1x1 zero and C = (1), so only mu survives.
    GaussianRational mu(Rational(3, 2), Rational(-1));
    NumMat k2 = build_block(k_even(1, mu));
    CHECK(k2.n() == 2);
    CHECK(k2.at(0, 1) == mu);
    CHECK(k2.at(1, 0) == -mu);

    CHECK(build_block(zero_block(3)).is_zero());
    CHECK(build_block(zero_block(3)).n() == 3);

    CHECK_THROWS_AS(build_block(k_even(0)), Error);
    CHECK_THROWS_AS(build_block(k_odd(0)), Error);
    CHECK_THROWS_AS(build_block(zero_block(-2)), Error);
}

TEST_CASE("every block is skew-symmetric") {
    std::vector<GaussianRational> mus = {gr(0), gr(1), gr(0, 1), {Rational(2, 3), Rational(-5, 7)}};
    for (int p = 1; p <= 4; ++p) {
        for (const auto& mu : mus) CHECK(is_skew(build_block(k_even(p, mu))));
        CHECK(is_skew(build_block(k_odd(p))));
        CHECK(is_skew(build_block(zero_block(p))));
    }
}

TEST_CASE("direct sums") {
    // Size-3 block plus a 1x1 zero gives the 4x4 representative
    // 1/2 Skew(1+i, 0, 0, -1+i, 0, 0).
    CanonicalMatrix q1n4 = direct_sum({k_odd(1), zero_block(1)});
    CHECK(q1n4.matrix ==
          half_skew({gr(1, 1), gr(0), gr(0), gr(-1, 1), gr(0), gr(0)}));
    CHECK(q1n4.blocks.size() == 2);
    CHECK(q1n4.blocks[0] == k_odd(1));

    // Same block plus a 2x2 zero gives the 5x5 variant.
    CanonicalMatrix q1n5 = direct_sum({k_odd(1), zero_block(2)});
    CHECK(q1n5.matrix == half_skew({gr(1, 1), gr(0), gr(0), gr(0), gr(-1, 1), gr(0), gr(0),
                                    gr(0), gr(0), gr(0)}));

    CanonicalMatrix z3 = direct_sum({zero_block(3)});
    CHECK(z3.matrix.is_zero());
    CHECK(z3.matrix.n() == 3);

    // Order matters: the block list is preserved verbatim.
    CanonicalMatrix swapped = direct_sum({zero_block(1), k_odd(1)});
    CHECK(swapped.matrix.at(1, 2) == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(swapped.matrix.at(0, 1) == gr_zero());

    CHECK(is_skew(direct_sum({k_even(2, gr(0, 1)), k_odd(2), zero_block(2)}).matrix));

    CHECK_THROWS_AS(direct_sum({}), Error);
}

TEST_CASE("nilpotent representatives") {
    auto reps3 = nilpotent_representatives(3);
    REQUIRE(reps3.size() == 1);
    CHECK(reps3[0].matrix == build_block(k_odd(1)));

    auto reps4 = nilpotent_representatives(4);
    REQUIRE(reps4.size() == 2);
    CHECK(reps4[0].matrix == direct_sum({k_odd(1), zero_block(1)}).matrix);
    CHECK(reps4[1].matrix == build_block(k_even(2)));

    auto reps5 = nilpotent_representatives(5);
    REQUIRE(reps5.size() == 3);
    CHECK(reps5[0].matrix == direct_sum({k_odd(1), zero_block(2)}).matrix);
    CHECK(reps5[1].matrix == direct_sum({k_even(2), zero_block(1)}).matrix);
    CHECK(reps5[2].matrix == build_block(k_odd(2)));
    CHECK(reps5[1].matrix ==
          half_skew({gr(1), gr(0, 1), gr(0), gr(0), gr(0), gr(0, 1), gr(0), gr(-1), gr(0),
                     gr(0)}));

    CHECK_THROWS_AS(nilpotent_representatives(2), Error);
    CHECK_THROWS_AS(nilpotent_representatives(6), Error);
    try {
        nilpotent_representatives(7);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedSize);
    }
}

TEST_CASE("all sigma_t vanish on the representatives") {
    for (int n : {3, 4, 5}) {
        for (const CanonicalMatrix& rep : nilpotent_representatives(n)) {
            CHECK(!rep.matrix.is_zero());
            auto sig = sigma_all_num(rep.matrix);
            REQUIRE(static_cast<int>(sig.size()) == n + 1);
            for (int t = 1; t <= n; ++t) CHECK(sig[t] == gr_zero());
        }
    }
}

TEST_CASE("block grammar") {
    CHECK(blockspec_parse("K3") == k_odd(1));
    CHECK(blockspec_parse("K5") == k_odd(2));
    CHECK(blockspec_parse("K4") == k_even(2));
    CHECK(blockspec_parse("K4:mu=0") == k_even(2));
    CHECK(blockspec_parse("K4:mu=1/2+3/2*i") ==
          k_even(2, {Rational(1, 2), Rational(3, 2)}));
    CHECK(blockspec_parse("K2:mu=-i") == k_even(1, gr(0, -1)));
    CHECK(blockspec_parse("0:2") == zero_block(2));

    CHECK(blockspec_str(k_odd(2)) == "K5");
    CHECK(blockspec_str(k_even(2)) == "K4:mu=0");
    CHECK(blockspec_str(k_even(1, {Rational(1, 2), Rational(0)})) == "K2:mu=1/2");
    CHECK(blockspec_str(zero_block(3)) == "0:3");

    for (const char* text : {"K3", "K5", "K4:mu=0", "K4:mu=-1/3+2*i", "0:7"}) {
        CHECK(blockspec_str(blockspec_parse(text)) == text);
    }

    auto blocks = blocks_parse("K3;0:1");
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == k_odd(1));
    CHECK(blocks[1] == zero_block(1));
    CHECK(blocks_str(blocks) == "K3;0:1");
    CHECK(direct_sum(blocks).matrix == nilpotent_representatives(4)[0].matrix);

    auto roundtrip = blocks_parse(blocks_str({k_even(2), zero_block(1)}));
    CHECK(roundtrip[0] == k_even(2));
    CHECK(roundtrip[1] == zero_block(1));

    auto kind_of = [](const char* text) {
        try {
            blockspec_parse(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Usage;
    };
    CHECK(kind_of("K1") == ErrorKind::BadSize);
    CHECK(kind_of("K0") == ErrorKind::BadSize);
    CHECK(kind_of("0:0") == ErrorKind::BadSize);
    CHECK(kind_of("Q7") == ErrorKind::Usage);
    CHECK(kind_of("K3:mu=1") == ErrorKind::Usage);
    CHECK(kind_of("K4:nu=1") == ErrorKind::Usage);
    CHECK(kind_of("Kx") == ErrorKind::Usage);
    CHECK_THROWS_AS(blocks_parse(""), Error);
    CHECK_THROWS_AS(blocks_parse("K3;;K5"), Error);
}
