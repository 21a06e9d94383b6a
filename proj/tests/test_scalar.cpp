#include <doctest.h>

#include "skewinv/errors.hpp"
#include "skewinv/scalar.hpp"

using namespace skewinv;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = gr_i();
    CHECK(i * i == GaussianRational(-1));

    GaussianRational one_plus_i(Rational(1), Rational(1));
    CHECK(one_plus_i * one_plus_i == GaussianRational(Rational(0), Rational(2)));

    // the two quarter-turn constants square to negatives of each other
    GaussianRational a(Rational(1, 2), Rational(1, 2));   // (1+i)/2
    GaussianRational b(Rational(-1, 2), Rational(1, 2));  // (-1+i)/2
    CHECK((a * a + b * b).is_zero());

    CHECK(gr_inverse(one_plus_i) * one_plus_i == GaussianRational(1));
    CHECK(GaussianRational(Rational(3, 4)) / GaussianRational(Rational(-3, 2)) ==
          GaussianRational(Rational(-1, 2)));
    CHECK((-i).im == Rational(-1));
    CHECK(one_plus_i.conj() == GaussianRational(Rational(1), Rational(-1)));
    CHECK(one_plus_i.norm() == Rational(2));
}

TEST_CASE("gaussian rational strings round trip") {
    CHECK(gr_to_string(GaussianRational(Rational(3, 4))) == "3/4");
    CHECK(gr_to_string(GaussianRational(Rational(0), Rational(1))) == "1*i");
    CHECK(gr_to_string(GaussianRational(Rational(-1, 2), Rational(2, 3))) == "-1/2+2/3*i");
    CHECK(gr_to_string(GaussianRational(Rational(1), Rational(-1))) == "1-1*i");
    CHECK(gr_to_string(gr_zero()) == "0");

    for (const char* s : {"0", "5", "-7/3", "1*i", "-2/5*i", "1/2+1/2*i", "3-4*i"}) {
        GaussianRational v = gr_from_string(s);
        CHECK(gr_from_string(gr_to_string(v)) == v);
    }
    CHECK(gr_from_string("1/2+1/2*i") == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(gr_from_string("-i") == -gr_i());
    CHECK(gr_from_string("i") == gr_i());

    CHECK_THROWS_AS(gr_from_string("abc"), Error);
    CHECK_THROWS_AS(gr_from_string("1/0"), Error);
}

TEST_CASE("error kinds carry names") {
    try {
        fail(ErrorKind::BadPrime, "demo");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadPrime);
        CHECK(std::string(error_kind_name(e.kind())) == "BadPrime");
    }
}
