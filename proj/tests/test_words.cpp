#include <doctest.h>

#include <set>

#include "skewinv/errors.hpp"
#include "skewinv/words.hpp"

using namespace skewinv;

TEST_CASE("primitivity detection") {
    CHECK(is_primitive({1, 2}));
    CHECK(!is_primitive({1, 2, 1, 2}));
    CHECK(is_primitive({1, 1, 2}));
    CHECK(is_primitive({1}));
    CHECK(!is_primitive({1, 1}));
    CHECK(!is_primitive({2, 2, 2}));
    CHECK(is_primitive({1, 2, 2, 1, 2}));
}

TEST_CASE("canonical representatives and signs") {
    CanonicalWord c = canonical_rep({1, 3, 2});
    CHECK(c.rep == Word{1, 2, 3});
    CHECK(c.trace_sign == -1);
    CHECK(c.reversal_used);
    CHECK(c.sigma_sign(2) == 1);
    CHECK(c.sigma_sign(3) == -1);

    CanonicalWord shift = canonical_rep({2, 1});
    CHECK(shift.rep == Word{1, 2});
    CHECK(shift.trace_sign == 1);
    CHECK(!shift.reversal_used);
    CHECK(shift.sigma_sign(3) == 1);

    // even-length reversal keeps the trace sign
    CanonicalWord even = canonical_rep({1, 1, 2, 1, 2, 2});
    CHECK(even.trace_sign == 1);

    CanonicalWord self = canonical_rep({1, 2, 3});
    CHECK(self.rep == Word{1, 2, 3});
    CHECK(self.trace_sign == 1);

    CHECK(canonical_rep({1, 1, 2}).sigma_sign(2) == 1);
}

TEST_CASE("word strings round trip") {
    CHECK(word_str({1, 2, 3}) == "1,2,3");
    CHECK(word_parse("1,2,3") == Word{1, 2, 3});
    CHECK(word_parse("10") == Word{10});
    CHECK_THROWS_AS(word_parse(""), Error);
    CHECK_THROWS_AS(word_parse("1,,2"), Error);
    CHECK_THROWS_AS(word_parse("0,1"), Error);
    CHECK_THROWS_AS(word_parse("a"), Error);
}

TEST_CASE("orbit enumeration covers every word exactly once") {
    const int d = 2, max_len = 4;
    auto classes = enumerate_words(d, max_len, false);
    std::set<Word> seen;
    size_t total = 0;
    for (const auto& cls : classes) {
        CHECK(canonical_rep(cls.representative).rep == cls.representative);
        CHECK(cls.length_parity == static_cast<int>(cls.representative.size()) % 2);
        for (const auto& m : cls.members) {
            CHECK(canonical_rep(m).rep == cls.representative);
            CHECK(seen.insert(m).second);
            ++total;
        }
    }
    CHECK(total == 2 + 4 + 8 + 16);

    auto prim = enumerate_words(2, 2, true);
    std::vector<Word> reps;
    for (const auto& cls : prim) reps.push_back(cls.representative);
    CHECK(reps == std::vector<Word>{{1}, {2}, {1, 2}});

    auto d1 = enumerate_words(1, 3, true);
    CHECK(d1.size() == 1);
    CHECK(d1[0].representative == Word{1});
}

TEST_CASE("class of (1,2,3) contains (1,3,2)") {
    auto classes = enumerate_words(3, 3, false);
    bool found = false;
    for (const auto& cls : classes) {
        if (cls.representative != Word{1, 2, 3}) continue;
        for (const auto& m : cls.members)
            if (m == Word{1, 3, 2}) found = true;
    }
    CHECK(found);
}
