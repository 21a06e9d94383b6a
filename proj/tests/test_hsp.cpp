#include <doctest.h>

#include <functional>

#include "skewinv/errors.hpp"
#include "skewinv/hsp.hpp"

using namespace skewinv;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    REQUIRE(false);
    return ErrorKind::Usage;
}

bool n_homogeneous(const Polynomial& f) {
    if (f.is_zero()) return false;
    int deg = f.terms().front().m.deg();
    for (const Polynomial::Term& t : f.terms())
        if (t.m.deg() != deg) return false;
    return true;
}

} // namespace

TEST_CASE("parameter system element lists") {
    // Counts follow n(n-1)(d-1)/2.
    CHECK(hsp_elements(HspFamily::A, 2).size() == 3);
    CHECK(hsp_elements(HspFamily::A, 3).size() == 6);
    CHECK(hsp_elements(HspFamily::A, 4).size() == 9);
    CHECK(hsp_elements(HspFamily::B, 2).size() == 6);
    CHECK(hsp_elements(HspFamily::C, 3).size() == 12);
    CHECK(hsp_elements(HspFamily::D, 2).size() == 10);

    // Size-3 family: sigma_2 of each matrix, then the pair-trace sums.
    HspSystem a2 = hsp_system(HspFamily::A, 2);
    CHECK(a2.elements[0].label == invariant_label(2, {1}));
    CHECK(a2.elements[1].label == invariant_label(2, {2}));
    CHECK(a2.elements[2].label == "h3");
    CHECK(a2.elements[2].value == trace_word(a2.ctx, {1, 2}));

    HspSystem a4 = hsp_system(HspFamily::A, 4);
    CHECK(a4.elements[8].label == "h7");
    // h5 is the first genuine sum: tr(Y1 Y4) + tr(Y2 Y3).
    const Invariant& h5 = a4.elements[6];
    CHECK(h5.label == "h5");
    CHECK(h5.word.empty());
    CHECK(h5.value == trace_word(a4.ctx, {1, 4}) + trace_word(a4.ctx, {2, 3}));

    // Pair families put every sigma_2 before every sigma_4 = det.
    HspSystem b = hsp_system(HspFamily::B, 2);
    CHECK(b.elements[1].label == invariant_label(2, {2}));
    CHECK(b.elements[2].label == invariant_label(4, {1}));
    CHECK(b.elements[5].value == trace_word(b.ctx, {1, 1, 2, 2}));
    HspSystem d5 = hsp_system(HspFamily::D, 2);
    CHECK(d5.elements[3].label == invariant_label(4, {2}));
    CHECK(d5.elements[9].value == trace_word(d5.ctx, {1, 1, 2, 2, 2, 2}));

    // Every element is homogeneous for the total grading.
    for (HspFamily f : {HspFamily::A, HspFamily::B, HspFamily::C, HspFamily::D}) {
        int d = f == HspFamily::A ? 4 : (f == HspFamily::C ? 3 : 2);
        for (const Invariant& inv : hsp_elements(f, d)) CHECK(n_homogeneous(inv.value));
    }

    // Unsupported pairs are rejected; the single-matrix case points to the
    // free description on sigma_2.
    CHECK(kind_of([] { hsp_elements(HspFamily::B, 3); }) == ErrorKind::UnsupportedCase);
    CHECK(kind_of([] { hsp_elements(HspFamily::C, 2); }) == ErrorKind::UnsupportedCase);
    CHECK(kind_of([] { hsp_elements(HspFamily::D, 1); }) == ErrorKind::UnsupportedCase);
    try {
        hsp_elements(HspFamily::A, 1);
        REQUIRE(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedCase);
        CHECK(std::string(e.what()).find("sigma_2") != std::string::npos);
    }

    CHECK(hsp_family_from_string("C") == HspFamily::C);
    CHECK(hsp_family_name(HspFamily::D) == "D");
    CHECK(kind_of([] { hsp_family_from_string("E"); }) == ErrorKind::Usage);
}

TEST_CASE("jacobian rank at explicit points") {
    Ctx ctx{3, 1};
    Invariant s2 = make_invariant(ctx, 2, {1});
    Assignment pt = make_assignment({skew_from_upper({1, 2, 3})});

    // Gradient of a^2 + b^2 + c^2 at (1,2,3) is (2,4,6).
    CHECK(jacobian_rank({s2}, pt) == 1);

    // A scaled copy adds no rank.
    Invariant twice = s2;
    twice.value = s2.value.scaled(2);
    CHECK(jacobian_rank({s2, twice}, pt) == 1);

    CHECK(jacobian_rank({}, pt) == 0);

    // Point in the wrong variable space.
    Ctx ctx2{3, 2};
    CHECK(kind_of([&] { jacobian_rank({make_invariant(ctx2, 2, {1})}, pt); }) ==
          ErrorKind::SizeMismatch);
}

TEST_CASE("independence certificates") {
    // Full rank within the default retries for every family.
    for (auto [f, d, s] : {std::tuple<HspFamily, int, int>{HspFamily::A, 2, 3},
                           {HspFamily::A, 3, 6},
                           {HspFamily::B, 2, 6},
                           {HspFamily::C, 3, 12},
                           {HspFamily::D, 2, 10}}) {
        HspSystem sys = hsp_system(f, d);
        IndependenceCertificate cert = verify_independence(sys.ctx, sys.elements, 0, 5);
        CHECK_MESSAGE(cert.certified, hsp_family_name(f), " rank ", cert.rank, " of ", cert.size);
        CHECK(cert.rank == s);
        CHECK(cert.retries_used >= 1);
        // The recorded point really achieves the rank.
        CHECK(jacobian_rank(sys.elements, cert.point) == s);
    }

    // A genuinely dependent pair {f, f^2} never certifies: the second row is
    // 2f times the first at every point.
    Ctx ctx{3, 1};
    Invariant f = make_invariant(ctx, 2, {1});
    Invariant f2 = f;
    f2.value = f.value * f.value;
    f2.label = "square";
    IndependenceCertificate dep = verify_independence(ctx, {f, f2}, 7, 5);
    CHECK(!dep.certified);
    CHECK(dep.rank <= 1);
    CHECK(dep.retries_used == 5);

    // Rank is unchanged by an invertible (unit triangular) recombination.
    HspSystem b = hsp_system(HspFamily::B, 2);
    IndependenceCertificate cert = verify_independence(b.ctx, b.elements, 1, 5);
    REQUIRE(cert.certified);
    std::vector<Invariant> mixed = b.elements;
    for (size_t k = 1; k < mixed.size(); ++k)
        mixed[k].value = mixed[k].value + mixed[k - 1].value.scaled(3);
    CHECK(jacobian_rank(mixed, cert.point) == jacobian_rank(b.elements, cert.point));
}

TEST_CASE("family verification reports") {
    VerificationReport a = verify_hsp(HspFamily::A, 3);
    CHECK(a.pass);
    CHECK(a.count_check);
    CHECK(a.expected_count == 6);
    CHECK(a.actual_count == 6);
    CHECK(a.independence.certified);
    REQUIRE(a.nullcone.size() == 2);
    CHECK(a.nullcone[0].certificate == "N3_TRABC");
    CHECK(a.nullcone[1].certificate == "N3_INDUCTION");
    // Only the induction certificate carries an explicit base matrix.
    REQUIRE(a.representatives.size() == 1);
    CHECK(a.representatives[0].certificate == "N3_INDUCTION");
    CHECK(a.representatives[0].sigma_vanishes);

    VerificationReport b = verify_hsp(HspFamily::B, 2);
    CHECK(b.pass);
    CHECK(b.independence.rank == 6);
    CHECK(b.nullcone.size() == 2);
    CHECK(b.representatives.size() == 2);

    VerificationReport c = verify_hsp(HspFamily::C, 3);
    CHECK(c.pass);
    CHECK(c.expected_count == 12);
    CHECK(c.nullcone.size() == 4);

    VerificationReport d5 = verify_hsp(HspFamily::D, 2);
    CHECK(d5.pass);
    CHECK(d5.expected_count == 10);
    CHECK(d5.nullcone.size() == 3);
    CHECK(d5.representatives.size() == 3);
    for (const RepresentativeCheck& rc : d5.representatives) CHECK(rc.sigma_vanishes);

    CHECK(kind_of([] { verify_hsp(HspFamily::A, 1); }) == ErrorKind::UnsupportedCase);
}
