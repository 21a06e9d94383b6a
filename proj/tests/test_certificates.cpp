#include <doctest.h>

#include <functional>

#include "skewinv/certificates.hpp"
#include "skewinv/errors.hpp"
#include "skewinv/polyfrac.hpp"

using namespace skewinv;

namespace {

SymbolTable table3() { return SymbolTable{{"x", "y", "z"}}; }

Polynomial P(const SymbolTable& tab, const std::string& s) { return parse_symbol_poly(tab, s); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    REQUIRE(false);
    return ErrorKind::Usage;
}

} // namespace

TEST_CASE("polynomial fractions") {
    SymbolTable tab = table3();
    int nv = tab.size();
    Monomial x(nv), one(nv);
    x.bump(0);

    // (x*y + x*z) / x cancels to y + z.
    PolyFrac f{P(tab, "x*y+x*z"), x};
    f = pf_normalized(f);
    CHECK(f.den.is_one());
    CHECK(f.num == P(tab, "y+z"));

    // y/x + z/x = (y+z)/x, and subtraction returns zero with a trivial den.
    PolyFrac a{P(tab, "y"), x}, b{P(tab, "z"), x};
    PolyFrac s = pf_add(a, b);
    CHECK(s.num == P(tab, "y+z"));
    CHECK(s.den == x);
    CHECK(pf_sub(s, s).is_zero());
    CHECK(pf_sub(s, s).den.is_one());
    CHECK(pf_equal(pf_mul(a, b), PolyFrac{P(tab, "y*z"), x * x}));

    // Substituting x := -(y+z)/y into x*y + y + z gives 0.
    Monomial y(nv);
    y.bump(1);
    PolyFrac val{P(tab, "-(y+z)"), y};
    PolyFrac g = pf_substituted(pf_of(P(tab, "x*y+y+z")), 0, val);
    CHECK(g.is_zero());

    // Substitution into a denominator position is rejected.
    CHECK(kind_of([&] { pf_substituted(PolyFrac{P(tab, "y"), x}, 0, val); }) == ErrorKind::Usage);

    // Quadratic reduction x^2 := y*z : x^5 -> x * (y*z)^2.
    Polynomial r = quad_reduced(P(tab, "x^5"), 0, P(tab, "y*z"));
    CHECK(r == P(tab, "x*y^2*z^2"));
    CHECK(quad_reduced(P(tab, "x^2-y*z"), 0, P(tab, "y*z")).is_zero());
    CHECK(quad_reduced(P(tab, "x+y"), 0, P(tab, "y*z")) == P(tab, "x+y"));
    CHECK(kind_of([&] { quad_reduced(P(tab, "x^2"), 0, P(tab, "x*y")); }) == ErrorKind::Usage);
}

TEST_CASE("symbol polynomial grammar") {
    SymbolTable tab{{"a2", "b2", "i2"}};

    // Scalars, the imaginary unit, names that merely start with 'i'.
    CHECK(P(tab, "i*i") == P(tab, "-1"));
    CHECK(P(tab, "1/2+1/2*i") == Polynomial::constant(3, {Rational(1, 2), Rational(1, 2)}));
    CHECK(P(tab, "i2") == Polynomial::variable(3, 2));
    CHECK(P(tab, "(a2+i*b2)*(a2-i*b2)") == P(tab, "a2^2+b2^2"));
    CHECK(P(tab, "-i*(b2+i2)") == P(tab, "-i*b2-i*i2"));
    CHECK(P(tab, "2*a2^3") == P(tab, "a2*a2*a2*2"));
    CHECK(P(tab, "0").is_zero());

    // Print-parse round trip across coefficient shapes.
    for (const char* s : {"0", "1", "-1", "i", "-i", "3/2", "-3/2*i", "a2", "-a2", "2*a2*b2",
                          "a2^2 - b2^2", "(1/2+1/2*i)*a2 - i2^3", "(-1/2+1/2*i)*b2 + 7"}) {
        Polynomial f = P(tab, s);
        CHECK(P(tab, symbol_poly_str(tab, f)) == f);
    }

    // Malformed input is rejected with MalformedCertificate.
    for (const char* s : {"", "a2 +", "q", "2**3", "a2^", "(a2", "a2)", "1//2", "^2", "i*"})
        CHECK(kind_of([&, s] { P(tab, s); }) == ErrorKind::MalformedCertificate);
}

TEST_CASE("builtin catalog replays") {
    std::vector<NullconeCertificate> cat = builtin_certificates();
    REQUIRE(cat.size() == 9);
    const char* names[9] = {"N3_TRABC", "N3_INDUCTION", "N4_Q1", "N4_Q2", "N4_ABC_Q1",
                            "N4_ABC_Q2", "N5_Q1",        "N5_Q3", "N5_Q2"};
    for (size_t k = 0; k < cat.size(); ++k) CHECK(cat[k].name == names[k]);

    int total_claims = 0;
    for (const NullconeCertificate& c : cat) {
        CertificateResult r = check_certificate(c);
        CHECK_MESSAGE(r.pass, c.name, ": ", r.failed_branch, " / ", r.failed_claim, ": ", r.detail);
        CHECK(r.claims_checked > 0);
        total_claims += r.claims_checked;
    }
    // The N5_Q3 power-sandwich sweep alone contributes 255 claims.
    CHECK(total_claims >= 300);

    CHECK(builtin_certificate("N4_Q2").has_value());
    CHECK(!builtin_certificate("NO_SUCH").has_value());
}

TEST_CASE("first failing claim is named") {
    // Dropping the second substitution breaks exactly the first claim that
    // needs it.
    NullconeCertificate q1 = *builtin_certificate("N4_Q1");
    auto& subs = q1.branches[0].substitutions;
    subs.erase(subs.begin() + 1);
    for (CertClaim& cl : q1.branches[0].claims)
        if (cl.after_step > 1) --cl.after_step;
    CertificateResult r = check_certificate(q1);
    CHECK(!r.pass);
    CHECK(r.failed_branch == "main");
    CHECK(r.failed_claim == "squared-pair trace vanishes");
    CHECK(r.detail.find("residual") == 0);
    CHECK(r.claims_checked > 0);

    // Reversing the sign of the first reduction (the misprinted variant)
    // breaks the trace-vanishing claim it is supposed to force.
    NullconeCertificate ind = *builtin_certificate("N3_INDUCTION");
    SymbolTable tab = ind.symbols();
    ind.branches[0].substitutions[0].num = parse_symbol_poly(tab, "-i*a2");
    CertificateResult r2 = check_certificate(ind);
    CHECK(!r2.pass);
    CHECK(r2.failed_claim == "trace of the base with the reduced matrix vanishes");

    // Doubling one coefficient of a passing identity also fails.
    NullconeCertificate tr = *builtin_certificate("N3_TRABC");
    SymbolTable tab2 = tr.symbols();
    tr.branches[0].claims[2].terms[1].coeff = parse_symbol_poly(tab2, "2*(a1*b3-a3*b1)");
    CertificateResult r3 = check_certificate(tr);
    CHECK(!r3.pass);
    CHECK(r3.failed_branch == "corner entry nonzero");
    CHECK(r3.failed_claim == "triple trace times the pivot is the bracket times sigma2");
}

TEST_CASE("malformed certificates are rejected") {
    auto expect_malformed = [](const std::function<void(NullconeCertificate&)>& mutate) {
        NullconeCertificate c = *builtin_certificate("N4_Q1");
        mutate(c);
        CHECK(kind_of([&] { check_certificate(c); }) == ErrorKind::MalformedCertificate);
    };

    // Substituting the same symbol twice.
    expect_malformed([](NullconeCertificate& c) {
        c.branches[0].substitutions.push_back(c.branches[0].substitutions[0]);
    });
    // A substitution mentioning an already eliminated symbol.
    expect_malformed([](NullconeCertificate& c) {
        SymbolTable tab = c.symbols();
        CertSubstitution s;
        s.symbol = "d2";
        s.num = parse_symbol_poly(tab, "a2");  // a2 was eliminated at step 1
        s.den = Monomial(tab.size());
        c.branches[0].substitutions.push_back(std::move(s));
    });
    // A denominator symbol not assumed nonzero.
    expect_malformed([](NullconeCertificate& c) {
        SymbolTable tab = c.symbols();
        CertSubstitution s;
        s.symbol = "d2";
        s.num = parse_symbol_poly(tab, "f2");
        s.den = Monomial(tab.size());
        s.den.bump(tab.require("e2"));
        c.branches[0].substitutions.push_back(std::move(s));
    });
    // Unknown symbol, bad sigma index, empty word, out-of-range entry,
    // missing claims, wrong generic size.
    expect_malformed([](NullconeCertificate& c) { c.branches[0].substitutions[0].symbol = "zz"; });
    expect_malformed([](NullconeCertificate& c) { c.branches[0].claims[0].terms[0].atom.t = 5; });
    expect_malformed([](NullconeCertificate& c) { c.branches[0].claims[0].terms[0].atom.word.clear(); });
    expect_malformed([](NullconeCertificate& c) {
        c.branches[0].claims[0].terms[0].atom = atom_entry({1}, 4, 0);
    });
    expect_malformed([](NullconeCertificate& c) { c.branches[0].claims.clear(); });
    expect_malformed([](NullconeCertificate& c) { c.matrices[1].symbols.pop_back(); });
    // A claim placed after a nonexistent step.
    expect_malformed([](NullconeCertificate& c) { c.branches[0].claims[0].after_step = 9; });
    // Quadratic substitution with a denominator.
    expect_malformed([](NullconeCertificate& c) {
        SymbolTable tab = c.symbols();
        CertSubstitution s;
        s.symbol = "d2";
        s.quadratic = true;
        s.num = parse_symbol_poly(tab, "f2");
        s.den = Monomial(tab.size());
        s.den.bump(tab.require("f2"));
        c.branches.push_back({"extra", {"f2"}, {std::move(s)}, c.branches[0].claims});
    });
}

TEST_CASE("certificate json round trip") {
    for (const NullconeCertificate& c : builtin_certificates()) {
        std::string js = certificate_to_json(c);
        NullconeCertificate back = certificate_from_json(js);
        CHECK(back == c);
    }
    // A deserialized certificate replays like the original, including the
    // quadratic reduction step.
    NullconeCertificate q2 = certificate_from_json(certificate_to_json(*builtin_certificate("N4_Q2")));
    CHECK(check_certificate(q2).pass);

    CHECK(kind_of([] { certificate_from_json("not json"); }) == ErrorKind::MalformedCertificate);
    CHECK(kind_of([] { certificate_from_json("{\"name\":\"x\"}"); }) == ErrorKind::MalformedCertificate);
}

TEST_CASE("induction template instances") {
    // The roles of base, reduced, and incoming matrix are index-independent.
    for (auto [k, i, l, d] : {std::array<int, 4>{2, 1, 3, 3}, std::array<int, 4>{3, 1, 2, 3},
                              std::array<int, 4>{2, 4, 1, 4}, std::array<int, 4>{4, 2, 3, 4}}) {
        NullconeCertificate c = induction_certificate(k, i, l, d);
        CertificateResult r = check_certificate(c);
        CHECK_MESSAGE(r.pass, c.name, ": ", r.failed_claim, ": ", r.detail);
    }
    CHECK(induction_certificate(1, 2, 3, 3).name == "N3_INDUCTION");
    CHECK(induction_certificate(2, 1, 3, 3).name == "N3_INDUCTION_K2I1L3D3");

    CHECK(kind_of([] { induction_certificate(1, 2, 3, 5); }) == ErrorKind::Usage);
    CHECK(kind_of([] { induction_certificate(1, 1, 3, 3); }) == ErrorKind::Usage);
    CHECK(kind_of([] { induction_certificate(0, 2, 3, 3); }) == ErrorKind::Usage);
}
