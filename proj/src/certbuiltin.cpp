#include "skewinv/certificates.hpp"
#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

// Assembly helper: matrices and symbols are declared first, so polynomial
// strings can be parsed immediately against the growing table.
struct Builder {
    NullconeCertificate c;
    SymbolTable tab;

    Builder(std::string name, int n) {
        c.name = std::move(name);
        c.n = n;
    }

    void explicit_mat(std::vector<std::string> upper) {
        CertMatrix m;
        for (const std::string& s : upper) m.upper.push_back(gr_from_string(s));
        c.matrices.push_back(std::move(m));
    }

    void generic_mat(std::vector<std::string> symbols) {
        CertMatrix m;
        m.generic = true;
        m.symbols = symbols;
        for (std::string& s : symbols) tab.names.push_back(std::move(s));
        c.matrices.push_back(std::move(m));
    }

    Polynomial poly(const std::string& s) const { return parse_symbol_poly(tab, s); }

    CertBranch& branch(std::string name, std::vector<std::string> nonzero = {}) {
        CertBranch br;
        br.name = std::move(name);
        br.nonzero = std::move(nonzero);
        c.branches.push_back(std::move(br));
        return c.branches.back();
    }

    void sub(const std::string& symbol, const std::string& num) {
        CertSubstitution s;
        s.symbol = symbol;
        s.num = poly(num);
        s.den = Monomial(tab.size());
        c.branches.back().substitutions.push_back(std::move(s));
    }

    void sub_over(const std::string& symbol, const std::string& num, const std::string& den) {
        CertSubstitution s;
        s.symbol = symbol;
        s.num = poly(num);
        Polynomial d = poly(den);
        if (d.term_count() != 1 || d.terms().front().c != GaussianRational(1))
            fail(ErrorKind::MalformedCertificate, "denominator is not a monomial");
        s.den = d.terms().front().m;
        c.branches.back().substitutions.push_back(std::move(s));
    }

    void sub_square(const std::string& symbol, const std::string& num) {
        CertSubstitution s;
        s.symbol = symbol;
        s.quadratic = true;
        s.num = poly(num);
        s.den = Monomial(tab.size());
        c.branches.back().substitutions.push_back(std::move(s));
    }

    void claim_poly(std::string name, int after,
                    std::vector<std::pair<std::string, CertAtom>> terms) {
        CertClaim cl;
        cl.kind = CertClaim::Kind::PolyZero;
        cl.name = std::move(name);
        cl.after_step = after;
        for (auto& [coeff, atom] : terms) cl.terms.push_back({poly(coeff), std::move(atom)});
        c.branches.back().claims.push_back(std::move(cl));
    }

    void claim_mzero(std::string name, int after,
                     std::vector<std::tuple<std::string, Word, bool>> terms) {
        CertClaim cl;
        cl.kind = CertClaim::Kind::MatrixZero;
        cl.name = std::move(name);
        cl.after_step = after;
        for (auto& [coeff, word, transpose] : terms)
            cl.lhs.push_back({gr_from_string(coeff), std::move(word), transpose});
        c.branches.back().claims.push_back(std::move(cl));
    }

    void claim_mequals(std::string name, int after,
                       std::vector<std::tuple<std::string, Word, bool>> lhs,
                       std::vector<std::vector<std::vector<std::pair<std::string, CertAtom>>>> rhs) {
        CertClaim cl;
        cl.kind = CertClaim::Kind::MatrixEquals;
        cl.name = std::move(name);
        cl.after_step = after;
        for (auto& [coeff, word, transpose] : lhs)
            cl.lhs.push_back({gr_from_string(coeff), std::move(word), transpose});
        cl.rhs.resize(c.n, std::vector<std::vector<CertPolyTerm>>(c.n));
        for (int r = 0; r < c.n; ++r)
            for (int col = 0; col < c.n; ++col)
                for (auto& [coeff, atom] : rhs[r][col])
                    cl.rhs[r][col].push_back({poly(coeff), std::move(atom)});
        c.branches.back().claims.push_back(std::move(cl));
    }
};

NullconeCertificate make_n3_trabc() {
    Builder b("N3_TRABC", 3);
    b.generic_mat({"a1", "b1", "c1"});
    b.generic_mat({"a2", "b2", "c2"});
    b.generic_mat({"a3", "b3", "c3"});

    b.branch("corner entry nonzero", {"c2"});
    b.sub_over("c1", "-(a1*a2+b1*b2)", "c2");
    b.sub_over("c3", "-(a2*a3+b2*b3)", "c2");
    b.claim_poly("pair trace (1,2) vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("pair trace (2,3) vanishes", 2, {{"1", atom_sigma(1, {2, 3})}});
    b.claim_poly("triple trace times the pivot is the bracket times sigma2", -1,
                 {{"c2", atom_sigma(1, {1, 2, 3})}, {"a1*b3-a3*b1", atom_sigma(2, {2})}});

    b.branch("corner entry zero, middle entry nonzero", {"b2"});
    b.sub("c2", "0");
    b.sub_over("b1", "-a1*a2", "b2");
    b.sub_over("b3", "-a2*a3", "b2");
    b.claim_poly("pair trace (1,2) vanishes", 2, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("pair trace (2,3) vanishes", 3, {{"1", atom_sigma(1, {2, 3})}});
    b.claim_poly("triple trace times the pivot is the bracket times sigma2", -1,
                 {{"b2", atom_sigma(1, {1, 2, 3})}, {"a3*c1-a1*c3", atom_sigma(2, {2})}});

    b.branch("middle matrix collapses");
    b.sub("c2", "0");
    b.sub("b2", "0");
    b.sub("a2", "0");
    b.claim_poly("sigma2 of the middle matrix reduces to its first entry squared", 2,
                 {{"1", atom_sigma(2, {2})}, {"-a2^2", atom_one()}});
    b.claim_mzero("middle matrix vanishes", -1, {{"1", {2}, false}});
    b.claim_poly("sigma2 of the middle matrix vanishes", -1, {{"1", atom_sigma(2, {2})}});
    b.claim_poly("triple trace vanishes", -1, {{"1", atom_sigma(1, {1, 2, 3})}});
    return b.c;
}

NullconeCertificate make_n4_q1() {
    Builder b("N4_Q1", 4);
    b.explicit_mat({"1/2+1/2*i", "0", "0", "-1/2+1/2*i", "0", "0"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2"});

    b.branch("main");
    b.sub("a2", "-i*d2");
    b.sub("c2", "i*f2");
    b.sub("b2", "0");
    b.sub("e2", "0");
    b.claim_poly("pair trace vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("squared-pair trace factors", 1,
                 {{"2", atom_sigma(1, {1, 1, 2, 2})}, {"-i*(c2-i*f2)^2", atom_one()}});
    b.claim_poly("squared-pair trace vanishes", 2, {{"1", atom_sigma(1, {1, 1, 2, 2})}});
    b.claim_poly("sigma2 reduces to the two middle entries", 2,
                 {{"1", atom_sigma(2, {2})}, {"-b2^2-e2^2", atom_one()}});
    b.claim_poly("sigma4 reduces to the middle product squared", 2,
                 {{"1", atom_sigma(4, {2})}, {"-b2^2*e2^2", atom_one()}});
    b.claim_poly("sigma2 of the generic matrix vanishes", -1, {{"1", atom_sigma(2, {2})}});
    b.claim_poly("sigma4 of the generic matrix vanishes", -1, {{"1", atom_sigma(4, {2})}});
    b.claim_mzero("base squared kills the generic matrix", -1, {{"1", {1, 1, 2}, false}});
    b.claim_mzero("generic squared kills the base", -1, {{"1", {2, 2, 1}, false}});
    b.claim_mzero("base conjugation annihilates", -1, {{"1", {1, 2, 1}, false}});
    b.claim_mzero("generic conjugation annihilates", -1, {{"1", {2, 1, 2}, false}});
    b.claim_poly("sigma3 of the pair product vanishes", -1, {{"1", atom_sigma(3, {1, 2})}});
    return b.c;
}

NullconeCertificate make_n4_q2() {
    Builder b("N4_Q2", 4);
    b.explicit_mat({"1/2", "1/2*i", "0", "0", "1/2*i", "-1/2"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2"});

    b.branch("main");
    b.sub("a2", "-i*b2-i*e2+f2");
    b.sub("d2", "c2");
    b.sub_square("c2", "(b2+i*f2)*(e2+i*f2)");
    b.claim_mzero("base is square-zero", 0, {{"1", {1, 1}, false}});
    b.claim_poly("pair trace vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("squared-pair trace vanishes", 1, {{"1", atom_sigma(1, {1, 1, 2, 2})}});
    b.claim_poly("sigma2 is twice the quadratic defect", 2,
                 {{"1", atom_sigma(2, {2})},
                  {"-2*c2^2+2*(b2+i*f2)*(e2+i*f2)", atom_one()}});
    b.claim_poly("sigma2 vanishes modulo the relation", -1, {{"1", atom_sigma(2, {2})}});
    b.claim_poly("sigma4 vanishes modulo the relation", -1, {{"1", atom_sigma(4, {2})}});
    b.claim_mzero("generic squared kills the base", -1, {{"1", {2, 2, 1}, false}});
    b.claim_mzero("base conjugation annihilates", -1, {{"1", {1, 2, 1}, false}});
    b.claim_mzero("generic conjugation annihilates", -1, {{"1", {2, 1, 2}, false}});
    b.claim_poly("sigma3 of the pair product vanishes", -1, {{"1", atom_sigma(3, {1, 2})}});
    return b.c;
}

NullconeCertificate make_n4_abc_q1() {
    Builder b("N4_ABC_Q1", 4);
    b.explicit_mat({"1/2+1/2*i", "0", "0", "-1/2+1/2*i", "0", "0"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2"});
    b.generic_mat({"a3", "b3", "c3", "d3", "e3", "f3"});

    b.branch("main");
    b.sub("a2", "-i*d2");
    b.sub("c2", "i*f2");
    b.sub("b2", "0");
    b.sub("e2", "0");
    b.sub("a3", "-i*d3");
    b.sub("c3", "i*f3");
    b.sub("b3", "0");
    b.sub("e3", "0");
    b.claim_poly("trace of base with the first generic vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("trace of base with the second generic vanishes", 5, {{"1", atom_sigma(1, {1, 3})}});
    const Word perms[6] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const Word& w : perms)
        b.claim_mzero("triple product " + word_str(w) + " vanishes", -1, {{"1", w, false}});
    return b.c;
}

NullconeCertificate make_n4_abc_q2() {
    Builder b("N4_ABC_Q2", 4);
    b.explicit_mat({"1/2", "1/2*i", "0", "0", "1/2*i", "-1/2"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2"});
    b.generic_mat({"a3", "b3", "c3", "d3", "e3", "f3"});

    b.branch("main");
    b.sub("a2", "-i*b2-i*e2+f2");
    b.sub("d2", "c2");
    b.sub("a3", "-i*b3-i*e3+f3");
    b.sub("d3", "c3");
    b.claim_poly("trace of base with the first generic vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("trace of base with the second generic vanishes", 3, {{"1", atom_sigma(1, {1, 3})}});
    b.claim_mzero("base commutes with the first generic", -1,
                  {{"1", {1, 2}, false}, {"-1", {2, 1}, false}});
    b.claim_mzero("base commutes with the second generic", -1,
                  {{"1", {1, 3}, false}, {"-1", {3, 1}, false}});
    b.claim_mzero("transpose of the triple product is minus the reversed product", 0,
                  {{"1", {1, 2, 3}, true}, {"1", {3, 2, 1}, false}});

    const Word p = {1, 2, 3};
    auto E = [&](int r, int c) { return atom_entry(p, r, c); };
    b.claim_poly("first row relation (1,3)", -1, {{"1", E(0, 2)}, {"-i", E(0, 1)}});
    b.claim_poly("first row relation (1,4)", -1, {{"1", E(0, 3)}, {"i", E(0, 0)}});
    b.claim_poly("pivot defect carries the pair trace", -1,
                 {{"4", E(1, 0)}, {"-4", E(0, 1)}, {"1", atom_sigma(1, {2, 3})}});
    b.claim_poly("second row relation (2,3)", -1, {{"1", E(1, 2)}, {"-i", E(1, 1)}});
    b.claim_poly("second row relation (2,4)", -1, {{"1", E(1, 3)}, {"i", E(1, 0)}});
    b.claim_poly("third row relation (3,1)", -1, {{"1", E(2, 0)}, {"-i", E(1, 0)}});
    b.claim_poly("third row relation (3,2)", -1, {{"1", E(2, 1)}, {"-i", E(1, 1)}});
    b.claim_poly("third row relation (3,3)", -1, {{"1", E(2, 2)}, {"1", E(1, 1)}});
    b.claim_poly("third row relation (3,4)", -1, {{"1", E(2, 3)}, {"-1", E(1, 0)}});
    b.claim_poly("fourth row relation (4,1)", -1, {{"1", E(3, 0)}, {"i", E(0, 0)}});
    b.claim_poly("fourth row relation (4,2)", -1, {{"1", E(3, 1)}, {"i", E(0, 1)}});
    b.claim_poly("fourth row relation (4,3)", -1, {{"1", E(3, 2)}, {"-1", E(0, 1)}});
    b.claim_poly("fourth row relation (4,4)", -1, {{"1", E(3, 3)}, {"1", E(0, 0)}});

    const char* S[4][4] = {{nullptr, "1/4", "1/4*i", nullptr},
                           {"-1/4", nullptr, nullptr, "1/4*i"},
                           {"-1/4*i", nullptr, nullptr, "-1/4"},
                           {nullptr, "-1/4*i", "1/4", nullptr}};
    std::vector<std::vector<std::vector<std::pair<std::string, CertAtom>>>> rhs(
        4, std::vector<std::vector<std::pair<std::string, CertAtom>>>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (S[r][c]) rhs[r][c].push_back({S[r][c], atom_sigma(1, {2, 3})});
    b.claim_mequals("transpose gap of the triple product is the pair trace times the fixed pattern",
                    -1, {{"1", p, false}, {"-1", p, true}}, std::move(rhs));
    return b.c;
}

NullconeCertificate make_n5_q1() {
    Builder b("N5_Q1", 5);
    b.explicit_mat({"1/2+1/2*i", "0", "0", "0", "-1/2+1/2*i", "0", "0", "0", "0", "0"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2", "g2", "h2", "i2", "j2"});

    struct Case {
        int delta;
        bool corner;  // true: c2 = i*h2 sub-case; false: f2 sub-case
    };
    const Case cases[4] = {{+1, false}, {+1, true}, {-1, false}, {-1, true}};
    for (const Case& cs : cases) {
        std::string nm = std::string("delta=") + (cs.delta > 0 ? "+1" : "-1") +
                         (cs.corner ? ", corner case" : ", edge case");
        b.branch(nm);
        b.sub("a2", "-i*e2");
        b.sub("d2", cs.delta > 0 ? "i*i2+i*c2+h2" : "i*i2-i*c2-h2");
        b.claim_mzero("base cubes to zero", 0, {{"1", {1, 1, 1}, false}});
        b.claim_poly("cubed-pair trace vanishes", 0, {{"1", atom_sigma(1, {1, 1, 1, 2, 2, 2})}});
        b.claim_poly("pair trace vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
        b.claim_poly("squared-pair trace factors", 1,
                     {{"2", atom_sigma(1, {1, 1, 2, 2})},
                      {"-i*(c2-i*d2-i*h2-i2)*(c2+i*d2-i*h2+i2)", atom_one()}});
        b.claim_poly("squared-pair trace vanishes", 2, {{"1", atom_sigma(1, {1, 1, 2, 2})}});
        if (!cs.corner) {
            b.sub("f2", cs.delta > 0 ? "-i*g2" : "i*g2");
            b.claim_poly("quartic-pair trace factors", 2,
                         {{"2", atom_sigma(1, {1, 1, 2, 2, 2, 2})},
                          {cs.delta > 0 ? "i*(c2-i*h2)^2*(f2+i*g2)^2"
                                        : "i*(c2-i*h2)^2*(f2-i*g2)^2",
                           atom_one()}});
            b.claim_poly("quartic-pair trace vanishes", 3, {{"1", atom_sigma(1, {1, 1, 2, 2, 2, 2})}});
            for (int j = 1; j <= 4; ++j) {
                Word w = {1};
                for (int t = 0; t < j; ++t) w.push_back(2);
                w.push_back(1);
                b.claim_mzero("base sandwich of power " + std::to_string(j) + " vanishes", -1,
                              {{"1", w, false}});
            }
        } else {
            b.sub("c2", "i*h2");
            b.sub("b2", "0");
            b.sub_square("j2", "-f2^2-g2^2");
            b.claim_poly("quartic-pair trace vanishes", 3, {{"1", atom_sigma(1, {1, 1, 2, 2, 2, 2})}});
            b.claim_poly("sigma2 reduces to the tail entries", 4,
                         {{"1", atom_sigma(2, {2})}, {"-f2^2-g2^2-j2^2", atom_one()}});
            b.claim_poly("sigma2 vanishes modulo the relation", -1, {{"1", atom_sigma(2, {2})}});
            b.claim_poly("sigma4 vanishes modulo the relation", -1, {{"1", atom_sigma(4, {2})}});
            b.claim_mzero("base conjugation annihilates", -1, {{"1", {1, 2, 1}, false}});
            b.claim_mzero("generic conjugation annihilates", -1, {{"1", {2, 1, 2}, false}});
            b.claim_mzero("squares multiply to zero", -1, {{"1", {1, 1, 2, 2}, false}});
        }
    }
    return b.c;
}

NullconeCertificate make_n5_q3() {
    Builder b("N5_Q3", 5);
    b.explicit_mat({"1/2", "0", "1/2*i", "0", "1/2+1/2*i", "0", "1/2*i", "-1/2+1/2*i", "0", "-1/2"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2", "g2", "h2", "i2", "j2"});

    b.branch("chain");
    b.sub("g2", "i*a2+c2+i*j2");
    b.sub("b2", "-i*i2");
    b.sub("j2", "i*c2+(1/2+1/2*i)*e2+(-1/2+1/2*i)*h2");
    b.sub("e2", "-i*h2");
    b.sub("d2", "0");
    b.sub("f2", "0");
    b.claim_poly("cubed trace against the base vanishes", 1, {{"1", atom_sigma(1, {1, 1, 1, 2})}});
    b.claim_poly("quartic-square trace vanishes", 2, {{"1", atom_sigma(1, {1, 1, 1, 1, 2, 2})}});
    b.claim_poly("pair trace vanishes", 3, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_poly("squared-pair trace vanishes", 4, {{"1", atom_sigma(1, {1, 1, 2, 2})}});
    b.claim_poly("sigma2 vanishes", 6, {{"1", atom_sigma(2, {2})}});
    b.claim_poly("sigma4 vanishes", 6, {{"1", atom_sigma(4, {2})}});
    b.claim_poly("cubed-pair trace vanishes", -1, {{"1", atom_sigma(1, {1, 1, 1, 2, 2, 2})}});
    b.claim_mzero("five-fold alternating product vanishes", -1, {{"1", {1, 2, 1, 2, 1}, false}});
    for (int i1 = 1; i1 <= 4; ++i1)
        for (int j1 = 1; j1 <= 4; ++j1)
            for (int i2 = 1; i2 <= 4; ++i2)
                for (int j2 = 1; j2 <= 4; ++j2) {
                    if (i1 + j1 + i2 + j2 <= 4) continue;
                    Word w;
                    for (int t = 0; t < i1; ++t) w.push_back(1);
                    for (int t = 0; t < j1; ++t) w.push_back(2);
                    for (int t = 0; t < i2; ++t) w.push_back(1);
                    for (int t = 0; t < j2; ++t) w.push_back(2);
                    b.claim_mzero("power sandwich (" + std::to_string(i1) + "," + std::to_string(j1) +
                                      "," + std::to_string(i2) + "," + std::to_string(j2) +
                                      ") vanishes",
                                  -1, {{"1", w, false}});
                }
    return b.c;
}

NullconeCertificate make_n5_q2() {
    Builder b("N5_Q2", 5);
    b.explicit_mat({"1/2", "1/2*i", "0", "0", "0", "1/2*i", "0", "-1/2", "0", "0"});
    b.generic_mat({"a2", "b2", "c2", "d2", "e2", "f2", "g2", "h2", "i2", "j2"});

    b.branch("main");
    b.sub("a2", "-i*b2-i*f2+h2");
    b.claim_mzero("base is square-zero", 0, {{"1", {1, 1}, false}});
    b.claim_poly("pair trace vanishes", 1, {{"1", atom_sigma(1, {1, 2})}});
    b.claim_mzero("base conjugation annihilates", -1, {{"1", {1, 2, 1}, false}});
    return b.c;
}

} // namespace

NullconeCertificate induction_certificate(int k, int i, int l, int d) {
    if (d < 3 || d > 4) fail(ErrorKind::Usage, "induction template requires 3 <= d <= 4");
    auto in_range = [&](int v) { return v >= 1 && v <= d; };
    if (!in_range(k) || !in_range(i) || !in_range(l) || k == i || k == l || i == l)
        fail(ErrorKind::Usage, "induction template requires distinct indices in 1..d");

    std::string name = "N3_INDUCTION";
    if (!(k == 1 && i == 2 && l == 3 && d == 3))
        name += "_K" + std::to_string(k) + "I" + std::to_string(i) + "L" + std::to_string(l) + "D" +
                std::to_string(d);
    Builder b(std::move(name), 3);
    for (int slot = 1; slot <= d; ++slot) {
        if (slot == k) {
            b.explicit_mat({"1+1*i", "0", "-1+1*i"});
        } else {
            std::string suffix = std::to_string(slot);
            b.generic_mat({"a" + suffix, "b" + suffix, "c" + suffix});
        }
    }
    std::string ai = "a" + std::to_string(i), bi = "b" + std::to_string(i), ci = "c" + std::to_string(i);
    std::string al = "a" + std::to_string(l), bl = "b" + std::to_string(l), cl = "c" + std::to_string(l);

    b.branch("reduction chain");
    b.sub(ci, "i*" + ai);
    b.sub(bi, "0");
    b.sub(cl, "i*" + al);
    b.sub(bl, "0");
    b.claim_poly("pair trace formula for generic size-3 skew matrices", 0,
                 {{"1", atom_sigma(1, {i, l})},
                  {"2*" + ai + "*" + al + "+2*" + bi + "*" + bl + "+2*" + ci + "*" + cl, atom_one()}});
    b.claim_poly("trace of the base with the reduced matrix vanishes", 1,
                 {{"1", atom_sigma(1, {k, i})}});
    b.claim_poly("sigma2 of the reduced matrix vanishes", 2, {{"1", atom_sigma(2, {i})}});
    b.claim_poly("trace of the base with the incoming matrix vanishes", 3,
                 {{"1", atom_sigma(1, {k, l})}});
    b.claim_poly("sigma2 of the incoming matrix vanishes", 4, {{"1", atom_sigma(2, {l})}});
    b.claim_poly("pair trace of the reduced and incoming matrices vanishes", -1,
                 {{"1", atom_sigma(1, {i, l})}});
    return b.c;
}

std::vector<NullconeCertificate> builtin_certificates() {
    std::vector<NullconeCertificate> out;
    out.push_back(make_n3_trabc());
    out.push_back(induction_certificate(1, 2, 3, 3));
    out.push_back(make_n4_q1());
    out.push_back(make_n4_q2());
    out.push_back(make_n4_abc_q1());
    out.push_back(make_n4_abc_q2());
    out.push_back(make_n5_q1());
    out.push_back(make_n5_q3());
    out.push_back(make_n5_q2());
    return out;
}

} // namespace skewinv
