#include <json.hpp>

#include "skewinv/certificates.hpp"
#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& why) {
    fail(ErrorKind::MalformedCertificate, "certificate JSON: " + why);
}

ordered_json atom_to_json(const SymbolTable& tab, const CertPolyTerm& t) {
    ordered_json j;
    j["coeff"] = symbol_poly_str(tab, t.coeff);
    switch (t.atom.kind) {
        case CertAtom::Kind::Sigma:
            j["sigma"] = {{"t", t.atom.t}, {"word", t.atom.word}};
            break;
        case CertAtom::Kind::Entry:
            j["entry"] = {{"word", t.atom.word}, {"row", t.atom.row + 1}, {"col", t.atom.col + 1}};
            break;
        case CertAtom::Kind::One:
            j["one"] = true;
            break;
    }
    return j;
}

ordered_json matterm_to_json(const CertMatTerm& t) {
    ordered_json j;
    j["coeff"] = gr_to_string(t.coeff);
    j["word"] = t.word;
    if (t.transpose) j["transpose"] = true;
    return j;
}

ordered_json claim_to_json(const SymbolTable& tab, const CertClaim& cl) {
    ordered_json j;
    switch (cl.kind) {
        case CertClaim::Kind::PolyZero: j["kind"] = "poly_zero"; break;
        case CertClaim::Kind::MatrixZero: j["kind"] = "matrix_zero"; break;
        case CertClaim::Kind::MatrixEquals: j["kind"] = "matrix_equals"; break;
    }
    j["name"] = cl.name;
    if (cl.after_step >= 0) j["after_step"] = cl.after_step;
    if (cl.kind == CertClaim::Kind::PolyZero) {
        ordered_json terms = ordered_json::array();
        for (const CertPolyTerm& t : cl.terms) terms.push_back(atom_to_json(tab, t));
        j["terms"] = std::move(terms);
    } else {
        ordered_json lhs = ordered_json::array();
        for (const CertMatTerm& t : cl.lhs) lhs.push_back(matterm_to_json(t));
        j[cl.kind == CertClaim::Kind::MatrixZero ? "terms" : "lhs"] = std::move(lhs);
        if (cl.kind == CertClaim::Kind::MatrixEquals) {
            ordered_json rows = ordered_json::array();
            for (const auto& row : cl.rhs) {
                ordered_json cells = ordered_json::array();
                for (const auto& cell : row) {
                    ordered_json terms = ordered_json::array();
                    for (const CertPolyTerm& t : cell) terms.push_back(atom_to_json(tab, t));
                    cells.push_back(std::move(terms));
                }
                rows.push_back(std::move(cells));
            }
            j["rhs"] = std::move(rows);
        }
    }
    return j;
}

Word word_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty()) bad("a word must be a nonempty array of matrix indices");
    Word w;
    for (const auto& v : j) {
        if (!v.is_number_integer()) bad("word letters must be integers");
        w.push_back(v.get<int>());
    }
    return w;
}

CertPolyTerm polyterm_from_json(const SymbolTable& tab, const ordered_json& j) {
    if (!j.is_object() || !j.contains("coeff")) bad("polynomial term needs a coeff");
    CertPolyTerm t;
    t.coeff = parse_symbol_poly(tab, j.at("coeff").get<std::string>());
    int kinds = int(j.contains("sigma")) + int(j.contains("entry")) + int(j.contains("one"));
    if (kinds != 1) bad("polynomial term needs exactly one of sigma/entry/one");
    if (j.contains("sigma")) {
        const auto& s = j.at("sigma");
        t.atom = atom_sigma(s.at("t").get<int>(), word_from_json(s.at("word")));
    } else if (j.contains("entry")) {
        const auto& e = j.at("entry");
        t.atom = atom_entry(word_from_json(e.at("word")), e.at("row").get<int>() - 1,
                            e.at("col").get<int>() - 1);
    } else {
        t.atom = atom_one();
    }
    return t;
}

CertMatTerm matterm_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("word")) bad("matrix term needs coeff and word");
    CertMatTerm t;
    t.coeff = gr_from_string(j.at("coeff").get<std::string>());
    t.word = word_from_json(j.at("word"));
    if (j.contains("transpose")) t.transpose = j.at("transpose").get<bool>();
    return t;
}

CertSubstitution substitution_from_json(const SymbolTable& tab, const ordered_json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string()) bad("a substitution is a [symbol, value] pair");
    CertSubstitution s;
    std::string sym = j[0].get<std::string>();
    if (sym.size() > 2 && sym.substr(sym.size() - 2) == "^2") {
        s.quadratic = true;
        sym = sym.substr(0, sym.size() - 2);
        if (!j[1].is_string()) bad("a quadratic substitution value must be a polynomial string");
    }
    s.symbol = std::move(sym);
    s.den = Monomial(tab.size());
    if (j[1].is_string()) {
        s.num = parse_symbol_poly(tab, j[1].get<std::string>());
    } else if (j[1].is_object()) {
        s.num = parse_symbol_poly(tab, j[1].at("num").get<std::string>());
        Polynomial d = parse_symbol_poly(tab, j[1].at("den").get<std::string>());
        if (d.term_count() != 1 || d.terms().front().c != GaussianRational(1))
            bad("substitution denominator must be a monomial");
        s.den = d.terms().front().m;
    } else {
        bad("substitution value must be a string or {num, den}");
    }
    return s;
}

CertClaim claim_from_json(const SymbolTable& tab, const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("name")) bad("claim needs kind and name");
    CertClaim cl;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly_zero")
        cl.kind = CertClaim::Kind::PolyZero;
    else if (kind == "matrix_zero")
        cl.kind = CertClaim::Kind::MatrixZero;
    else if (kind == "matrix_equals")
        cl.kind = CertClaim::Kind::MatrixEquals;
    else
        bad("unknown claim kind '" + kind + "'");
    cl.name = j.at("name").get<std::string>();
    if (j.contains("after_step")) cl.after_step = j.at("after_step").get<int>();
    if (cl.kind == CertClaim::Kind::PolyZero) {
        for (const auto& t : j.at("terms")) cl.terms.push_back(polyterm_from_json(tab, t));
    } else if (cl.kind == CertClaim::Kind::MatrixZero) {
        for (const auto& t : j.at("terms")) cl.lhs.push_back(matterm_from_json(t));
    } else {
        for (const auto& t : j.at("lhs")) cl.lhs.push_back(matterm_from_json(t));
        for (const auto& row : j.at("rhs")) {
            std::vector<std::vector<CertPolyTerm>> cells;
            for (const auto& cell : row) {
                std::vector<CertPolyTerm> terms;
                for (const auto& t : cell) terms.push_back(polyterm_from_json(tab, t));
                cells.push_back(std::move(terms));
            }
            cl.rhs.push_back(std::move(cells));
        }
    }
    return cl;
}

} // namespace

std::string certificate_to_json(const NullconeCertificate& cert) {
    SymbolTable tab = cert.symbols();
    ordered_json j;
    j["name"] = cert.name;
    j["base"]["n"] = cert.n;
    ordered_json mats = ordered_json::array();
    for (const CertMatrix& m : cert.matrices) {
        ordered_json jm;
        if (m.generic) {
            jm["symbols"] = m.symbols;
        } else {
            ordered_json upper = ordered_json::array();
            for (const GaussianRational& c : m.upper) upper.push_back(gr_to_string(c));
            jm["upper"] = std::move(upper);
        }
        mats.push_back(std::move(jm));
    }
    j["base"]["matrices"] = std::move(mats);
    j["params"] = tab.names;
    ordered_json branches = ordered_json::array();
    for (const CertBranch& br : cert.branches) {
        ordered_json jb;
        jb["name"] = br.name;
        jb["nonzero"] = br.nonzero;
        ordered_json subs = ordered_json::array();
        for (const CertSubstitution& s : br.substitutions) {
            std::string sym = s.symbol + (s.quadratic ? "^2" : "");
            if (s.den.is_one()) {
                subs.push_back(ordered_json::array({sym, symbol_poly_str(tab, s.num)}));
            } else {
                ordered_json val;
                val["num"] = symbol_poly_str(tab, s.num);
                val["den"] = symbol_mono_str(tab, s.den);
                subs.push_back(ordered_json::array({sym, std::move(val)}));
            }
        }
        jb["substitutions"] = std::move(subs);
        ordered_json claims = ordered_json::array();
        for (const CertClaim& cl : br.claims) claims.push_back(claim_to_json(tab, cl));
        jb["claims"] = std::move(claims);
        branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);
    return j.dump(2);
}

NullconeCertificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        bad(e.what());
    }
    try {
        NullconeCertificate cert;
        cert.name = j.at("name").get<std::string>();
        cert.n = j.at("base").at("n").get<int>();
        for (const auto& jm : j.at("base").at("matrices")) {
            CertMatrix m;
            if (jm.contains("symbols")) {
                m.generic = true;
                for (const auto& s : jm.at("symbols")) m.symbols.push_back(s.get<std::string>());
            } else if (jm.contains("upper")) {
                for (const auto& s : jm.at("upper")) m.upper.push_back(gr_from_string(s.get<std::string>()));
            } else {
                bad("matrix needs either symbols or upper");
            }
            cert.matrices.push_back(std::move(m));
        }
        SymbolTable tab = cert.symbols();
        if (j.contains("params")) {
            std::vector<std::string> params;
            for (const auto& s : j.at("params")) params.push_back(s.get<std::string>());
            if (params != tab.names) bad("params disagree with the generic matrix symbols");
        }
        for (const auto& jb : j.at("branches")) {
            CertBranch br;
            br.name = jb.at("name").get<std::string>();
            if (jb.contains("nonzero"))
                for (const auto& s : jb.at("nonzero")) br.nonzero.push_back(s.get<std::string>());
            for (const auto& js : jb.at("substitutions"))
                br.substitutions.push_back(substitution_from_json(tab, js));
            for (const auto& jc : jb.at("claims")) br.claims.push_back(claim_from_json(tab, jc));
            cert.branches.push_back(std::move(br));
        }
        return cert;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        bad(e.what());
    }
}

} // namespace skewinv
