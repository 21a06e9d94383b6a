#include "skewinv/certificates.hpp"

#include <cctype>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "skewinv/errors.hpp"

namespace skewinv {

// ---------------------------------------------------------------------------
// Symbol table
// ---------------------------------------------------------------------------

int SymbolTable::index(const std::string& name) const {
    for (size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return static_cast<int>(k);
    return -1;
}

int SymbolTable::require(const std::string& name) const {
    int k = index(name);
    if (k < 0) fail(ErrorKind::MalformedCertificate, "unknown symbol '" + name + "'");
    return k;
}

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

namespace {

struct PolyParser {
    const SymbolTable& table;
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void bad(const std::string& why) const {
        fail(ErrorKind::MalformedCertificate,
             "bad polynomial '" + text + "' at offset " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Polynomial parse() {
        Polynomial f = expr();
        skip_ws();
        if (pos != text.size()) bad("trailing input");
        return f;
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = acc.scaled(GaussianRational(-1));
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (eat('^')) {
            int e = natural();
            base = base.pow(e);
        }
        return base;
    }

    int natural() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) bad("expected an exponent");
        if (pos - start > 4) bad("exponent too large");
        return std::stoi(text.substr(start, pos - start));
    }

    Polynomial primary() {
        skip_ws();
        if (pos >= text.size()) bad("unexpected end of input");
        char c = text[pos];
        int nv = table.size();
        if (c == '(') {
            ++pos;
            Polynomial inner = expr();
            if (!eat(')')) bad("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            return Polynomial::constant(nv, GaussianRational(rational_from_string(text.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "i") return Polynomial::constant(nv, gr_i());
            int idx = table.index(name);
            if (idx < 0) bad("unknown symbol '" + name + "'");
            return Polynomial::variable(nv, idx);
        }
        bad("unexpected character");
    }
};

std::string scalar_factor_str(const GaussianRational& c) {
    if (!c.is_real() && c.re != 0) return "(" + gr_to_string(c) + ")";
    return gr_to_string(c);
}

} // namespace

Polynomial parse_symbol_poly(const SymbolTable& table, const std::string& text) {
    PolyParser p{table, text};
    return p.parse();
}

std::string symbol_mono_str(const SymbolTable& table, const Monomial& m) {
    std::string out;
    for (int v = 0; v < m.nvars(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += table.names[v];
        if (m[v] > 1) out += "^" + std::to_string(static_cast<int>(m[v]));
    }
    return out.empty() ? "1" : out;
}

std::string symbol_poly_str(const SymbolTable& table, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Polynomial::Term& t : f.terms()) {
        GaussianRational c = t.c;
        bool neg = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
        if (first) {
            if (neg) {
                out += "-";
                c = -c;
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) c = -c;
        }
        first = false;
        if (t.m.is_one()) {
            out += scalar_factor_str(c);
        } else if (c == GaussianRational(1)) {
            out += symbol_mono_str(table, t.m);
        } else {
            out += scalar_factor_str(c) + "*" + symbol_mono_str(table, t.m);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Model helpers
// ---------------------------------------------------------------------------

CertAtom atom_sigma(int t, Word w) {
    CertAtom a;
    a.kind = CertAtom::Kind::Sigma;
    a.t = t;
    a.word = std::move(w);
    return a;
}

CertAtom atom_entry(Word w, int row, int col) {
    CertAtom a;
    a.kind = CertAtom::Kind::Entry;
    a.word = std::move(w);
    a.row = row;
    a.col = col;
    return a;
}

CertAtom atom_one() { return CertAtom{}; }

SymbolTable NullconeCertificate::symbols() const {
    SymbolTable tab;
    for (const CertMatrix& m : matrices)
        if (m.generic)
            for (const std::string& s : m.symbols) tab.names.push_back(s);
    return tab;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void malformed(const NullconeCertificate& cert, const std::string& why) {
    fail(ErrorKind::MalformedCertificate, "certificate '" + cert.name + "': " + why);
}

bool valid_symbol_name(const std::string& s) {
    if (s.empty() || s == "i") return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::set<int> poly_vars(const Polynomial& f) {
    std::set<int> vars;
    for (const Polynomial::Term& t : f.terms())
        for (int v = 0; v < t.m.nvars(); ++v)
            if (t.m[v] > 0) vars.insert(v);
    return vars;
}

void validate_word(const NullconeCertificate& cert, const Word& w) {
    if (w.empty()) malformed(cert, "empty word in a claim");
    for (int letter : w)
        if (letter < 1 || letter > static_cast<int>(cert.matrices.size()))
            malformed(cert, "word letter " + std::to_string(letter) + " out of range");
}

void validate_atom(const NullconeCertificate& cert, const CertAtom& a) {
    switch (a.kind) {
        case CertAtom::Kind::One:
            return;
        case CertAtom::Kind::Sigma:
            validate_word(cert, a.word);
            if (a.t < 1 || a.t > cert.n) malformed(cert, "sigma index out of range");
            return;
        case CertAtom::Kind::Entry:
            validate_word(cert, a.word);
            if (a.row < 0 || a.row >= cert.n || a.col < 0 || a.col >= cert.n)
                malformed(cert, "entry position out of range");
            return;
    }
}

void validate_poly_terms(const NullconeCertificate& cert, int nv,
                         const std::vector<CertPolyTerm>& terms, bool allow_empty) {
    if (terms.empty() && !allow_empty) malformed(cert, "claim has no terms");
    for (const CertPolyTerm& t : terms) {
        if (t.coeff.nvars() != nv) malformed(cert, "coefficient over a wrong symbol table");
        validate_atom(cert, t.atom);
    }
}

void validate(const NullconeCertificate& cert) {
    if (cert.n < 2) malformed(cert, "matrix size must be at least 2");
    if (cert.matrices.empty()) malformed(cert, "no base matrices");
    size_t u = static_cast<size_t>(cert.n) * (cert.n - 1) / 2;
    std::set<std::string> seen;
    for (const CertMatrix& m : cert.matrices) {
        if (m.generic) {
            if (m.symbols.size() != u) malformed(cert, "generic matrix has a wrong symbol count");
            if (!m.upper.empty()) malformed(cert, "generic matrix carries explicit entries");
            for (const std::string& s : m.symbols) {
                if (!valid_symbol_name(s)) malformed(cert, "bad symbol name '" + s + "'");
                if (!seen.insert(s).second) malformed(cert, "duplicate symbol '" + s + "'");
            }
        } else {
            if (m.upper.size() != u) malformed(cert, "explicit matrix has a wrong entry count");
            if (!m.symbols.empty()) malformed(cert, "explicit matrix carries symbols");
        }
    }
    if (cert.branches.empty()) malformed(cert, "no branches");

    SymbolTable tab = cert.symbols();
    int nv = tab.size();
    for (const CertBranch& br : cert.branches) {
        std::set<int> nonzero;
        for (const std::string& s : br.nonzero) nonzero.insert(tab.require(s));
        std::set<int> eliminated;
        std::set<int> quad_vars;
        for (const CertSubstitution& s : br.substitutions)
            if (s.quadratic) quad_vars.insert(tab.require(s.symbol));
        for (const CertSubstitution& s : br.substitutions) {
            int var = tab.require(s.symbol);
            if (eliminated.count(var))
                malformed(cert, "branch '" + br.name + "' substitutes '" + s.symbol + "' twice");
            if (nonzero.count(var))
                malformed(cert, "branch '" + br.name + "' substitutes nonzero symbol '" + s.symbol + "'");
            if (s.num.nvars() != nv) malformed(cert, "substitution over a wrong symbol table");
            std::set<int> used = poly_vars(s.num);
            if (used.count(var))
                malformed(cert, "substitution for '" + s.symbol + "' mentions itself");
            for (int v : eliminated)
                if (used.count(v))
                    malformed(cert, "substitution for '" + s.symbol + "' mentions an already eliminated symbol");
            if (s.quadratic) {
                if (!s.den.is_one()) malformed(cert, "quadratic substitution with a denominator");
                for (int v : quad_vars)
                    if (used.count(v))
                        malformed(cert, "quadratic relation for '" + s.symbol +
                                            "' mentions a quadratically reduced symbol");
            } else {
                for (int v = 0; v < nv; ++v)
                    if (s.den[v] > 0 && !nonzero.count(v))
                        malformed(cert, "denominator symbol '" + tab.names[v] +
                                            "' is not assumed nonzero in branch '" + br.name + "'");
            }
            eliminated.insert(var);
        }
        if (br.claims.empty()) malformed(cert, "branch '" + br.name + "' has no claims");
        for (const CertClaim& cl : br.claims) {
            if (cl.name.empty()) malformed(cert, "claim without a name");
            if (cl.after_step < -1 || cl.after_step > static_cast<int>(br.substitutions.size()))
                malformed(cert, "claim '" + cl.name + "' checks after a nonexistent step");
            switch (cl.kind) {
                case CertClaim::Kind::PolyZero:
                    validate_poly_terms(cert, nv, cl.terms, false);
                    break;
                case CertClaim::Kind::MatrixZero:
                    if (cl.lhs.empty()) malformed(cert, "claim '" + cl.name + "' has no terms");
                    for (const CertMatTerm& mt : cl.lhs) validate_word(cert, mt.word);
                    break;
                case CertClaim::Kind::MatrixEquals:
                    if (cl.lhs.empty()) malformed(cert, "claim '" + cl.name + "' has no terms");
                    for (const CertMatTerm& mt : cl.lhs) validate_word(cert, mt.word);
                    if (cl.rhs.size() != static_cast<size_t>(cert.n))
                        malformed(cert, "claim '" + cl.name + "' right side has wrong dimensions");
                    for (const auto& row : cl.rhs) {
                        if (row.size() != static_cast<size_t>(cert.n))
                            malformed(cert, "claim '" + cl.name + "' right side has wrong dimensions");
                        for (const auto& cell : row) validate_poly_terms(cert, nv, cell, true);
                    }
                    break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Replay engine
// ---------------------------------------------------------------------------

std::string clip(const std::string& s) {
    constexpr size_t kMax = 600;
    if (s.size() <= kMax) return s;
    return s.substr(0, kMax) + "...";
}

struct ResolvedStep {
    int var = 0;
    bool quad = false;
    Polynomial num;
    Monomial den;
};

class Replay {
public:
    Replay(const NullconeCertificate& cert, const CertBranch& br, const SymbolTable& tab)
        : cert_(cert), tab_(tab), nv_(tab.size()) {
        for (const CertSubstitution& s : br.substitutions)
            steps_.push_back({tab.require(s.symbol), s.quadratic, s.num, s.den});
        den_free_.assign(steps_.size() + 1, true);
        for (size_t k = 0; k < steps_.size(); ++k)
            den_free_[k + 1] = den_free_[k] && (steps_[k].quad || steps_[k].den.is_one());
        mats_.assign(steps_.size() + 1, {});
        mats_[0] = base_matrices();
    }

    // Empty result = claim holds; otherwise a failure description.
    std::optional<std::string> check(const CertClaim& cl) {
        int k = cl.after_step < 0 ? static_cast<int>(steps_.size()) : cl.after_step;
        switch (cl.kind) {
            case CertClaim::Kind::PolyZero: {
                PolyFrac acc(nv_);
                for (const CertPolyTerm& t : cl.terms)
                    acc = pf_add(acc, pf_mul(reduce_value(t.coeff, k), atom_value(k, t.atom)));
                return finish(acc, k, "");
            }
            case CertClaim::Kind::MatrixZero:
            case CertClaim::Kind::MatrixEquals: {
                for (int r = 0; r < cert_.n; ++r)
                    for (int c = 0; c < cert_.n; ++c) {
                        PolyFrac v(nv_);
                        for (const CertMatTerm& mt : cl.lhs)
                            v = pf_add(v, pf_scaled(entry_value(k, mt, r, c), mt.coeff));
                        if (cl.kind == CertClaim::Kind::MatrixEquals)
                            for (const CertPolyTerm& t : cl.rhs[r][c])
                                v = pf_sub(v, pf_mul(reduce_value(t.coeff, k), atom_value(k, t.atom)));
                        std::optional<std::string> bad = finish(
                            v, k, " at entry (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")");
                        if (bad) return bad;
                    }
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

private:
    std::optional<std::string> finish(PolyFrac v, int k, const std::string& where) {
        v.num = reduce_all_quads(v.num, k);
        v = pf_normalized(v);
        if (v.is_zero()) return std::nullopt;
        std::string msg = "residual " + clip(symbol_poly_str(tab_, v.num));
        if (!v.den.is_one()) msg += " over " + symbol_mono_str(tab_, v.den);
        return msg + where;
    }

    std::vector<PolyMat> base_matrices() const {
        std::vector<PolyMat> base;
        int next = 0;
        for (const CertMatrix& m : cert_.matrices) {
            std::vector<Polynomial> upper;
            if (m.generic) {
                for (size_t j = 0; j < m.symbols.size(); ++j)
                    upper.push_back(Polynomial::variable(nv_, next++));
            } else {
                for (const GaussianRational& c : m.upper)
                    upper.push_back(Polynomial::constant(nv_, c));
            }
            base.push_back(skew_from_upper_poly(nv_, upper));
        }
        return base;
    }

    const std::vector<PolyMat>& mats_at(int k) {
        if (!mats_[k].empty()) return mats_[k];
        const std::vector<PolyMat>& prev = mats_at(k - 1);
        const ResolvedStep& s = steps_[k - 1];
        std::vector<PolyMat> out;
        out.reserve(prev.size());
        for (const PolyMat& m : prev) {
            PolyMat r(m.n(), Polynomial(nv_));
            for (int a = 0; a < m.n(); ++a)
                for (int b = 0; b < m.n(); ++b)
                    r.at(a, b) = s.quad ? quad_reduced(m.at(a, b), s.var, s.num)
                                        : m.at(a, b).substituted(s.var, s.num);
            out.push_back(std::move(r));
        }
        mats_[k] = std::move(out);
        return mats_[k];
    }

    Polynomial reduce_all_quads(Polynomial p, int k) {
        for (int j = 0; j < k; ++j)
            if (steps_[j].quad) p = quad_reduced(p, steps_[j].var, steps_[j].num);
        return p;
    }

    const PolyMat& word_prod(int k, const Word& w) {
        std::string key = std::to_string(k) + "|" + word_str(w);
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
        PolyMat m(cert_.n, Polynomial(nv_));
        if (w.size() == 1) {
            m = mats_at(k)[w[0] - 1];
        } else {
            Word lw(w.begin(), w.begin() + w.size() / 2);
            Word rw(w.begin() + w.size() / 2, w.end());
            m = word_prod(k, lw) * word_prod(k, rw);
            for (int a = 0; a < m.n(); ++a)
                for (int b = 0; b < m.n(); ++b) m.at(a, b) = reduce_all_quads(m.at(a, b), k);
        }
        return products_.emplace(std::move(key), std::move(m)).first->second;
    }

    PolyFrac reduce_value(const Polynomial& f, int k) {
        PolyFrac v = pf_of(f);
        for (int j = 0; j < k; ++j) {
            const ResolvedStep& s = steps_[j];
            if (s.quad)
                v.num = quad_reduced(v.num, s.var, s.num);
            else
                v = pf_substituted(v, s.var, {s.num, s.den});
        }
        return pf_normalized(v);
    }

    PolyFrac atom_value(int k, const CertAtom& a) {
        switch (a.kind) {
            case CertAtom::Kind::One:
                return pf_of(Polynomial::constant(nv_, GaussianRational(1)));
            case CertAtom::Kind::Sigma:
                if (den_free_[k]) {
                    Polynomial p = sigma_of_matrix(word_prod(k, a.word), a.t);
                    return pf_of(reduce_all_quads(std::move(p), k));
                }
                return reduce_value(sigma_of_matrix(word_prod(0, a.word), a.t), k);
            case CertAtom::Kind::Entry:
                if (den_free_[k]) return pf_of(word_prod(k, a.word).at(a.row, a.col));
                return reduce_value(word_prod(0, a.word).at(a.row, a.col), k);
        }
        return PolyFrac(nv_);
    }

    PolyFrac entry_value(int k, const CertMatTerm& mt, int r, int c) {
        int rr = mt.transpose ? c : r;
        int cc = mt.transpose ? r : c;
        return atom_value(k, atom_entry(mt.word, rr, cc));
    }

    const NullconeCertificate& cert_;
    const SymbolTable& tab_;
    int nv_;
    std::vector<ResolvedStep> steps_;
    std::vector<bool> den_free_;
    std::vector<std::vector<PolyMat>> mats_;
    std::unordered_map<std::string, PolyMat> products_;
};

} // namespace

CertificateResult check_certificate(const NullconeCertificate& cert) {
    validate(cert);
    CertificateResult res;
    res.certificate = cert.name;
    SymbolTable tab = cert.symbols();
    for (const CertBranch& br : cert.branches) {
        Replay replay(cert, br, tab);
        ++res.branches_checked;
        for (const CertClaim& cl : br.claims) {
            ++res.claims_checked;
            std::optional<std::string> bad = replay.check(cl);
            if (bad) {
                res.pass = false;
                res.failed_branch = br.name;
                res.failed_claim = cl.name;
                res.detail = *bad;
                return res;
            }
        }
    }
    return res;
}

std::optional<NullconeCertificate> builtin_certificate(const std::string& name) {
    for (NullconeCertificate& c : builtin_certificates())
        if (c.name == name) return std::move(c);
    return std::nullopt;
}

} // namespace skewinv
