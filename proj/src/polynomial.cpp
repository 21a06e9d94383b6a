#include "skewinv/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace skewinv {

std::string MultiDegree::str() const {
    std::string s = "(";
    for (size_t k = 0; k < t.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(t[k]);
    }
    return s + ")";
}

Polynomial Polynomial::constant(int nvars, GaussianRational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int idx) {
    Monomial m(nvars);
    m.bump(idx);
    return monomial(m, GaussianRational(1));
}

Polynomial Polynomial::monomial(Monomial m, GaussianRational c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

GaussianRational Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return key < t.m; });
    if (it != terms_.end() && it->m == m) return it->c;
    return {};
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nv_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
}

// Merge of two descending term lists.
Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        nv_ = o.nv_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t a = 0, b = 0;
    while (a < terms_.size() && b < o.terms_.size()) {
        int c = cmp(terms_[a].m, o.terms_[b].m);
        if (c > 0) {
            out.push_back(std::move(terms_[a++]));
        } else if (c < 0) {
            out.push_back(o.terms_[b++]);
        } else {
            GaussianRational s = terms_[a].c + o.terms_[b].c;
            if (!s.is_zero()) out.push_back({terms_[a].m, std::move(s)});
            ++a;
            ++b;
        }
    }
    for (; a < terms_.size(); ++a) out.push_back(std::move(terms_[a]));
    for (; b < o.terms_.size(); ++b) out.push_back(o.terms_[b]);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return Polynomial(nv_);
    Polynomial r(nv_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const GaussianRational& c) const {
    if (c.is_zero()) return Polynomial(nv_);
    Polynomial r(nv_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nv_ ? a.nv_ : b.nv_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].m, a.terms_[0].c);
    std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * 2);
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            auto [it, fresh] = acc.try_emplace(ta.m * tb.m);
            if (fresh)
                it->second = ta.c * tb.c;
            else
                it->second += ta.c * tb.c;
        }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Polynomial::Term& x, const Polynomial::Term& y) { return cmp(x.m, y.m) > 0; });
    return r;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r = constant(nv_, GaussianRational(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].m != b.terms_[k].m || a.terms_[k].c != b.terms_[k].c) return false;
    return true;
}

Polynomial Polynomial::substituted(int var_idx, const Polynomial& rhs) const {
    Polynomial out(nv_);
    std::vector<Polynomial> rhs_pow = {constant(nv_, GaussianRational(1))};
    for (const Term& t : terms_) {
        int e = t.m[var_idx];
        if (e == 0) {
            out += monomial(t.m, t.c);
            continue;
        }
        while (static_cast<int>(rhs_pow.size()) <= e) rhs_pow.push_back(rhs_pow.back() * rhs);
        Monomial rest = t.m;
        rest.bump(var_idx, -e);
        out += rhs_pow[e].mul_term(rest, t.c);
    }
    return out;
}

Polynomial Polynomial::derivative(int var_idx) const {
    Polynomial out(nv_);
    std::vector<Term> raw;
    for (const Term& t : terms_) {
        int e = t.m[var_idx];
        if (e == 0) continue;
        Monomial m = t.m;
        m.bump(var_idx, -1);
        raw.push_back({std::move(m), t.c * GaussianRational(e)});
    }
    return collect(nv_, std::move(raw));
}

GaussianRational Polynomial::eval(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != nv_) fail(ErrorKind::SizeMismatch, "point dimension");
    GaussianRational acc;
    for (const Term& t : terms_) {
        GaussianRational v = t.c;
        for (int idx = 0; idx < nv_; ++idx)
            for (int e = 0; e < t.m[idx]; ++e) v *= point[idx];
        acc += v;
    }
    return acc;
}

int Polynomial::degree_in(int var_idx) const {
    int dmax = 0;
    for (const Term& t : terms_) dmax = std::max(dmax, static_cast<int>(t.m[var_idx]));
    return dmax;
}

Polynomial Polynomial::collect(int nvars, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return cmp(x.m, y.m) > 0; });
    Polynomial r(nvars);
    for (Term& t : raw) {
        if (!r.terms_.empty() && r.terms_.back().m == t.m)
            r.terms_.back().c += t.c;
        else
            r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.c.is_zero(); });
    return r;
}

std::string Polynomial::str(const Ctx& ctx) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + gr_to_string(t.c) + ")";
        for (int idx = 0; idx < nv_; ++idx) {
            if (t.m[idx] == 0) continue;
            s += "*" + ctx.var_name(idx);
            if (t.m[idx] > 1) s += "^" + std::to_string(static_cast<int>(t.m[idx]));
        }
    }
    return s;
}

MultiDegree mdeg_of_monomial(const Monomial& m, const Ctx& ctx) {
    MultiDegree md;
    md.t.assign(ctx.d, 0);
    int s = ctx.pairs();
    for (int idx = 0; idx < m.nvars(); ++idx)
        if (m[idx]) md.t[idx / s] += m[idx];
    return md;
}

MultiDegree mdeg(const Polynomial& f, const Ctx& ctx) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "mdeg of the zero polynomial");
    MultiDegree md = mdeg_of_monomial(f.terms().front().m, ctx);
    for (const auto& t : f.terms())
        if (mdeg_of_monomial(t.m, ctx) != md) fail(ErrorKind::NonHomogeneous, "mixed multidegrees");
    return md;
}

bool is_multihomogeneous(const Polynomial& f, const Ctx& ctx) {
    if (f.is_zero()) return true;
    MultiDegree md = mdeg_of_monomial(f.terms().front().m, ctx);
    for (const auto& t : f.terms())
        if (mdeg_of_monomial(t.m, ctx) != md) return false;
    return true;
}

Monomial hterm(const Polynomial& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "hterm of the zero polynomial");
    int d0 = f.terms().front().m.deg();
    for (const auto& t : f.terms())
        if (t.m.deg() != d0) fail(ErrorKind::NonHomogeneous, "hterm needs one total degree");
    return f.terms().front().m;
}

} // namespace skewinv
