#include "skewinv/polyfrac.hpp"

#include <map>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

Monomial mono_pow(const Monomial& m, int e) {
    Monomial r(m.nvars());
    for (int v = 0; v < m.nvars(); ++v)
        if (m[v] > 0) r.bump(v, m[v] * e);
    return r;
}

// a / b, requiring divisibility.
Monomial mono_quot(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int v = 0; v < a.nvars(); ++v) {
        if (a[v] < b[v]) fail(ErrorKind::Usage, "monomial quotient is not integral");
        if (a[v] > b[v]) r.bump(v, a[v] - b[v]);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (int v = 0; v < a.nvars(); ++v) {
        int e = a[v] > b[v] ? a[v] : b[v];
        if (e > 0) r.bump(v, e);
    }
    return r;
}

Polynomial poly_div_mono(const Polynomial& p, const Monomial& m) {
    std::vector<Polynomial::Term> out;
    out.reserve(p.term_count());
    for (const Polynomial::Term& t : p.terms()) out.push_back({mono_quot(t.m, m), t.c});
    return Polynomial::collect(p.nvars(), std::move(out));
}

// Splits p as sum_e bucket[e] * var^e with var stripped from the buckets.
std::map<int, Polynomial> split_by_var(const Polynomial& p, int var) {
    std::map<int, std::vector<Polynomial::Term>> raw;
    for (const Polynomial::Term& t : p.terms()) {
        int e = t.m[var];
        Monomial m = t.m;
        if (e > 0) m.bump(var, -e);
        raw[e].push_back({m, t.c});
    }
    std::map<int, Polynomial> out;
    for (auto& [e, terms] : raw) out.emplace(e, Polynomial::collect(p.nvars(), std::move(terms)));
    return out;
}

} // namespace

PolyFrac pf_of(Polynomial p) {
    int nv = p.nvars();
    return {std::move(p), Monomial(nv)};
}

PolyFrac pf_normalized(PolyFrac f) {
    if (f.num.is_zero()) {
        f.den = Monomial(f.num.nvars());
        return f;
    }
    Monomial common(f.den.nvars());
    for (int v = 0; v < f.den.nvars(); ++v) {
        if (f.den[v] == 0) continue;
        int low = 255;
        for (const Polynomial::Term& t : f.num.terms())
            if (t.m[v] < low) low = t.m[v];
        int k = low < f.den[v] ? low : f.den[v];
        if (k > 0) common.bump(v, k);
    }
    if (!common.is_one()) {
        f.num = poly_div_mono(f.num, common);
        f.den = mono_quot(f.den, common);
    }
    return f;
}

PolyFrac pf_add(const PolyFrac& a, const PolyFrac& b) {
    Monomial l = mono_lcm(a.den, b.den);
    Polynomial num = a.num.mul_term(mono_quot(l, a.den), GaussianRational(1)) +
                     b.num.mul_term(mono_quot(l, b.den), GaussianRational(1));
    return pf_normalized({std::move(num), std::move(l)});
}

PolyFrac pf_sub(const PolyFrac& a, const PolyFrac& b) { return pf_add(a, pf_scaled(b, GaussianRational(-1))); }

PolyFrac pf_mul(const PolyFrac& a, const PolyFrac& b) {
    return pf_normalized({a.num * b.num, a.den * b.den});
}

PolyFrac pf_scaled(const PolyFrac& a, const GaussianRational& c) {
    return {a.num.scaled(c), a.den};
}

bool pf_equal(const PolyFrac& a, const PolyFrac& b) { return pf_sub(a, b).is_zero(); }

PolyFrac pf_substituted(const PolyFrac& f, int var, const PolyFrac& value) {
    if (f.den[var] > 0 || value.den[var] > 0)
        fail(ErrorKind::Usage, "substituted variable occurs in a denominator");
    if (f.num.degree_in(var) <= 0) return f;

    std::map<int, Polynomial> buckets = split_by_var(f.num, var);
    int top = buckets.rbegin()->first;

    std::vector<Polynomial> npow(top + 1, Polynomial(f.num.nvars()));
    npow[0] = Polynomial::constant(f.num.nvars(), GaussianRational(1));
    for (int e = 1; e <= top; ++e) npow[e] = npow[e - 1] * value.num;

    Polynomial num(f.num.nvars());
    for (const auto& [e, part] : buckets)
        num += part * npow[e].mul_term(mono_pow(value.den, top - e), GaussianRational(1));
    return pf_normalized({std::move(num), f.den * mono_pow(value.den, top)});
}

Polynomial quad_reduced(const Polynomial& p, int var, const Polynomial& rhs) {
    if (rhs.degree_in(var) > 0)
        fail(ErrorKind::Usage, "quadratic relation right side involves its own variable");
    if (p.degree_in(var) < 2) return p;

    std::vector<Polynomial::Term> kept;
    std::map<int, Polynomial> rpow;
    rpow[0] = Polynomial::constant(p.nvars(), GaussianRational(1));
    Polynomial acc(p.nvars());
    for (const Polynomial::Term& t : p.terms()) {
        int e = t.m[var];
        if (e < 2) {
            kept.push_back(t);
            continue;
        }
        Monomial m = t.m;
        m.bump(var, -(e - e % 2));
        auto it = rpow.find(e / 2);
        if (it == rpow.end()) {
            Polynomial pw = rhs.pow(e / 2);
            it = rpow.emplace(e / 2, std::move(pw)).first;
        }
        acc += it->second.mul_term(m, t.c);
    }
    acc += Polynomial::collect(p.nvars(), std::move(kept));
    return acc;
}

} // namespace skewinv
