#pragma once

#include "skewinv/polynomial.hpp"

namespace skewinv {

// Fraction num / den with a monomial denominator: the closure needed when a
// linear relation is solved for a variable whose coefficient is another
// variable that is assumed nonzero.  Normalized form has gcd(num, den) = 1
// as monomial content and a trivial denominator whenever num = 0.
struct PolyFrac {
    Polynomial num;
    Monomial den;

    PolyFrac() = default;
    explicit PolyFrac(int nvars) : num(nvars), den(nvars) {}
    PolyFrac(Polynomial n, Monomial d) : num(std::move(n)), den(std::move(d)) {}

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const PolyFrac& a, const PolyFrac& b) = default;
};

PolyFrac pf_of(Polynomial p);
PolyFrac pf_normalized(PolyFrac f);
PolyFrac pf_add(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_sub(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_mul(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_scaled(const PolyFrac& a, const GaussianRational& c);
bool pf_equal(const PolyFrac& a, const PolyFrac& b);

// f with the variable var replaced by value.num / value.den; neither
// denominator may involve var.
PolyFrac pf_substituted(const PolyFrac& f, int var, const PolyFrac& value);

// p with every power var^e rewritten as var^(e mod 2) * rhs^(e div 2): exact
// reduction modulo the relation var^2 = rhs.  rhs must not involve var.
Polynomial quad_reduced(const Polynomial& p, int var, const Polynomial& rhs);

} // namespace skewinv
