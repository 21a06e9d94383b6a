#pragma once

#include <string>
#include <vector>

#include "skewinv/monomial.hpp"
#include "skewinv/scalar.hpp"
#include "skewinv/variables.hpp"

namespace skewinv {

struct MultiDegree {
    std::vector<int> t;

    int total() const {
        int s = 0;
        for (int v : t) s += v;
        return s;
    }
    size_t size() const { return t.size(); }
    int operator[](size_t k) const { return t[k]; }

    friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.t == b.t; }
    friend bool operator!=(const MultiDegree& a, const MultiDegree& b) { return !(a == b); }
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.t < b.t;
    }
    friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
        MultiDegree r = a;
        for (size_t k = 0; k < r.t.size(); ++k) r.t[k] += b.t[k];
        return r;
    }
    std::string str() const;
};

// Sparse polynomial over Q(i).  Terms are kept sorted descending, so
// terms.front() is the highest term of a homogeneous polynomial.
class Polynomial {
public:
    struct Term {
        Monomial m;
        GaussianRational c;
    };

    Polynomial() = default;
    explicit Polynomial(int nvars) : nv_(nvars) {}

    static Polynomial constant(int nvars, GaussianRational c);
    static Polynomial variable(int nvars, int idx);
    static Polynomial monomial(Monomial m, GaussianRational c);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree of the leading term; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg(); }

    GaussianRational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial mul_term(const Monomial& m, const GaussianRational& c) const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial substituted(int var_idx, const Polynomial& rhs) const;
    Polynomial derivative(int var_idx) const;
    GaussianRational eval(const std::vector<GaussianRational>& point) const;
    int degree_in(int var_idx) const;

    // Builds directly from unsorted term data; combines duplicates.
    static Polynomial collect(int nvars, std::vector<Term> raw);

    std::string str(const Ctx& ctx) const;

private:
    int nv_ = 0;
    std::vector<Term> terms_;
};

// Shared multidegree of a multihomogeneous polynomial; NonHomogeneous when
// terms disagree, ZeroPolynomial for 0 (the zero polynomial has every
// multidegree, so none is reported).
MultiDegree mdeg(const Polynomial& f, const Ctx& ctx);
MultiDegree mdeg_of_monomial(const Monomial& m, const Ctx& ctx);
bool is_multihomogeneous(const Polynomial& f, const Ctx& ctx);

// Highest term under the graded order; requires a single total degree.
Monomial hterm(const Polynomial& f);

} // namespace skewinv
