#include "skewinv/genmat.hpp"

#include <utility>

namespace skewinv {

namespace {

int size_from_upper_count(size_t count) {
    for (int n = 2; n <= 16; ++n)
        if (static_cast<size_t>(n) * (n - 1) / 2 == count) return n;
    fail(ErrorKind::BadLength, "upper-triangle value count " + std::to_string(count) +
                                   " matches no matrix size");
}

GaussianRational div_int(const GaussianRational& a, int k) {
    return a * GaussianRational(Rational(1, k));
}

Polynomial div_int(const Polynomial& a, int k) {
    return a.scaled(GaussianRational(Rational(1, k)));
}

template <typename T>
std::vector<T> sigma_upto_impl(const Mat<T>& m, const T& one, int tmax) {
    const int n = m.n();
    std::vector<T> sig;
    sig.reserve(tmax + 1);
    sig.push_back(one);
    Mat<T> mk = m;
    T ck = div_int(-mk.trace(), 1);
    int parity = -1; // (-1)^t for t = 1
    sig.push_back(parity == 1 ? ck : -ck);
    for (int k = 1; k < tmax; ++k) {
        Mat<T> shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
        mk = m * shifted;
        ck = div_int(-mk.trace(), k + 1);
        parity = -parity;
        sig.push_back(parity == 1 ? ck : -ck);
    }
    return sig;
}

template <typename T>
std::vector<T> sigma_all_impl(const Mat<T>& m, const T& one) {
    return sigma_upto_impl(m, one, m.n());
}

} // namespace

PolyMat generic_skew(const Ctx& ctx, int k) {
    if (k < 1 || k > ctx.d) fail(ErrorKind::Usage, "matrix index out of range");
    PolyMat m(ctx.n, Polynomial(ctx.nvars()));
    for (int i = 1; i < ctx.n; ++i)
        for (int j = i + 1; j <= ctx.n; ++j) {
            Polynomial x = Polynomial::variable(ctx.nvars(), ctx.var_index(i, j, k));
            m.at(i - 1, j - 1) = x;
            m.at(j - 1, i - 1) = -x;
        }
    return m;
}

NumMat skew_from_upper(const std::vector<GaussianRational>& upper) {
    int n = size_from_upper_count(upper.size());
    NumMat m(n, gr_zero());
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = upper[idx];
            m.at(j, i) = -upper[idx];
            ++idx;
        }
    return m;
}

PolyMat skew_from_upper_poly(int nvars, const std::vector<Polynomial>& upper) {
    int n = size_from_upper_count(upper.size());
    PolyMat m(n, Polynomial(nvars));
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (upper[idx].nvars() != nvars)
                fail(ErrorKind::SizeMismatch, "upper entry variable count mismatch");
            m.at(i, j) = upper[idx];
            m.at(j, i) = -upper[idx];
            ++idx;
        }
    return m;
}

bool is_skew(const NumMat& m) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (!(m.at(i, j) + m.at(j, i)).is_zero()) return false;
    return true;
}

PolyMat identity_poly(const Ctx& ctx) {
    PolyMat e(ctx.n, Polynomial(ctx.nvars()));
    for (int i = 0; i < ctx.n; ++i) e.at(i, i) = Polynomial::constant(ctx.nvars(), GaussianRational(1));
    return e;
}

NumMat identity_num(int n) {
    NumMat e(n, gr_zero());
    for (int i = 0; i < n; ++i) e.at(i, i) = GaussianRational(1);
    return e;
}

PolyMat WordProductCache::product(const Word& w) {
    if (w.size() == 1) return generic_skew(ctx_, w[0]);
    std::string key;
    const bool memoize = static_cast<int>(w.size()) <= kMemoLen;
    if (memoize) {
        key = word_str(w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    size_t half = w.size() / 2;
    Word lhs(w.begin(), w.begin() + half);
    Word rhs(w.begin() + half, w.end());
    PolyMat result = product(lhs) * product(rhs);
    if (memoize) memo_.emplace(std::move(key), result);
    return result;
}

Polynomial WordProductCache::trace(const Word& w) {
    // tr(w) = (-1)^s tr(reversed w): when the reversal is a cyclic shift of w
    // and s is odd, the trace is identically zero without any multiplication.
    if (w.size() % 2 == 1 && reversal_in_cyclic_class(w)) return Polynomial(ctx_.nvars());
    if (w.size() == 2) {
        PolyMat u = generic_skew(ctx_, w[0]);
        PolyMat v = generic_skew(ctx_, w[1]);
        Polynomial acc(ctx_.nvars());
        for (int i = 0; i < ctx_.n; ++i)
            for (int j = 0; j < ctx_.n; ++j) acc += u.at(i, j) * v.at(j, i);
        return acc;
    }
    size_t half = w.size() / 2;
    PolyMat u = product(Word(w.begin(), w.begin() + half));
    PolyMat v = product(Word(w.begin() + half, w.end()));
    Polynomial acc(ctx_.nvars());
    for (int i = 0; i < ctx_.n; ++i)
        for (int j = 0; j < ctx_.n; ++j) acc += u.at(i, j) * v.at(j, i);
    return acc;
}

PolyMat word_product(const Ctx& ctx, const Word& w) {
    WordProductCache cache(ctx);
    return cache.product(w);
}

NumMat word_product_at(const std::vector<NumMat>& mats, const Word& w) {
    if (mats.empty()) fail(ErrorKind::SizeMismatch, "no matrices supplied");
    NumMat acc = mats.at(0);
    bool first = true;
    for (int letter : w) {
        if (letter < 1 || letter > static_cast<int>(mats.size()))
            fail(ErrorKind::SizeMismatch, "word letter exceeds matrix count");
        const NumMat& m = mats[letter - 1];
        if (first) {
            acc = m;
            first = false;
        } else {
            acc = acc * m;
        }
    }
    return acc;
}

Polynomial trace_word(const Ctx& ctx, const Word& w) {
    WordProductCache cache(ctx);
    return cache.trace(w);
}

std::vector<Polynomial> sigma_all(const PolyMat& m) {
    return sigma_all_impl(m, Polynomial::constant(m.zero().nvars(), GaussianRational(1)));
}

std::vector<GaussianRational> sigma_all_num(const NumMat& m) {
    return sigma_all_impl(m, GaussianRational(1));
}

Polynomial sigma_of_matrix(const PolyMat& m, int t) {
    if (t < 0 || t > m.n()) fail(ErrorKind::BadT, "sigma index out of range");
    if (t == 0) return Polynomial::constant(m.zero().nvars(), GaussianRational(1));
    return sigma_upto_impl(m, Polynomial::constant(m.zero().nvars(), GaussianRational(1)), t).at(t);
}

GaussianRational sigma_of_matrix_num(const NumMat& m, int t) {
    if (t < 0 || t > m.n()) fail(ErrorKind::BadT, "sigma index out of range");
    return sigma_all_num(m).at(t);
}

Polynomial sigma_word(const Ctx& ctx, int t, const Word& w) {
    if (t < 1 || t > ctx.n) fail(ErrorKind::BadT, "sigma index out of range");
    if (t == 1) return trace_word(ctx, w);
    return sigma_of_matrix(word_product(ctx, w), t);
}

std::string invariant_label(int t, const Word& w) {
    std::string inner;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) inner += ' ';
        inner += "Y" + std::to_string(w[k]);
    }
    if (t == 1) return "tr(" + inner + ")";
    return "σ" + std::to_string(t) + "(" + inner + ")";
}

MultiDegree invariant_mdeg(const Ctx& ctx, int t, const Word& w) {
    MultiDegree md;
    md.t.assign(ctx.d, 0);
    for (int letter : w) md.t.at(letter - 1) += t;
    return md;
}

Invariant make_invariant(const Ctx& ctx, int t, const Word& w) {
    Invariant inv;
    inv.t = t;
    inv.word = w;
    inv.value = sigma_word(ctx, t, w);
    inv.mdeg = invariant_mdeg(ctx, t, w);
    inv.label = invariant_label(t, w);
    return inv;
}

Assignment make_assignment(std::vector<NumMat> mats) {
    Assignment a;
    if (mats.empty()) fail(ErrorKind::SizeMismatch, "assignment needs at least one matrix");
    a.n = mats[0].n();
    a.d = static_cast<int>(mats.size());
    for (const auto& m : mats) {
        if (m.n() != a.n) fail(ErrorKind::SizeMismatch, "assignment matrices differ in size");
        if (!is_skew(m)) fail(ErrorKind::SizeMismatch, "assignment matrix is not skew-symmetric");
    }
    a.mats = std::move(mats);
    return a;
}

GaussianRational evaluate(const Ctx& ctx, const Polynomial& f, const Assignment& a) {
    if (a.n != ctx.n || a.d < ctx.d)
        fail(ErrorKind::SizeMismatch, "assignment shape does not match context");
    if (f.nvars() != ctx.nvars())
        fail(ErrorKind::SizeMismatch, "polynomial variable count does not match context");
    std::vector<GaussianRational> point(ctx.nvars(), gr_zero());
    for (int idx = 0; idx < ctx.nvars(); ++idx) {
        Variable v = ctx.var_of_index(idx);
        point[idx] = a.mats[v.k - 1].at(v.i - 1, v.j - 1);
    }
    return f.eval(point);
}

GaussianRational evaluate(const Ctx& ctx, const Invariant& inv, const Assignment& a) {
    return evaluate(ctx, inv.value, a);
}

GaussianRational evaluate_direct(const Ctx& ctx, const Invariant& inv, const Assignment& a) {
    if (a.n != ctx.n) fail(ErrorKind::SizeMismatch, "assignment shape does not match context");
    for (int letter : inv.word)
        if (letter > a.d) fail(ErrorKind::SizeMismatch, "word letter exceeds assignment");
    NumMat m = word_product_at(a.mats, inv.word);
    if (inv.t == 1) return m.trace();
    return sigma_of_matrix_num(m, inv.t);
}

PolyMat cayley_hamilton_residual(int n) {
    if (n < 2 || n > 6) fail(ErrorKind::BadSize, "size out of supported range");
    Ctx ctx{n, 1};
    PolyMat u = generic_skew(ctx, 1);
    std::vector<Polynomial> sig = sigma_all(u);
    PolyMat acc(n, Polynomial(ctx.nvars()));
    PolyMat upow = identity_poly(ctx); // U^0
    // residual = sum_i U^{n-i} sigma_i; accumulate from the U^0 term upward.
    std::vector<PolyMat> powers;
    powers.push_back(upow);
    for (int e = 1; e <= n; ++e) powers.push_back(powers.back() * u);
    for (int i = 0; i <= n; ++i) {
        PolyMat term = powers[n - i].scaled(sig[i]);
        acc = acc + term;
    }
    return acc;
}

} // namespace skewinv
