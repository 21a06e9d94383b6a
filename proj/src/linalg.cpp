#include "skewinv/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

// row := row - f * pivot, sparse merge on sorted columns.
SparseRow row_axpy(const SparseRow& row, const GaussianRational& f, const SparseRow& pivot) {
    SparseRow out;
    out.ents.reserve(row.ents.size() + pivot.ents.size());
    size_t a = 0, b = 0;
    while (a < row.ents.size() || b < pivot.ents.size()) {
        if (b == pivot.ents.size() ||
            (a < row.ents.size() && row.ents[a].first < pivot.ents[b].first)) {
            out.ents.push_back(row.ents[a++]);
        } else if (a == row.ents.size() || pivot.ents[b].first < row.ents[a].first) {
            out.ents.emplace_back(pivot.ents[b].first, -(f * pivot.ents[b].second));
            ++b;
        } else {
            GaussianRational v = row.ents[a].second - f * pivot.ents[b].second;
            if (!v.is_zero()) out.ents.emplace_back(row.ents[a].first, v);
            ++a;
            ++b;
        }
    }
    return out;
}

const GaussianRational* row_coeff(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.ents.begin(), r.ents.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.ents.end() || it->first != col) return nullptr;
    return &it->second;
}

// ---- modular scalar: GF(p^2) as a+bi when -1 is a non-residue (p = 3 mod 4),
// ---- otherwise GF(p) with i mapped to a square root of -1.

struct ModCtx {
    uint64_t p = 0;
    bool pair_mode = true; // true: elements are (a, b) = a + b*i
    uint64_t root = 0;     // sqrt(-1) mod p in non-pair mode
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

ModCtx make_mod_ctx(long prime) {
    if (prime <= 5) fail(ErrorKind::BadPrime, "prime must exceed 5");
    if (prime >= (1L << 31)) fail(ErrorKind::BadPrime, "prime too large");
    if (!is_prime(prime)) fail(ErrorKind::BadPrime, "modulus is not prime");
    ModCtx ctx;
    ctx.p = static_cast<uint64_t>(prime);
    if (prime % 4 == 3) {
        ctx.pair_mode = true;
    } else {
        ctx.pair_mode = false;
        uint64_t g = 2;
        while (powmod(g, (ctx.p - 1) / 2, ctx.p) != ctx.p - 1) ++g;
        ctx.root = powmod(g, (ctx.p - 1) / 4, ctx.p);
    }
    return ctx;
}

struct ModVal {
    uint64_t a = 0, b = 0;
    bool is_zero() const { return a == 0 && b == 0; }
};

ModVal mod_mul(const ModVal& x, const ModVal& y, const ModCtx& c) {
    if (!c.pair_mode) return {mulmod(x.a, y.a, c.p), 0};
    uint64_t re = (mulmod(x.a, y.a, c.p) + c.p - mulmod(x.b, y.b, c.p)) % c.p;
    uint64_t im = (mulmod(x.a, y.b, c.p) + mulmod(x.b, y.a, c.p)) % c.p;
    return {re, im};
}

ModVal mod_sub(const ModVal& x, const ModVal& y, const ModCtx& c) {
    return {(x.a + c.p - y.a) % c.p, (x.b + c.p - y.b) % c.p};
}

ModVal mod_inv(const ModVal& x, const ModCtx& c) {
    if (!c.pair_mode) return {powmod(x.a, c.p - 2, c.p), 0};
    uint64_t norm = (mulmod(x.a, x.a, c.p) + mulmod(x.b, x.b, c.p)) % c.p;
    uint64_t ninv = powmod(norm, c.p - 2, c.p);
    return {mulmod(x.a, ninv, c.p), mulmod((c.p - x.b) % c.p, ninv, c.p)};
}

uint64_t reduce_rational(const Rational& q, const ModCtx& c) {
    uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), c.p);
    uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), c.p);
    if (den == 0) fail(ErrorKind::BadPrime, "prime divides a denominator");
    return mulmod(num, powmod(den, c.p - 2, c.p), c.p);
}

ModVal reduce_scalar(const GaussianRational& z, const ModCtx& c) {
    uint64_t re = reduce_rational(z.re, c);
    uint64_t im = reduce_rational(z.im, c);
    if (c.pair_mode) return {re, im};
    return {(re + mulmod(im, c.root, c.p)) % c.p, 0};
}

struct ModRow {
    std::vector<std::pair<int, ModVal>> ents;
    bool empty() const { return ents.empty(); }
};

ModRow mod_axpy(const ModRow& row, const ModVal& f, const ModRow& pivot, const ModCtx& c) {
    ModRow out;
    out.ents.reserve(row.ents.size() + pivot.ents.size());
    size_t a = 0, b = 0;
    while (a < row.ents.size() || b < pivot.ents.size()) {
        if (b == pivot.ents.size() ||
            (a < row.ents.size() && row.ents[a].first < pivot.ents[b].first)) {
            out.ents.push_back(row.ents[a++]);
        } else if (a == row.ents.size() || pivot.ents[b].first < row.ents[a].first) {
            ModVal v = mod_sub(ModVal{}, mod_mul(f, pivot.ents[b].second, c), c);
            if (!v.is_zero()) out.ents.emplace_back(pivot.ents[b].first, v);
            ++b;
        } else {
            ModVal v = mod_sub(row.ents[a].second, mod_mul(f, pivot.ents[b].second, c), c);
            if (!v.is_zero()) out.ents.emplace_back(row.ents[a].first, v);
            ++a;
            ++b;
        }
    }
    return out;
}

// Shared deterministic pivot rule: leftmost live column, then min (nnz, index).
template <typename RowT>
int pick_pivot(const std::vector<RowT>& rows, const std::vector<char>& done, int col) {
    int best = -1;
    size_t best_nnz = 0;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (done[r] || rows[r].empty() || rows[r].ents.front().first != col) continue;
        size_t nnz = rows[r].ents.size();
        if (best < 0 || nnz < best_nnz) {
            best = r;
            best_nnz = nnz;
        }
    }
    return best;
}

} // namespace

CoeffMatrix::CoeffMatrix(const std::vector<Polynomial>& polys) {
    if (polys.empty()) return;
    int nv = polys[0].nvars();
    std::map<Monomial, int, std::greater<Monomial>> cols;
    for (const auto& f : polys) {
        if (f.nvars() != nv) fail(ErrorKind::SizeMismatch, "mixed variable universes");
        for (const auto& t : f.terms()) cols.emplace(t.m, 0);
    }
    basis_.reserve(cols.size());
    for (auto& [m, id] : cols) {
        id = static_cast<int>(basis_.size());
        basis_.push_back(m);
    }
    rows_.reserve(polys.size());
    for (const auto& f : polys) {
        SparseRow r;
        r.ents.reserve(f.term_count());
        for (const auto& t : f.terms()) r.ents.emplace_back(cols.at(t.m), t.c);
        std::sort(r.ents.begin(), r.ents.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows_.push_back(std::move(r));
    }
}

RankResult eliminate_exact(std::vector<SparseRow> rows, bool parallel) {
    RankResult res;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        int col = -1;
        for (size_t r = 0; r < rows.size(); ++r)
            if (!done[r] && !rows[r].empty() && (col < 0 || rows[r].lead_col() < col))
                col = rows[r].lead_col();
        if (col < 0) break;
        int piv = pick_pivot(rows, done, col);
        done[piv] = 1;
        res.pivot_rows.push_back(piv);
        ++res.rank;
        const SparseRow pivot = rows[piv];
        const GaussianRational lead_inv = gr_inverse(pivot.ents.front().second);
        const int nrows = static_cast<int>(rows.size());
#ifdef SKEWINV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (int r = 0; r < nrows; ++r) {
            if (done[r] || rows[r].empty() || rows[r].lead_col() != col) continue;
            GaussianRational f = rows[r].ents.front().second * lead_inv;
            rows[r] = row_axpy(rows[r], f, pivot);
        }
#ifndef SKEWINV_HAVE_OPENMP
        (void)parallel;
#endif
    }
    return res;
}

RankResult eliminate_modular(const std::vector<SparseRow>& input, long prime, bool parallel) {
    ModCtx ctx = make_mod_ctx(prime);
    std::vector<ModRow> rows(input.size());
    for (size_t r = 0; r < input.size(); ++r) {
        rows[r].ents.reserve(input[r].ents.size());
        for (const auto& [col, v] : input[r].ents) {
            ModVal mv = reduce_scalar(v, ctx);
            if (!mv.is_zero()) rows[r].ents.emplace_back(col, mv);
        }
    }
    RankResult res;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        int col = -1;
        for (size_t r = 0; r < rows.size(); ++r)
            if (!done[r] && !rows[r].empty() && (col < 0 || rows[r].ents.front().first < col))
                col = rows[r].ents.front().first;
        if (col < 0) break;
        int piv = pick_pivot(rows, done, col);
        done[piv] = 1;
        res.pivot_rows.push_back(piv);
        ++res.rank;
        const ModRow pivot = rows[piv];
        const ModVal lead_inv = mod_inv(pivot.ents.front().second, ctx);
        const int nrows = static_cast<int>(rows.size());
#ifdef SKEWINV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (int r = 0; r < nrows; ++r) {
            if (done[r] || rows[r].empty() || rows[r].ents.front().first != col) continue;
            ModVal f = mod_mul(rows[r].ents.front().second, lead_inv, ctx);
            rows[r] = mod_axpy(rows[r], f, pivot, ctx);
        }
#ifndef SKEWINV_HAVE_OPENMP
        (void)parallel;
#endif
    }
    return res;
}

RankResult rank_and_basis(const CoeffMatrix& m, const RankOptions& opts) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    if (opts.backend == Backend::Modular)
        return eliminate_modular(rows, opts.prime, opts.parallel);
    return eliminate_exact(std::move(rows), opts.parallel);
}

std::optional<std::vector<GaussianRational>> solve_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target, bool parallel) {
    std::vector<Polynomial> all = basis;
    all.push_back(target);
    CoeffMatrix cm(all);
    const int nb = static_cast<int>(basis.size());

    // Echelonize the basis rows, tracking each reduced row as a combination
    // of the original rows; then reduce the target against the echelon rows.
    std::vector<SparseRow> rows;
    std::vector<std::vector<GaussianRational>> combo(nb,
                                                     std::vector<GaussianRational>(nb, gr_zero()));
    rows.reserve(nb);
    for (int r = 0; r < nb; ++r) {
        rows.push_back(cm.row(r));
        combo[r][r] = GaussianRational(1);
    }
    std::vector<char> done(rows.size(), 0);
    std::vector<int> pivots;
    for (;;) {
        int col = -1;
        for (int r = 0; r < nb; ++r)
            if (!done[r] && !rows[r].empty() && (col < 0 || rows[r].lead_col() < col))
                col = rows[r].lead_col();
        if (col < 0) break;
        int piv = pick_pivot(rows, done, col);
        done[piv] = 1;
        pivots.push_back(piv);
        const SparseRow pivot = rows[piv];
        const GaussianRational lead_inv = gr_inverse(pivot.ents.front().second);
        const int nrows = nb;
#ifdef SKEWINV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (int r = 0; r < nrows; ++r) {
            if (done[r] || rows[r].empty() || rows[r].lead_col() != col) continue;
            GaussianRational f = rows[r].ents.front().second * lead_inv;
            rows[r] = row_axpy(rows[r], f, pivot);
            for (int k = 0; k < nb; ++k) combo[r][k] -= f * combo[piv][k];
        }
#ifndef SKEWINV_HAVE_OPENMP
        (void)parallel;
#endif
    }

    SparseRow t = cm.row(nb);
    std::vector<GaussianRational> coeffs(nb, gr_zero());
    for (int piv : pivots) {
        if (t.empty()) break;
        const SparseRow& pr = rows[piv];
        const GaussianRational* c = row_coeff(t, pr.lead_col());
        if (!c) continue;
        GaussianRational f = *c * gr_inverse(pr.ents.front().second);
        t = row_axpy(t, f, pr);
        for (int k = 0; k < nb; ++k) coeffs[k] += f * combo[piv][k];
    }
    if (!t.empty()) return std::nullopt;
    return coeffs;
}

int exact_rank(const std::vector<Polynomial>& polys, bool parallel) {
    if (polys.empty()) return 0;
    CoeffMatrix cm(polys);
    std::vector<SparseRow> rows;
    rows.reserve(cm.rows());
    for (int r = 0; r < cm.rows(); ++r) rows.push_back(cm.row(r));
    return eliminate_exact(std::move(rows), parallel).rank;
}

} // namespace skewinv
