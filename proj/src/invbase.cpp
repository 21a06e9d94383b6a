#include "skewinv/invbase.hpp"

#include <algorithm>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

bool fits(const MultiDegree& a, const MultiDegree& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (size_t k = 0; k < a.size(); ++k) r.t[k] -= b[k];
    return r;
}

bool atom_label_less(const Invariant& a, const Invariant& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.word < b.word;
}

// Nonzero sigma_t(B) atoms, B primitive, with formal multidegree fitting
// inside target; sorted by (t, word).
std::vector<Invariant> collect_atoms(InvariantOracle& oracle, const MultiDegree& target) {
    const Ctx& ctx = oracle.ctx();
    std::vector<Invariant> atoms;
    int total = target.total();
    for (const auto& cls : enumerate_words(ctx.d, total, true)) {
        MultiDegree cnt = invariant_mdeg(ctx, 1, cls.representative);
        if (!fits(cnt, target)) continue;
        for (int t = 1; t <= ctx.n; ++t) {
            MultiDegree amd = invariant_mdeg(ctx, t, cls.representative);
            if (amd.total() > total) break;
            if (!fits(amd, target)) continue;
            const Polynomial& val = oracle.sigma(t, cls.representative);
            if (val.is_zero()) continue;
            Invariant inv;
            inv.t = t;
            inv.word = cls.representative;
            inv.value = val;
            inv.mdeg = amd;
            inv.label = invariant_label(t, cls.representative);
            atoms.push_back(std::move(inv));
        }
    }
    std::sort(atoms.begin(), atoms.end(), atom_label_less);
    return atoms;
}

void enumerate_products(const std::vector<Invariant>& atoms, int start,
                        const MultiDegree& remaining, std::vector<int>& picked,
                        const Polynomial& partial, std::vector<ProductRow>& out) {
    if (remaining.total() == 0) {
        if (!picked.empty()) {
            ProductRow row;
            row.atoms = picked;
            row.value = partial;
            for (size_t k = 0; k < picked.size(); ++k) {
                if (k) row.source += " * ";
                row.source += atoms[picked[k]].label;
            }
            out.push_back(std::move(row));
        }
        return;
    }
    for (int j = start; j < static_cast<int>(atoms.size()); ++j) {
        if (!fits(atoms[j].mdeg, remaining)) continue;
        picked.push_back(j);
        enumerate_products(atoms, j, minus(remaining, atoms[j].mdeg), picked,
                           partial * atoms[j].value, out);
        picked.pop_back();
    }
}

std::vector<Polynomial> row_values(const std::vector<ProductRow>& rows, bool decomposable_only) {
    std::vector<Polynomial> vals;
    for (const auto& r : rows)
        if (!decomposable_only || r.atoms.size() >= 2) vals.push_back(r.value);
    return vals;
}

int span_rank(const std::vector<Polynomial>& vals, const SpanOptions& opts) {
    if (vals.empty()) return 0;
    if (opts.backend == Backend::Modular) {
        RankOptions ro;
        ro.backend = Backend::Modular;
        ro.prime = opts.prime;
        ro.parallel = opts.parallel;
        return rank_and_basis(CoeffMatrix(vals), ro).rank;
    }
    return exact_rank(vals, opts.parallel);
}

void check_mdeg_arity(const MultiDegree& mdeg, int d, int bound) {
    if (mdeg.size() != static_cast<size_t>(d)) {
        fail(ErrorKind::Usage, "multidegree arity does not match d");
    }
    for (size_t k = 0; k < mdeg.size(); ++k)
        if (mdeg[k] < 0) fail(ErrorKind::Usage, "negative multidegree entry");
    if (mdeg.total() > bound)
        fail(ErrorKind::DegreeBoundExceeded,
             "total degree " + std::to_string(mdeg.total()) + " exceeds bound " +
                 std::to_string(bound));
}

// All multidegrees with given arity and total degree 1..bound, graded-lex.
std::vector<MultiDegree> all_multidegrees(int d, int bound) {
    std::vector<MultiDegree> out;
    MultiDegree cur;
    cur.t.assign(d, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d - 1) {
            cur.t[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.t[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    for (int total = 1; total <= bound; ++total) rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const Polynomial& InvariantOracle::sigma(int t, const Word& w) {
    if (t < 1 || t > ctx_.n) fail(ErrorKind::BadT, "sigma index out of range");
    auto key = std::make_pair(t, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Polynomial val =
        t == 1 ? cache_.trace(w) : sigma_of_matrix(cache_.product(w), t);
    return memo_.emplace(std::move(key), std::move(val)).first->second;
}

GradedComponent invariant_span(InvariantOracle& oracle, const MultiDegree& mdeg,
                               const SpanOptions& opts) {
    const Ctx& ctx = oracle.ctx();
    check_mdeg_arity(mdeg, ctx.d, opts.degree_bound);
    GradedComponent comp;
    comp.n = ctx.n;
    comp.d = ctx.d;
    comp.mdeg = mdeg;
    comp.atoms = collect_atoms(oracle, mdeg);
    std::vector<int> picked;
    enumerate_products(comp.atoms, 0, mdeg, picked,
                       Polynomial::constant(ctx.nvars(), GaussianRational(1)), comp.rows);
    comp.dimension = span_rank(row_values(comp.rows, false), opts);
    comp.decomposable_dimension = span_rank(row_values(comp.rows, true), opts);
    return comp;
}

GradedComponent invariant_span(int n, int d, const MultiDegree& mdeg, const SpanOptions& opts) {
    InvariantOracle oracle(Ctx{n, d});
    return invariant_span(oracle, mdeg, opts);
}

std::optional<DecompositionCertificate> is_decomposable(InvariantOracle& oracle,
                                                        const Invariant& inv,
                                                        const SpanOptions& opts) {
    const Ctx& ctx = oracle.ctx();
    if (!inv.value.is_zero() && mdeg(inv.value, ctx) != inv.mdeg)
        fail(ErrorKind::Usage, "invariant value does not match its declared multidegree");
    check_mdeg_arity(inv.mdeg, ctx.d, opts.degree_bound);

    DecompositionCertificate cert;
    cert.n = ctx.n;
    cert.d = ctx.d;
    cert.target = inv;
    if (inv.value.is_zero()) return cert; // zero decomposes with the empty combination

    GradedComponent comp = invariant_span(oracle, inv.mdeg, opts);
    std::vector<Polynomial> basis;
    std::vector<const ProductRow*> decomp_rows;
    for (const auto& r : comp.rows) {
        if (r.atoms.size() < 2) continue;
        basis.push_back(r.value);
        decomp_rows.push_back(&r);
    }
    auto sol = solve_in_span(basis, inv.value, opts.parallel);
    if (!sol) return std::nullopt;
    for (size_t k = 0; k < sol->size(); ++k) {
        if ((*sol)[k].is_zero()) continue;
        DecompositionCertificate::Piece piece;
        piece.coeff = (*sol)[k];
        for (int idx : decomp_rows[k]->atoms) piece.factors.push_back(comp.atoms[idx]);
        cert.combination.push_back(std::move(piece));
    }
    return cert;
}

std::optional<DecompositionCertificate> is_decomposable(const Invariant& inv, int n, int d,
                                                        const SpanOptions& opts) {
    InvariantOracle oracle(Ctx{n, d});
    return is_decomposable(oracle, inv, opts);
}

bool replay_decomposition(const DecompositionCertificate& cert, const Polynomial& target) {
    Ctx ctx{cert.n, cert.d};
    InvariantOracle oracle(ctx);
    Polynomial acc(ctx.nvars());
    for (const auto& piece : cert.combination) {
        Polynomial term = Polynomial::constant(ctx.nvars(), piece.coeff);
        for (const auto& f : piece.factors) {
            if (f.mdeg.total() >= cert.target.mdeg.total()) return false;
            term = term * oracle.sigma(f.t, f.word);
        }
        acc += term;
    }
    return acc == target;
}

bool replay_decomposition(const DecompositionCertificate& cert) {
    InvariantOracle oracle(Ctx{cert.n, cert.d});
    return replay_decomposition(cert, oracle.sigma(cert.target.t, cert.target.word));
}

int GeneratorReport::total_new() const {
    int sum = 0;
    for (const auto& e : entries) sum += e.new_generators;
    return sum;
}

GeneratorReport minimal_generators(int n, int d, int max_total_degree, const SpanOptions& opts) {
    if (n < 2 || n > 5) fail(ErrorKind::Usage, "supported sizes are 2 <= n <= 5");
    if (max_total_degree > opts.degree_bound)
        fail(ErrorKind::DegreeBoundExceeded, "requested degree exceeds configured bound");
    InvariantOracle oracle(Ctx{n, d});
    GeneratorReport report;
    report.n = n;
    report.d = d;
    report.bound = max_total_degree;
    for (const MultiDegree& md : all_multidegrees(d, max_total_degree)) {
        GradedComponent comp = invariant_span(oracle, md, opts);
        GeneratorEntry entry;
        entry.mdeg = md;
        entry.dimension = comp.dimension;
        entry.new_generators = comp.dimension - comp.decomposable_dimension;
        if (entry.new_generators > 0) {
            // greedy in (t, word) order: keep atoms at this exact multidegree
            // that grow the span beyond the decomposable part
            std::vector<Polynomial> span = row_values(comp.rows, true);
            int rank = exact_rank(span, opts.parallel);
            for (const auto& atom : comp.atoms) {
                if (static_cast<int>(entry.representatives.size()) == entry.new_generators)
                    break;
                if (atom.mdeg != md) continue;
                span.push_back(atom.value);
                int grown = exact_rank(span, opts.parallel);
                if (grown > rank) {
                    rank = grown;
                    entry.representatives.push_back(atom.label);
                } else {
                    span.pop_back();
                }
            }
        }
        if (entry.dimension > 0) report.entries.push_back(std::move(entry));
    }
    return report;
}

GenerationCheck verify_generation(const std::vector<Invariant>& candidates, int n, int d,
                                  int max_total_degree, const SpanOptions& opts) {
    if (max_total_degree > opts.degree_bound)
        fail(ErrorKind::DegreeBoundExceeded, "requested degree exceeds configured bound");
    Ctx ctx{n, d};
    InvariantOracle oracle(ctx);
    std::vector<Invariant> cands = candidates;
    for (auto& c : cands) {
        if (c.value.nvars() != ctx.nvars())
            fail(ErrorKind::SizeMismatch, "candidate over a different variable universe");
        if (!c.value.is_zero() && !is_multihomogeneous(c.value, ctx))
            fail(ErrorKind::NonHomogeneous, "candidate is not multihomogeneous");
    }
    std::sort(cands.begin(), cands.end(), atom_label_less);

    GenerationCheck check;
    check.bound = max_total_degree;
    for (const MultiDegree& md : all_multidegrees(d, max_total_degree)) {
        GradedComponent comp = invariant_span(oracle, md, opts);
        if (comp.dimension == 0) continue;
        std::vector<ProductRow> rows;
        std::vector<int> picked;
        enumerate_products(cands, 0, md, picked,
                           Polynomial::constant(ctx.nvars(), GaussianRational(1)), rows);
        int have = exact_rank(row_values(rows, false), opts.parallel);
        if (have < comp.dimension) {
            check.ok = false;
            check.failing = md;
            check.message = "candidates span dimension " + std::to_string(have) + " of " +
                            std::to_string(comp.dimension) + " at multidegree " + md.str();
            return check;
        }
    }
    check.ok = true;
    check.message = "candidates generate every component up to total degree " +
                    std::to_string(max_total_degree);
    return check;
}

int linear_rank(const std::vector<Invariant>& invs, bool parallel) {
    if (invs.empty()) return 0;
    const MultiDegree& md = invs.front().mdeg;
    for (const auto& inv : invs)
        if (inv.mdeg != md)
            fail(ErrorKind::MixedMultidegree, "invariants span different multidegrees");
    std::vector<Polynomial> vals;
    for (const auto& inv : invs) vals.push_back(inv.value);
    return exact_rank(vals, parallel);
}

} // namespace skewinv
