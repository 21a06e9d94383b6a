#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewinv/polynomial.hpp"

namespace skewinv {

// Sparse row over a shared monomial column basis; entries sorted by column.
struct SparseRow {
    std::vector<std::pair<int, GaussianRational>> ents;

    bool empty() const { return ents.empty(); }
    int lead_col() const { return ents.front().first; }
    size_t nnz() const { return ents.size(); }
};

// Rows of polynomial coefficients over one shared ordered monomial basis.
// Column 0 is the largest monomial in the combined support.
class CoeffMatrix {
public:
    explicit CoeffMatrix(const std::vector<Polynomial>& polys);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return static_cast<int>(basis_.size()); }
    const Monomial& col_monomial(int c) const { return basis_[c]; }
    const SparseRow& row(int r) const { return rows_[r]; }

private:
    std::vector<Monomial> basis_;
    std::vector<SparseRow> rows_;
};

enum class Backend { Exact, Modular };

struct RankOptions {
    Backend backend = Backend::Exact;
    long prime = 1000003;
    bool parallel = true;
};

struct RankResult {
    int rank = 0;
    std::vector<int> pivot_rows; // original row indices, elimination order
};

// Deterministic elimination: pivot on the leftmost unresolved column, among
// candidate rows choose minimal (nnz, row index).  The exact backend returns
// the true rank over Q(i); the modular backend a certified lower bound.
RankResult rank_and_basis(const CoeffMatrix& m, const RankOptions& opts = {});

// Exact only: coefficients c with target = sum c[i] * basis[i], if they exist.
std::optional<std::vector<GaussianRational>> solve_in_span(
    const std::vector<Polynomial>& basis, const Polynomial& target, bool parallel = true);

int exact_rank(const std::vector<Polynomial>& polys, bool parallel = true);

// Exposed for the serial-vs-parallel equivalence test and the benchmark:
// identical pivoting, row updates run either serially or under OpenMP.
RankResult eliminate_exact(std::vector<SparseRow> rows, bool parallel);
RankResult eliminate_modular(const std::vector<SparseRow>& rows, long prime, bool parallel);

} // namespace skewinv
