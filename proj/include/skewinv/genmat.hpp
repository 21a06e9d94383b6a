#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "skewinv/matrix.hpp"
#include "skewinv/polynomial.hpp"
#include "skewinv/variables.hpp"
#include "skewinv/words.hpp"

namespace skewinv {

using PolyMat = Mat<Polynomial>;
using NumMat = Mat<GaussianRational>;

// Generic skew matrix Y_k: x_ij(k) above the diagonal, negated below, zero diagonal.
PolyMat generic_skew(const Ctx& ctx, int k);

// Row-major strict-upper-triangle fill; derives n from the value count.
NumMat skew_from_upper(const std::vector<GaussianRational>& upper);
PolyMat skew_from_upper_poly(int nvars, const std::vector<Polynomial>& upper);

bool is_skew(const NumMat& m);

PolyMat identity_poly(const Ctx& ctx);
NumMat identity_num(int n);

// Memoizing product engine for words in the generic matrices of one context.
// Products of length <= kMemoLen are cached; longer words are folded from halves.
class WordProductCache {
public:
    static constexpr int kMemoLen = 4;

    explicit WordProductCache(const Ctx& ctx) : ctx_(ctx) {}

    const Ctx& ctx() const { return ctx_; }
    PolyMat product(const Word& w);
    // Trace via the split tr(UV) = sum_{i,j} U[i][j] V[j][i]; avoids forming UV.
    Polynomial trace(const Word& w);

private:
    Ctx ctx_;
    std::unordered_map<std::string, PolyMat> memo_;
};

PolyMat word_product(const Ctx& ctx, const Word& w);
NumMat word_product_at(const std::vector<NumMat>& mats, const Word& w);

// Shortcuts to zero, without multiplying, for odd-length words whose reversal
// is a cyclic shift of the word itself.
Polynomial trace_word(const Ctx& ctx, const Word& w);

// sigma_t = coefficient of lambda^{n-t} in det(M + lambda E), via Faddeev-LeVerrier.
Polynomial sigma_word(const Ctx& ctx, int t, const Word& w);
// All of sigma_0..sigma_n of an explicit matrix in one sweep.
std::vector<Polynomial> sigma_all(const PolyMat& m);
std::vector<GaussianRational> sigma_all_num(const NumMat& m);
Polynomial sigma_of_matrix(const PolyMat& m, int t);
GaussianRational sigma_of_matrix_num(const NumMat& m, int t);

// One named invariant sigma_t(word product); t = 1 encodes a plain trace.
struct Invariant {
    int t = 1;
    Word word;
    Polynomial value{0};
    MultiDegree mdeg;
    std::string label;
};

Invariant make_invariant(const Ctx& ctx, int t, const Word& w);
std::string invariant_label(int t, const Word& w);
MultiDegree invariant_mdeg(const Ctx& ctx, int t, const Word& w);

// Numeric substitution target: d skew matrices of one size.
struct Assignment {
    int n = 0;
    int d = 0;
    std::vector<NumMat> mats;
};

Assignment make_assignment(std::vector<NumMat> mats);

GaussianRational evaluate(const Ctx& ctx, const Polynomial& f, const Assignment& a);
GaussianRational evaluate(const Ctx& ctx, const Invariant& inv, const Assignment& a);
// Same invariant computed on the numeric word product directly.
GaussianRational evaluate_direct(const Ctx& ctx, const Invariant& inv, const Assignment& a);

// sum_{i=0}^{n} U^{n-i} sigma_i(U) for the generic skew U; zero when the
// unsigned characteristic-polynomial identity holds (odd sigma_i vanish).
PolyMat cayley_hamilton_residual(int n);

} // namespace skewinv
