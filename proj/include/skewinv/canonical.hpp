#pragma once

#include <string>
#include <vector>

#include "skewinv/genmat.hpp"
#include "skewinv/scalar.hpp"

namespace skewinv {

// p x p building blocks of the canonical skew forms.
// A: (i, i+1) = 1, (i+1, i) = -1; exactly 2(p-1) nonzero entries.
NumMat block_A(int p);
// B: symmetric, ones exactly on the two anti-diagonals row+col = p and
// row+col = p+2 (1-based); exactly 2(p-1) nonzero entries (identity at p = 2,
// zero at p = 1).
NumMat block_B(int p);
// C: ones on the main anti-diagonal row+col = p+1.
NumMat block_C(int p);

enum class BlockKind { KEven, KOdd, Zero };

// One diagonal block: KEven(p, mu) has size 2p, KOdd(p) has size 2p+1,
// Zero(p) has size p.  mu is meaningful only for KEven.
struct BlockSpec {
    BlockKind kind = BlockKind::Zero;
    int p = 1;
    GaussianRational mu;

    int size() const;

    friend bool operator==(const BlockSpec& a, const BlockSpec& b) {
        return a.kind == b.kind && a.p == b.p &&
               (a.kind != BlockKind::KEven || a.mu == b.mu);
    }
    friend bool operator!=(const BlockSpec& a, const BlockSpec& b) { return !(a == b); }
};

BlockSpec k_even(int p, const GaussianRational& mu = GaussianRational());
BlockSpec k_odd(int p);
BlockSpec zero_block(int p);

// KEven(p, mu) = 1/2 [[A, iB + 2 mu C], [-(iB + 2 mu C), -A]];
// KOdd(p) bordered form of size 2p+1 with the middle row/column carrying
// 1 +- i entries; Zero(p) the p x p zero matrix.  Throws BadSize when p < 1.
NumMat build_block(const BlockSpec& spec);

struct CanonicalMatrix {
    std::vector<BlockSpec> blocks;
    NumMat matrix;
};

// Block-diagonal assembly in list order.  Throws Usage on an empty list.
CanonicalMatrix direct_sum(const std::vector<BlockSpec>& blocks);

// The complete list of canonical representatives of the nonzero n x n skew
// matrices with sigma_t = 0 for all 1 <= t <= n.  Supported for n in
// {3, 4, 5}; throws UnsupportedSize otherwise.
std::vector<CanonicalMatrix> nilpotent_representatives(int n);

// Compact grammar: "K<size>" for K blocks ("K3", "K5"; even sizes take an
// optional ":mu=<scalar>" suffix, default 0), "0:<p>" for zero blocks;
// direct sums join tokens with ";" ("K3;0:1").
std::string blockspec_str(const BlockSpec& spec);
BlockSpec blockspec_parse(const std::string& token);
std::string blocks_str(const std::vector<BlockSpec>& blocks);
std::vector<BlockSpec> blocks_parse(const std::string& text);

} // namespace skewinv
