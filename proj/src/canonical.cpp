#include "skewinv/canonical.hpp"

#include <sstream>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

void require_positive(int p, const char* what) {
    if (p < 1) {
        fail(ErrorKind::BadSize, std::string(what) + " needs p >= 1, got " + std::to_string(p));
    }
}

const GaussianRational& one_half() {
    static const GaussianRational h(Rational(1, 2));
    return h;
}

} // namespace

NumMat block_A(int p) {
    require_positive(p, "block_A");
    NumMat m(p, gr_zero());
    for (int i = 0; i + 1 < p; ++i) {
        m.at(i, i + 1) = GaussianRational(1);
        m.at(i + 1, i) = GaussianRational(-1);
    }
    return m;
}

NumMat block_B(int p) {
    require_positive(p, "block_B");
    NumMat m(p, gr_zero());
    // 1-based rule row+col in {p, p+2}: two anti-diagonals of p-1 ones each.
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            int s = i + j + 2;
            if (s == p || s == p + 2) m.at(i, j) = GaussianRational(1);
        }
    }
    return m;
}

NumMat block_C(int p) {
    require_positive(p, "block_C");
    NumMat m(p, gr_zero());
    for (int i = 0; i < p; ++i) m.at(i, p - 1 - i) = GaussianRational(1);
    return m;
}

int BlockSpec::size() const {
    switch (kind) {
        case BlockKind::KEven: return 2 * p;
        case BlockKind::KOdd: return 2 * p + 1;
        case BlockKind::Zero: return p;
    }
    return 0;
}

BlockSpec k_even(int p, const GaussianRational& mu) { return BlockSpec{BlockKind::KEven, p, mu}; }
BlockSpec k_odd(int p) { return BlockSpec{BlockKind::KOdd, p, GaussianRational()}; }
BlockSpec zero_block(int p) { return BlockSpec{BlockKind::Zero, p, GaussianRational()}; }

NumMat build_block(const BlockSpec& spec) {
    require_positive(spec.p, "build_block");
    const int p = spec.p;
    const GaussianRational half = one_half();

    if (spec.kind == BlockKind::Zero) return NumMat(p, gr_zero());

    const NumMat a = block_A(p);
    const NumMat b = block_B(p);

    if (spec.kind == BlockKind::KEven) {
        // 1/2 [[A, D], [-D, -A]] with D = i B + 2 mu C; D is symmetric, so the
        // result is skew.
        NumMat d = b.scaled(gr_i());
        const NumMat c = block_C(p);
        const GaussianRational two_mu = GaussianRational(2) * spec.mu;
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < p; ++j) d.at(i, j) += two_mu * c.at(i, j);
        }
        NumMat m(2 * p, gr_zero());
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < p; ++j) {
                m.at(i, j) = half * a.at(i, j);
                m.at(i, p + j) = half * d.at(i, j);
                m.at(p + i, j) = -half * d.at(i, j);
                m.at(p + i, p + j) = -half * a.at(i, j);
            }
        }
        return m;
    }

    // KOdd(p), size 2p+1: rows 0..p-1 = [A | v | iB], row p = [v' | 0 | u'],
    // rows p+1..2p = [-iB | u | -A], all halved.  The border vectors carry
    // 1+i at the bottom of column p (v), -1-i at the end of row p's left part
    // (v'), -1+i at the start of row p's right part (u'), and 1-i at the top
    // of column p below the middle (u).
    const GaussianRational one_plus_i(Rational(1), Rational(1));
    const GaussianRational one_minus_i(Rational(1), Rational(-1));
    NumMat m(2 * p + 1, gr_zero());
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            m.at(i, j) = half * a.at(i, j);
            m.at(i, p + 1 + j) = half * gr_i() * b.at(i, j);
            m.at(p + 1 + i, j) = -half * gr_i() * b.at(i, j);
            m.at(p + 1 + i, p + 1 + j) = -half * a.at(i, j);
        }
    }
    m.at(p - 1, p) = half * one_plus_i;
    m.at(p, p - 1) = -half * one_plus_i;
    m.at(p, p + 1) = -half * one_minus_i;
    m.at(p + 1, p) = half * one_minus_i;
    return m;
}

CanonicalMatrix direct_sum(const std::vector<BlockSpec>& blocks) {
    if (blocks.empty()) fail(ErrorKind::Usage, "direct_sum needs at least one block");
    int n = 0;
    std::vector<NumMat> parts;
    parts.reserve(blocks.size());
    for (const BlockSpec& spec : blocks) {
        parts.push_back(build_block(spec));
        n += parts.back().n();
    }
    NumMat m(n, gr_zero());
    int off = 0;
    for (const NumMat& part : parts) {
        for (int i = 0; i < part.n(); ++i) {
            for (int j = 0; j < part.n(); ++j) m.at(off + i, off + j) = part.at(i, j);
        }
        off += part.n();
    }
    return CanonicalMatrix{blocks, std::move(m)};
}

std::vector<CanonicalMatrix> nilpotent_representatives(int n) {
    switch (n) {
        case 3:
            return {direct_sum({k_odd(1)})};
        case 4:
            return {direct_sum({k_odd(1), zero_block(1)}), direct_sum({k_even(2)})};
        case 5:
            return {direct_sum({k_odd(1), zero_block(2)}),
                    direct_sum({k_even(2), zero_block(1)}),
                    direct_sum({k_odd(2)})};
        default:
            fail(ErrorKind::UnsupportedSize,
                 "nilpotent representatives are classified for n in {3, 4, 5}, got " +
                     std::to_string(n));
    }
}

std::string blockspec_str(const BlockSpec& spec) {
    switch (spec.kind) {
        case BlockKind::KEven:
            return "K" + std::to_string(2 * spec.p) + ":mu=" + gr_to_string(spec.mu);
        case BlockKind::KOdd:
            return "K" + std::to_string(2 * spec.p + 1);
        case BlockKind::Zero:
            return "0:" + std::to_string(spec.p);
    }
    return {};
}

BlockSpec blockspec_parse(const std::string& token) {
    if (token.empty()) fail(ErrorKind::Usage, "empty block token");

    auto parse_int = [&](const std::string& text, const char* what) {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            fail(ErrorKind::Usage, std::string("bad ") + what + " in block token '" + token + "'");
        }
        long v = 0;
        try {
            v = std::stol(text);
        } catch (const std::exception&) {
            fail(ErrorKind::Usage, std::string("bad ") + what + " in block token '" + token + "'");
        }
        return static_cast<int>(v);
    };

    if (token[0] == 'K') {
        std::string body = token.substr(1);
        GaussianRational mu;
        auto colon = body.find(':');
        if (colon != std::string::npos) {
            std::string suffix = body.substr(colon + 1);
            body = body.substr(0, colon);
            if (suffix.rfind("mu=", 0) != 0) {
                fail(ErrorKind::Usage, "expected 'mu=<scalar>' after ':' in '" + token + "'");
            }
            mu = gr_from_string(suffix.substr(3));
        }
        int size = parse_int(body, "size");
        if (size < 2) fail(ErrorKind::BadSize, "K block needs size >= 2, got '" + token + "'");
        if (size % 2 == 0) return k_even(size / 2, mu);
        if (colon != std::string::npos) {
            fail(ErrorKind::Usage, "odd K blocks take no mu parameter: '" + token + "'");
        }
        return k_odd((size - 1) / 2);
    }

    if (token[0] == '0' && token.size() >= 2 && token[1] == ':') {
        int p = parse_int(token.substr(2), "size");
        if (p < 1) fail(ErrorKind::BadSize, "zero block needs p >= 1, got '" + token + "'");
        return zero_block(p);
    }

    fail(ErrorKind::Usage, "unrecognized block token '" + token + "'");
}

std::string blocks_str(const std::vector<BlockSpec>& blocks) {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ';';
        out += blockspec_str(blocks[i]);
    }
    return out;
}

std::vector<BlockSpec> blocks_parse(const std::string& text) {
    std::vector<BlockSpec> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ';')) out.push_back(blockspec_parse(token));
    if (out.empty()) fail(ErrorKind::Usage, "empty block list");
    return out;
}

} // namespace skewinv
