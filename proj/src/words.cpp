#include "skewinv/words.hpp"

#include <algorithm>
#include <map>

#include "skewinv/errors.hpp"

namespace skewinv {

std::string word_str(const Word& w) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

Word word_parse(const std::string& s) {
    Word w;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) fail(ErrorKind::Usage, "empty word letter in '" + s + "'");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') fail(ErrorKind::Usage, "bad word letter '" + tok + "'");
            v = v * 10 + (c - '0');
        }
        if (v < 1) fail(ErrorKind::Usage, "word letters are 1-based");
        w.push_back(v);
        pos = next + 1;
    }
    if (w.empty()) fail(ErrorKind::Usage, "empty word");
    return w;
}

bool is_primitive(const Word& w) {
    int s = static_cast<int>(w.size());
    for (int p = 1; p < s; ++p) {
        if (s % p != 0) continue;
        bool periodic = true;
        for (int k = p; k < s && periodic; ++k) periodic = w[k] == w[k - p];
        if (periodic) return false;
    }
    return true;
}

namespace {

Word min_cyclic_shift(const Word& w) {
    Word best = w;
    Word cur = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

} // namespace

CanonicalWord canonical_rep(const Word& w) {
    CanonicalWord out;
    out.length = static_cast<int>(w.size());
    Word fwd = min_cyclic_shift(w);
    Word rev(w.rbegin(), w.rend());
    Word bwd = min_cyclic_shift(rev);
    if (fwd <= bwd) {
        out.rep = fwd;
        out.trace_sign = 1;
        out.reversal_used = false;
    } else {
        out.rep = bwd;
        out.reversal_used = true;
        out.trace_sign = out.length % 2 == 0 ? 1 : -1;
    }
    return out;
}

bool reversal_in_cyclic_class(const Word& w) {
    Word rev(w.rbegin(), w.rend());
    return min_cyclic_shift(rev) == min_cyclic_shift(w);
}

std::vector<WordClass> enumerate_words(int d, int max_len, bool primitive_only) {
    std::vector<WordClass> out;
    for (int len = 1; len <= max_len; ++len) {
        std::map<Word, std::vector<Word>> classes;
        Word w(len, 1);
        for (;;) {
            if (!primitive_only || is_primitive(w)) classes[canonical_rep(w).rep].push_back(w);
            int pos = len - 1;
            while (pos >= 0 && w[pos] == d) w[pos--] = 1;
            if (pos < 0) break;
            ++w[pos];
        }
        for (auto& [rep, members] : classes)
            out.push_back({rep, std::move(members), len % 2});
    }
    return out;
}

} // namespace skewinv
