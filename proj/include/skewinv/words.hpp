#pragma once

#include <string>
#include <vector>

namespace skewinv {

// Letters are 1-based matrix indices; a word spells the product Y_{i1}...Y_{is}.
using Word = std::vector<int>;

std::string word_str(const Word& w);
Word word_parse(const std::string& s);

bool is_primitive(const Word& w);

// rep is the lexicographic minimum over all cyclic shifts of w and of
// reversed w.  trace_sign relates tr(w) = trace_sign * tr(rep); it is +1 when
// a cyclic shift alone reaches rep and (-1)^s when only reversal does.
// sigma_sign(t) = (-1)^(t*s) in the reversal-only case, +1 otherwise.
struct CanonicalWord {
    Word rep;
    int trace_sign = 1;
    bool reversal_used = false;
    int length = 0;

    int sigma_sign(int t) const {
        if (!reversal_used) return 1;
        return (t * length) % 2 == 0 ? 1 : -1;
    }
};

CanonicalWord canonical_rep(const Word& w);

// True when reversed w is a cyclic shift of w; for odd length this forces
// tr(w) = 0 via tr(w) = (-1)^s tr(reversed w).
bool reversal_in_cyclic_class(const Word& w);

struct WordClass {
    Word representative;
    std::vector<Word> members;
    int length_parity = 0; // s mod 2, the reversal sign rule
};

// One class per orbit under cyclic shift + reversal, covering every word of
// length 1..max_len over {1..d}; ordered by (length, representative).
std::vector<WordClass> enumerate_words(int d, int max_len, bool primitive_only);

} // namespace skewinv
