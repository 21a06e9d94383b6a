#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewinv/genmat.hpp"
#include "skewinv/linalg.hpp"

namespace skewinv {

// Memoized trace / sigma polynomials for one (n, d) context.
class InvariantOracle {
public:
    explicit InvariantOracle(const Ctx& ctx) : ctx_(ctx), cache_(ctx) {}

    const Ctx& ctx() const { return ctx_; }
    const Polynomial& sigma(int t, const Word& w);

private:
    Ctx ctx_;
    WordProductCache cache_;
    std::map<std::pair<int, Word>, Polynomial> memo_;
};

struct SpanOptions {
    int degree_bound = 8;
    bool parallel = true;
    // Dimension rank checks may run modular (certified lower bound); the
    // decomposition solve always stays exact.
    Backend backend = Backend::Exact;
    long prime = 1000003;
};

// One product of generating atoms sigma_t(B), B a primitive word class.
struct ProductRow {
    std::vector<int> atoms;  // non-decreasing indices into GradedComponent::atoms
    Polynomial value;
    std::string source;      // e.g. "tr(Y1 Y2) * s2(Y1)"
};

struct GradedComponent {
    int n = 0;
    int d = 0;
    MultiDegree mdeg;
    std::vector<Invariant> atoms; // nonzero sigma_t(B) with formal mdeg <= mdeg
    std::vector<ProductRow> rows; // every atom product landing exactly at mdeg
    int dimension = 0;            // rank of all rows
    int decomposable_dimension = 0; // rank of rows with >= 2 factors
};

// F-span of all products of sigma_t(B) atoms (B primitive) landing at mdeg.
GradedComponent invariant_span(int n, int d, const MultiDegree& mdeg,
                               const SpanOptions& opts = {});
GradedComponent invariant_span(InvariantOracle& oracle, const MultiDegree& mdeg,
                               const SpanOptions& opts = {});

struct DecompositionCertificate {
    int n = 0;
    int d = 0;
    Invariant target;
    struct Piece {
        GaussianRational coeff;
        std::vector<Invariant> factors; // each of strictly lower total degree
    };
    std::vector<Piece> combination;
};

// Certificate iff the invariant is a combination of products of >= 2 atoms,
// i.e. a polynomial in invariants of strictly lower degree.
std::optional<DecompositionCertificate> is_decomposable(const Invariant& inv, int n, int d,
                                                        const SpanOptions& opts = {});
std::optional<DecompositionCertificate> is_decomposable(InvariantOracle& oracle,
                                                        const Invariant& inv,
                                                        const SpanOptions& opts = {});

// Recomputes every factor from its (t, word) label and checks the expansion
// reproduces the target polynomial exactly.  The one-argument form recomputes
// the target from its own (t, word); the two-argument form takes the target
// value directly, for targets that are combinations rather than single words.
bool replay_decomposition(const DecompositionCertificate& cert);
bool replay_decomposition(const DecompositionCertificate& cert, const Polynomial& target);

struct GeneratorEntry {
    MultiDegree mdeg;
    int dimension = 0;
    int new_generators = 0;
    std::vector<std::string> representatives; // atom labels, (t, word)-least first
};

struct GeneratorReport {
    int n = 0;
    int d = 0;
    int bound = 0;
    std::vector<GeneratorEntry> entries; // graded-lex order of mdeg
    int total_new() const;
};

GeneratorReport minimal_generators(int n, int d, int max_total_degree,
                                   const SpanOptions& opts = {});

struct GenerationCheck {
    bool ok = false;
    int bound = 0;
    std::optional<MultiDegree> failing;
    std::string message;
};

// True iff products of the candidates span every graded component up to the
// bound; degree-bounded statement only.
GenerationCheck verify_generation(const std::vector<Invariant>& candidates, int n, int d,
                                  int max_total_degree, const SpanOptions& opts = {});

// Rank of the coefficient vectors of invariants sharing one multidegree.
int linear_rank(const std::vector<Invariant>& invs, bool parallel = true);

} // namespace skewinv
