#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewinv/genmat.hpp"
#include "skewinv/polyfrac.hpp"

namespace skewinv {

// ---------------------------------------------------------------------------
// Symbolic parameters
// ---------------------------------------------------------------------------

// Names the scalar parameters a certificate works over; the variable index in
// every attached polynomial is the position in this list.
struct SymbolTable {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;    // -1 when unknown
    int require(const std::string& name) const;  // MalformedCertificate when unknown
};

// Expression grammar over a symbol table: sums and differences of products of
// powers of {integer or integer/integer literals, the imaginary unit i,
// symbol names, parenthesized subexpressions}.
Polynomial parse_symbol_poly(const SymbolTable& table, const std::string& text);
std::string symbol_poly_str(const SymbolTable& table, const Polynomial& f);
std::string symbol_mono_str(const SymbolTable& table, const Monomial& m);

// ---------------------------------------------------------------------------
// Certificate model
// ---------------------------------------------------------------------------

// Base matrix: an explicit numeric skew matrix given by its row-major strict
// upper triangle, or a generic skew matrix of fresh symbols.
struct CertMatrix {
    bool generic = false;
    std::vector<GaussianRational> upper;  // explicit form
    std::vector<std::string> symbols;     // generic form

    friend bool operator==(const CertMatrix&, const CertMatrix&) = default;
};

// One constraint step.  Plain form eliminates symbol := num / den (den a
// monomial in symbols the branch assumes nonzero); quadratic form rewrites
// symbol^2 := num and is applied as a reduction wherever even powers appear.
// The right side may mention symbols eliminated by LATER steps (the chain is
// applied in order), never symbols eliminated at or before its own step.
struct CertSubstitution {
    std::string symbol;
    bool quadratic = false;
    Polynomial num;
    Monomial den;

    friend bool operator==(const CertSubstitution&, const CertSubstitution&) = default;
};

// Scalar building block of a claim: sigma_t of a word product, one entry of a
// word product, or the constant 1.
struct CertAtom {
    enum class Kind { Sigma, Entry, One };
    Kind kind = Kind::One;
    int t = 1;    // Sigma
    Word word;    // Sigma / Entry; letters are 1-based matrix indices
    int row = 0;  // Entry, 0-based
    int col = 0;

    friend bool operator==(const CertAtom&, const CertAtom&) = default;
};

CertAtom atom_sigma(int t, Word w);
CertAtom atom_entry(Word w, int row, int col);
CertAtom atom_one();

struct CertPolyTerm {
    Polynomial coeff;
    CertAtom atom;

    friend bool operator==(const CertPolyTerm&, const CertPolyTerm&) = default;
};

// Matrix-valued term coeff * product(word), optionally transposed.
struct CertMatTerm {
    GaussianRational coeff;
    Word word;
    bool transpose = false;

    friend bool operator==(const CertMatTerm&, const CertMatTerm&) = default;
};

struct CertClaim {
    enum class Kind { PolyZero, MatrixZero, MatrixEquals };
    Kind kind = Kind::PolyZero;
    std::string name;
    // Number of leading substitution steps in force when the claim is
    // checked; -1 means the whole chain, 0 means the raw parametrization.
    int after_step = -1;
    std::vector<CertPolyTerm> terms;  // PolyZero: sum of terms must vanish
    std::vector<CertMatTerm> lhs;     // MatrixZero / MatrixEquals: sum of terms
    // MatrixEquals: n x n of term lists; an empty cell means zero.
    std::vector<std::vector<std::vector<CertPolyTerm>>> rhs;

    friend bool operator==(const CertClaim&, const CertClaim&) = default;
};

struct CertBranch {
    std::string name;
    std::vector<std::string> nonzero;  // symbols this branch assumes nonzero
    std::vector<CertSubstitution> substitutions;
    std::vector<CertClaim> claims;

    friend bool operator==(const CertBranch&, const CertBranch&) = default;
};

struct NullconeCertificate {
    std::string name;
    int n = 0;
    std::vector<CertMatrix> matrices;
    std::vector<CertBranch> branches;

    // Concatenation of the generic symbol lists, in matrix order.
    SymbolTable symbols() const;

    friend bool operator==(const NullconeCertificate&, const NullconeCertificate&) = default;
};

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

struct CertificateResult {
    std::string certificate;
    bool pass = true;
    int branches_checked = 0;
    int claims_checked = 0;
    // First failure, set when pass is false.
    std::string failed_branch;
    std::string failed_claim;
    std::string detail;
};

// Validates the certificate shape (MalformedCertificate on any violation),
// then replays every branch, stopping at the first failing claim.
CertificateResult check_certificate(const NullconeCertificate& cert);

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

std::vector<NullconeCertificate> builtin_certificates();
std::optional<NullconeCertificate> builtin_certificate(const std::string& name);

// Pair-trace induction template at size 3: matrix k is the nilpotent base
// Skew(1+i, 0, -1+i), matrix i is already reduced, matrix l is incoming; the
// chain forces both reductions and concludes tr(Y_i Y_l) = 0.  Valid for
// distinct k, i, l in 1..d and 3 <= d <= 4.
NullconeCertificate induction_certificate(int k, int i, int l, int d);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string certificate_to_json(const NullconeCertificate& cert);
NullconeCertificate certificate_from_json(const std::string& text);

} // namespace skewinv
