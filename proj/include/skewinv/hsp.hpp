#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewinv/certificates.hpp"
#include "skewinv/genmat.hpp"

namespace skewinv {

// Homogeneous-system-of-parameters families for the trace algebra of d skew
// matrices: A is the size-3 family for any d >= 2, the others are the fixed
// pairs B(4, 2), C(4, 3), D(5, 2).
enum class HspFamily { A, B, C, D };

std::string hsp_family_name(HspFamily f);
HspFamily hsp_family_from_string(const std::string& s);  // Usage when unknown
int hsp_family_n(HspFamily f);

struct HspSystem {
    HspFamily family = HspFamily::A;
    Ctx ctx;
    std::vector<Invariant> elements;
};

// The parameter system of a supported (family, d) pair; elements number
// n(n-1)(d-1)/2.  UnsupportedCase for anything else, including A with d = 1,
// whose invariant algebra is free on sigma_2 alone and needs no system here.
HspSystem hsp_system(HspFamily family, int d);
std::vector<Invariant> hsp_elements(HspFamily family, int d);

// Exact rank of the s x (d n(n-1)/2) matrix of partial derivatives of the
// values at the point; rank = s certifies algebraic independence.
// SizeMismatch when the point does not match the elements' variable space.
int jacobian_rank(const std::vector<Invariant>& fs, const Assignment& point);

// Positive witness from random sampling: certified = true means the Jacobian
// reached full rank at the recorded point.  certified = false only means the
// sampled points were all degenerate, never that the set is dependent.
struct IndependenceCertificate {
    bool certified = false;
    int size = 0;  // number of elements tested
    int rank = 0;  // best rank reached
    Assignment point;
    std::uint64_t seed = 0;
    int retries_used = 0;
};

IndependenceCertificate verify_independence(const Ctx& ctx, const std::vector<Invariant>& fs,
                                            std::uint64_t seed = 0, int max_retries = 5);

// Nullcone certificates whose case analysis covers the family's size.
std::vector<std::string> family_certificate_names(HspFamily family);

// sigma_t vanishing on one explicit base matrix of a family certificate: the
// property that puts the representative inside the nullcone.
struct RepresentativeCheck {
    std::string certificate;
    int matrix_index = 0;  // 1-based slot in the certificate
    bool sigma_vanishes = false;
};

struct VerificationReport {
    HspFamily family = HspFamily::A;
    int n = 0;
    int d = 0;
    int expected_count = 0;
    int actual_count = 0;
    bool count_check = false;
    IndependenceCertificate independence;
    std::vector<CertificateResult> nullcone;
    std::vector<RepresentativeCheck> representatives;
    bool pass = false;
};

// Count check, independence certificate, the family's nullcone certificates,
// and the sigma-vanishing check on their explicit representatives.
VerificationReport verify_hsp(HspFamily family, int d, std::uint64_t seed = 0,
                              int max_retries = 5);

} // namespace skewinv
