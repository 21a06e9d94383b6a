#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewinv/canonical.hpp"
#include "skewinv/certificates.hpp"
#include "skewinv/criteria.hpp"
#include "skewinv/genmat.hpp"
#include "skewinv/hsp.hpp"
#include "skewinv/invbase.hpp"

namespace skewinv {

using OrderedJson = nlohmann::ordered_json;

// Terms in stored (descending) order; each monomial lists [i, j, k, exp]
// per variable with positive exponent, largest variable first.
OrderedJson polynomial_to_json(const Polynomial& f, const Ctx& ctx);

// {"n": int, "upper": [scalar-string, ...]} row-major strict upper triangle.
OrderedJson matrix_to_json(const NumMat& m);
NumMat matrix_from_json(const OrderedJson& j);

// {"n": int, "d": int, "matrices": [matrix, ...]}.
OrderedJson assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const OrderedJson& j);
Assignment load_assignment(const std::string& path);

OrderedJson generator_report_to_json(const GeneratorReport& rep);
// Columns: multidegree, dimension, new-generators.
std::string generator_report_to_csv(const GeneratorReport& rep);
OrderedJson generation_check_to_json(const GenerationCheck& gc);
OrderedJson independence_to_json(const IndependenceCertificate& ic);
OrderedJson certificate_result_to_json(const CertificateResult& cr);
OrderedJson verification_report_to_json(const VerificationReport& vr);
OrderedJson decomposition_to_json(const DecompositionCertificate& cert);
OrderedJson check_item_to_json(const CheckItem& it);
// Timing is deliberately omitted so payload sections stay byte-identical.
OrderedJson criterion_to_json(const CriterionResult& r);
OrderedJson note_to_json(const DiscrepancyNote& n);

// Envelope printed by every CLI verb: keys command, version, seed, wall_time,
// payload, notes in that order.  wall_time is the only volatile field.
struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    OrderedJson payload;
    std::vector<std::string> note_ids;
};

std::string render_run_report(const RunReport& report, double wall_seconds);

}  // namespace skewinv
