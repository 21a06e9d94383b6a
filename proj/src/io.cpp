#include "skewinv/io.hpp"

#include <fstream>
#include <sstream>

#include "skewinv/errors.hpp"
#include "skewinv/version.hpp"
#include "skewinv/words.hpp"

namespace skewinv {

namespace {

OrderedJson mdeg_to_json(const MultiDegree& md) {
    OrderedJson arr = OrderedJson::array();
    for (int v : md.t) arr.push_back(v);
    return arr;
}

OrderedJson invariant_ref_to_json(const Invariant& inv) {
    OrderedJson j;
    j["label"] = inv.label;
    j["t"] = inv.t;
    j["word"] = word_str(inv.word);
    j["multidegree"] = mdeg_to_json(inv.mdeg);
    return j;
}

}  // namespace

OrderedJson polynomial_to_json(const Polynomial& f, const Ctx& ctx) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& term : f.terms()) {
        OrderedJson mono = OrderedJson::array();
        for (int idx = 0; idx < ctx.nvars(); ++idx) {
            if (term.m[idx] == 0) continue;
            Variable v = ctx.var_of_index(idx);
            mono.push_back(OrderedJson::array({v.i, v.j, v.k, static_cast<int>(term.m[idx])}));
        }
        OrderedJson entry;
        entry["monomial"] = std::move(mono);
        entry["coeff"] = gr_to_string(term.c);
        arr.push_back(std::move(entry));
    }
    return arr;
}

OrderedJson matrix_to_json(const NumMat& m) {
    OrderedJson j;
    j["n"] = m.n();
    OrderedJson upper = OrderedJson::array();
    for (int r = 0; r < m.n(); ++r)
        for (int c = r + 1; c < m.n(); ++c) upper.push_back(gr_to_string(m.at(r, c)));
    j["upper"] = std::move(upper);
    return j;
}

NumMat matrix_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("upper"))
        fail(ErrorKind::Usage, "matrix JSON must be an object with \"n\" and \"upper\"");
    if (!j["n"].is_number_integer()) fail(ErrorKind::Usage, "matrix \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 2) fail(ErrorKind::Usage, "matrix size must be at least 2");
    if (!j["upper"].is_array()) fail(ErrorKind::Usage, "matrix \"upper\" must be an array");
    const auto& upper = j["upper"];
    if (static_cast<int>(upper.size()) != n * (n - 1) / 2)
        fail(ErrorKind::Usage, "matrix \"upper\" must list n(n-1)/2 entries");
    std::vector<GaussianRational> vals;
    vals.reserve(upper.size());
    for (const auto& e : upper) {
        if (!e.is_string()) fail(ErrorKind::Usage, "matrix entries must be scalar strings");
        vals.push_back(gr_from_string(e.get<std::string>()));
    }
    return skew_from_upper(vals);
}

OrderedJson assignment_to_json(const Assignment& a) {
    OrderedJson j;
    j["n"] = a.n;
    j["d"] = a.d;
    OrderedJson mats = OrderedJson::array();
    for (const auto& m : a.mats) mats.push_back(matrix_to_json(m));
    j["matrices"] = std::move(mats);
    return j;
}

Assignment assignment_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("matrices"))
        fail(ErrorKind::Usage, "assignment JSON must have \"n\", \"d\", and \"matrices\"");
    if (!j["matrices"].is_array()) fail(ErrorKind::Usage, "\"matrices\" must be an array");
    std::vector<NumMat> mats;
    for (const auto& mj : j["matrices"]) mats.push_back(matrix_from_json(mj));
    if (mats.empty()) fail(ErrorKind::Usage, "assignment needs at least one matrix");
    Assignment a = make_assignment(std::move(mats));
    if (a.n != j["n"].get<int>() || a.d != j["d"].get<int>())
        fail(ErrorKind::Usage, "assignment header does not match its matrices");
    return a;
}

Assignment load_assignment(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Usage, "cannot open matrices file: " + path);
    OrderedJson j = OrderedJson::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::Usage, "matrices file is not valid JSON: " + path);
    return assignment_from_json(j);
}

OrderedJson generator_report_to_json(const GeneratorReport& rep) {
    OrderedJson j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["bound"] = rep.bound;
    j["total_new"] = rep.total_new();
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : rep.entries) {
        OrderedJson ej;
        ej["multidegree"] = mdeg_to_json(e.mdeg);
        ej["dimension"] = e.dimension;
        ej["new_generators"] = e.new_generators;
        ej["representatives"] = e.representatives;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string generator_report_to_csv(const GeneratorReport& rep) {
    std::ostringstream os;
    os << "multidegree,dimension,new-generators\n";
    for (const auto& e : rep.entries)
        os << '"' << e.mdeg.str() << "\"," << e.dimension << ',' << e.new_generators << '\n';
    return os.str();
}

OrderedJson generation_check_to_json(const GenerationCheck& gc) {
    OrderedJson j;
    j["ok"] = gc.ok;
    j["bound"] = gc.bound;
    j["failing"] = gc.failing ? OrderedJson(mdeg_to_json(*gc.failing)) : OrderedJson(nullptr);
    j["message"] = gc.message;
    return j;
}

OrderedJson independence_to_json(const IndependenceCertificate& ic) {
    OrderedJson j;
    j["certified"] = ic.certified;
    j["size"] = ic.size;
    j["rank"] = ic.rank;
    j["seed"] = ic.seed;
    j["retries_used"] = ic.retries_used;
    j["point"] = assignment_to_json(ic.point);
    return j;
}

OrderedJson certificate_result_to_json(const CertificateResult& cr) {
    OrderedJson j;
    j["certificate"] = cr.certificate;
    j["pass"] = cr.pass;
    j["branches_checked"] = cr.branches_checked;
    j["claims_checked"] = cr.claims_checked;
    j["failed_branch"] = cr.failed_branch;
    j["failed_claim"] = cr.failed_claim;
    j["detail"] = cr.detail;
    return j;
}

OrderedJson verification_report_to_json(const VerificationReport& vr) {
    OrderedJson j;
    j["family"] = hsp_family_name(vr.family);
    j["n"] = vr.n;
    j["d"] = vr.d;
    j["expected_count"] = vr.expected_count;
    j["actual_count"] = vr.actual_count;
    j["count_check"] = vr.count_check;
    j["independence"] = independence_to_json(vr.independence);
    OrderedJson certs = OrderedJson::array();
    for (const auto& cr : vr.nullcone) certs.push_back(certificate_result_to_json(cr));
    j["nullcone"] = std::move(certs);
    OrderedJson reps = OrderedJson::array();
    for (const auto& rc : vr.representatives) {
        OrderedJson rj;
        rj["certificate"] = rc.certificate;
        rj["matrix_index"] = rc.matrix_index;
        rj["sigma_vanishes"] = rc.sigma_vanishes;
        reps.push_back(std::move(rj));
    }
    j["representatives"] = std::move(reps);
    j["pass"] = vr.pass;
    return j;
}

OrderedJson decomposition_to_json(const DecompositionCertificate& cert) {
    OrderedJson j;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["target"] = invariant_ref_to_json(cert.target);
    OrderedJson pieces = OrderedJson::array();
    for (const auto& piece : cert.combination) {
        OrderedJson pj;
        pj["coeff"] = gr_to_string(piece.coeff);
        OrderedJson factors = OrderedJson::array();
        for (const auto& f : piece.factors) factors.push_back(invariant_ref_to_json(f));
        pj["factors"] = std::move(factors);
        pieces.push_back(std::move(pj));
    }
    j["combination"] = std::move(pieces);
    return j;
}

OrderedJson check_item_to_json(const CheckItem& it) {
    OrderedJson j;
    j["name"] = it.name;
    j["pass"] = it.pass;
    j["detail"] = it.detail;
    return j;
}

OrderedJson criterion_to_json(const CriterionResult& r) {
    OrderedJson j;
    j["index"] = r.index;
    j["title"] = r.title;
    j["pass"] = r.pass;
    OrderedJson items = OrderedJson::array();
    for (const auto& it : r.items) items.push_back(check_item_to_json(it));
    j["items"] = std::move(items);
    return j;
}

OrderedJson note_to_json(const DiscrepancyNote& n) {
    OrderedJson j;
    j["id"] = n.id;
    j["statement"] = n.statement;
    j["resolution"] = n.resolution;
    j["oracle"] = n.oracle;
    return j;
}

std::string render_run_report(const RunReport& report, double wall_seconds) {
    OrderedJson doc;
    doc["command"] = report.command;
    doc["version"] = kLibraryVersion;
    doc["seed"] = report.seed;
    doc["wall_time"] = wall_seconds;
    doc["payload"] = report.payload;
    OrderedJson notes = OrderedJson::array();
    for (const auto& id : report.note_ids)
        for (const auto& n : discrepancy_notes())
            if (n.id == id) notes.push_back(note_to_json(n));
    doc["notes"] = std::move(notes);
    return doc.dump(2) + "\n";
}

}  // namespace skewinv
