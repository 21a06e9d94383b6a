#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewinv/io.hpp"
#include "skewinv/version.hpp"
#include "skewinv/words.hpp"

namespace {

using namespace skewinv;

struct Options {
    int n = 0;
    int d = 0;
    int t = 0;
    int maxdeg = 8;
    int retries = 5;
    std::uint64_t seed = 0;
    long prime = 1000003;
    std::string word;
    std::string case_name;
    std::string blocks;
    std::string matrices;
    std::string name;
    std::string backend = "exact";
    std::string format = "json";
    std::string out;
    bool check_sigma = false;
    bool all = false;
};

struct Outcome {
    OrderedJson payload;
    std::vector<std::string> note_ids;
    bool ok = true;        // false means verification failure (exit 1)
    std::string csv;       // when nonempty, emitted instead of the JSON envelope
};

void require_json_format(const Options& o) {
    if (o.format == "json") return;
    if (o.format == "csv") fail(ErrorKind::Usage, "csv output is only available for mingens");
    fail(ErrorKind::Usage, "unknown format: " + o.format);
}

SpanOptions span_options(const Options& o) {
    SpanOptions so;
    so.degree_bound = o.maxdeg;
    if (o.backend == "modular")
        so.backend = Backend::Modular;
    else if (o.backend != "exact")
        fail(ErrorKind::Usage, "unknown backend: " + o.backend);
    if (o.prime < 2) fail(ErrorKind::BadPrime, "prime must be at least 2");
    so.prime = o.prime;
    return so;
}

Word parse_word_flag(const Options& o) {
    Word w = word_parse(o.word);
    if (w.empty()) fail(ErrorKind::Usage, "word must list at least one letter");
    return w;
}

int effective_d(const Options& o, const Word& w) {
    int top = 0;
    for (int letter : w) top = std::max(top, letter);
    int d = o.d > 0 ? o.d : top;
    if (top > d) fail(ErrorKind::Usage, "word letter exceeds d");
    return d;
}

Outcome run_sigma_or_trace(const Options& o, bool trace_only) {
    require_json_format(o);
    Word w = parse_word_flag(o);
    int d = effective_d(o, w);
    Ctx ctx{o.n, d};
    int t = trace_only ? 1 : o.t;
    Invariant inv = make_invariant(ctx, t, w);
    Outcome res;
    res.payload["n"] = o.n;
    res.payload["d"] = d;
    res.payload["t"] = t;
    res.payload["word"] = word_str(w);
    res.payload["label"] = inv.label;
    OrderedJson md = OrderedJson::array();
    for (int v : inv.mdeg.t) md.push_back(v);
    res.payload["multidegree"] = std::move(md);
    res.payload["terms"] = polynomial_to_json(inv.value, ctx);
    res.payload["pretty"] = inv.value.str(ctx);
    if (o.n == 2) res.note_ids.push_back("pair-trace-sign-size-2");
    return res;
}

Outcome run_mingens(const Options& o) {
    if (o.format != "json" && o.format != "csv")
        fail(ErrorKind::Usage, "unknown format: " + o.format);
    GeneratorReport rep = minimal_generators(o.n, o.d, o.maxdeg, span_options(o));
    Outcome res;
    if (o.format == "csv")
        res.csv = generator_report_to_csv(rep);
    else
        res.payload = generator_report_to_json(rep);
    return res;
}

// Generating sets with a built-in description: size 2 and size 3 for any d,
// and the single size-5 matrix.
std::vector<Invariant> generation_candidates(int n, int d) {
    if (n == 2 || n == 3) {
        Ctx ctx{n, d};
        std::vector<Invariant> out;
        for (int i = 1; i <= d; ++i) out.push_back(make_invariant(ctx, 2, {i}));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) out.push_back(make_invariant(ctx, 1, {i, j}));
        if (n == 3)
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int k = j + 1; k <= d; ++k)
                        out.push_back(make_invariant(ctx, 1, {i, j, k}));
        return out;
    }
    if (n == 5 && d == 1) {
        Ctx ctx{5, 1};
        return {make_invariant(ctx, 2, {1}), make_invariant(ctx, 4, {1})};
    }
    fail(ErrorKind::UnsupportedCase,
         "no built-in generating set for n = " + std::to_string(n) + ", d = " + std::to_string(d) +
             "; supported: n = 2 or 3 with any d, and n = 5 with d = 1");
}

Outcome run_generation(const Options& o) {
    require_json_format(o);
    std::vector<Invariant> cands = generation_candidates(o.n, o.d);
    GenerationCheck gc = verify_generation(cands, o.n, o.d, o.maxdeg, span_options(o));
    Outcome res;
    res.payload["n"] = o.n;
    res.payload["d"] = o.d;
    res.payload["bound"] = o.maxdeg;
    OrderedJson labels = OrderedJson::array();
    for (const auto& inv : cands) labels.push_back(inv.label);
    res.payload["candidates"] = std::move(labels);
    res.payload["check"] = generation_check_to_json(gc);
    res.ok = gc.ok;
    return res;
}

Outcome run_hsp(const Options& o) {
    require_json_format(o);
    HspFamily family = hsp_family_from_string(o.case_name);
    VerificationReport vr = verify_hsp(family, o.d, o.seed, o.retries);
    Outcome res;
    res.payload = verification_report_to_json(vr);
    OrderedJson labels = OrderedJson::array();
    for (const auto& inv : hsp_elements(family, o.d)) labels.push_back(inv.label);
    res.payload["elements"] = std::move(labels);
    res.ok = vr.pass;
    if (family == HspFamily::A) res.note_ids.push_back("parameter-family-tail-range");
    return res;
}

Outcome run_certificate(const Options& o) {
    require_json_format(o);
    std::vector<NullconeCertificate> certs;
    if (!o.name.empty()) {
        auto found = builtin_certificate(o.name);
        if (!found) {
            std::string names;
            for (const auto& c : builtin_certificates()) names += (names.empty() ? "" : ", ") + c.name;
            fail(ErrorKind::Usage, "unknown certificate " + o.name + "; available: " + names);
        }
        certs.push_back(*found);
    } else {
        certs = builtin_certificates();
    }
    Outcome res;
    OrderedJson arr = OrderedJson::array();
    for (const auto& cert : certs) {
        CertificateResult cr = check_certificate(cert);
        res.ok = res.ok && cr.pass;
        OrderedJson entry;
        entry["result"] = certificate_result_to_json(cr);
        entry["document"] = OrderedJson::parse(certificate_to_json(cert));
        arr.push_back(std::move(entry));
    }
    res.payload["certificates"] = std::move(arr);
    return res;
}

OrderedJson canonical_matrix_to_json(const CanonicalMatrix& cm, bool with_sigma) {
    OrderedJson j;
    j["blocks"] = blocks_str(cm.blocks);
    j["matrix"] = matrix_to_json(cm.matrix);
    if (with_sigma) {
        auto sig = sigma_all_num(cm.matrix);
        OrderedJson arr = OrderedJson::array();
        bool all_zero = true;
        for (int t = 1; t <= cm.matrix.n(); ++t) {
            arr.push_back(gr_to_string(sig[t]));
            all_zero = all_zero && sig[t] == GaussianRational();
        }
        j["sigma"] = std::move(arr);
        j["sigma_all_zero"] = all_zero;
    }
    return j;
}

Outcome run_canon(const Options& o) {
    require_json_format(o);
    if (o.blocks.empty() == (o.n == 0))
        fail(ErrorKind::Usage, "canon needs exactly one of --blocks or --n");
    Outcome res;
    if (!o.blocks.empty()) {
        CanonicalMatrix cm = direct_sum(blocks_parse(o.blocks));
        res.payload = canonical_matrix_to_json(cm, o.check_sigma);
    } else {
        res.payload["n"] = o.n;
        OrderedJson arr = OrderedJson::array();
        for (const auto& cm : nilpotent_representatives(o.n))
            arr.push_back(canonical_matrix_to_json(cm, o.check_sigma));
        res.payload["representatives"] = std::move(arr);
    }
    return res;
}

Outcome run_eval(const Options& o) {
    require_json_format(o);
    Assignment a = load_assignment(o.matrices);
    Word w = parse_word_flag(o);
    for (int letter : w)
        if (letter > a.d) fail(ErrorKind::Usage, "word letter exceeds the number of matrices");
    Ctx ctx{a.n, a.d};
    int t = o.t > 0 ? o.t : 1;
    Invariant inv = make_invariant(ctx, t, w);
    GaussianRational by_poly = evaluate(ctx, inv, a);
    GaussianRational direct = evaluate_direct(ctx, inv, a);
    Outcome res;
    res.payload["n"] = a.n;
    res.payload["d"] = a.d;
    res.payload["t"] = t;
    res.payload["word"] = word_str(w);
    res.payload["label"] = inv.label;
    res.payload["value"] = gr_to_string(by_poly);
    res.payload["value_direct"] = gr_to_string(direct);
    res.payload["paths_agree"] = by_poly == direct;
    res.ok = by_poly == direct;
    return res;
}

Outcome run_identities(const Options& o) {
    require_json_format(o);
    Outcome res;
    OrderedJson arr = OrderedJson::array();
    bool all_pass = true;
    for (const auto& it : identity_suite()) {
        all_pass = all_pass && it.pass;
        arr.push_back(check_item_to_json(it));
    }
    res.payload["items"] = std::move(arr);
    res.payload["all_pass"] = all_pass;
    res.ok = all_pass;
    res.note_ids = {"pair-trace-sign-size-2", "size-5-characteristic-sum-argument"};
    return res;
}

Outcome run_report(const Options& o) {
    require_json_format(o);
    Outcome res;
    OrderedJson arr = OrderedJson::array();
    bool all_pass = true;
    for (const auto& cr : run_all_criteria()) {
        all_pass = all_pass && cr.pass;
        arr.push_back(criterion_to_json(cr));
    }
    res.payload["criteria"] = std::move(arr);
    res.payload["all_pass"] = all_pass;
    res.ok = all_pass;
    for (const auto& n : discrepancy_notes()) res.note_ids.push_back(n.id);
    return res;
}

void emit(const std::string& text, const Options& o) {
    std::cout << text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) fail(ErrorKind::Usage, "cannot open output file: " + o.out);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of tuples of skew-symmetric matrices (v" +
                 std::string(kLibraryVersion) + ")"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: json or csv (default json)");
        cmd->add_option("--out", o.out, "also write the report to this file");
    };
    auto add_rank = [&o](CLI::App* cmd) {
        cmd->add_option("--backend", o.backend, "rank backend: exact or modular (default exact)");
        cmd->add_option("--prime", o.prime, "modulus for the modular backend (default 1000003)");
    };
    auto add_seeded = [&o](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "seed for sampled points (default 0)");
        cmd->add_option("--retries", o.retries, "independence retries (default 5)");
    };

    CLI::App* c_sigma = app.add_subcommand("sigma", "sigma_t of a word in the generic matrices");
    c_sigma->add_option("--n", o.n, "matrix size")->required();
    c_sigma->add_option("--d", o.d, "number of matrices (default: largest word letter)");
    c_sigma->add_option("--t", o.t, "sigma index")->required();
    c_sigma->add_option("--word", o.word, "comma-separated 1-based letters")->required();
    add_output(c_sigma);

    CLI::App* c_trace = app.add_subcommand("trace", "trace of a word in the generic matrices");
    c_trace->add_option("--n", o.n, "matrix size")->required();
    c_trace->add_option("--d", o.d, "number of matrices (default: largest word letter)");
    c_trace->add_option("--word", o.word, "comma-separated 1-based letters")->required();
    add_output(c_trace);

    CLI::App* c_mingens = app.add_subcommand("mingens", "minimal generators by multidegree");
    c_mingens->add_option("--n", o.n, "matrix size")->required();
    c_mingens->add_option("--d", o.d, "number of matrices")->required();
    c_mingens->add_option("--maxdeg", o.maxdeg, "total degree bound (default 8)");
    add_rank(c_mingens);
    add_output(c_mingens);

    CLI::App* c_generation = app.add_subcommand(
        "generation", "check the built-in generating set up to a degree bound");
    c_generation->add_option("--n", o.n, "matrix size")->required();
    c_generation->add_option("--d", o.d, "number of matrices")->required();
    c_generation->add_option("--maxdeg", o.maxdeg, "total degree bound (default 8)");
    add_rank(c_generation);
    add_output(c_generation);

    CLI::App* c_hsp = app.add_subcommand("hsp", "verify a parameter family");
    c_hsp->add_option("--case", o.case_name, "family: A, B, C, or D")->required();
    c_hsp->add_option("--d", o.d, "number of matrices")->required();
    add_seeded(c_hsp);
    add_output(c_hsp);

    CLI::App* c_certificate =
        app.add_subcommand("certificate", "replay built-in nullcone certificates");
    c_certificate->add_option("--name", o.name, "one certificate (default: all)");
    add_output(c_certificate);

    CLI::App* c_canon = app.add_subcommand("canon", "build canonical block matrices");
    c_canon->add_option("--blocks", o.blocks, "block grammar, e.g. \"K3;0:1\"");
    c_canon->add_option("--n", o.n, "list the size-n nilpotent representatives");
    c_canon->add_flag("--check-sigma", o.check_sigma, "include sigma_1..sigma_n of each matrix");
    add_output(c_canon);

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate an invariant at a matrix tuple");
    c_eval->add_option("--t", o.t, "sigma index (default 1 = trace)");
    c_eval->add_option("--word", o.word, "comma-separated 1-based letters")->required();
    c_eval->add_option("--matrices", o.matrices, "JSON file with the matrix tuple")->required();
    add_output(c_eval);

    CLI::App* c_identities =
        app.add_subcommand("identities", "run the exact identity suite; exit 0 only if all hold");
    add_output(c_identities);

    CLI::App* c_report = app.add_subcommand("report", "run the acceptance criteria");
    c_report->add_flag("--all", o.all, "run every criterion (the default and only mode)");
    add_output(c_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command += ' ';
        command += argv[i];
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        Outcome res;
        if (c_sigma->parsed())
            res = run_sigma_or_trace(o, false);
        else if (c_trace->parsed())
            res = run_sigma_or_trace(o, true);
        else if (c_mingens->parsed())
            res = run_mingens(o);
        else if (c_generation->parsed())
            res = run_generation(o);
        else if (c_hsp->parsed())
            res = run_hsp(o);
        else if (c_certificate->parsed())
            res = run_certificate(o);
        else if (c_canon->parsed())
            res = run_canon(o);
        else if (c_eval->parsed())
            res = run_eval(o);
        else if (c_identities->parsed())
            res = run_identities(o);
        else
            res = run_report(o);
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        if (!res.csv.empty()) {
            emit(res.csv, o);
        } else {
            RunReport report;
            report.command = command;
            report.seed = o.seed;
            report.payload = std::move(res.payload);
            report.note_ids = std::move(res.note_ids);
            emit(render_run_report(report, wall), o);
        }
        return res.ok ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
