#include "skewinv/hsp.hpp"

#include <random>

#include "skewinv/linalg.hpp"

namespace skewinv {

namespace {

// Pair-trace sum h_r: a single trace up to d = 3; from d = 4 on a genuine
// sum, homogeneous of total degree 2 but spread over several multidegrees,
// so the word and multidegree slots stay empty.
Invariant sum_invariant(const Ctx& ctx, std::string label,
                        const std::vector<Word>& words) {
    if (words.size() == 1) {
        Invariant inv = make_invariant(ctx, 1, words[0]);
        inv.label = std::move(label);
        return inv;
    }
    Invariant inv;
    inv.t = 1;
    inv.value = Polynomial(ctx.nvars());
    for (const Word& w : words) inv.value += trace_word(ctx, w);
    inv.label = std::move(label);
    return inv;
}

std::vector<Invariant> elements_a(const Ctx& ctx) {
    std::vector<Invariant> out;
    for (int k = 1; k <= ctx.d; ++k) out.push_back(make_invariant(ctx, 2, {k}));
    for (int r = 3; r <= 2 * ctx.d - 1; ++r) {
        std::vector<Word> words;
        for (int i = 1; i < ctx.d; ++i) {
            int j = r - i;
            if (j > i && j <= ctx.d) words.push_back({i, j});
        }
        out.push_back(sum_invariant(ctx, "h" + std::to_string(r), words));
    }
    return out;
}

std::vector<Invariant> elements_pairs(const Ctx& ctx) {
    // Shared block of the size-4 families: sigma_2 of every matrix, then
    // sigma_4 = det of every matrix, then tr(Y_i Y_j) and tr(Y_i^2 Y_j^2)
    // for each pair.
    std::vector<Invariant> out;
    for (int k = 1; k <= ctx.d; ++k) out.push_back(make_invariant(ctx, 2, {k}));
    for (int k = 1; k <= ctx.d; ++k) out.push_back(make_invariant(ctx, 4, {k}));
    for (int i = 1; i <= ctx.d; ++i)
        for (int j = i + 1; j <= ctx.d; ++j) {
            out.push_back(make_invariant(ctx, 1, {i, j}));
            out.push_back(make_invariant(ctx, 1, {i, i, j, j}));
        }
    return out;
}

std::vector<Invariant> elements_d(const Ctx& ctx) {
    std::vector<Invariant> out;
    for (int k = 1; k <= 2; ++k) out.push_back(make_invariant(ctx, 2, {k}));
    for (int k = 1; k <= 2; ++k) out.push_back(make_invariant(ctx, 4, {k}));
    out.push_back(make_invariant(ctx, 1, {1, 2}));
    out.push_back(make_invariant(ctx, 1, {1, 1, 2, 2}));
    out.push_back(make_invariant(ctx, 1, {1, 1, 1, 2}));
    out.push_back(make_invariant(ctx, 1, {1, 2, 2, 2}));
    out.push_back(make_invariant(ctx, 1, {1, 1, 1, 1, 2, 2}));
    out.push_back(make_invariant(ctx, 1, {1, 1, 2, 2, 2, 2}));
    return out;
}

std::vector<GaussianRational> point_coords(const Ctx& ctx, const Assignment& a) {
    std::vector<GaussianRational> coords(ctx.nvars(), gr_zero());
    for (int k = 1; k <= ctx.d; ++k)
        for (int i = 1; i < ctx.n; ++i)
            for (int j = i + 1; j <= ctx.n; ++j)
                coords[ctx.var_index(i, j, k)] = a.mats[k - 1].at(i - 1, j - 1);
    return coords;
}

} // namespace

std::string hsp_family_name(HspFamily f) {
    switch (f) {
        case HspFamily::A: return "A";
        case HspFamily::B: return "B";
        case HspFamily::C: return "C";
        case HspFamily::D: return "D";
    }
    fail(ErrorKind::Usage, "bad family value");
}

HspFamily hsp_family_from_string(const std::string& s) {
    if (s == "A") return HspFamily::A;
    if (s == "B") return HspFamily::B;
    if (s == "C") return HspFamily::C;
    if (s == "D") return HspFamily::D;
    fail(ErrorKind::Usage, "unknown family '" + s + "' (expected A, B, C, or D)");
}

int hsp_family_n(HspFamily f) {
    switch (f) {
        case HspFamily::A: return 3;
        case HspFamily::B:
        case HspFamily::C: return 4;
        case HspFamily::D: return 5;
    }
    fail(ErrorKind::Usage, "bad family value");
}

HspSystem hsp_system(HspFamily family, int d) {
    HspSystem sys;
    sys.family = family;
    sys.ctx = Ctx{hsp_family_n(family), d};
    switch (family) {
        case HspFamily::A:
            if (d == 1)
                fail(ErrorKind::UnsupportedCase,
                     "for a single size-3 matrix the invariant algebra is the polynomial "
                     "algebra on sigma_2 alone, so {sigma_2(Y1)} is already a parameter "
                     "system; use the single-matrix generator description instead");
            if (d < 2) fail(ErrorKind::UnsupportedCase, "family A needs d >= 2");
            sys.elements = elements_a(sys.ctx);
            break;
        case HspFamily::B:
            if (d != 2) fail(ErrorKind::UnsupportedCase, "family B is the pair case (d = 2)");
            sys.elements = elements_pairs(sys.ctx);
            break;
        case HspFamily::C:
            if (d != 3) fail(ErrorKind::UnsupportedCase, "family C is the triple case (d = 3)");
            sys.elements = elements_pairs(sys.ctx);
            break;
        case HspFamily::D:
            if (d != 2) fail(ErrorKind::UnsupportedCase, "family D is the pair case (d = 2)");
            sys.elements = elements_d(sys.ctx);
            break;
    }
    return sys;
}

std::vector<Invariant> hsp_elements(HspFamily family, int d) {
    return hsp_system(family, d).elements;
}

int jacobian_rank(const std::vector<Invariant>& fs, const Assignment& point) {
    if (fs.empty()) return 0;
    int nv = fs[0].value.nvars();
    for (const Invariant& f : fs)
        if (f.value.nvars() != nv)
            fail(ErrorKind::SizeMismatch, "elements live in different variable spaces");
    Ctx ctx{point.n, point.d};
    if (static_cast<int>(point.mats.size()) != point.d)
        fail(ErrorKind::SizeMismatch, "assignment matrix count disagrees with its d");
    if (ctx.nvars() != nv)
        fail(ErrorKind::SizeMismatch, "point has " + std::to_string(ctx.nvars()) +
                                          " coordinates, elements have " + std::to_string(nv));
    std::vector<GaussianRational> coords = point_coords(ctx, point);

    std::vector<SparseRow> rows;
    rows.reserve(fs.size());
    for (const Invariant& f : fs) {
        SparseRow row;
        for (int v = 0; v < nv; ++v) {
            GaussianRational c = f.value.derivative(v).eval(coords);
            if (!c.is_zero()) row.ents.push_back({v, c});
        }
        rows.push_back(std::move(row));
    }
    return eliminate_exact(std::move(rows), true).rank;
}

IndependenceCertificate verify_independence(const Ctx& ctx, const std::vector<Invariant>& fs,
                                            std::uint64_t seed, int max_retries) {
    IndependenceCertificate cert;
    cert.size = static_cast<int>(fs.size());
    cert.seed = seed;
    std::mt19937_64 rng(seed);
    int u = ctx.pairs();
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        std::vector<NumMat> mats;
        for (int k = 0; k < ctx.d; ++k) {
            std::vector<GaussianRational> upper;
            for (int e = 0; e < u; ++e)
                upper.push_back(GaussianRational(static_cast<long>(rng() % 19) - 9));
            mats.push_back(skew_from_upper(upper));
        }
        Assignment point = make_assignment(std::move(mats));
        int rank = jacobian_rank(fs, point);
        if (rank > cert.rank) {
            cert.rank = rank;
            cert.point = point;
        }
        cert.retries_used = attempt;
        if (rank == cert.size) {
            cert.certified = true;
            cert.point = std::move(point);
            break;
        }
    }
    return cert;
}

std::vector<std::string> family_certificate_names(HspFamily family) {
    switch (family) {
        case HspFamily::A: return {"N3_TRABC", "N3_INDUCTION"};
        case HspFamily::B: return {"N4_Q1", "N4_Q2"};
        case HspFamily::C: return {"N4_Q1", "N4_Q2", "N4_ABC_Q1", "N4_ABC_Q2"};
        case HspFamily::D: return {"N5_Q1", "N5_Q3", "N5_Q2"};
    }
    fail(ErrorKind::Usage, "bad family value");
}

VerificationReport verify_hsp(HspFamily family, int d, std::uint64_t seed, int max_retries) {
    HspSystem sys = hsp_system(family, d);
    VerificationReport rep;
    rep.family = family;
    rep.n = sys.ctx.n;
    rep.d = sys.ctx.d;
    rep.expected_count = rep.n * (rep.n - 1) * (rep.d - 1) / 2;
    rep.actual_count = static_cast<int>(sys.elements.size());
    rep.count_check = rep.actual_count == rep.expected_count;
    rep.independence = verify_independence(sys.ctx, sys.elements, seed, max_retries);

    bool certs_ok = true;
    for (const std::string& name : family_certificate_names(family)) {
        NullconeCertificate cert = *builtin_certificate(name);
        rep.nullcone.push_back(check_certificate(cert));
        certs_ok = certs_ok && rep.nullcone.back().pass;

        for (size_t m = 0; m < cert.matrices.size(); ++m) {
            if (cert.matrices[m].generic) continue;
            NumMat rep_mat = skew_from_upper(cert.matrices[m].upper);
            std::vector<GaussianRational> sig = sigma_all_num(rep_mat);
            bool vanishes = true;
            for (size_t t = 1; t < sig.size(); ++t) vanishes = vanishes && sig[t].is_zero();
            rep.representatives.push_back({name, static_cast<int>(m) + 1, vanishes});
        }
    }
    bool reps_ok = true;
    for (const RepresentativeCheck& rc : rep.representatives) reps_ok = reps_ok && rc.sigma_vanishes;

    rep.pass = rep.count_check && rep.independence.certified && certs_ok && reps_ok;
    return rep;
}

} // namespace skewinv
