// reltype — relation types of ideals via Rees algebra presentations.
//
// Subcommands: rt, rees, sym, gr, jdual, corpus. Exit codes: 0 success
// (exact), 1 failure or corpus mismatch, 2 parse/usage error, 3 result
// inexact (degree cap or timeout was hit).

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reltype/corpus.hpp"
#include "reltype/oracle.hpp"
#include "reltype/report.hpp"

using namespace reltype;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string ring;
    std::string ideal;
    std::string field;
    std::string family;
    int n = 2, d = 4, genus = 3;
    std::int64_t a1 = 2, a2 = 3, a3 = 5;
    std::string a_list = "2, 3, 5", b_list = "7, 11, 13";
    int max_degree = 40;
    double timeout = 60.0;
    bool json = false;
    int jobs = 0;
    unsigned long long seed = 0;

    GroebnerLimits limits() const {
        if (max_degree < 1) throw PreconditionError("--max-degree must be >= 1");
        if (timeout < 1) throw PreconditionError("--timeout must be >= 1");
        return {max_degree, timeout};
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_ideal = true) {
    cmd->add_option("--ring", o.ring, "ring spec, e.g. \"QQ[x,y]\" or \"GF(32003)[x,y,z]/(x^3)\"");
    if (with_ideal) cmd->add_option("--ideal", o.ideal, "comma-separated ideal generators");
    cmd->add_option("--field", o.field, "field override: QQ or GF(p)");
    cmd->add_option("--family", o.family, "instance family: monomial|unbounded|sixpoints|nodal");
    cmd->add_option("--n", o.n, "monomial family: number of variables");
    cmd->add_option("--d", o.d, "monomial/unbounded family: degree");
    cmd->add_option("--genus", o.genus, "nodal family: genus (>= 3)");
    cmd->add_option("--a1", o.a1, "sixpoints: first line parameter");
    cmd->add_option("--a2", o.a2, "sixpoints: second line parameter");
    cmd->add_option("--a3", o.a3, "sixpoints: third line parameter");
    cmd->add_option("--a", o.a_list, "nodal: comma-separated first branch parameters");
    cmd->add_option("--b", o.b_list, "nodal: comma-separated second branch parameters");
    cmd->add_option("--max-degree", o.max_degree, "degree cap for basis computations")
        ->capture_default_str();
    cmd->add_option("--timeout", o.timeout, "per-basis timeout in seconds")->capture_default_str();
    cmd->add_flag("--json", o.json, "emit the JSON report");
    cmd->add_option("--jobs", o.jobs, "worker pool width (corpus)");
    cmd->add_option("--seed", o.seed, "seed for randomized suites (recorded in reports)");
}

FieldSpec resolve_field(const CommonOpts& o) {
    if (!o.field.empty()) return FieldSpec::parse(o.field);
    if (!o.ring.empty()) return parse_ring_spec(o.ring).field;
    return FieldSpec::gf(32003);
}

template <class F>
std::pair<QuotientRing<F>, std::vector<Poly<F>>> build_input(F field, const CommonOpts& o) {
    if (!o.family.empty()) {
        ExampleInstance<F> inst;
        if (o.family == "monomial")
            inst = monomial_algebra_gens(o.n, o.d, field);
        else if (o.family == "unbounded")
            inst = unbounded_family_gens(o.d, field);
        else if (o.family == "sixpoints")
            inst = six_points_instance<F>(field.from_int(o.a1), field.from_int(o.a2),
                                          field.from_int(o.a3), field);
        else if (o.family == "nodal") {
            std::vector<typename F::Elem> a, b;
            for (const auto& s : split_ideal_spec(o.a_list)) a.push_back(field.from_int(std::stoll(s)));
            for (const auto& s : split_ideal_spec(o.b_list)) b.push_back(field.from_int(std::stoll(s)));
            inst = nodal_curve_instance<F>(o.genus, a, b, field);
        } else
            throw PreconditionError("unknown family '" + o.family + "'");
        if (!o.ring.empty()) {
            RingSpecData spec = parse_ring_spec(o.ring);
            if (static_cast<int>(spec.vars.size()) != inst.base.ring->nvars())
                throw PreconditionError("--ring variable count does not match the family instance");
        }
        return {inst.base, inst.gens};
    }
    if (o.ring.empty() || o.ideal.empty())
        throw PreconditionError("need --ring and --ideal (or --family)");
    RingSpecData spec = parse_ring_spec(o.ring);
    QuotientRing<F> base = make_context(field, spec);
    return {base, parse_ideal(*base.ring, o.ideal)};
}

int exit_code_for(bool exact) { return exact ? 0 : 3; }

template <class F>
void print_gen_lines(const std::vector<Poly<F>>& gens) {
    for (const auto& g : gens) {
        std::string xd = g.is_x_homogeneous() ? std::to_string(g.x_degree()) : "-";
        std::printf("  tdeg %d  xdeg %-2s  %s\n", g.t_degree(), xd.c_str(),
                    g.to_string().c_str());
    }
}

enum class Mode { rt, rees, sym, gr };

template <class F>
int run_main(F field, const CommonOpts& o, Mode mode) {
    auto [base, gens] = build_input(field, o);
    GroebnerLimits lim = o.limits();
    RtResult<F> r = relation_type_of_ideal(base, gens, lim);
    bool exact = r.report.exact && r.presentation.exact();

    std::vector<Poly<F>> shown;
    int rt_shown = r.report.rt;
    std::map<std::string, double> timings{{"rees_ideal", r.presentation.seconds * 1000.0},
                                          {"relation_type", r.report.seconds * 1000.0}};
    switch (mode) {
        case Mode::rt:
        case Mode::rees:
            shown = r.report.minimal_generators;
            break;
        case Mode::sym:
            shown = sym_ideal(r.presentation);
            break;
        case Mode::gr: {
            auto t0 = std::chrono::steady_clock::now();
            GrPresentation<F> gr = gr_presentation(r.presentation, lim);
            timings["gr_presentation"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() *
                1000.0;
            shown = gr.gens;
            rt_shown = gr.rt_gr;
            exact = exact && gr.exact;
            break;
        }
    }

    if (o.json) {
        std::cout << report_json<F>(rt_shown, exact, shown, timings).dump(2) << "\n";
        return exit_code_for(exact);
    }
    const char* label = mode == Mode::gr ? "rt_gr" : "rt";
    std::printf("%s: %d (%s)\n", label, rt_shown, exact ? "exact" : "NOT exact: cap/timeout hit");
    std::printf("generator T-degrees:");
    for (const auto& g : shown) std::printf(" %d", g.t_degree());
    std::printf("\n");
    print_gen_lines(shown);
    std::size_t retained = 0, reduced = 0;
    for (const auto& c : r.report.certificates) (c.retained ? retained : reduced) += 1;
    std::printf("certificates: %zu retained as minimal, %zu reduced to zero\n", retained, reduced);
    for (const auto& [k, v] : timings) std::printf("timing %s: %.1f ms\n", k.c_str(), v);
    return exit_code_for(exact);
}

template <class F>
int run_jdual(F field, const CommonOpts& o) {
    if (!o.family.empty() && o.family != "sixpoints")
        throw PreconditionError("jdual currently works on --family sixpoints");
    ExampleInstance<F> inst = six_points_instance<F>(field.from_int(o.a1), field.from_int(o.a2),
                                                     field.from_int(o.a3), field);
    GroebnerLimits lim = o.limits();
    RtResult<F> r = relation_type_of_ideal(inst.base, inst.gens, lim);
    const Ring<F>& S = *r.presentation.s_ring;
    const PolyMatrix<F>& M0 = *inst.syzygy_matrix;
    PolyMatrix<F> M(M0.rows, M0.cols, S);
    for (int i = 0; i < M0.rows; ++i)
        for (int j = 0; j < M0.cols; ++j) M.at(i, j) = M0.at(i, j).mapped_to(S);
    std::vector<int> xv, tv;
    for (int i = 0; i < S.x_end(); ++i) xv.push_back(i);
    for (int i = S.t_begin(); i < S.t_end(); ++i) tv.push_back(i);
    PolyMatrix<F> B = jacobian_dual(M, xv, tv);
    Poly<F> D = det(B);

    if (o.json) {
        ordered_json j;
        j["rows"] = B.rows;
        j["cols"] = B.cols;
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < B.rows; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < B.cols; ++k) row.push_back(B.at(i, k).to_string());
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        j["det"] = D.to_string();
        j["det_tdeg"] = D.t_degree();
        j["identity_checked"] = true;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::printf("B(M): %d x %d, identity T*M = x*B(M) verified\n", B.rows, B.cols);
    for (int i = 0; i < B.rows; ++i) {
        std::printf(" [");
        for (int k = 0; k < B.cols; ++k)
            std::printf(" %s%s", B.at(i, k).to_string().c_str(), k + 1 < B.cols ? "," : "");
        std::printf(" ]\n");
    }
    std::printf("det B(M) = %s\n", D.to_string().c_str());
    std::printf("det T-degree: %d\n", D.t_degree());
    return 0;
}

int run_corpus_cmd(const std::string& path, const CommonOpts& o) {
    CorpusRunOptions opt;
    opt.limits = o.limits();
    opt.jobs = o.jobs;
    if (!o.field.empty()) opt.field_override = FieldSpec::parse(o.field);
    std::vector<ManifestEntry> entries = load_manifest_file(path);
    std::vector<CorpusInstanceResult> results = run_corpus(entries, opt);

    if (o.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            ordered_json j;
            j["name"] = r.name;
            if (r.expected)
                j["expected_rt"] = *r.expected;
            else
                j["expected_rt"] = nullptr;
            if (r.computed)
                j["computed_rt"] = *r.computed;
            else
                j["computed_rt"] = nullptr;
            j["exact"] = r.exact;
            j["conjecture"] = r.conjecture;
            j["outcome"] = r.outcome == CorpusInstanceResult::Outcome::pass   ? "pass"
                           : r.outcome == CorpusInstanceResult::Outcome::fail ? "fail"
                                                                              : "info";
            j["seconds"] = r.seconds;
            if (!r.message.empty()) j["message"] = r.message;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return corpus_exit_code(results);
    }

    std::printf("%-22s %9s %9s %-6s %8s  %s\n", "instance", "expected", "computed", "result",
                "time", "note");
    int pass = 0, fail = 0, info = 0;
    for (const auto& r : results) {
        std::string exp = r.expected ? std::to_string(*r.expected) : "-";
        std::string got = r.computed ? std::to_string(*r.computed) : "-";
        const char* oc = r.outcome == CorpusInstanceResult::Outcome::pass   ? "pass"
                         : r.outcome == CorpusInstanceResult::Outcome::fail ? "FAIL"
                                                                            : "info";
        (r.outcome == CorpusInstanceResult::Outcome::pass
             ? pass
             : r.outcome == CorpusInstanceResult::Outcome::fail ? fail : info) += 1;
        std::printf("%-22s %9s %9s %-6s %7.2fs  %s\n", r.name.c_str(), exp.c_str(), got.c_str(),
                    oc, r.seconds, r.message.c_str());
    }
    std::printf("summary: %d pass, %d fail, %d info\n", pass, fail, info);
    return corpus_exit_code(results);
}

template <class Fn>
int dispatch_field(const CommonOpts& o, Fn&& fn) {
    FieldSpec fs = resolve_field(o);
    if (fs.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField(fs.characteristic));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relation types of polynomial ideals via Rees algebra presentations"};
    app.require_subcommand(1);

    CommonOpts o;
    Mode mode = Mode::rt;
    std::string corpus_path;

    CLI::App* c_rt = app.add_subcommand("rt", "relation type of an ideal");
    CLI::App* c_rees = app.add_subcommand("rees", "Rees ideal generators and relation type");
    CLI::App* c_sym = app.add_subcommand("sym", "symmetric-algebra (T-degree 1) relations");
    CLI::App* c_gr = app.add_subcommand("gr", "associated-graded presentation and its rt");
    CLI::App* c_jd = app.add_subcommand("jdual", "Jacobian dual of a family syzygy matrix");
    CLI::App* c_corpus = app.add_subcommand("corpus", "run a corpus manifest");
    for (CLI::App* c : {c_rt, c_rees, c_sym, c_gr, c_jd}) add_common(c, o);
    add_common(c_corpus, o, false);
    c_corpus->add_option("manifest", corpus_path, "manifest path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_corpus->parsed()) return run_corpus_cmd(corpus_path, o);
        if (c_jd->parsed()) return dispatch_field(o, [&](auto field) { return run_jdual(field, o); });
        if (c_rees->parsed()) mode = Mode::rees;
        if (c_sym->parsed()) mode = Mode::sym;
        if (c_gr->parsed()) mode = Mode::gr;
        return dispatch_field(o, [&](auto field) { return run_main(field, o, mode); });
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
