#pragma once

#include "reltype/geometry.hpp"
#include "reltype/manifest.hpp"
#include "reltype/parse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reltype {

struct CorpusRunOptions {
    GroebnerLimits limits;
    int jobs = 0;  // 0: hardware default
    std::optional<FieldSpec> field_override;
};

struct CorpusInstanceResult {
    std::string name;
    std::optional<int> expected;
    std::optional<int> computed;
    bool exact = false;
    bool conjecture = false;
    std::string provenance;
    double seconds = 0.0;
    std::string message;

    enum class Outcome { pass, fail, info } outcome = Outcome::info;
};

namespace corpus_detail {

template <class F>
ExampleInstance<F> build_family(F field, const ManifestEntry& e) {
    std::string fam = e.get_or("family", "");
    auto need_int = [&](const std::string& key) {
        auto v = e.get(key);
        if (!v) throw Error("corpus instance '" + e.name + "' needs key '" + key + "'");
        return std::stoi(*v);
    };
    auto elem_list = [&](const std::string& key) {
        auto v = e.get(key);
        if (!v) throw Error("corpus instance '" + e.name + "' needs key '" + key + "'");
        std::vector<typename F::Elem> out;
        for (const std::string& part : split_ideal_spec(*v))
            out.push_back(field.from_int(std::stoll(part)));
        return out;
    };
    if (fam == "monomial") return monomial_algebra_gens(need_int("n"), need_int("d"), field);
    if (fam == "unbounded") return unbounded_family_gens(need_int("d"), field);
    if (fam == "sixpoints")
        return six_points_instance<F>(field.from_int(need_int("a1")),
                                      field.from_int(need_int("a2")),
                                      field.from_int(need_int("a3")), field);
    if (fam == "nodal")
        return nodal_curve_instance<F>(need_int("genus"), elem_list("a"), elem_list("b"), field);
    throw Error("corpus instance '" + e.name + "': unknown family '" + fam + "'");
}

template <class F>
CorpusInstanceResult run_entry(F field, const ManifestEntry& e, const CorpusRunOptions& opt) {
    CorpusInstanceResult res;
    res.name = e.name;
    res.provenance = e.get_or("provenance", "");
    res.conjecture = e.get_or("conjecture", "false") == "true";
    if (auto exp = e.get("expect_rt")) res.expected = std::stoi(*exp);
    auto t0 = detail::Clock::now();
    try {
        QuotientRing<F> base;
        std::vector<Poly<F>> gens;
        if (e.get("family")) {
            ExampleInstance<F> inst = build_family(field, e);
            base = inst.base;
            gens = inst.gens;
            if (!res.expected && inst.expected_rt) res.expected = inst.expected_rt;
        } else {
            auto ring_text = e.get("ring");
            auto gens_text = e.get("gens");
            if (!ring_text || !gens_text)
                throw Error("corpus instance '" + e.name + "' needs ring= and gens= (or family=)");
            RingSpecData spec = parse_ring_spec(*ring_text);
            base = make_context(field, spec);
            gens = parse_ideal(*base.ring, *gens_text);
        }
        RtResult<F> rt = relation_type_of_ideal(base, std::move(gens), opt.limits);
        res.computed = rt.report.rt;
        res.exact = rt.report.exact && rt.presentation.exact();
        if (!res.exact) res.message = "inexact (degree cap or timeout hit)";
    } catch (const std::exception& ex) {
        res.message = ex.what();
    }
    res.seconds = std::chrono::duration<double>(detail::Clock::now() - t0).count();

    if (!res.computed) {
        res.outcome = res.conjecture ? CorpusInstanceResult::Outcome::info
                                     : CorpusInstanceResult::Outcome::fail;
    } else if (!res.expected) {
        res.outcome = CorpusInstanceResult::Outcome::info;
    } else if (res.conjecture) {
        res.outcome = CorpusInstanceResult::Outcome::info;
        res.message = (*res.computed == *res.expected) ? "conjecture holds on this instance"
                                                       : "conjecture FAILS on this instance";
    } else {
        res.outcome = (res.exact && *res.computed == *res.expected)
                          ? CorpusInstanceResult::Outcome::pass
                          : CorpusInstanceResult::Outcome::fail;
    }
    return res;
}

}  // namespace corpus_detail

// Runs every manifest entry (worker pool of opt.jobs), preserving input
// order in the results.
inline std::vector<CorpusInstanceResult> run_corpus(const std::vector<ManifestEntry>& entries,
                                                    const CorpusRunOptions& opt = {}) {
    std::vector<CorpusInstanceResult> results(entries.size());
    int n = static_cast<int>(entries.size());
#ifdef _OPENMP
    int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int i = 0; i < n; ++i) {
        const ManifestEntry& e = entries[static_cast<std::size_t>(i)];
        FieldSpec fs = FieldSpec::gf(32003);
        try {
            if (opt.field_override) {
                fs = *opt.field_override;
            } else if (auto ring_text = e.get("ring")) {
                fs = parse_ring_spec(*ring_text).field;
            } else if (auto field_text = e.get("field")) {
                fs = FieldSpec::parse(*field_text);
            }
            results[static_cast<std::size_t>(i)] =
                fs.kind == FieldSpec::Kind::rationals
                    ? corpus_detail::run_entry(RationalField{}, e, opt)
                    : corpus_detail::run_entry(PrimeField(fs.characteristic), e, opt);
        } catch (const std::exception& ex) {
            CorpusInstanceResult r;
            r.name = e.name;
            r.message = ex.what();
            r.outcome = CorpusInstanceResult::Outcome::fail;
            results[static_cast<std::size_t>(i)] = r;
        }
    }
    return results;
}

// Nonzero exactly when some asserted (non-conjectural) expectation failed.
inline int corpus_exit_code(const std::vector<CorpusInstanceResult>& results) {
    for (const auto& r : results)
        if (r.outcome == CorpusInstanceResult::Outcome::fail) return 1;
    return 0;
}

}  // namespace reltype
