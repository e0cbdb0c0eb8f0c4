#pragma once

#include <map>

#include <json.hpp>

#include "reltype/blowup.hpp"

namespace reltype {

// The stable JSON report shape shared by the rt/rees/sym/gr commands:
// { "rt": int, "exact": bool,
//   "generators": [ { "poly": str, "tdeg": int, "xdeg": int|null } ],
//   "timings_ms": { ... } }
template <class F>
nlohmann::ordered_json report_json(int rt, bool exact, const std::vector<Poly<F>>& gens,
                                   const std::map<std::string, double>& timings_ms) {
    nlohmann::ordered_json j;
    j["rt"] = rt;
    j["exact"] = exact;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& g : gens) {
        nlohmann::ordered_json item;
        item["poly"] = g.to_string();
        item["tdeg"] = g.t_degree();
        if (g.is_x_homogeneous())
            item["xdeg"] = g.x_degree();
        else
            item["xdeg"] = nullptr;
        arr.push_back(std::move(item));
    }
    j["generators"] = std::move(arr);
    nlohmann::ordered_json t;
    for (const auto& [k, v] : timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
    return j;
}

template <class F>
nlohmann::ordered_json report_json(const RtResult<F>& r,
                                   std::map<std::string, double> timings_ms = {}) {
    timings_ms.emplace("rees_ideal", r.presentation.seconds * 1000.0);
    timings_ms.emplace("relation_type", r.report.seconds * 1000.0);
    return report_json<F>(r.report.rt, r.report.exact && r.presentation.exact(),
                          r.report.minimal_generators, timings_ms);
}

}  // namespace reltype
