#pragma once

// JSON renderings of the library's report types. Non-finite doubles become
// the strings "inf", "-inf" or "nan" so the output stays valid JSON.

#include <booth/acceptance.hpp>
#include <booth/preschwarzian.hpp>
#include <booth/radius.hpp>
#include <booth/report.hpp>

#include <json.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace booth::cli {

using json = nlohmann::ordered_json;

inline json number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

inline json point(complex z) { return json::array({number(z.real()), number(z.imag())}); }

inline json optional_point(const std::optional<complex>& z) { return z ? point(*z) : json(nullptr); }

inline json to_json(const bound_report& r)
{
    json j;
    j["functional"] = r.functional_name;
    j["observed"] = number(r.observed);
    j["bound"] = number(r.bound);
    j["tolerance"] = number(r.tolerance);
    j["sense"] = r.sense == bound_sense::upper ? "upper" : "lower";
    j["verdict"] = to_string(r.result);
    j["witness"] = r.witness;
    j["witness_point"] = optional_point(r.witness_point);
    j["samples"] = r.samples;
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

inline json to_json(const std::vector<bound_report>& reps)
{
    json a = json::array();
    for (const auto& r : reps) {
        a.push_back(to_json(r));
    }
    return a;
}

inline json to_json(const radius_result& r)
{
    json j;
    j["alpha"] = number(r.alpha);
    j["r_prime"] = number(r.r_prime);
    j["r_doubleprime"] = number(r.r_doubleprime);
    j["radius"] = number(r.radius);
    j["bracket"] = json::array({number(r.bracket_lo), number(r.bracket_hi)});
    j["residual_l"] = number(r.residual_l);
    j["residual_m"] = number(r.residual_m);
    return j;
}

inline json to_json(const norm_estimate& e)
{
    json j;
    j["value"] = number(e.value);
    j["arg_witness"] = point(e.arg_witness);
    j["diverged"] = e.diverged;
    j["refinement_depth"] = e.refinement_depth;
    json d = json::array();
    for (double v : e.depth_values) {
        d.push_back(number(v));
    }
    j["depth_values"] = d;
    return j;
}

inline json to_json(const norm_config& c)
{
    json j;
    j["rings"] = c.rings;
    j["angles"] = c.angles;
    j["levels"] = c.levels;
    j["factor"] = c.factor;
    j["top_k"] = c.top_k;
    j["ring_limit"] = c.ring_limit;
    j["escape"] = c.escape;
    j["growth"] = c.growth;
    j["confirm_levels"] = c.confirm_levels;
    return j;
}

inline json to_json(const cho_comparison& c)
{
    json j;
    j["alpha"] = number(c.alpha);
    j["cho_root"] = c.cho_root ? number(*c.cho_root) : json(nullptr);
    j["radius_bs"] = number(c.radius);
    j["difference"] = number(c.difference);
    j["discrepancy"] = c.discrepancy;
    j["probe_r"] = number(c.probe_r);
    j["h_at_probe"] = number(c.h_at_probe);
    j["f1_at_probe"] = number(c.f1_at_probe);
    j["theorem_confirmed"] = c.theorem_confirmed;
    return j;
}

inline json to_json(const check_result& c)
{
    json j;
    j["criterion"] = c.id;
    j["title"] = c.title;
    j["passed"] = c.passed;
    j["summary"] = c.summary;
    j["reports"] = to_json(c.reports);
    return j;
}

} // namespace booth::cli
