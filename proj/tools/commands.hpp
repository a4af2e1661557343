#pragma once

// booth_gft command line: argument parsing, dispatch and artifact emission.
// Exit status: 0 all verdicts hold, 1 a verdict failed, 2 bad configuration.

#include "report_json.hpp"

#include <booth/acceptance.hpp>
#include <booth/class_member.hpp>
#include <booth/coefficients.hpp>
#include <booth/domain.hpp>
#include <booth/preschwarzian.hpp>
#include <booth/radius.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef BOOTH_VERSION
#define BOOTH_VERSION "0.0.0"
#endif

namespace booth::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict = 1;
inline constexpr int exit_config = 2;

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct run_config {
    std::string command;
    std::string mode;  // verify target
    std::vector<double> alphas{0.5};
    bool sweep = false;
    double step = 0.05;
    std::uint64_t seed = 0;
    std::size_t samples = 0;  // 0: command default
    std::size_t order = 16;
    std::string cls = "bs";
    std::string function = "f1";
    std::string format;
    std::string output;
    std::string csv;
    bool csv_flag = false;
    std::size_t points = 720;
    std::size_t workers = 0;
};

namespace detail {

inline class_tag parse_class(const std::string& s) { return s == "bk" ? class_tag::bk : class_tag::bs; }

inline double single_alpha(const run_config& cfg)
{
    if (cfg.alphas.size() != 1) {
        throw config_error("exactly one --alpha is expected for " + cfg.command);
    }
    return cfg.alphas.front();
}

inline std::vector<double> sweep_alphas(double step)
{
    if (!(step > 0.0 && step <= 1.0)) {
        throw config_error("--step must lie in (0, 1]");
    }
    const auto n = static_cast<long>(std::floor(1.0 / step + 1e-9));
    std::vector<double> a;
    for (long k = 0; k <= n; ++k) {
        // k * step rounded to 12 digits keeps 0.05-style grids exact in output
        a.push_back(std::round(static_cast<double>(k) * step * 1e12) / 1e12);
    }
    if (a.back() < 1.0) {
        a.push_back(1.0);
    }
    return a;
}

inline std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline json envelope(const run_config& cfg, const std::string& command, json config, json tolerances, json result,
                     bool passed)
{
    json j;
    j["tool"] = "booth_gft";
    j["version"] = BOOTH_VERSION;
    j["command"] = command;
    config["seed"] = cfg.seed;
    j["config"] = std::move(config);
    j["tolerances"] = std::move(tolerances);
    j["result"] = std::move(result);
    j["passed"] = passed;
    return j;
}

/// Sends `text` to --output (or `out` when empty).
inline void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw config_error("cannot open output file " + path);
    }
    f << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline int verdict_status(bool passed) { return passed ? exit_ok : exit_verdict; }

inline void summarize(std::ostream& err, const std::vector<bound_report>& reps)
{
    for (const auto& r : reps) {
        err << (r.holds() ? "  ok   " : "  FAIL ") << r.functional_name << ": observed " << fmt(r.observed)
            << (r.sense == bound_sense::upper ? " <= " : " >= ") << fmt(r.bound) << " (tol " << fmt(r.tolerance)
            << ")\n";
    }
}

// coeffs

inline int cmd_coeffs(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const double a = single_alpha(cfg);
    const std::size_t order = cfg.order;
    class_member m = [&]() {
        const std::string& fn = cfg.function;
        if (fn == "g1") {
            return extremal_bk(1, a, order);
        }
        if (fn == "g2") {
            return extremal_bk(3, a, order);
        }
        if (fn == "identity") {
            return make_member(parse_class(cfg.cls), schwarz_map::zero(order), a, order);
        }
        if (fn == "sample") {
            auto s = make_member(parse_class(cfg.cls), sample_schwarz(cfg.seed, 5, order), a, order);
            s.name = std::string("sample-") + to_string(s.tag);
            return s;
        }
        if (fn.size() >= 2 && fn[0] == 'f') {
            unsigned n = 0;
            try {
                std::size_t used = 0;
                n = static_cast<unsigned>(std::stoul(fn.substr(1), &used));
                if (used != fn.size() - 1) {
                    n = 0;
                }
            } catch (const std::exception&) {
                n = 0;
            }
            if (n >= 1 && n <= order) {
                return extremal_fn(n, a, order);
            }
        }
        throw config_error("unknown --function " + fn + " (expected f<n>, g1, g2, identity or sample)");
    }();
    const auto gamma = log_coefficients(m.f, order - 1);

    if (cfg.format == "csv") {
        std::string s = "k,re_a,im_a,abs_a,re_gamma,im_gamma,abs_gamma\n";
        for (std::size_t k = 1; k <= order; ++k) {
            const complex ak = m.a(k);
            s += std::to_string(k) + "," + csv_number(ak.real()) + "," + csv_number(ak.imag()) + "," +
                 csv_number(std::abs(ak));
            if (k < order) {
                const complex g = gamma[k - 1];
                s += "," + csv_number(g.real()) + "," + csv_number(g.imag()) + "," + csv_number(std::abs(g));
            } else {
                s += ",,,";
            }
            s += "\n";
        }
        emit(cfg.output, s, out);
    } else {
        json a_list = json::array(), g_list = json::array();
        for (std::size_t k = 0; k <= order; ++k) {
            a_list.push_back(point(m.a(k)));
        }
        for (auto g : gamma) {
            g_list.push_back(point(g));
        }
        json result;
        result["function"] = m.name;
        result["class"] = to_string(m.tag);
        result["omega"] = m.omega.describe();
        result["a"] = a_list;
        result["gamma"] = g_list;
        json config{{"function", cfg.function}, {"class", to_string(m.tag)}, {"alpha", a}, {"order", order}};
        emit(cfg.output, dump(envelope(cfg, "coeffs", config, json::object(), result, true)), out);
    }
    err << "coeffs: " << m.name << " alpha=" << fmt(a) << " order=" << order << " a2=" << fmt(std::abs(m.a(2)))
        << " a3=" << fmt(std::abs(m.a(3))) << " a4=" << fmt(std::abs(m.a(4))) << "\n";
    return exit_ok;
}

// verify

inline int cmd_verify_bounds(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const double a = single_alpha(cfg);
    const auto tag = parse_class(cfg.cls);
    sampler_config sc;
    sc.seed = cfg.seed;
    sc.samples = cfg.samples ? cfg.samples : 10000;
    sc.workers = cfg.workers;
    auto reps = falsify_class_bounds(tag, a, sc);
    const auto hit = attainment_reports(tag, a, sc.tolerance);
    reps.insert(reps.end(), hit.begin(), hit.end());
    const bool passed = booth::detail::all_hold(reps);

    json config{{"class", to_string(tag)},       {"alpha", a},
                {"samples", sc.samples},          {"monomials", sc.monomials},
                {"max_degree", sc.max_degree},    {"zero_radius", sampler_zero_radius},
                {"order", std::max<std::size_t>(sc.order, tag == class_tag::bs ? max_gamma_index + 1 : 0)}};
    json tol{{"bound", sc.tolerance}, {"attainment", sc.tolerance}};
    emit(cfg.output, dump(envelope(cfg, "verify bounds", config, tol, to_json(reps), passed)), out);
    err << "verify bounds " << to_string(tag) << " alpha=" << fmt(a) << "\n";
    summarize(err, reps);
    return verdict_status(passed);
}

inline int cmd_verify_radius(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const double a = single_alpha(cfg);
    const auto tag = parse_class(cfg.cls);
    json result, config, tol;
    bool passed = false;
    if (tag == class_tag::bs) {
        radius_check_options opt;
        opt.seed = cfg.seed;
        if (cfg.samples) {
            opt.members = cfg.samples;
        }
        const auto v = verify_radius_bs(a, opt);
        passed = v.passed();
        result["radius"] = to_json(v.radius);
        result["f1_inside"] = number(v.f1_inside);
        result["f1_outside"] = number(v.f1_outside);
        result["sign_change"] = v.sign_change;
        result["f1_near_pole"] = v.f1_near_pole ? number(*v.f1_near_pole) : json(nullptr);
        const std::vector<bound_report> reps{v.psi_min, v.h_increase, v.f1_circle_min, v.member_bound};
        result["reports"] = to_json(reps);
        config = {{"class", "bs"},
                  {"alpha", a},
                  {"psi_step", opt.psi_step},
                  {"psi_max", opt.psi_max},
                  {"h_samples", opt.h_samples},
                  {"circle_angles", opt.circle_angles},
                  {"members", opt.members},
                  {"member_angles", opt.member_angles}};
        tol = {{"psi", 1e-12}, {"h_monotone", 1e-12}, {"sign_offset", opt.sign_offset}, {"member_bound", 1e-9}};
        err << "verify radius bs alpha=" << fmt(a) << " radius=" << fmt(v.radius.radius)
            << " sign_change=" << (v.sign_change ? "yes" : "no") << "\n";
        summarize(err, reps);
    } else {
        const std::size_t members = cfg.samples ? cfg.samples : 100;
        const auto v = verify_radius_bk(a, members, cfg.seed);
        passed = v.passed();
        result["radius"] = number(v.radius);
        result["bisection_root"] = number(v.bisection_root);
        result["g1_inside"] = number(v.g1_inside);
        result["g1_outside"] = number(v.g1_outside);
        result["sign_change"] = v.sign_change;
        result["member_positivity"] = v.member_positivity ? to_json(*v.member_positivity) : json(nullptr);
        config = {{"class", "bk"}, {"alpha", a}, {"members", members}, {"series_order", 160}};
        tol = {{"closed_form_vs_bisection", 1e-12}, {"member_positivity", 1e-8}, {"sign_offset", 1e-6}};
        err << "verify radius bk alpha=" << fmt(a) << " radius=" << fmt(v.radius)
            << " sign_change=" << (v.sign_change ? "yes" : "no") << "\n";
        if (v.member_positivity) {
            summarize(err, {*v.member_positivity});
        }
    }
    emit(cfg.output, dump(envelope(cfg, "verify radius", config, tol, result, passed)), out);
    return verdict_status(passed);
}

inline int cmd_verify_norm(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const double a = single_alpha(cfg);
    const auto tag = parse_class(cfg.cls);
    const norm_config nc;
    std::vector<bound_report> reps;
    json config{{"class", to_string(tag)}, {"alpha", a}, {"grid", to_json(nc)}};
    if (tag == class_tag::bk) {
        const std::size_t samples = cfg.samples ? cfg.samples : 1000;
        reps = bk_norm_sweep({a}, samples, cfg.seed, nc, 1e-4, cfg.workers);
        config["samples"] = samples;
    } else {
        // f_1 has a pole of P inside the disk exactly when alpha > 0.
        const auto e = estimate_norm(f1_evaluator(a), nc);
        auto r = make_report("f1 norm estimate diverges", e.diverged ? 1.0 : 0.0, a > 0.0 ? 1.0 : 0.0, 0.0,
                             a > 0.0 ? bound_sense::lower : bound_sense::upper);
        r.witness = "f1";
        r.witness_point = e.arg_witness;
        r.note = "estimate " + fmt(e.value) + " after " + std::to_string(e.refinement_depth) + " refinements";
        reps.push_back(std::move(r));
        reps.push_back(make_report("norm(identity)", estimate_norm(identity_pre_schwarzian(), nc).value, 0.0, 0.0));
    }
    const bool passed = booth::detail::all_hold(reps);
    emit(cfg.output, dump(envelope(cfg, "verify norm", config, {{"norm", 1e-4}}, to_json(reps), passed)), out);
    err << "verify norm " << to_string(tag) << " alpha=" << fmt(a) << "\n";
    summarize(err, reps);
    return verdict_status(passed);
}

// radius

inline int cmd_radius(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.sweep) {
        const auto alphas = sweep_alphas(cfg.step);
        const bool as_csv = cfg.csv_flag || cfg.format == "csv";
        if (as_csv) {
            std::string s = "alpha,r_prime,r_doubleprime,radius_bs,radius_bk,residual_l,residual_m\n";
            for (double a : alphas) {
                const auto r = radius_bs(a);
                s += csv_number(a) + "," + csv_number(r.r_prime) + "," + csv_number(r.r_doubleprime) + "," +
                     csv_number(r.radius) + "," + csv_number(radius_bk(a)) + "," + csv_number(r.residual_l) + "," +
                     csv_number(r.residual_m) + "\n";
            }
            emit(cfg.csv.empty() ? cfg.output : cfg.csv, s, out);
        } else {
            json rows = json::array();
            for (double a : alphas) {
                json row = to_json(radius_bs(a));
                row["radius_bk"] = radius_bk(a);
                rows.push_back(row);
            }
            json config{{"sweep", true}, {"step", cfg.step}};
            emit(cfg.output, dump(envelope(cfg, "radius", config, {{"bisection", 1e-13}}, rows, true)), out);
        }
        err << "radius sweep: " << alphas.size() << " alphas\n";
        return exit_ok;
    }
    const double a = single_alpha(cfg);
    const auto tag = parse_class(cfg.cls);
    json result;
    if (tag == class_tag::bs) {
        const auto r = radius_bs(a);
        result = to_json(r);
        err << "radius bs alpha=" << fmt(a) << ": " << fmt(r.radius) << "\n";
    } else {
        const double r = radius_bk(a);
        result["alpha"] = a;
        result["radius"] = r;
        result["residual_m"] = std::abs(m_alpha(a, r));
        err << "radius bk alpha=" << fmt(a) << ": " << fmt(r) << "\n";
    }
    json config{{"class", to_string(tag)}, {"alpha", a}};
    emit(cfg.output, dump(envelope(cfg, "radius", config, {{"bisection", 1e-13}}, result, true)), out);
    return exit_ok;
}

// norm

inline int cmd_norm(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const double a = single_alpha(cfg);
    const std::string& fn = cfg.function;
    pre_schwarzian p;
    std::string omega;
    if (fn == "identity") {
        p = identity_pre_schwarzian();
    } else if (fn == "f1") {
        p = f1_evaluator(a);
    } else if (fn == "g1") {
        p = g1_evaluator(a);
    } else if (fn == "g2") {
        p = g2_evaluator(a);
    } else if (fn == "sample") {
        const auto w = sample_schwarz(cfg.seed, 5, 8);
        omega = w.describe();
        p = bk_member_evaluator(w, a);
    } else {
        throw config_error("unknown --function " + fn + " (expected identity, f1, g1, g2 or sample)");
    }
    const norm_config nc;
    const auto e = estimate_norm(p, nc);
    json result = to_json(e);
    result["function"] = fn;
    if (!omega.empty()) {
        result["omega"] = omega;
    }
    json config{{"function", fn}, {"alpha", a}, {"grid", to_json(nc)}};
    emit(cfg.output, dump(envelope(cfg, "norm", config, {{"escape", nc.escape}, {"growth", nc.growth}}, result, true)),
         out);
    err << "norm " << fn << " alpha=" << fmt(a) << ": " << fmt(e.value) << (e.diverged ? " (diverged)" : "") << "\n";
    return exit_ok;
}

// plot-domain

inline std::string svg_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline int cmd_plot_domain(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.points < 8) {
        throw config_error("--points must be at least 8");
    }
    const double clip = 3.0;
    std::string s;
    if (cfg.format == "csv") {
        s = "alpha,curve,index,x,y\n";
        for (double a : cfg.alphas) {
            const auto curves = domain_boundary(a, cfg.points, clip);
            for (std::size_t c = 0; c < curves.size(); ++c) {
                for (std::size_t i = 0; i < curves[c].size(); ++i) {
                    s += csv_number(a) + "," + std::to_string(c) + "," + std::to_string(i) + "," +
                         csv_number(curves[c][i].real()) + "," + csv_number(curves[c][i].imag()) + "\n";
                }
            }
        }
    } else {
        // y is flipped so the picture has the usual orientation
        const double half = 2.0;
        s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + svg_number(-half) + " " + svg_number(-half) + " " +
            svg_number(2 * half) + " " + svg_number(2 * half) + "\" width=\"600\" height=\"600\">\n";
        s += "<line x1=\"-2\" y1=\"0\" x2=\"2\" y2=\"0\" stroke=\"#999999\" stroke-width=\"0.005\"/>\n";
        s += "<line x1=\"0\" y1=\"-2\" x2=\"0\" y2=\"2\" stroke=\"#999999\" stroke-width=\"0.005\"/>\n";
        for (double a : cfg.alphas) {
            const auto curves = domain_boundary(a, cfg.points, half);
            for (const auto& curve : curves) {
                const bool closed = curve.size() > 2;
                s += std::string(closed ? "<polygon" : "<polyline") + " data-alpha=\"" + fmt(a) + "\" points=\"";
                const std::size_t n = closed ? curve.size() - 1 : curve.size();
                for (std::size_t i = 0; i < n; ++i) {
                    s += (i ? " " : "") + svg_number(curve[i].real()) + "," + svg_number(-curve[i].imag());
                }
                s += "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.01\"/>\n";
            }
        }
        s += "</svg>\n";
    }
    emit(cfg.output, s, out);
    err << "plot-domain: " << cfg.alphas.size() << " alpha value(s), " << cfg.points << " points\n";
    return exit_ok;
}

// refute-cho

inline int cmd_refute_cho(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const auto alphas = sweep_alphas(cfg.step);
    std::vector<cho_comparison> rows;
    bool refuted = false;
    for (double a : alphas) {
        rows.push_back(refute_cho(a));
        refuted = refuted || (rows.back().discrepancy && rows.back().theorem_confirmed);
    }
    if (cfg.csv_flag || cfg.format == "csv") {
        std::string s = "alpha,cho_root,radius_bs,difference,discrepancy,probe_r,h_at_probe,f1_at_probe,theorem_confirmed\n";
        for (const auto& c : rows) {
            s += csv_number(c.alpha) + "," + (c.cho_root ? csv_number(*c.cho_root) : std::string()) + "," +
                 csv_number(c.radius) + "," + csv_number(c.difference) + "," + (c.discrepancy ? "1" : "0") + "," +
                 csv_number(c.probe_r) + "," + csv_number(c.h_at_probe) + "," + csv_number(c.f1_at_probe) + "," +
                 (c.theorem_confirmed ? "1" : "0") + "\n";
        }
        emit(cfg.csv.empty() ? cfg.output : cfg.csv, s, out);
    } else {
        json table = json::array();
        for (const auto& c : rows) {
            table.push_back(to_json(c));
        }
        json config{{"step", cfg.step}, {"alphas", alphas.size()}};
        emit(cfg.output, dump(envelope(cfg, "refute-cho", config, {{"discrepancy", 1e-6}}, table, refuted)), out);
    }
    for (const auto& c : rows) {
        err << "  alpha=" << fmt(c.alpha) << " cho=" << (c.cho_root ? fmt(*c.cho_root) : "none")
            << " radius_bs=" << fmt(c.radius) << " diff=" << fmt(c.difference)
            << (c.discrepancy && c.theorem_confirmed ? "  radius_bs confirmed" : "") << "\n";
    }
    err << (refuted ? "conjectured radius differs from radius_bs\n" : "no discrepancy found\n");
    return refuted ? exit_ok : exit_verdict;
}

// all-checks

inline check_options options_for(const run_config& cfg)
{
    check_options opt;
    opt.seed = cfg.seed;
    if (cfg.samples) {
        opt.samples = cfg.samples;
    }
    opt.workers = cfg.workers;
    return opt;
}

inline int cmd_all_checks(const run_config& cfg, std::ostream& out, std::ostream& err)
{
    const auto opt = options_for(cfg);
    json results = json::array();
    bool passed = true;
    for (auto fn : all_check_functions()) {
        const auto c = fn(opt);
        passed = passed && c.passed;
        results.push_back(to_json(c));
        err << (c.passed ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << c.summary << "\n";
    }
    json config{{"samples", opt.samples}, {"norm_samples", opt.norm_samples}, {"bk_members", opt.bk_members}};
    json tol{{"bounds", 1e-9}, {"radius_bs_0", 1e-10}, {"sign_change", 1e-6}, {"psi", 1e-12},
             {"closed_form", 1e-12}, {"member_positivity", 1e-8}, {"cho", 1e-6}, {"norm", 1e-4},
             {"round_trip", 1e-12}, {"boundary_residual", 1e-10}};
    emit(cfg.output, dump(envelope(cfg, "all-checks", config, tol, results, passed)), out);
    return verdict_status(passed);
}

} // namespace detail

/// Parses and runs one command. `workers` overrides the thread count
/// (0: BOOTH_GFT_THREADS or hardware concurrency).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::size_t workers = 0)
{
    CLI::App app{"Coefficient, radius and pre-Schwarzian checks for the Booth-lemniscate classes BS(alpha), BK(alpha)",
                 "booth_gft"};
    app.set_version_flag("--version", BOOTH_VERSION);
    app.require_subcommand(1);

    run_config cfg;
    cfg.workers = workers;
    auto alpha_range = CLI::Range(0.0, 1.0);

    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alphas, "class parameter in [0, 1]")->check(alpha_range)->expected(1);
    };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str(); };
    auto add_samples = [&](CLI::App* sub) {
        sub->add_option("--samples", cfg.samples, "number of sampled Schwarz maps / members")
            ->check(CLI::PositiveNumber);
    };
    auto add_class = [&](CLI::App* sub) {
        sub->add_option("--class", cfg.cls, "function class")->check(CLI::IsMember({"bs", "bk"}))->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output, "output file (default stdout)"); };
    std::map<const CLI::App*, std::string> formats;
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed, std::string def) {
        auto& slot = formats[sub];
        slot = std::move(def);
        sub->add_option("--format", slot, "output format")
            ->check(CLI::IsMember(std::move(allowed)))
            ->capture_default_str();
    };

    auto* coeffs = app.add_subcommand("coeffs", "Taylor and logarithmic coefficients of a member");
    coeffs->add_option("--function", cfg.function, "f<n>, g1, g2, identity or sample")->capture_default_str();
    add_alpha(coeffs);
    add_class(coeffs);
    add_seed(coeffs);
    coeffs->add_option("--order", cfg.order, "truncation order")->check(CLI::Range(8, 128))->capture_default_str();
    add_format(coeffs, {"json", "csv"}, "json");
    add_output(coeffs);

    auto* verify = app.add_subcommand("verify", "falsification runs: bounds, radius or norm");
    verify->add_option("target", cfg.mode, "bounds, radius or norm")
        ->required()
        ->check(CLI::IsMember({"bounds", "radius", "norm"}));
    add_alpha(verify);
    add_class(verify);
    add_seed(verify);
    add_samples(verify);
    add_format(verify, {"json"}, "json");
    add_output(verify);

    auto* radius = app.add_subcommand("radius", "radius of convexity");
    add_alpha(radius);
    add_class(radius);
    radius->add_flag("--sweep", cfg.sweep, "tabulate over an alpha grid");
    radius->add_option("--step", cfg.step, "sweep step")->capture_default_str();
    auto* radius_csv = radius->add_option("--csv", cfg.csv, "write the sweep as CSV (to PATH if given)")->expected(0, 1);
    add_format(radius, {"json", "csv"}, "json");
    add_output(radius);

    auto* norm = app.add_subcommand("norm", "pre-Schwarzian norm estimate");
    cfg.function = "f1";
    norm->add_option("--function", cfg.function, "identity, f1, g1, g2 or sample")
        ->check(CLI::IsMember({"identity", "f1", "g1", "g2", "sample"}))
        ->capture_default_str();
    add_alpha(norm);
    add_seed(norm);
    add_format(norm, {"json"}, "json");
    add_output(norm);

    auto* plot = app.add_subcommand("plot-domain", "boundary of Omega(alpha) as SVG or CSV");
    plot->add_option("--alpha", cfg.alphas, "class parameter(s) in [0, 1]")->check(alpha_range);
    plot->add_option("--points", cfg.points, "points per boundary curve")->capture_default_str();
    add_format(plot, {"svg", "csv"}, "svg");
    add_output(plot);

    auto* cho = app.add_subcommand("refute-cho", "compare the conjectured radius with radius_bs over an alpha sweep");
    cho->add_option("--step", cfg.step, "sweep step")->capture_default_str();
    auto* cho_csv = cho->add_option("--csv", cfg.csv, "emit CSV (to PATH if given)")->expected(0, 1);
    add_format(cho, {"json", "csv"}, "json");
    add_output(cho);

    auto* all = app.add_subcommand("all-checks", "run every acceptance check");
    add_seed(all);
    add_samples(all);
    add_format(all, {"json"}, "json");
    add_output(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_config;
    }

    cfg.csv_flag = radius_csv->count() > 0 || cho_csv->count() > 0;
    if (plot->parsed() && plot->get_option("--alpha")->count() == 0) {
        cfg.alphas = {0.25, 0.5, 0.75, 1.0};
    }
    for (const auto& [sub, f] : formats) {
        if (sub->parsed()) {
            cfg.format = f;
        }
    }
    try {
        if (coeffs->parsed()) {
            cfg.command = "coeffs";
            return detail::cmd_coeffs(cfg, out, err);
        }
        if (verify->parsed()) {
            cfg.command = "verify " + cfg.mode;
            if (cfg.mode == "bounds") {
                return detail::cmd_verify_bounds(cfg, out, err);
            }
            if (cfg.mode == "radius") {
                return detail::cmd_verify_radius(cfg, out, err);
            }
            return detail::cmd_verify_norm(cfg, out, err);
        }
        if (radius->parsed()) {
            cfg.command = "radius";
            return detail::cmd_radius(cfg, out, err);
        }
        if (norm->parsed()) {
            cfg.command = "norm";
            return detail::cmd_norm(cfg, out, err);
        }
        if (plot->parsed()) {
            cfg.command = "plot-domain";
            return detail::cmd_plot_domain(cfg, out, err);
        }
        if (cho->parsed()) {
            cfg.command = "refute-cho";
            return detail::cmd_refute_cho(cfg, out, err);
        }
        cfg.command = "all-checks";
        return detail::cmd_all_checks(cfg, out, err);
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    }
}

} // namespace booth::cli
