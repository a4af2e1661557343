#pragma once

#include <complex>
#include <cstdio>
#include <cstddef>
#include <optional>
#include <string>

namespace booth {

/// %.12g rendering for names and notes; locale independent and stable.
inline std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

enum class verdict { holds, violated };

/// Direction of a checked inequality: observed <= bound or observed >= bound.
enum class bound_sense { upper, lower };

inline const char* to_string(verdict v) { return v == verdict::holds ? "holds" : "violated"; }

/// Outcome of checking one functional against a claimed bound.
struct bound_report {
    std::string functional_name;
    double observed = 0.0;  // max observed for upper bounds, min for lower
    double bound = 0.0;
    double tolerance = 0.0;
    bound_sense sense = bound_sense::upper;
    std::string witness;  // description of the map / function attaining `observed`
    std::optional<std::complex<double>> witness_point;
    std::size_t samples = 0;
    std::string note;  // caveats, e.g. truncation effects
    verdict result = verdict::holds;

    [[nodiscard]] bool holds() const noexcept { return result == verdict::holds; }

    /// Recomputes `result` from observed, bound and tolerance.
    void settle() noexcept
    {
        const bool bad = sense == bound_sense::upper ? observed > bound + tolerance
                                                     : observed < bound - tolerance;
        // NaN never passes
        result = (bad || observed != observed) ? verdict::violated : verdict::holds;
    }
};

inline bound_report make_report(std::string name, double observed, double bound, double tolerance,
                                bound_sense sense = bound_sense::upper)
{
    bound_report r;
    r.functional_name = std::move(name);
    r.observed = observed;
    r.bound = bound;
    r.tolerance = tolerance;
    r.sense = sense;
    r.settle();
    return r;
}

} // namespace booth
