#pragma once

#include <cmath>
#include <functional>
#include <optional>

namespace mcurve {

struct RootBracket {
    double lower = 0.0;
    double upper = 0.0;
};

struct RootSolverOptions {
    double residual_tolerance = 1e-14;
    int max_iterations = 400;
    /// Bracket doublings attempted when the initial interval does not straddle a sign change.
    int max_expansions = 12;
};

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Widens [lower, upper] geometrically until f changes sign. Returns nullopt if it never does.
std::optional<RootBracket> expand_bracket(const std::function<double(double)>& f, RootBracket bracket,
                                          int max_expansions);

/// Bisection safeguarded secant (Illinois regula falsi, forced bisection whenever the bracket
/// fails to halve). Stops when |f| <= residual_tolerance or the bracket collapses to adjacent
/// doubles. Returns nullopt if the bracket does not straddle a sign change after expansion.
std::optional<RootResult> find_root(const std::function<double(double)>& f, RootBracket bracket,
                                    const RootSolverOptions& options = {});

}  // namespace mcurve
