#include "mcurve/solver.hpp"

#include <utility>

namespace mcurve {

std::optional<RootBracket> expand_bracket(const std::function<double(double)>& f, RootBracket b, int max_expansions) {
    if (b.lower > b.upper) std::swap(b.lower, b.upper);
    double fl = f(b.lower);
    double fu = f(b.upper);
    for (int i = 0;; ++i) {
        if (std::isfinite(fl) && std::isfinite(fu) && (fl == 0.0 || fu == 0.0 || (fl < 0.0) != (fu < 0.0))) {
            return b;
        }
        if (i >= max_expansions) return std::nullopt;
        const double width = b.upper - b.lower;
        b.lower -= width;
        b.upper += width;
        fl = f(b.lower);
        fu = f(b.upper);
    }
}

std::optional<RootResult> find_root(const std::function<double(double)>& f, RootBracket bracket,
                                    const RootSolverOptions& options) {
    auto expanded = expand_bracket(f, bracket, options.max_expansions);
    if (!expanded) return std::nullopt;

    double a = expanded->lower;
    double b = expanded->upper;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return RootResult{a, 0.0, 0};
    if (fb == 0.0) return RootResult{b, 0.0, 0};

    RootResult best{std::abs(fa) < std::abs(fb) ? a : b, std::abs(fa) < std::abs(fb) ? fa : fb, 0};
    int side = 0;  // which endpoint was retained last time (Illinois weighting)
    double previous_width = 2.0 * (b - a);

    for (int it = 1; it <= options.max_iterations; ++it) {
        const double width = b - a;
        double x = (a * fb - b * fa) / (fb - fa);
        const bool stalled = width > 0.5 * previous_width;
        if (stalled || !(x > a && x < b)) x = a + 0.5 * width;
        previous_width = width;

        const double fx = f(x);
        best = std::abs(fx) < std::abs(best.residual) ? RootResult{x, fx, it} : RootResult{best.root, best.residual, it};
        if (std::abs(fx) <= options.residual_tolerance) return RootResult{x, fx, it};

        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
            if (side == -1) fb *= 0.5;
            side = -1;
        } else {
            b = x;
            fb = fx;
            if (side == +1) fa *= 0.5;
            side = +1;
        }
        if (!(a < b) || std::nextafter(a, b) == b) break;
    }
    return best;
}

}  // namespace mcurve
