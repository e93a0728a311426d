#include "wsinterp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsinterp {

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
            QuadratureResult& acc)
{
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    acc.evaluations += 2;
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;

    // below this the difference is rounding noise and halving cannot help
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
    const bool ok = std::abs(delta) <= std::max(15.0 * tol, noise);
    if (ok || depth <= 0) {
        if (!ok) acc.converged = false;
        // Richardson correction
        acc.value += left + right + delta / 15.0;
        acc.error_estimate += std::abs(delta) / 15.0;
        return;
    }
    refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, acc);
    refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, acc);
}

void integrate_into(const std::function<double(double)>& f, double a, double b, double tol,
                    int max_depth, QuadratureResult& acc)
{
    if (a == b) return;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    acc.evaluations += 3;
    refine(f, {a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tol, max_depth, acc);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_depth)
{
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_simpson: tolerance must be positive");
    QuadratureResult acc;
    integrate_into(f, a, b, tol, max_depth, acc);
    return acc;
}

QuadratureResult adaptive_simpson_piecewise(const std::function<double(double)>& f,
                                            std::span<const double> breakpoints, double tol,
                                            int max_depth)
{
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_simpson: tolerance must be positive");
    if (breakpoints.size() < 2)
        throw std::invalid_argument("adaptive_simpson: need at least two breakpoints");
    const double total = breakpoints.back() - breakpoints.front();
    QuadratureResult acc;
    if (total == 0.0) return acc;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (b < a) throw std::invalid_argument("adaptive_simpson: breakpoints must be sorted");
        integrate_into(f, a, b, tol * (b - a) / total, max_depth, acc);
    }
    return acc;
}

}  // namespace wsinterp
