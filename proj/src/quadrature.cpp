#include "vxe/quadrature.hpp"

#include <cmath>

namespace vxe {

namespace {

struct Panel {
    double a, fa, m, fm, b, fb, whole;
};

Panel make_panel(const std::function<double(double)>& f, double a, double fa, double b, double fb)
{
    double m = 0.5 * (a + b);
    double fm = f(m);
    return {a, fa, m, fm, b, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth)
{
    Panel left = make_panel(f, p.a, p.fa, p.m, p.fm);
    Panel right = make_panel(f, p.m, p.fm, p.b, p.fb);
    double delta = left.whole + right.whole - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left.whole + right.whole + delta / 15.0;
    return refine(f, left, 0.5 * tol, depth - 1) + refine(f, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, const SimpsonOptions& options)
{
    if (a == b)
        return 0.0;
    // A few initial panels keep a lucky first estimate from ending the
    // recursion on oscillatory or symmetric integrands.
    constexpr int kInitialPanels = 8;
    double h = (b - a) / kInitialPanels;
    double sum = 0.0;
    double x0 = a;
    double f0 = f(a);
    for (int i = 1; i <= kInitialPanels; ++i) {
        double x1 = i == kInitialPanels ? b : a + i * h;
        double f1 = f(x1);
        sum += refine(f, make_panel(f, x0, f0, x1, f1), options.abs_tol / kInitialPanels, options.max_depth);
        x0 = x1;
        f0 = f1;
    }
    return sum;
}

} // namespace vxe
