#pragma once

#include <functional>

namespace vxe {

struct SimpsonOptions {
    double abs_tol = 1e-10;
    int max_depth = 40;
};

// Adaptive Simpson quadrature with Richardson correction over eight
// initial panels that share abs_tol. A panel is
// accepted when |S_left + S_right - S_whole| <= 15 * tol; the tolerance
// halves with each bisection. Panels that reach max_depth are accepted as
// they are.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const SimpsonOptions& options = {});

} // namespace vxe
