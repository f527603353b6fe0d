#pragma once

#include <cmath>
#include <functional>

namespace rankone::testsupport {

// Double-exponential (tanh-sinh) quadrature on (a, b). Handles integrable
// endpoint singularities, which is exactly what the power-law weights need.
// Nodes are placed through their distance to the nearer endpoint, which keeps
// full precision against singular integrands.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, int max_level = 11) {
    const double half = 0.5 * (b - a);
    auto eval = [&](double t) {
        double w = M_PI_2 * std::sinh(t);
        double aw = std::abs(w);
        double e2 = std::exp(-2.0 * aw);
        double off = 2.0 * e2 / (1.0 + e2);         // 1 - |tanh(w)|, stable
        double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
        double x = t >= 0 ? b - half * off : a + half * off;
        if (x <= a || x >= b) return 0.0;
        double weight = M_PI_2 * std::cosh(t) * sech2;
        double v = f(x) * weight;
        return std::isfinite(v) ? v : 0.0;
    };
    const double t_max = 6.5;
    double prev = 0, curr = 0;
    for (int level = 0; level <= max_level; ++level) {
        double h = std::pow(2.0, -level);
        double sum = eval(0.0);
        for (double t = h; t <= t_max; t += h) sum += eval(t) + eval(-t);
        curr = half * h * sum;
        if (level >= 6 && std::abs(curr - prev) <= rel_tol * std::abs(curr)) break;
        prev = curr;
    }
    return curr;
}

}  // namespace rankone::testsupport
