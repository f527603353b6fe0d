#pragma once

#include "rankone/kernel.hpp"

#include <functional>
#include <vector>

namespace rankone::testsupport {

using PointFn = std::function<double(std::span<const double>, std::span<const double>)>;

// Central second-order stencils; h = 1e-4 balances truncation and
// cancellation for the smooth kernels at generic points.
inline constexpr double kFdStep = 1e-4;

// sum_i d^2/dx_i^2 f(x, y).
inline double fd_laplacian_x(const PointFn& f, std::vector<double> x,
                             const std::vector<double>& y, double h = kFdStep) {
    double center = f(x, y);
    double acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double keep = x[i];
        x[i] = keep + h;
        double up = f(x, y);
        x[i] = keep - h;
        double dn = f(x, y);
        x[i] = keep;
        acc += (up - 2.0 * center + dn) / (h * h);
    }
    return acc;
}

// sum_i d^2/dx_i dy_i f(x, y).
inline double fd_grad_dot_grad(const PointFn& f, std::vector<double> x, std::vector<double> y,
                               double h = kFdStep) {
    double acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double kx = x[i], ky = y[i];
        x[i] = kx + h;
        y[i] = ky + h;
        double pp = f(x, y);
        y[i] = ky - h;
        double pm = f(x, y);
        x[i] = kx - h;
        double mm = f(x, y);
        y[i] = ky + h;
        double mp = f(x, y);
        x[i] = kx;
        y[i] = ky;
        acc += (pp - pm - mp + mm) / (4.0 * h * h);
    }
    return acc;
}

}  // namespace rankone::testsupport
