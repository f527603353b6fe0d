#pragma once

#include "rankone/bidiff.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    long long samples = 0;
    bool diverged = false;           // running estimate failed the Cauchy check
    double max_weight_fraction = 0;  // largest single-sample share of sum |X|
    double near_zero_mass = 0;       // estimate share from |v| < 0.05 |zeta|
    double near_u_mass = 0;          // estimate share from |v - zeta| < 0.05 |zeta|
    std::vector<std::string> warnings;
};

// Importance-sampled estimate of
//   A(zeta) = int |Q(-|zeta-v|^2, -|v|^2, -<zeta-v, v>)|^2
//             |zeta-v|^{-(d-2alpha)} |v|^{-(d-2beta)} dv
// over R^d, where Q is the degree-m symbol at (alpha, beta, d). The proposal
// is a mixture of two power-law balls centered at 0 and zeta matching the
// singular exponents plus a heavy tail matching the decay at infinity.
// Requires 0 < alpha < d/2, 0 < beta < d/2, alpha + beta + 2m < d/2 (the
// exponent bookkeeping that makes the integral converge).
McEstimate a_integral_mc(int d, double alpha, double beta, int m,
                         const std::vector<double>& zeta, long long samples, std::uint64_t seed,
                         RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// Homogeneity degree of A(zeta) in |zeta|: 4m + 2 alpha + 2 beta - d.
double a_integral_homogeneity_exponent(int d, double alpha, double beta, int m);

}  // namespace rankone
