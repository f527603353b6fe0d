#pragma once

#include "rankone/mc.hpp"
#include "rankone/separable.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

// --- Theorem 4.1 desk-scale bound check --------------------------------------

struct BoundReport {
    int d = 1;
    double alpha = 0, beta = 0;
    int m = 0;
    int n = 0;            // base resolution; the refinement doubles it
    double box = 0;
    std::uint64_t seed = 0;
    std::vector<double> ratios;          // ||D_m f||^2 / ||f||^2 at n
    std::vector<double> ratios_refined;  // same functions at 2n
    double max_ratio = 0;
    double max_ratio_refined = 0;
    double refinement_drift = 0;  // |max - max_refined| / max_refined
    bool all_finite = true;
};

// Ratio distribution of ||D_m f||^2_{alpha+beta+2m} / ||f||^2_{alpha (x) beta}
// over seeded random Gaussian-mixture inputs, repeated at n and 2n points per
// axis. Requires 0 < alpha, beta < d/2 and alpha + beta + 2m < d/2.
BoundReport run_bound_experiment(int d, double alpha, double beta, int m, int trials, int n,
                                 double box, std::uint64_t seed, int threads = 1);

// --- norm oracle suite --------------------------------------------------------

struct NormCheck {
    std::string name;
    double got = 0, expected = 0, rel_err = 0, tol = 0;
    bool pass = false;
};

struct NormSuiteReport {
    int n = 0;
    double box = 0;
    bool pass = true;
    std::vector<NormCheck> checks;
};

// Gaussian closed forms, Parseval consistency, scaling homogeneity,
// product separability and translation invariance of the fractional norm.
NormSuiteReport run_norm_suite(int n, double box);

// --- equivariance -------------------------------------------------------------

struct EquivarianceCase {
    std::string element;
    double rel_err = 0;
    bool pass = false;
};

struct EquivarianceReport {
    int d = 1, m = 0;
    double alpha = 0, beta = 0;
    int n = 0;
    double box = 0;
    std::uint64_t seed = 0;
    double tol = 1e-6;
    bool pass = true;
    std::vector<EquivarianceCase> cases;
};

// Compares D_m (pi_alpha (x) pi_beta)(g) f with pi_{alpha+beta+2m}(g) D_m f for
// lattice translations and the lattice dilation, on Gaussian-mixture inputs.
EquivarianceReport run_equivariance(int d, int m, double alpha, double beta, int n, double box,
                                    std::uint64_t seed, double tol = 1e-6);

// --- Monte Carlo suite ----------------------------------------------------------

struct McCase {
    std::string name;
    double value = 0, reference = 0, sigma = 0, zscore = 0;
    bool pass = false;
};

struct McSuiteReport {
    int d = 5, m = 1;
    double alpha = 0.1, beta = 0.1;
    long long samples = 0;
    std::uint64_t seed = 0;
    bool pass = true;
    bool any_diverged = false;
    std::vector<McCase> cases;
    std::vector<McEstimate> estimates;
};

// Homogeneity of A(zeta) across |zeta| in {0.5, 1, 2} and rotation invariance,
// each within 3 combined standard errors.
McSuiteReport run_mc_suite(int d, int m, double alpha, double beta, long long samples,
                           std::uint64_t seed);

}  // namespace rankone
