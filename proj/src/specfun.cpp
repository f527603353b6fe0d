#include "rankone/specfun.hpp"

#include "rankone/errors.hpp"

#include <cmath>
#include <string>

namespace rankone {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

}  // namespace

double log_abs_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("Gamma pole at argument " + std::to_string(x));
    return std::lgamma(x);
}

int gamma_sign(double x) {
    if (x > 0) return 1;
    // Gamma alternates sign on the intervals (-k-1, -k).
    return static_cast<long long>(std::ceil(-x)) % 2 ? -1 : 1;
}

KnappSteinConstant knapp_stein_constant(double mu, int n) {
    if (n < 2) throw RangeError("n must be >= 2");
    KnappSteinConstant ks;
    ks.mu = mu;
    ks.n = n;
    ks.rho = (n - 1) / 2.0;
    const double rho = ks.rho;
    const double half_n = n / 2.0;

    // Both forms share the denominator Gamma(n/2) Gamma(rho-mu); a pole of any
    // Gamma argument is reported rather than evaluated.
    double a1 = rho - mu / 2.0;
    double a2 = rho - mu / 2.0 + 0.5;
    double a3 = 2.0 * rho - mu;
    double b1 = half_n;
    double b2 = rho - mu;

    double log_first = log_abs_gamma(a1) + log_abs_gamma(a2) - log_abs_gamma(b1) - log_abs_gamma(b2);
    int sign_first = gamma_sign(a1) * gamma_sign(a2) * gamma_sign(b1) * gamma_sign(b2);
    ks.value = sign_first * std::exp(log_first);

    double log_second = (mu - 2.0 * rho + 1.0) * std::log(2.0) + 0.5 * std::log(M_PI) +
                        log_abs_gamma(a3) - log_abs_gamma(b1) - log_abs_gamma(b2);
    int sign_second = gamma_sign(a3) * gamma_sign(b1) * gamma_sign(b2);
    ks.alt_value = sign_second * std::exp(log_second);

    ks.rel_discrepancy = std::abs(ks.value - ks.alt_value) / std::abs(ks.value);
    return ks;
}

}  // namespace rankone
