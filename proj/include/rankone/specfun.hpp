#pragma once

namespace rankone {

// Normalizing constant of the convolution operator with kernel C|x-y|^{-2mu}
// on R^{n-1}, rho = (n-1)/2:
//   C_mu = Gamma(rho-mu/2) Gamma(rho-mu/2+1/2) / (Gamma(n/2) Gamma(rho-mu))
//        = 2^{mu-2rho+1} sqrt(pi) Gamma(2rho-mu) / (Gamma(n/2) Gamma(rho-mu)).
// The two closed forms are related by the Legendre duplication formula; both
// are evaluated through log-Gamma and the relative discrepancy is recorded.
struct KnappSteinConstant {
    double mu = 0;
    double rho = 0;
    int n = 0;
    double value = 0;            // from the first closed form
    double alt_value = 0;        // from the duplication form
    double rel_discrepancy = 0;  // |value - alt_value| / |value|
};

// Throws PoleError when any Gamma argument is a nonpositive integer.
KnappSteinConstant knapp_stein_constant(double mu, int n);

// log |Gamma(x)| and the sign of Gamma(x); throws PoleError at poles.
double log_abs_gamma(double x);
int gamma_sign(double x);

}  // namespace rankone
