#pragma once

#include "rankone/ratfun.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>

namespace rankone {

// Integer-affine exponent ka*alpha + kb*beta + k0.
struct AffineExp {
    int ka = 0, kb = 0, k0 = 0;
    auto operator<=>(const AffineExp&) const = default;
    bool is_zero() const { return ka == 0 && kb == 0 && k0 == 0; }
    Poly to_poly() const;
    double eval(double a, double b) const { return ka * a + kb * b + k0; }
    std::string to_string() const;
};

struct KernelKey {
    AffineExp er, es;  // exponents of r = |x|^2 and s = |y|^2
    int kt = 0;        // power of t = <x,y>, always >= 0
    auto operator<=>(const KernelKey&) const = default;
};

// Finite sum of terms coeff * r^er * s^es * t^kt with RatFun coefficients.
// Closed under d/dr, d/ds, d/dt and multiplication by r, s, t, which is what
// the bilinear derivative operators need.
class KernelExpr {
  public:
    KernelExpr() = default;

    static KernelExpr term(RatFun coeff, AffineExp er, AffineExp es, int kt);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<KernelKey, RatFun>& terms() const { return terms_; }

    KernelExpr& operator+=(const KernelExpr& o);
    KernelExpr& operator-=(const KernelExpr& o);
    friend KernelExpr operator+(KernelExpr x, const KernelExpr& y) { return x += y; }
    friend KernelExpr operator-(KernelExpr x, const KernelExpr& y) { return x -= y; }
    bool operator==(const KernelExpr& o) const { return terms_ == o.terms_; }

    KernelExpr scaled(const RatFun& c) const;
    KernelExpr mul_r() const;
    KernelExpr mul_s() const;
    KernelExpr mul_t() const;

    KernelExpr d_r() const;
    KernelExpr d_s() const;
    KernelExpr d_t() const;

    // Euclidean Laplacian in x through the invariants:
    //   L_x = 2d d/dr + 4r d2/dr2 + 4t d2/drdt + s d2/dt2
    KernelExpr laplacian_x() const;
    // L_y by r<->s symmetry.
    KernelExpr laplacian_y() const;
    // grad_x . grad_y = d d/dt + 2r d2/drdt + 2s d2/dsdt + 4t d2/drds + t d2/dt2
    KernelExpr grad_dot_grad() const;

    // Substitutes r=|x|^2, s=|y|^2, t=<x,y> and sums in floating point.
    // Throws DomainError at r=0 or s=0 with a negative exponent and PoleError
    // if a coefficient has a pole at (alpha, beta, d=len(x)).
    double eval(std::span<const double> x, std::span<const double> y, double alpha,
                double beta) const;

    std::string to_string() const;

  private:
    void add_term(const KernelKey& k, const RatFun& c);
    std::map<KernelKey, RatFun> terms_;
};

// r^{-alpha} s^{-beta}.
KernelExpr base_kernel();

// ((r+s-2t)/(rs))^j * r^{-alpha} s^{-beta}, fully expanded.
KernelExpr riesz_kernel(int j);

// Single power r^{e}.
KernelExpr r_power(AffineExp e);

}  // namespace rankone
