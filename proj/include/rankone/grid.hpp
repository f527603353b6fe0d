#pragma once

#include "rankone/bidiff.hpp"

#include <complex>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace rankone {

using cdouble = std::complex<double>;

// Complex samples on a uniform periodic grid over [-L/2, L/2)^axes with n
// points per axis (n a power of two). Used both for functions on R^d
// (axes = d) and on R^d x R^d (axes = 2d, x-axes first).
class GridFunction {
  public:
    GridFunction(int axes, int n, double box);

    static GridFunction sample(int axes, int n, double box,
                               const std::function<cdouble(std::span<const double>)>& fn);

    int axes() const { return axes_; }
    int n() const { return n_; }
    double box() const { return box_; }
    double spacing() const { return box_ / n_; }
    size_t size() const { return data_.size(); }
    double coord(int idx) const { return (idx - n_ / 2) * spacing(); }

    std::span<const cdouble> data() const { return data_; }
    std::span<cdouble> data() { return data_; }
    cdouble& operator[](size_t i) { return data_[i]; }
    const cdouble& operator[](size_t i) const { return data_[i]; }

    // Unnormalized forward DFT over all axes (e^{-2 pi i km/n} kernel).
    std::vector<cdouble> dft() const;

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(cdouble c);

    // h^axes * sum |f|^2.
    double l2_norm_sq() const;

  private:
    int axes_, n_;
    double box_;
    std::vector<cdouble> data_;
};

double rel_l2_diff(const GridFunction& a, const GridFunction& b);

// In-place unnormalized DFT (sign = -1 forward, +1 inverse without 1/N scale)
// over `axes` axes of length n each.
void dft_inplace(std::vector<cdouble>& data, int axes, int n, int sign);

// Signed lattice frequency index for DFT bin m of n.
inline int signed_index(int m, int n) { return m < n / 2 ? m : m - n; }

// Deterministic pairwise reduction.
cdouble pairwise_sum(std::span<const cdouble> v);
double pairwise_sum(std::span<const double> v);

// Quadrature of integral rho(xi) |xi|^p dxi over R^d from lattice samples of
// the spectral density rho (continuum units, row-major over the d axes).
// Exponent 0 is the plain lattice sum including the zero mode; otherwise the
// zero mode carries weight 0 and the integrable singularity at xi = 0 is
// restored by a radial Gaussian model fitted to the first two frequency
// rings (the zero-mode sample itself is never read).
cdouble weighted_spectral_sum(std::span<const cdouble> rho, int d, int n, double L, double p,
                              bool singular_correction = true);

// ||f||^2 with Fourier weight |xi|^{d-2mu}; requires 0 < mu < d, f on R^d.
double fractional_norm_sq(const GridFunction& f, double mu);

// ||f||^2 with weight |xi|^{d-2alpha} |eta|^{d-2beta}; f on R^d x R^d,
// alpha, beta in (0, d). Iterates the one-factor rule, so it factorizes
// exactly on product functions.
double tensor_norm_sq(const GridFunction& f, double alpha, double beta,
                      bool singular_correction = true);

// f(x, x) on the d-dimensional grid (f on R^d x R^d).
GridFunction diagonal_restriction(const GridFunction& f);

// D_m f: multiply the spectrum by Q(-|xi|^2, -|eta|^2, -<xi,eta>), invert,
// restrict to the diagonal. Throws PoleError when a symbol coefficient has a
// pole at (alpha, beta, d).
GridFunction apply_bracket_grid(const GridFunction& f, int m, double alpha, double beta,
                                RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// --- group action on the line model ------------------------------------------

struct Translation {
    std::vector<double> x0;
};
// f -> lambda^{-nu} f(x / lambda); exact on the lattice when 1/lambda is an
// integer, linear interpolation otherwise.
struct Dilation {
    double lambda = 1;
};
// f -> |x|^{-2 nu} f(-x/|x|^2); requires the support of f to stay inside the box.
struct Inversion {};

using GroupElement = std::variant<Translation, Dilation, Inversion>;

GridFunction group_action(const GridFunction& f, const GroupElement& g, double nu);

// Same element acting on both factors of f(x, y) with weights alpha and beta.
GridFunction tensor_group_action(const GridFunction& f, const GroupElement& g, double alpha,
                                 double beta);

}  // namespace rankone
