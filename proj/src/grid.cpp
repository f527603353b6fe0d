#include "rankone/grid.hpp"

#include "rankone/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace rankone {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

GridFunction::GridFunction(int axes, int n, double box) : axes_(axes), n_(n), box_(box) {
    if (axes < 1) throw RangeError("axes must be >= 1");
    if (!power_of_two(n)) throw RangeError("points per axis must be a power of two");
    if (!(box > 0)) throw RangeError("box size must be positive");
    size_t total = 1;
    for (int a = 0; a < axes; ++a) total *= static_cast<size_t>(n);
    data_.assign(total, cdouble(0));
}

GridFunction GridFunction::sample(int axes, int n, double box,
                                  const std::function<cdouble(std::span<const double>)>& fn) {
    GridFunction g(axes, n, box);
    std::vector<double> x(axes);
    std::vector<int> idx(axes, 0);
    for (size_t flat = 0; flat < g.size(); ++flat) {
        size_t rem = flat;
        for (int a = axes - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int a = 0; a < axes; ++a) x[a] = g.coord(idx[a]);
        g.data_[flat] = fn(x);
    }
    return g;
}

void dft_inplace(std::vector<cdouble>& data, int axes, int n, int sign) {
    std::vector<int> dims(axes, n);
    fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        // The FFTW planner is not thread-safe; execution is.
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft(axes, dims.data(), buf, buf,
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

std::vector<cdouble> GridFunction::dft() const {
    std::vector<cdouble> out = data_;
    dft_inplace(out, axes_, n_, -1);
    return out;
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(cdouble c) {
    for (auto& v : data_) v *= c;
    return *this;
}

double GridFunction::l2_norm_sq() const {
    std::vector<double> sq(data_.size());
    for (size_t i = 0; i < data_.size(); ++i) sq[i] = std::norm(data_[i]);
    double cell = std::pow(spacing(), axes_);
    return cell * pairwise_sum(sq);
}

double rel_l2_diff(const GridFunction& a, const GridFunction& b) {
    double num = 0, den = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return den == 0 ? std::sqrt(num) : std::sqrt(num / den);
}

cdouble pairwise_sum(std::span<const cdouble> v) {
    if (v.size() <= 8) {
        cdouble s = 0;
        for (auto x : v) s += x;
        return s;
    }
    size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0;
        for (auto x : v) s += x;
        return s;
    }
    size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

namespace {

double surface_area(int d) {
    return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

// Integral of A e^{-s|xi|^2} |xi|^p over R^d (principal branch for complex s).
cdouble model_integral(cdouble a, cdouble s, double p, int d) {
    double half = (d + p) / 2.0;
    return a * surface_area(d) * std::tgamma(half) / 2.0 / std::pow(s, half);
}

// Lattice sum of A e^{-s|xi|^2} |xi|^p dxi^d over the nonzero modes of the
// infinite lattice with spacing dxi, truncated where the envelope is < 1e-20.
cdouble model_lattice_sum(cdouble a, cdouble s, double p, int d, double dxi) {
    const double cutoff = 46.0;  // e^-46 ~ 1e-20
    double r2max = cutoff / s.real();
    long mmax = static_cast<long>(std::sqrt(r2max) / dxi) + 1;
    double width = 2.0 * static_cast<double>(mmax) + 1.0;
    if (std::pow(width, d) > 4e7) return cdouble(0);  // fit degenerate, skip
    std::vector<cdouble> terms;
    std::vector<long> m(d, -mmax);
    while (true) {
        double xi2 = 0;
        bool zero = true;
        for (int a2 = 0; a2 < d; ++a2) {
            double x = m[a2] * dxi;
            xi2 += x * x;
            zero = zero && m[a2] == 0;
        }
        if (!zero && xi2 <= r2max)
            terms.push_back(std::exp(-s * xi2) * std::pow(xi2, p / 2.0));
        int axis = d - 1;
        while (axis >= 0 && m[axis] == mmax) m[axis--] = -mmax;
        if (axis < 0) break;
        ++m[axis];
    }
    return a * std::pow(dxi, d) * pairwise_sum(terms);
}

// Correction restoring the singular-cell mass near xi = 0 from a radial
// Gaussian model fitted to the first two symmetric frequency rings.
cdouble singular_correction(cdouble ring1, cdouble ring2, double p, int d, double dxi) {
    if (std::abs(ring1) == 0.0 || std::abs(ring2) == 0.0) return 0;
    cdouble logz = std::log(ring1 / ring2);
    if (!std::isfinite(logz.real()) || std::abs(logz.imag()) > 2.0) return 0;
    cdouble s = logz / (3.0 * dxi * dxi);
    if (!(s.real() > 1e-12)) return 0;
    cdouble a = ring1 * std::exp(s * dxi * dxi);
    cdouble corr = model_integral(a, s, p, d) - model_lattice_sum(a, s, p, d, dxi);
    if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) return 0;
    return corr;
}

}  // namespace

cdouble weighted_spectral_sum(std::span<const cdouble> rho, int d, int n, double L, double p,
                              bool singular_correction_on) {
    const double dxi = 2.0 * M_PI / L;
    const double cell = std::pow(dxi, d);
    std::vector<cdouble> terms(rho.size());
    std::vector<int> idx(d);
    if (p == 0.0) {
        for (size_t flat = 0; flat < rho.size(); ++flat) terms[flat] = rho[flat] * cell;
        return pairwise_sum(terms);
    }
    for (size_t flat = 0; flat < rho.size(); ++flat) {
        size_t rem = flat;
        double xi2 = 0;
        for (int a = d - 1; a >= 0; --a) {
            int m = static_cast<int>(rem % n);
            rem /= n;
            double x = signed_index(m, n) * dxi;
            xi2 += x * x;
        }
        terms[flat] = xi2 == 0.0 ? cdouble(0) : rho[flat] * std::pow(xi2, p / 2.0) * cell;
    }
    cdouble sum = pairwise_sum(terms);
    if (!singular_correction_on || n < 8) return sum;

    // Symmetric ring averages at |xi| = dxi and 2 dxi (axis neighbors).
    cdouble ring1 = 0, ring2 = 0;
    size_t stride = 1;
    for (int a = d - 1; a >= 0; --a) {
        size_t plus1 = stride, minus1 = static_cast<size_t>(n - 1) * stride;
        size_t plus2 = 2 * stride, minus2 = static_cast<size_t>(n - 2) * stride;
        ring1 += rho[plus1] + rho[minus1];
        ring2 += rho[plus2] + rho[minus2];
        stride *= static_cast<size_t>(n);
    }
    ring1 /= 2.0 * d;
    ring2 /= 2.0 * d;
    return sum + singular_correction(ring1, ring2, p, d, dxi);
}

namespace {

// Continuum-unit spectral density |Ff|^2 from the raw DFT of f.
std::vector<cdouble> spectral_density(const GridFunction& f) {
    std::vector<cdouble> spec = f.dft();
    const double h = f.spacing();
    const double unit =
        std::pow(h, 2.0 * f.axes()) / std::pow(2.0 * M_PI, static_cast<double>(f.axes()));
    for (auto& v : spec) v = unit * std::norm(v);
    return spec;
}

}  // namespace

double fractional_norm_sq(const GridFunction& f, double mu) {
    const int d = f.axes();
    if (!(mu > 0 && mu < d)) throw RangeError("mu must lie in (0, d)");
    std::vector<cdouble> rho = spectral_density(f);
    return weighted_spectral_sum(rho, d, f.n(), f.box(), d - 2.0 * mu).real();
}

double tensor_norm_sq(const GridFunction& f, double alpha, double beta,
                      bool singular_correction) {
    if (f.axes() % 2 != 0) throw RangeError("tensor norm needs an even number of axes");
    const int d = f.axes() / 2;
    if (!(alpha > 0 && alpha < d) || !(beta > 0 && beta < d))
        throw RangeError("alpha, beta must lie in (0, d)");
    const int n = f.n();
    const double pa = d - 2.0 * alpha, pb = d - 2.0 * beta;
    std::vector<cdouble> rho = spectral_density(f);

    size_t block = 1;
    for (int a = 0; a < d; ++a) block *= static_cast<size_t>(n);
    // Iterated rule: integrate over xi for every fixed eta, then over eta.
    std::vector<cdouble> inner(block);
    std::vector<cdouble> slice(block);
    for (size_t e = 0; e < block; ++e) {
        for (size_t x = 0; x < block; ++x) slice[x] = rho[x * block + e];
        inner[e] = weighted_spectral_sum(slice, d, n, f.box(), pa, singular_correction);
    }
    return weighted_spectral_sum(inner, d, n, f.box(), pb, singular_correction).real();
}

GridFunction diagonal_restriction(const GridFunction& f) {
    if (f.axes() % 2 != 0) throw RangeError("diagonal restriction needs an even number of axes");
    const int d = f.axes() / 2;
    size_t block = 1;
    for (int a = 0; a < d; ++a) block *= static_cast<size_t>(f.n());
    GridFunction out(d, f.n(), f.box());
    for (size_t k = 0; k < block; ++k) out[k] = f[k * block + k];
    return out;
}

GridFunction apply_bracket_grid(const GridFunction& f, int m, double alpha, double beta,
                                RecursionDenominator den) {
    if (f.axes() % 2 != 0) throw RangeError("operator application needs an even number of axes");
    const int d = f.axes() / 2;
    const int n = f.n();
    const double dxi = 2.0 * M_PI / f.box();
    CompiledSymbol q = FourierSymbol(bracket_operator(m, den)).compile(alpha, beta, d);

    std::vector<cdouble> spec = f.dft();
    std::vector<int> idx(2 * d);
    std::vector<double> xi(d), eta(d);
    for (size_t flat = 0; flat < spec.size(); ++flat) {
        size_t rem = flat;
        for (int a = 2 * d - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int a = 0; a < d; ++a) {
            xi[a] = signed_index(idx[a], n) * dxi;
            eta[a] = signed_index(idx[d + a], n) * dxi;
        }
        spec[flat] *= q.eval_freq(xi, eta);
    }
    dft_inplace(spec, 2 * d, n, +1);
    const double inv_scale = 1.0 / static_cast<double>(spec.size());

    size_t block = 1;
    for (int a = 0; a < d; ++a) block *= static_cast<size_t>(n);
    GridFunction out(d, n, f.box());
    for (size_t k = 0; k < block; ++k) out[k] = spec[k * block + k] * inv_scale;
    return out;
}

// --- group actions -----------------------------------------------------------

namespace {

// Multilinear interpolation of f at physical point x; out-of-box points read 0
// when `wrap` is false and wrap periodically when true.
cdouble interpolate(const GridFunction& f, std::span<const double> x, bool wrap) {
    const int axes = f.axes();
    const int n = f.n();
    const double h = f.spacing();
    std::vector<int> base(axes);
    std::vector<double> frac(axes);
    for (int a = 0; a < axes; ++a) {
        double u = x[a] / h + n / 2.0;  // fractional index
        if (wrap) {
            u -= std::floor(u / n) * n;
        } else if (u < 0 || u > n - 1) {
            // allow exact top edge handling below; anything outside reads 0
            if (u < -1e-9 || u > n - 1 + 1e-9) return 0;
            u = std::clamp(u, 0.0, static_cast<double>(n - 1));
        }
        base[a] = static_cast<int>(std::floor(u));
        if (base[a] >= n) base[a] -= n;
        frac[a] = u - std::floor(u);
    }
    cdouble acc = 0;
    for (int corner = 0; corner < (1 << axes); ++corner) {
        double w = 1;
        size_t flat = 0;
        for (int a = 0; a < axes; ++a) {
            int bit = (corner >> a) & 1;
            w *= bit ? frac[a] : 1.0 - frac[a];
            int ia = base[a] + bit;
            if (ia >= n) ia = wrap ? ia - n : n - 1;  // top edge: weight is 0 unless wrapping
            flat = flat * n + static_cast<size_t>(ia);
        }
        if (w != 0) acc += w * f[flat];
    }
    return acc;
}

bool lattice_vector(const GridFunction& f, std::span<const double> x0, std::vector<long>& steps) {
    steps.assign(f.axes(), 0);
    for (int a = 0; a < f.axes(); ++a) {
        double u = x0[a] / f.spacing();
        double r = std::round(u);
        if (std::abs(u - r) > 1e-9) return false;
        steps[a] = static_cast<long>(r);
    }
    return true;
}

GridFunction translate(const GridFunction& f, std::span<const double> x0) {
    GridFunction out(f.axes(), f.n(), f.box());
    const int n = f.n();
    std::vector<long> steps;
    if (lattice_vector(f, x0, steps)) {
        // exact circular shift
        std::vector<int> idx(f.axes());
        for (size_t flat = 0; flat < out.size(); ++flat) {
            size_t rem = flat;
            for (int a = f.axes() - 1; a >= 0; --a) {
                idx[a] = static_cast<int>(rem % n);
                rem /= n;
            }
            size_t src = 0;
            for (int a = 0; a < f.axes(); ++a) {
                long shifted = (idx[a] - steps[a]) % n;
                if (shifted < 0) shifted += n;
                src = src * n + static_cast<size_t>(shifted);
            }
            out[flat] = f[src];
        }
        return out;
    }
    std::vector<int> idx(f.axes());
    std::vector<double> arg(f.axes());
    for (size_t flat = 0; flat < out.size(); ++flat) {
        size_t rem = flat;
        for (int a = f.axes() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int a = 0; a < f.axes(); ++a) arg[a] = out.coord(idx[a]) - x0[a];
        out[flat] = interpolate(f, arg, /*wrap=*/true);
    }
    return out;
}

// Half of the axes share one factor of the action; `pack` widens a d-vector
// x0 to the 2d tensor grid.
std::vector<double> doubled(std::span<const double> x0) {
    std::vector<double> out(x0.begin(), x0.end());
    out.insert(out.end(), x0.begin(), x0.end());
    return out;
}

GridFunction dilate(const GridFunction& f, double lambda, double weight_exp) {
    // f -> lambda^{-weight_exp} f(x / lambda)
    if (!(lambda > 0)) throw RangeError("dilation scale must be positive");
    GridFunction out(f.axes(), f.n(), f.box());
    const int n = f.n();
    const double w = std::pow(lambda, -weight_exp);
    const double inv = 1.0 / lambda;
    // 1/lambda integer: arguments land on the lattice, read exactly.
    bool exact = std::abs(inv - std::round(inv)) < 1e-12;
    std::vector<int> idx(f.axes());
    std::vector<double> arg(f.axes());
    for (size_t flat = 0; flat < out.size(); ++flat) {
        size_t rem = flat;
        for (int a = f.axes() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        bool inside = true;
        if (exact) {
            long step = static_cast<long>(std::llround(inv));
            size_t src = 0;
            for (int a = 0; a < f.axes() && inside; ++a) {
                long j = static_cast<long>(idx[a] - n / 2) * step + n / 2;
                if (j < 0 || j >= n) inside = false;
                src = src * n + static_cast<size_t>(std::max(0l, std::min<long>(j, n - 1)));
            }
            out[flat] = inside ? w * f[src] : cdouble(0);
        } else {
            for (int a = 0; a < f.axes(); ++a) arg[a] = out.coord(idx[a]) * inv;
            out[flat] = w * interpolate(f, arg, /*wrap=*/false);
        }
    }
    return out;
}

GridFunction invert(const GridFunction& f, double nu) {
    if (f.axes() > 8) throw RangeError("inversion supported on single-factor grids");
    const int n = f.n();
    const double half = f.box() / 2;
    // Support check: every essential sample must map back inside the box.
    double max_abs = 0;
    for (size_t i = 0; i < f.size(); ++i) max_abs = std::max(max_abs, std::abs(f[i]));
    const double tol = 1e-9 * max_abs;
    std::vector<int> idx(f.axes());
    std::vector<double> y(f.axes());
    for (size_t flat = 0; flat < f.size(); ++flat) {
        if (std::abs(f[flat]) <= tol) continue;
        size_t rem = flat;
        for (int a = f.axes() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        double r2 = 0;
        for (int a = 0; a < f.axes(); ++a) {
            y[a] = f.coord(idx[a]);
            r2 += y[a] * y[a];
        }
        if (r2 == 0) throw SupportError("support touches the origin");
        for (int a = 0; a < f.axes(); ++a) {
            if (std::abs(y[a] / r2) > half)
                throw SupportError("inversion maps support outside the box");
        }
    }
    GridFunction out(f.axes(), n, f.box());
    std::vector<double> arg(f.axes());
    for (size_t flat = 0; flat < out.size(); ++flat) {
        size_t rem = flat;
        for (int a = f.axes() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % n);
            rem /= n;
        }
        double r2 = 0;
        for (int a = 0; a < f.axes(); ++a) {
            double x = out.coord(idx[a]);
            arg[a] = x;
            r2 += x * x;
        }
        if (r2 == 0) {
            out[flat] = 0;  // f vanishes near infinity
            continue;
        }
        for (auto& x : arg) x = -x / r2;
        out[flat] = std::pow(r2, -nu) * interpolate(f, arg, /*wrap=*/false);
    }
    return out;
}

}  // namespace

GridFunction group_action(const GridFunction& f, const GroupElement& g, double nu) {
    return std::visit(
        [&](const auto& el) -> GridFunction {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Translation>) {
                return translate(f, el.x0);
            } else if constexpr (std::is_same_v<T, Dilation>) {
                return dilate(f, el.lambda, nu);
            } else {
                return invert(f, nu);
            }
        },
        g);
}

GridFunction tensor_group_action(const GridFunction& f, const GroupElement& g, double alpha,
                                 double beta) {
    return std::visit(
        [&](const auto& el) -> GridFunction {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Translation>) {
                return translate(f, doubled(el.x0));
            } else if constexpr (std::is_same_v<T, Dilation>) {
                return dilate(f, el.lambda, alpha + beta);
            } else {
                throw RangeError("inversion is not part of the tensor grid action");
            }
        },
        g);
}

}  // namespace rankone
