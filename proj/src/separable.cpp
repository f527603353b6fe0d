#include "rankone/separable.hpp"

#include "rankone/errors.hpp"

#include <cmath>

namespace rankone {

double GaussianFactor::operator()(std::span<const double> x) const {
    double q = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - center[i];
        q += dx * dx;
    }
    return std::exp(-q / (2.0 * width * width));
}

GaussianFactor GaussianFactor::translated(std::span<const double> x0) const {
    GaussianFactor g = *this;
    for (size_t i = 0; i < g.center.size(); ++i) g.center[i] += x0[i];
    return g;
}

GaussianFactor GaussianFactor::arg_scaled(double lambda) const {
    GaussianFactor g = *this;
    for (auto& c : g.center) c *= lambda;
    g.width *= lambda;
    return g;
}

GaussianMixture GaussianMixture::random(int dim, double box, Rng& rng, int nterms,
                                        double center_frac, double wlo, double whi) {
    GaussianMixture mix;
    mix.dim = dim;
    if (nterms <= 0) nterms = 3 + static_cast<int>(rng.uniform() * 3.0);  // 3..5
    for (int t = 0; t < nterms; ++t) {
        Term term;
        double mag = rng.uniform(0.3, 1.0);
        term.coeff = (rng.uniform() < 0.5 ? -1.0 : 1.0) * mag;
        auto factor = [&]() {
            GaussianFactor g;
            g.center.resize(dim);
            for (auto& c : g.center) c = rng.uniform(-center_frac * box, center_frac * box);
            g.width = rng.uniform(wlo, whi) * (box / 20.0);
            return g;
        };
        term.gx = factor();
        term.gy = factor();
        mix.terms.push_back(std::move(term));
    }
    return mix;
}

GaussianMixture GaussianMixture::pure_product(int dim, double width) {
    GaussianMixture mix;
    mix.dim = dim;
    Term t;
    t.coeff = 1.0;
    t.gx.center.assign(dim, 0.0);
    t.gx.width = width;
    t.gy = t.gx;
    mix.terms.push_back(std::move(t));
    return mix;
}

cdouble GaussianMixture::operator()(std::span<const double> x, std::span<const double> y) const {
    cdouble out = 0;
    for (const auto& t : terms) out += t.coeff * t.gx(x) * t.gy(y);
    return out;
}

GaussianMixture GaussianMixture::translated(std::span<const double> x0) const {
    GaussianMixture out = *this;
    for (auto& t : out.terms) {
        t.gx = t.gx.translated(x0);
        t.gy = t.gy.translated(x0);
    }
    return out;
}

GaussianMixture GaussianMixture::dilated(double lambda, double weight_exp) const {
    GaussianMixture out = *this;
    double w = std::pow(lambda, -weight_exp);
    for (auto& t : out.terms) {
        t.coeff *= w;
        t.gx = t.gx.arg_scaled(lambda);
        t.gy = t.gy.arg_scaled(lambda);
    }
    return out;
}

SeparableGrid::SeparableGrid(const GaussianMixture& mix, int n, double box)
    : dim_(mix.dim), n_(n), box_(box) {
    terms_.reserve(mix.terms.size());
    for (const auto& t : mix.terms) {
        Term term{t.coeff,
                  GridFunction::sample(dim_, n, box,
                                       [&](std::span<const double> x) { return cdouble(t.gx(x)); }),
                  GridFunction::sample(dim_, n, box,
                                       [&](std::span<const double> x) { return cdouble(t.gy(x)); }),
                  {},
                  {}};
        term.u_hat = term.u.dft();
        term.w_hat = term.w.dft();
        terms_.push_back(std::move(term));
    }
}

GridFunction SeparableGrid::to_dense() const {
    GridFunction out(2 * dim_, n_, box_);
    size_t block = 1;
    for (int a = 0; a < dim_; ++a) block *= static_cast<size_t>(n_);
    for (const auto& t : terms_)
        for (size_t i = 0; i < block; ++i)
            for (size_t j = 0; j < block; ++j) out[i * block + j] += t.coeff * t.u[i] * t.w[j];
    return out;
}

double SeparableGrid::tensor_norm_sq(double alpha, double beta,
                                     bool singular_correction) const {
    if (!(alpha > 0 && alpha < dim_) || !(beta > 0 && beta < dim_))
        throw RangeError("alpha, beta must lie in (0, d)");
    const double pa = dim_ - 2.0 * alpha, pb = dim_ - 2.0 * beta;
    const double h = box_ / n_;
    const double unit = std::pow(h, 2.0 * dim_) / std::pow(2.0 * M_PI, static_cast<double>(dim_));
    const size_t len = terms_.empty() ? 0 : terms_[0].u_hat.size();
    const size_t nt = terms_.size();

    // Cross Gramians of the factor spectra under each weight.
    std::vector<cdouble> rho(len);
    std::vector<cdouble> ka(nt * nt), kb(nt * nt);
    for (size_t i = 0; i < nt; ++i) {
        for (size_t j = 0; j < nt; ++j) {
            for (size_t k = 0; k < len; ++k)
                rho[k] = unit * terms_[i].u_hat[k] * std::conj(terms_[j].u_hat[k]);
            ka[i * nt + j] = weighted_spectral_sum(rho, dim_, n_, box_, pa, singular_correction);
            for (size_t k = 0; k < len; ++k)
                rho[k] = unit * terms_[i].w_hat[k] * std::conj(terms_[j].w_hat[k]);
            kb[i * nt + j] = weighted_spectral_sum(rho, dim_, n_, box_, pb, singular_correction);
        }
    }
    cdouble total = 0;
    for (size_t i = 0; i < nt; ++i)
        for (size_t j = 0; j < nt; ++j)
            total += terms_[i].coeff * std::conj(terms_[j].coeff) * ka[i * nt + j] * kb[i * nt + j];
    return total.real();
}

namespace {

// Multi-indices gamma with |gamma| = c in d axes, with multinomial weights:
// <xi,eta>^c = sum_gamma c!/gamma! xi^gamma eta^gamma.
void multi_indices(int d, int c, std::vector<std::vector<int>>& out, std::vector<int>& cur,
                   int axis, int left) {
    if (axis == d - 1) {
        cur[axis] = left;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= left; ++k) {
        cur[axis] = k;
        multi_indices(d, c, out, cur, axis + 1, left - k);
    }
}

double multinomial_weight(const std::vector<int>& gamma, int c) {
    auto fact = [](int k) {
        double f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    double w = fact(c);
    for (int g : gamma) w /= fact(g);
    return w;
}

}  // namespace

GridFunction SeparableGrid::apply_bracket(int m, double alpha, double beta,
                                          RecursionDenominator den) const {
    CompiledSymbol q = FourierSymbol(bracket_operator(m, den)).compile(alpha, beta, dim_);
    const int n = n_;
    const double dxi = 2.0 * M_PI / box_;
    const size_t len = terms_.empty() ? 0 : terms_[0].u_hat.size();
    GridFunction out(dim_, n, box_);

    // Per-mode frequency vectors of the d-dimensional lattice.
    std::vector<std::vector<double>> freq(len, std::vector<double>(dim_));
    for (size_t flat = 0; flat < len; ++flat) {
        size_t rem = flat;
        for (int a = dim_ - 1; a >= 0; --a) {
            freq[flat][a] = signed_index(static_cast<int>(rem % n), n) * dxi;
            rem /= n;
        }
    }

    std::vector<cdouble> ubuf(len), wbuf(len);
    const double inv_len = 1.0 / static_cast<double>(len);
    for (const auto& term : terms_) {
        for (const auto& sym : q.terms) {
            std::vector<std::vector<int>> gammas;
            std::vector<int> cur(dim_);
            multi_indices(dim_, sym.pc, gammas, cur, 0, sym.pc);
            for (const auto& gamma : gammas) {
                // (-<xi,eta>)^pc splits into (-1)^pc multinomial xi^g eta^g.
                double mw = multinomial_weight(gamma, sym.pc);
                double sign = sym.pc % 2 ? -1.0 : 1.0;
                for (size_t k = 0; k < len; ++k) {
                    double xi2 = 0, mono = 1;
                    for (int a = 0; a < dim_; ++a) {
                        xi2 += freq[k][a] * freq[k][a];
                        for (int g = 0; g < gamma[a]; ++g) mono *= freq[k][a];
                    }
                    double wa = mono;
                    for (int i = 0; i < sym.pa; ++i) wa *= -xi2;
                    ubuf[k] = term.u_hat[k] * wa;
                }
                for (size_t k = 0; k < len; ++k) {
                    double eta2 = 0, mono = 1;
                    for (int a = 0; a < dim_; ++a) {
                        eta2 += freq[k][a] * freq[k][a];
                        for (int g = 0; g < gamma[a]; ++g) mono *= freq[k][a];
                    }
                    double wb = mono;
                    for (int i = 0; i < sym.pb; ++i) wb *= -eta2;
                    wbuf[k] = term.w_hat[k] * wb;
                }
                dft_inplace(ubuf, dim_, n, +1);
                dft_inplace(wbuf, dim_, n, +1);
                cdouble scale = term.coeff * sym.c * mw * sign * inv_len * inv_len;
                for (size_t k = 0; k < len; ++k) out[k] += scale * ubuf[k] * wbuf[k];
            }
        }
    }
    return out;
}

}  // namespace rankone
