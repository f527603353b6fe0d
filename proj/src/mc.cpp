#include "rankone/mc.hpp"

#include "rankone/errors.hpp"
#include "rankone/grid.hpp"
#include "rankone/rng.hpp"

#include <cmath>
#include <limits>

namespace rankone {

double a_integral_homogeneity_exponent(int d, double alpha, double beta, int m) {
    return 4.0 * m + 2.0 * alpha + 2.0 * beta - d;
}

namespace {

double sphere_area(int d) { return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0); }

double norm2(std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
}

// Densities are handled in log space: samples land arbitrarily close to the
// singular points, where the integrand and the matching proposal both blow up
// while their ratio stays bounded.
constexpr double kLogZero = -std::numeric_limits<double>::infinity();

double log_sum_exp3(double a, double b, double c) {
    double m = std::max({a, b, c});
    if (m == kLogZero) return kLogZero;
    return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// Power-law ball |v - center|^{-expo} on |v - center| < radius, plus the
// matching tail |v|^{-q} on |v| >= radius for the third component.
struct BallProposal {
    std::vector<double> center;
    double radius;
    double expo;  // < d
    double log_norm_const;

    double log_density(std::span<const double> v) const {
        double r2 = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            double dx = v[i] - center[i];
            r2 += dx * dx;
        }
        if (r2 >= radius * radius || r2 == 0) return kLogZero;
        return log_norm_const - (expo / 2.0) * std::log(r2);
    }

    void sample(Rng& rng, std::vector<double>& out) const {
        int d = static_cast<int>(center.size());
        double u = rng.uniform();
        double r = radius * std::pow(u, 1.0 / (d - expo));
        auto dir = rng.unit_vector(d);
        out.resize(d);
        for (int i = 0; i < d; ++i) out[i] = center[i] + r * dir[i];
    }
};

struct TailProposal {
    double radius;
    double q;  // > d
    int d;
    double log_norm_const;

    double log_density(std::span<const double> v) const {
        double r2 = norm2(v);
        if (r2 < radius * radius) return kLogZero;
        return log_norm_const - (q / 2.0) * std::log(r2);
    }

    void sample(Rng& rng, std::vector<double>& out) const {
        double u = rng.uniform();
        double r = radius * std::pow(u, -1.0 / (q - d));
        auto dir = rng.unit_vector(d);
        out.resize(d);
        for (int i = 0; i < d; ++i) out[i] = r * dir[i];
    }
};

}  // namespace

McEstimate a_integral_mc(int d, double alpha, double beta, int m,
                         const std::vector<double>& zeta, long long samples, std::uint64_t seed,
                         RecursionDenominator den) {
    if (static_cast<int>(zeta.size()) != d) throw RangeError("zeta must have dimension d");
    if (!(alpha > 0 && alpha < d / 2.0) || !(beta > 0 && beta < d / 2.0))
        throw RangeError("alpha, beta must lie in (0, d/2)");
    if (!(alpha + beta + 2.0 * m < d / 2.0))
        throw RangeError("alpha + beta + 2m must be < d/2");
    if (samples < 100) throw RangeError("need at least 100 samples");
    double zeta_norm = std::sqrt(norm2(zeta));
    if (!(zeta_norm > 0)) throw RangeError("zeta must be nonzero");

    const double ea = d - 2.0 * alpha;  // singular exponent at v = zeta
    const double eb = d - 2.0 * beta;   // singular exponent at v = 0

    CompiledSymbol symbol = FourierSymbol(bracket_operator(m, den)).compile(alpha, beta, d);

    const double radius = zeta_norm / 2.0;
    const double area = sphere_area(d);
    BallProposal ball0{std::vector<double>(d, 0.0), radius, eb,
                       std::log(d - eb) - std::log(area) - (d - eb) * std::log(radius)};
    BallProposal ballu{zeta, radius, ea,
                       std::log(d - ea) - std::log(area) - (d - ea) * std::log(radius)};
    // Integrand decay at infinity: |Q|^2 ~ |v|^{4m} against weights |v|^{-ea-eb};
    // the hypotheses give ea + eb - 4m > d, so the tail is normalizable.
    const double qq = ea + eb - 4.0 * m;
    TailProposal tail{radius, qq, d,
                      std::log(qq - d) - std::log(area) + (qq - d) * std::log(radius)};

    const double w0 = 0.3, wu = 0.3, wt = 0.4;
    const double lw0 = std::log(w0), lwu = std::log(wu), lwt = std::log(wt);

    // log of |Q|^2 |zeta-v|^{-ea} |v|^{-eb}; -inf where the symbol vanishes
    auto log_integrand = [&](std::span<const double> v) {
        double uv2 = 0;  // |zeta - v|^2
        double vv2 = 0;  // |v|^2
        double dot = 0;  // <zeta - v, v>
        for (int i = 0; i < d; ++i) {
            double um = zeta[i] - v[i];
            uv2 += um * um;
            vv2 += v[i] * v[i];
            dot += um * v[i];
        }
        if (uv2 == 0 || vv2 == 0) return kLogZero;
        double s = symbol.eval(-uv2, -vv2, -dot);
        if (s == 0) return kLogZero;
        return 2.0 * std::log(std::abs(s)) - (ea / 2.0) * std::log(uv2) -
               (eb / 2.0) * std::log(vv2);
    };

    Rng rng(seed);
    std::vector<double> v;
    std::vector<double> weights(static_cast<size_t>(samples));
    double eps = 0.05 * zeta_norm;
    double near0 = 0, nearu = 0, abs_sum = 0, abs_max = 0;
    for (long long i = 0; i < samples; ++i) {
        double pick = rng.uniform();
        if (pick < w0)
            ball0.sample(rng, v);
        else if (pick < w0 + wu)
            ballu.sample(rng, v);
        else
            tail.sample(rng, v);
        double logp = log_sum_exp3(lw0 + ball0.log_density(v), lwu + ballu.log_density(v),
                                   lwt + tail.log_density(v));
        double logf = log_integrand(v);
        double x = logf == kLogZero ? 0.0 : std::exp(logf - logp);
        weights[static_cast<size_t>(i)] = x;
        double ax = std::abs(x);
        abs_sum += ax;
        abs_max = std::max(abs_max, ax);
        double r0 = std::sqrt(norm2(v));
        double ru2 = 0;
        for (int k = 0; k < d; ++k) {
            double dx = v[k] - zeta[k];
            ru2 += dx * dx;
        }
        if (r0 < eps) near0 += x;
        if (std::sqrt(ru2) < eps) nearu += x;
    }

    McEstimate est;
    est.samples = samples;
    double total = pairwise_sum(weights);
    est.mean = total / samples;
    std::vector<double> sq(weights.size());
    for (size_t i = 0; i < weights.size(); ++i) {
        double dlt = weights[i] - est.mean;
        sq[i] = dlt * dlt;
    }
    double var = pairwise_sum(std::span<const double>(sq)) / (samples - 1);
    est.std_error = std::sqrt(var / samples);
    est.max_weight_fraction = abs_sum > 0 ? abs_max / abs_sum : 0;
    est.near_zero_mass = total != 0 ? near0 / total : 0;
    est.near_u_mass = total != 0 ? nearu / total : 0;

    // Cauchy diagnostic: the two half-run means must agree within their joint
    // uncertainty, and no single sample may dominate.
    size_t half = weights.size() / 2;
    double m1 = pairwise_sum(std::span<const double>(weights.data(), half)) / half;
    double m2 = pairwise_sum(std::span<const double>(weights.data() + half, weights.size() - half)) /
                (weights.size() - half);
    double gap_tol = 6.0 * est.std_error * std::sqrt(2.0);
    if (std::abs(m1 - m2) > gap_tol) {
        est.diverged = true;
        est.warnings.push_back("half-run means differ beyond 6 sigma");
    }
    if (est.max_weight_fraction > 0.05) {
        est.diverged = true;
        est.warnings.push_back("a single sample carries >5% of the mass");
    }
    return est;
}

}  // namespace rankone
