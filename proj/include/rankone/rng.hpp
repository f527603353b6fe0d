#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rankone {

// Deterministic random source with explicit sampling algorithms so that runs
// are reproducible across standard libraries (the distributions in <random>
// are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in (0, 1).
    double uniform() {
        const std::uint64_t x = eng_();
        return ((x >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = uniform(), v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Uniform direction on the unit sphere in R^d.
    std::vector<double> unit_vector(int d) {
        std::vector<double> v(d);
        double norm2 = 0;
        do {
            norm2 = 0;
            for (auto& x : v) {
                x = normal();
                norm2 += x * x;
            }
        } while (norm2 == 0);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        return v;
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0;
};

// Stable per-task seed derivation (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (task + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace rankone
