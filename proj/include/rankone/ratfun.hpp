#pragma once

#include "rankone/poly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rankone {

// Linear form c0 + ca*alpha + cb*beta + cd*d. Canonical form has the leading
// nonzero coefficient (in the order ca, cb, cd, c0) equal to 1.
struct LinearFactor {
    Rational c0 = 0, ca = 0, cb = 0, cd = 0;

    static LinearFactor alpha_plus(const Rational& c) { return {c, 1, 0, 0}; }
    static LinearFactor beta_plus(const Rational& c) { return {c, 0, 1, 0}; }

    bool is_zero() const { return c0 == 0 && ca == 0 && cb == 0 && cd == 0; }
    bool is_constant() const { return ca == 0 && cb == 0 && cd == 0; }
    bool depends_on_alpha() const { return ca != 0; }
    bool depends_on_beta() const { return cb != 0; }

    // Scales so the leading coefficient is 1; returns the factor removed.
    Rational canonicalize();

    Poly to_poly() const;
    LinearFactor shifted(int da, int db) const;
    std::optional<LinearFactor> with_dim(const Rational& value) const;  // nullopt if it becomes constant
    LinearFactor swapped_ab() const;

    Rational eval(const Rational& a, const Rational& b, const Rational& d) const;
    double eval(double a, double b, double d) const;

    bool operator==(const LinearFactor&) const = default;
    // alpha-led factors sort before beta-led before d-led before constants
    int lead_rank() const { return ca != 0 ? 0 : cb != 0 ? 1 : cd != 0 ? 2 : 3; }
    bool operator<(const LinearFactor& o) const {
        if (lead_rank() != o.lead_rank()) return lead_rank() < o.lead_rank();
        if (ca != o.ca) return ca < o.ca;
        if (cb != o.cb) return cb < o.cb;
        if (cd != o.cd) return cd < o.cd;
        return c0 < o.c0;
    }

    std::string to_string() const;
};

// Exact quotient p / f, or nullopt when f does not divide p.
std::optional<Poly> divide_by_linear(const Poly& p, const LinearFactor& f);

// Rational function scale * num / prod(den) where den is a multiset of linear
// factors. Invariants kept by normalization:
//   - factors are canonical and sorted; constant factors are folded into scale;
//   - no factor divides the numerator (cancellation is eager);
//   - num is primitive with positive leading coefficient; value 0 <=> num == 0.
class RatFun {
  public:
    RatFun() = default;  // zero
    explicit RatFun(Rational c);
    explicit RatFun(long c) : RatFun(Rational(c)) {}
    explicit RatFun(Poly num);
    RatFun(Poly num, std::vector<LinearFactor> den, Rational scale = 1);

    // scale / prod(factors)
    static RatFun reciprocal(std::vector<LinearFactor> factors, Rational scale = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.empty(); }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
    friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
    friend RatFun operator*(const RatFun& x, const RatFun& y);
    RatFun operator-() const;

    bool operator==(const RatFun& o) const;

    RatFun shifted(int da, int db) const;
    RatFun with_dim(const Rational& value) const;
    RatFun swapped_ab() const;

    Rational eval(const Rational& a, const Rational& b, const Rational& d) const;  // throws PoleError
    double eval(double a, double b, double d) const;                               // throws PoleError

    enum class Var { alpha, beta };
    // Denominator factors involving the variable, after cancellation (distinct).
    std::vector<LinearFactor> pole_set(Var v) const;

    const Rational& scale() const { return scale_; }
    const Poly& num() const { return num_; }
    const std::vector<LinearFactor>& den() const { return den_; }

    // Numerator including the scalar prefactor, as an expanded polynomial.
    Poly scaled_num() const;

    std::string to_string() const;

  private:
    void normalize();
    Rational scale_ = 1;
    Poly num_;  // zero by default
    std::vector<LinearFactor> den_;
};

}  // namespace rankone
