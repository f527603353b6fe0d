#pragma once

#include "rankone/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace rankone {

// Exponents of a monomial alpha^a * beta^b * d^c.
struct Monomial {
    int a = 0, b = 0, c = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Exact polynomial in the three commuting symbols alpha, beta, d with rational
// coefficients. Zero coefficients are never stored.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly alpha();
    static Poly beta();
    static Poly dim();
    static Poly monomial(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial
    int total_degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly operator-() const;
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly x, const Rational& c) { return x *= c; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Substitutes alpha -> alpha + da, beta -> beta + db (integer offsets).
    Poly shifted(int da, int db) const;
    // Substitutes d -> value.
    Poly with_dim(const Rational& value) const;
    // Swaps alpha and beta.
    Poly swapped_ab() const;

    Rational eval(const Rational& a, const Rational& b, const Rational& d) const;
    double eval(double a, double b, double d) const;

    // Signed content: gcd of the coefficients carrying the sign of the
    // lexicographically leading one, so p / content(p) is primitive with a
    // positive leading coefficient. Zero polynomial has content 1.
    Rational content() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// Rising factorial base*(base+1)*...*(base+n-1); the empty product is 1.
Poly pochhammer(const Poly& base, int n);

}  // namespace rankone
