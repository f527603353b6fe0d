#include "rankone/poly.hpp"

#include <sstream>

namespace rankone {

Poly::Poly(Rational c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

Poly Poly::alpha() { return monomial(Monomial{1, 0, 0}, 1); }
Poly Poly::beta() { return monomial(Monomial{0, 1, 0}, 1); }
Poly Poly::dim() { return monomial(Monomial{0, 0, 1}, 1); }

Poly Poly::monomial(Monomial m, Rational c) {
    Poly p;
    if (c != 0) p.terms_[m] = std::move(c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.a + m.b + m.c);
    return deg;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            out.add_term(Monomial{mx.a + my.a, mx.b + my.b, mx.c + my.c}, cx * cy);
    return out;
}

namespace {

// Binomial coefficients C(n,k) for the shift expansion; n stays small.
Rational binom(int n, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

Poly Poly::shifted(int da, int db) const {
    if (da == 0 && db == 0) return *this;
    Poly out;
    for (const auto& [m, c] : terms_) {
        // (alpha+da)^a (beta+db)^b expanded by binomials.
        for (int i = 0; i <= m.a; ++i) {
            Rational ca = binom(m.a, i) * rational_pow(Rational(da), m.a - i);
            if (ca == 0) continue;
            for (int j = 0; j <= m.b; ++j) {
                Rational cb = binom(m.b, j) * rational_pow(Rational(db), m.b - j);
                if (cb == 0) continue;
                out.add_term(Monomial{i, j, m.c}, c * ca * cb);
            }
        }
    }
    return out;
}

Poly Poly::with_dim(const Rational& value) const {
    Poly out;
    for (const auto& [m, c] : terms_)
        out.add_term(Monomial{m.a, m.b, 0}, c * rational_pow(value, m.c));
    return out;
}

Poly Poly::swapped_ab() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.b, m.a, m.c}, c);
    return out;
}

Rational Poly::eval(const Rational& a, const Rational& b, const Rational& d) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_)
        out += c * rational_pow(a, m.a) * rational_pow(b, m.b) * rational_pow(d, m.c);
    return out;
}

double Poly::eval(double a, double b, double d) const {
    double out = 0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (int i = 0; i < m.a; ++i) t *= a;
        for (int i = 0; i < m.b; ++i) t *= b;
        for (int i = 0; i < m.c; ++i) t *= d;
        out += t;
    }
    return out;
}

Rational Poly::content() const {
    if (terms_.empty()) return 1;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational cont(num_gcd, den_lcm);
    if (terms_.rbegin()->second < 0) cont = -cont;
    return cont;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest monomial first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_sym = m.a || m.b || m.c;
        bool piece_before = (mag != 1) || !has_sym;
        if (piece_before) os << rankone::to_string(mag);
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            if (piece_before) os << "*";
            piece_before = true;
            os << name;
            if (e > 1) os << "^" << e;
        };
        put("alpha", m.a);
        put("beta", m.b);
        put("d", m.c);
    }
    return os.str();
}

Poly pochhammer(const Poly& base, int n) {
    Poly out{Rational(1)};
    for (int i = 0; i < n; ++i) out = out * (base + Poly(Rational(i)));
    return out;
}

}  // namespace rankone
