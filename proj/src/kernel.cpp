#include "rankone/kernel.hpp"

#include "rankone/errors.hpp"

#include <cmath>
#include <sstream>

namespace rankone {

Poly AffineExp::to_poly() const {
    Poly p{Rational(k0)};
    if (ka) p += Poly::monomial({1, 0, 0}, ka);
    if (kb) p += Poly::monomial({0, 1, 0}, kb);
    return p;
}

std::string AffineExp::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](int c, const char* name) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        int mag = c < 0 ? -c : c;
        if (name == nullptr)
            os << mag;
        else {
            if (mag != 1) os << mag << "*";
            os << name;
        }
    };
    put(ka, "alpha");
    put(kb, "beta");
    put(k0, nullptr);
    if (first) os << "0";
    return os.str();
}

void KernelExpr::add_term(const KernelKey& k, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KernelExpr KernelExpr::term(RatFun coeff, AffineExp er, AffineExp es, int kt) {
    KernelExpr e;
    e.add_term(KernelKey{er, es, kt}, coeff);
    return e;
}

KernelExpr& KernelExpr::operator+=(const KernelExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

KernelExpr& KernelExpr::operator-=(const KernelExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

KernelExpr KernelExpr::scaled(const RatFun& c) const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

KernelExpr KernelExpr::mul_r() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        KernelKey kk = k;
        kk.er.k0 += 1;
        out.add_term(kk, v);
    }
    return out;
}

KernelExpr KernelExpr::mul_s() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        KernelKey kk = k;
        kk.es.k0 += 1;
        out.add_term(kk, v);
    }
    return out;
}

KernelExpr KernelExpr::mul_t() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        KernelKey kk = k;
        kk.kt += 1;
        out.add_term(kk, v);
    }
    return out;
}

KernelExpr KernelExpr::d_r() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        if (k.er.is_zero()) continue;
        KernelKey kk = k;
        kk.er.k0 -= 1;
        out.add_term(kk, v * RatFun(k.er.to_poly()));
    }
    return out;
}

KernelExpr KernelExpr::d_s() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        if (k.es.is_zero()) continue;
        KernelKey kk = k;
        kk.es.k0 -= 1;
        out.add_term(kk, v * RatFun(k.es.to_poly()));
    }
    return out;
}

KernelExpr KernelExpr::d_t() const {
    KernelExpr out;
    for (const auto& [k, v] : terms_) {
        if (k.kt == 0) continue;
        KernelKey kk = k;
        kk.kt -= 1;
        out.add_term(kk, v * RatFun(Rational(k.kt)));
    }
    return out;
}

KernelExpr KernelExpr::laplacian_x() const {
    const RatFun two_d(Poly::dim() * Rational(2));
    const RatFun four{Rational(4)};
    KernelExpr fr = d_r();
    KernelExpr out = fr.scaled(two_d);
    out += fr.d_r().mul_r().scaled(four);
    out += fr.d_t().mul_t().scaled(four);
    out += d_t().d_t().mul_s();
    return out;
}

KernelExpr KernelExpr::laplacian_y() const {
    const RatFun two_d(Poly::dim() * Rational(2));
    const RatFun four{Rational(4)};
    KernelExpr fs = d_s();
    KernelExpr out = fs.scaled(two_d);
    out += fs.d_s().mul_s().scaled(four);
    out += fs.d_t().mul_t().scaled(four);
    out += d_t().d_t().mul_r();
    return out;
}

KernelExpr KernelExpr::grad_dot_grad() const {
    const RatFun dsym(Poly::dim());
    const RatFun two{Rational(2)};
    const RatFun four{Rational(4)};
    KernelExpr ft = d_t();
    KernelExpr out = ft.scaled(dsym);
    out += ft.d_r().mul_r().scaled(two);
    out += ft.d_s().mul_s().scaled(two);
    out += d_r().d_s().mul_t().scaled(four);
    out += ft.d_t().mul_t();
    return out;
}

namespace {

double ipow(double x, int n) {
    double out = 1;
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

double real_power(double base, double expo, const char* name) {
    if (base == 0.0) {
        if (expo < 0) throw DomainError(std::string(name) + " = 0 with negative exponent");
        return expo == 0 ? 1.0 : 0.0;
    }
    return std::pow(base, expo);
}

}  // namespace

double KernelExpr::eval(std::span<const double> x, std::span<const double> y, double alpha,
                        double beta) const {
    if (x.size() != y.size()) throw DomainError("x and y must have equal dimension");
    const double d = static_cast<double>(x.size());
    double r = 0, s = 0, t = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        r += x[i] * x[i];
        s += y[i] * y[i];
        t += x[i] * y[i];
    }
    double out = 0;
    for (const auto& [k, c] : terms_) {
        double term = c.eval(alpha, beta, d);
        term *= real_power(r, k.er.eval(alpha, beta), "r");
        term *= real_power(s, k.es.eval(alpha, beta), "s");
        term *= ipow(t, k.kt);
        out += term;
    }
    return out;
}

std::string KernelExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (!k.er.is_zero()) os << " r^(" << k.er.to_string() << ")";
        if (!k.es.is_zero()) os << " s^(" << k.es.to_string() << ")";
        if (k.kt) os << " t^" << k.kt;
    }
    return os.str();
}

KernelExpr base_kernel() {
    return KernelExpr::term(RatFun(Rational(1)), AffineExp{-1, 0, 0}, AffineExp{0, -1, 0}, 0);
}

KernelExpr r_power(AffineExp e) {
    return KernelExpr::term(RatFun(Rational(1)), e, AffineExp{}, 0);
}

KernelExpr riesz_kernel(int j) {
    // (1/s + 1/r - 2t/(rs))^j r^{-alpha} s^{-beta} by the multinomial theorem:
    // term (p,q,k), p+q+k=j: m!/(p!q!k!) (-2)^k t^k r^{-alpha-q-k} s^{-beta-p-k}.
    KernelExpr out;
    for (int p = 0; p <= j; ++p) {
        for (int q = 0; p + q <= j; ++q) {
            int k = j - p - q;
            Rational coeff = multinomial(j, p, q, k) * rational_pow(Rational(-2), k);
            out += KernelExpr::term(RatFun(coeff), AffineExp{-1, 0, -(q + k)},
                                    AffineExp{0, -1, -(p + k)}, k);
        }
    }
    return out;
}

}  // namespace rankone
