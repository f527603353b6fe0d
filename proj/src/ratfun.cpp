#include "rankone/ratfun.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rankone {

Rational LinearFactor::canonicalize() {
    Rational lead = ca != 0 ? ca : cb != 0 ? cb : cd != 0 ? cd : c0;
    if (lead == 1) return 1;
    c0 /= lead;
    ca /= lead;
    cb /= lead;
    cd /= lead;
    return lead;
}

Poly LinearFactor::to_poly() const {
    Poly p{c0};
    if (ca != 0) p += Poly::monomial({1, 0, 0}, ca);
    if (cb != 0) p += Poly::monomial({0, 1, 0}, cb);
    if (cd != 0) p += Poly::monomial({0, 0, 1}, cd);
    return p;
}

LinearFactor LinearFactor::shifted(int da, int db) const {
    LinearFactor f = *this;
    f.c0 += ca * da + cb * db;
    return f;
}

std::optional<LinearFactor> LinearFactor::with_dim(const Rational& value) const {
    LinearFactor f = *this;
    f.c0 += cd * value;
    f.cd = 0;
    if (f.is_constant()) return std::nullopt;
    return f;
}

LinearFactor LinearFactor::swapped_ab() const {
    LinearFactor f = *this;
    std::swap(f.ca, f.cb);
    return f;
}

Rational LinearFactor::eval(const Rational& a, const Rational& b, const Rational& d) const {
    return c0 + ca * a + cb * b + cd * d;
}

double LinearFactor::eval(double a, double b, double d) const {
    return to_double(c0) + to_double(ca) * a + to_double(cb) * b + to_double(cd) * d;
}

std::string LinearFactor::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const Rational& c, const char* name) {
        if (c == 0) return;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (name == nullptr) {
            os << rankone::to_string(mag);
        } else {
            if (mag != 1) os << rankone::to_string(mag) << "*";
            os << name;
        }
    };
    put(ca, "alpha");
    put(cb, "beta");
    put(cd, "d");
    put(c0, nullptr);
    if (first) os << "0";
    return os.str();
}

std::optional<Poly> divide_by_linear(const Poly& p, const LinearFactor& f) {
    if (f.is_zero()) return std::nullopt;
    if (f.is_constant()) {
        Poly q = p;
        q *= Rational(1) / f.c0;
        return q;
    }
    // Leading variable of f: the first of alpha, beta, d with nonzero coefficient.
    int var;  // 0=alpha, 1=beta, 2=d
    Rational lead;
    if (f.ca != 0) {
        var = 0;
        lead = f.ca;
    } else if (f.cb != 0) {
        var = 1;
        lead = f.cb;
    } else {
        var = 2;
        lead = f.cd;
    }
    // f = lead * (x - root), root a degree-<=1 polynomial in the other symbols.
    Poly rest = f.to_poly() - Poly::monomial(var == 0 ? Monomial{1, 0, 0}
                                             : var == 1 ? Monomial{0, 1, 0}
                                                        : Monomial{0, 0, 1},
                                             lead);
    Poly root = (-rest) * (Rational(1) / lead);

    // Decompose p by powers of the leading variable.
    std::map<int, Poly> levels;
    for (const auto& [m, c] : p.terms()) {
        int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
        Monomial rem = m;
        (var == 0 ? rem.a : var == 1 ? rem.b : rem.c) = 0;
        levels[e] += Poly::monomial(rem, c);
    }
    if (levels.empty()) return Poly{};  // 0 / f = 0
    int n = levels.rbegin()->first;
    if (n == 0) return std::nullopt;  // nonzero, free of the variable

    // Synthetic division by (x - root), Horner style.
    std::vector<Poly> q(n);
    q[n - 1] = levels.count(n) ? levels[n] : Poly{};
    for (int k = n - 1; k >= 1; --k) {
        Poly pk = levels.count(k) ? levels[k] : Poly{};
        q[k - 1] = pk + root * q[k];
    }
    Poly rem = (levels.count(0) ? levels[0] : Poly{}) + root * q[0];
    if (!rem.is_zero()) return std::nullopt;

    Poly out;
    for (int k = 0; k < n; ++k) {
        Poly xk = Poly::monomial(var == 0 ? Monomial{k, 0, 0}
                                 : var == 1 ? Monomial{0, k, 0}
                                            : Monomial{0, 0, k},
                                 1);
        out += q[k] * xk;
    }
    out *= Rational(1) / lead;
    return out;
}

RatFun::RatFun(Rational c) : scale_(std::move(c)), num_(Rational(1)) { normalize(); }

RatFun::RatFun(Poly num) : num_(std::move(num)) { normalize(); }

RatFun::RatFun(Poly num, std::vector<LinearFactor> den, Rational scale)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFun RatFun::reciprocal(std::vector<LinearFactor> factors, Rational scale) {
    return RatFun(Poly(Rational(1)), std::move(factors), std::move(scale));
}

bool RatFun::is_one() const {
    return den_.empty() && scale_ == 1 && num_ == Poly(Rational(1));
}

void RatFun::normalize() {
    if (num_.is_zero() || scale_ == 0) {
        scale_ = 1;
        num_ = Poly{};
        den_.clear();
        return;
    }
    std::vector<LinearFactor> kept;
    kept.reserve(den_.size());
    for (LinearFactor f : den_) {
        if (f.is_zero()) throw std::logic_error("zero factor in denominator");
        if (f.is_constant()) {
            scale_ /= f.c0;
            continue;
        }
        scale_ /= f.canonicalize();
        kept.push_back(f);
    }
    den_ = std::move(kept);
    // Eager cancellation against each remaining factor.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = divide_by_linear(num_, *it)) {
                num_ = std::move(*q);
                den_.erase(it);
                changed = true;
                break;
            }
        }
    }
    Rational cont = num_.content();
    num_ *= Rational(1) / cont;
    scale_ *= cont;
    std::sort(den_.begin(), den_.end());
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    // Least common denominator as a multiset: max multiplicity per factor.
    std::map<LinearFactor, int> mult;
    for (const auto& f : den_) mult[f]++;
    std::map<LinearFactor, int> mult_o;
    for (const auto& f : o.den_) mult_o[f]++;
    std::map<LinearFactor, int> lcm_mult = mult;
    for (const auto& [f, k] : mult_o) lcm_mult[f] = std::max(lcm_mult[f], k);

    Poly left = num_ * Poly(scale_);
    Poly right = o.num_ * Poly(o.scale_);
    std::vector<LinearFactor> den;
    for (const auto& [f, k] : lcm_mult) {
        int ka = mult.count(f) ? mult.at(f) : 0;
        int kb = mult_o.count(f) ? mult_o.at(f) : 0;
        for (int i = 0; i < k; ++i) den.push_back(f);
        Poly fp = f.to_poly();
        for (int i = 0; i < k - ka; ++i) left = left * fp;
        for (int i = 0; i < k - kb; ++i) right = right * fp;
    }
    *this = RatFun(left + right, std::move(den));
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun RatFun::operator-() const {
    RatFun out = *this;
    if (!out.is_zero()) out.scale_ = -out.scale_;
    return out;
}

RatFun operator*(const RatFun& x, const RatFun& y) {
    if (x.is_zero() || y.is_zero()) return RatFun{};
    std::vector<LinearFactor> den = x.den_;
    den.insert(den.end(), y.den_.begin(), y.den_.end());
    return RatFun(x.num_ * y.num_, std::move(den), x.scale_ * y.scale_);
}

bool RatFun::operator==(const RatFun& o) const {
    return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
}

RatFun RatFun::shifted(int da, int db) const {
    if (is_zero() || (da == 0 && db == 0)) return *this;
    std::vector<LinearFactor> den;
    den.reserve(den_.size());
    for (const auto& f : den_) den.push_back(f.shifted(da, db));
    return RatFun(num_.shifted(da, db), std::move(den), scale_);
}

RatFun RatFun::with_dim(const Rational& value) const {
    if (is_zero()) return *this;
    Rational scale = scale_;
    std::vector<LinearFactor> den;
    for (const auto& f : den_) {
        if (auto g = f.with_dim(value)) {
            den.push_back(*g);
        } else {
            Rational c = f.c0 + f.cd * value;
            if (c == 0) throw PoleError("denominator factor vanishes identically at d = " + rankone::to_string(value));
            scale /= c;
        }
    }
    return RatFun(num_.with_dim(value), std::move(den), std::move(scale));
}

RatFun RatFun::swapped_ab() const {
    if (is_zero()) return *this;
    std::vector<LinearFactor> den;
    den.reserve(den_.size());
    for (const auto& f : den_) den.push_back(f.swapped_ab());
    return RatFun(num_.swapped_ab(), std::move(den), scale_);
}

Rational RatFun::eval(const Rational& a, const Rational& b, const Rational& d) const {
    if (is_zero()) return 0;
    Rational out = scale_ * num_.eval(a, b, d);
    for (const auto& f : den_) {
        Rational v = f.eval(a, b, d);
        if (v == 0) throw PoleError("pole at factor " + f.to_string());
        out /= v;
    }
    return out;
}

double RatFun::eval(double a, double b, double d) const {
    if (is_zero()) return 0.0;
    double out = to_double(scale_) * num_.eval(a, b, d);
    for (const auto& f : den_) {
        double v = f.eval(a, b, d);
        if (v == 0.0) throw PoleError("pole at factor " + f.to_string());
        out /= v;
    }
    return out;
}

std::vector<LinearFactor> RatFun::pole_set(Var v) const {
    std::vector<LinearFactor> out;
    for (const auto& f : den_) {
        bool hit = v == Var::alpha ? f.depends_on_alpha() : f.depends_on_beta();
        if (hit && (out.empty() || !(out.back() == f))) out.push_back(f);
    }
    return out;
}

Poly RatFun::scaled_num() const {
    Poly p = num_;
    p *= scale_;
    return p;
}

std::string RatFun::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    Poly top = scaled_num();
    if (den_.empty()) return top.to_string();
    bool parens = top.terms().size() > 1;
    os << (parens ? "(" : "") << top.to_string() << (parens ? ")" : "");
    os << " / [";
    for (size_t i = 0; i < den_.size(); ++i) {
        if (i) os << " ";
        os << "(" << den_[i].to_string() << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace rankone
