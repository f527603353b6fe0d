#include "rankone/bidiff.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rankone {

BidiffOp BidiffOp::identity() {
    BidiffOp op;
    op.coeffs_[OpMonomial{}] = RatFun(Rational(1));
    return op;
}

BidiffOp BidiffOp::gen_a() {
    BidiffOp op;
    op.coeffs_[OpMonomial{1, 0, 0}] = RatFun(Rational(1));
    return op;
}

BidiffOp BidiffOp::gen_b() {
    BidiffOp op;
    op.coeffs_[OpMonomial{0, 1, 0}] = RatFun(Rational(1));
    return op;
}

BidiffOp BidiffOp::gen_c() {
    BidiffOp op;
    op.coeffs_[OpMonomial{0, 0, 1}] = RatFun(Rational(1));
    return op;
}

void BidiffOp::add_term(const OpMonomial& m, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

BidiffOp& BidiffOp::operator+=(const BidiffOp& o) {
    for (const auto& [m, c] : o.coeffs_) add_term(m, c);
    return *this;
}

BidiffOp operator*(const BidiffOp& x, const BidiffOp& y) {
    BidiffOp out;
    for (const auto& [mx, cx] : x.coeffs_)
        for (const auto& [my, cy] : y.coeffs_)
            out.add_term(OpMonomial{mx.pa + my.pa, mx.pb + my.pb, mx.pc + my.pc}, cx * cy);
    return out;
}

BidiffOp BidiffOp::scaled(const RatFun& c) const {
    BidiffOp out;
    for (const auto& [m, v] : coeffs_) out.add_term(m, v * c);
    return out;
}

BidiffOp BidiffOp::shifted(int da, int db) const {
    BidiffOp out;
    for (const auto& [m, c] : coeffs_) out.add_term(m, c.shifted(da, db));
    return out;
}

BidiffOp BidiffOp::swapped() const {
    BidiffOp out;
    for (const auto& [m, c] : coeffs_)
        out.add_term(OpMonomial{m.pb, m.pa, m.pc}, c.swapped_ab());
    return out;
}

BidiffOp BidiffOp::with_dim(const Rational& value) const {
    BidiffOp out;
    for (const auto& [m, c] : coeffs_) out.add_term(m, c.with_dim(value));
    return out;
}

bool BidiffOp::homogeneous_of(int m) const {
    for (const auto& [mon, c] : coeffs_)
        if (mon.degree() != m) return false;
    return true;
}

KernelExpr BidiffOp::apply(const KernelExpr& f) const {
    KernelExpr out;
    for (const auto& [m, c] : coeffs_) {
        KernelExpr g = f;
        for (int i = 0; i < m.pc; ++i) g = g.grad_dot_grad();
        for (int i = 0; i < m.pa; ++i) g = g.laplacian_x();
        for (int i = 0; i < m.pb; ++i) g = g.laplacian_y();
        out += g.scaled(c);
    }
    return out;
}

std::vector<LinearFactor> BidiffOp::denominator_factors() const {
    std::set<LinearFactor> uniq;
    for (const auto& [m, c] : coeffs_)
        for (const auto& f : c.den()) uniq.insert(f);
    return {uniq.begin(), uniq.end()};
}

std::string BidiffOp::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (m.pa) os << " A^" << m.pa;
        if (m.pb) os << " B^" << m.pb;
        if (m.pc) os << " C^" << m.pc;
    }
    return os.str();
}

namespace {

LinearFactor rho_factor(bool on_alpha, int offset, RecursionDenominator den) {
    // alpha + offset + 1 - d/2 (certified) or alpha + offset - 1 + d/2 (guard).
    LinearFactor f;
    (on_alpha ? f.ca : f.cb) = 1;
    if (den == RecursionDenominator::kOneMinusRho) {
        f.c0 = Rational(offset + 1);
        f.cd = Rational(-1, 2);
    } else {
        f.c0 = Rational(offset - 1);
        f.cd = Rational(1, 2);
    }
    return f;
}

}  // namespace

BidiffOp recursion_family(int j, RecursionDenominator den) {
    std::vector<BidiffOp> fam;
    fam.reserve(j + 1);
    fam.push_back(BidiffOp::identity());
    if (j >= 1) fam.push_back(BidiffOp::gen_c());
    const BidiffOp ab = BidiffOp::gen_a() * BidiffOp::gen_b();
    for (int n = 1; n < j; ++n) {
        // numerator n*(d - 3n - 1 - 2 alpha - 2 beta)
        Poly numer = (Poly::dim() - Poly(Rational(3 * n + 1)) - Poly::alpha() * Rational(2) -
                      Poly::beta() * Rational(2)) *
                     Rational(n);
        RatFun coeff(std::move(numer), {rho_factor(true, 0, den), rho_factor(false, 0, den)},
                     Rational(-1, 4));
        BidiffOp next = BidiffOp::gen_c() * fam[n];
        next += (fam[n - 1].shifted(1, 1) * ab).scaled(coeff);
        fam.push_back(std::move(next));
    }
    return fam[j];
}

std::pair<Rational, std::vector<LinearFactor>> reproduction_coeff_parts(int i, int j, int k) {
    Rational scale = rational_pow(Rational(4), i + j + k);
    std::vector<LinearFactor> factors;
    for (int p = 0; p < j + k; ++p) factors.push_back(LinearFactor::alpha_plus(p));
    for (int p = 0; p < j; ++p) factors.push_back(rho_factor(true, p, RecursionDenominator::kOneMinusRho));
    for (int q = 0; q < i + k; ++q) factors.push_back(LinearFactor::beta_plus(q));
    for (int q = 0; q < i; ++q) factors.push_back(rho_factor(false, q, RecursionDenominator::kOneMinusRho));
    return {std::move(scale), std::move(factors)};
}

RatFun reproduction_coeff(int i, int j, int k) {
    auto [scale, factors] = reproduction_coeff_parts(i, j, k);
    Poly p{Rational(1)};
    for (const auto& f : factors) p = p * f.to_poly();
    p *= scale;
    return RatFun(std::move(p));
}

RatFun bracket_coefficient(int i, int j, int k) {
    auto [scale, factors] = reproduction_coeff_parts(i, j, k);
    int m = i + j + k;
    Rational top = multinomial(m, i, j, k) * rational_pow(Rational(-2), k) / scale;
    return RatFun::reciprocal(std::move(factors), std::move(top));
}

BidiffOp bracket_operator(int m, RecursionDenominator den) {
    BidiffOp out;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; i + j <= m; ++j) {
            int k = m - i - j;
            BidiffOp piece = recursion_family(k, den).shifted(j, i);
            for (int p = 0; p < j; ++p) piece = piece * BidiffOp::gen_a();
            for (int q = 0; q < i; ++q) piece = piece * BidiffOp::gen_b();
            out += piece.scaled(bracket_coefficient(i, j, k));
        }
    }
    return out;
}

namespace {

std::string residual_string(const KernelExpr& diff) {
    std::string s = diff.to_string();
    if (s.size() > 400) s = s.substr(0, 400) + " ...";
    return s;
}

void record(VerifyReport& rep, int index, const KernelExpr& diff) {
    IdentityCheck chk;
    chk.index = index;
    chk.pass = diff.is_zero();
    if (!chk.pass) {
        chk.residual = residual_string(diff);
        if (rep.pass) rep.first_failure = index;
        rep.pass = false;
    }
    rep.checks.push_back(std::move(chk));
}

// 2^{2m} (a)_m (b)_m as a RatFun, with optional parameter offsets.
RatFun rising_pair(int m) {
    Poly p = pochhammer(Poly::alpha(), m) * pochhammer(Poly::beta(), m);
    p *= rational_pow(Rational(4), m);
    return RatFun(std::move(p));
}

}  // namespace

VerifyReport verify_bernstein_identity(int j_max) {
    VerifyReport rep;
    rep.name = "bernstein-identity";
    KernelExpr lhs = r_power(AffineExp{-1, 0, 0});
    for (int j = 0; j <= j_max; ++j) {
        Poly cf = pochhammer(Poly::alpha(), j) *
                  pochhammer(Poly::alpha() + Poly(Rational(1)) - Poly::dim() * Rational(1, 2), j);
        cf *= rational_pow(Rational(4), j);
        KernelExpr rhs = KernelExpr::term(RatFun(std::move(cf)), AffineExp{-1, 0, -j}, AffineExp{}, 0);
        record(rep, j, lhs - rhs);
        lhs = lhs.laplacian_x();
    }
    return rep;
}

VerifyReport verify_kernel_reproduction(int m_max, RecursionDenominator den) {
    VerifyReport rep;
    rep.name = "kernel-reproduction";
    const KernelExpr base = base_kernel();
    for (int m = 0; m <= m_max; ++m) {
        KernelExpr lhs = recursion_family(m, den).apply(base);
        KernelExpr rhs = KernelExpr::term(rising_pair(m), AffineExp{-1, 0, -m}, AffineExp{0, -1, -m}, m);
        record(rep, m, lhs - rhs);
    }
    return rep;
}

VerifyReport verify_mixed_reproduction(int total_max, RecursionDenominator den) {
    VerifyReport rep;
    rep.name = "mixed-reproduction";
    const KernelExpr base = base_kernel();
    int index = 0;
    for (int total = 0; total <= total_max; ++total) {
        for (int i = 0; i <= total; ++i) {
            for (int j = 0; i + j <= total; ++j) {
                int k = total - i - j;
                BidiffOp op = recursion_family(k, den).shifted(j, i);
                for (int p = 0; p < j; ++p) op = op * BidiffOp::gen_a();
                for (int q = 0; q < i; ++q) op = op * BidiffOp::gen_b();
                KernelExpr lhs = op.apply(base);
                KernelExpr rhs = KernelExpr::term(reproduction_coeff(i, j, k),
                                                  AffineExp{-1, 0, -(j + k)},
                                                  AffineExp{0, -1, -(i + k)}, k);
                record(rep, index++, lhs - rhs);
            }
        }
    }
    return rep;
}

VerifyReport verify_bracket_expansion(int m_max, RecursionDenominator den) {
    VerifyReport rep;
    rep.name = "bracket-expansion";
    const KernelExpr base = base_kernel();
    for (int m = 0; m <= m_max; ++m) {
        KernelExpr lhs = bracket_operator(m, den).apply(base);
        record(rep, m, lhs - riesz_kernel(m));
    }
    return rep;
}

double CompiledSymbol::eval(double u, double v, double w) const {
    double out = 0;
    for (const auto& t : terms) {
        double x = t.c;
        for (int i = 0; i < t.pa; ++i) x *= u;
        for (int i = 0; i < t.pb; ++i) x *= v;
        for (int i = 0; i < t.pc; ++i) x *= w;
        out += x;
    }
    return out;
}

double CompiledSymbol::eval_freq(std::span<const double> xi, std::span<const double> eta) const {
    double u = 0, v = 0, w = 0;
    for (size_t i = 0; i < xi.size(); ++i) {
        u -= xi[i] * xi[i];
        v -= eta[i] * eta[i];
        w -= xi[i] * eta[i];
    }
    return eval(u, v, w);
}

FourierSymbol::FourierSymbol(const BidiffOp& op) : degree_(0), terms_(op.coeffs()) {
    for (const auto& [m, c] : terms_) degree_ = std::max(degree_, m.degree());
}

CompiledSymbol FourierSymbol::compile(double alpha, double beta, int dim) const {
    CompiledSymbol out;
    out.degree = degree_;
    out.terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
        out.terms.push_back({m.pa, m.pb, m.pc, c.eval(alpha, beta, static_cast<double>(dim))});
    return out;
}

PoleReport pole_report(int j, RecursionDenominator den) {
    PoleReport rep;
    rep.j = j;
    rep.computed = bracket_operator(j, den).denominator_factors();

    // Stated pole list: alpha (or beta) in {0,-1,...,-j+1} u (rho-1+{0,...,-j+2}),
    // as factors alpha+p (p=0..j-1) and alpha+1-d/2+p (p=0..j-2).
    for (int p = 0; p < j; ++p) {
        rep.literal.push_back(LinearFactor::alpha_plus(p));
        rep.literal.push_back(LinearFactor::beta_plus(p));
    }
    for (int p = 0; p + 1 < j; ++p) {
        rep.literal.push_back(rho_factor(true, p, RecursionDenominator::kOneMinusRho));
        rep.literal.push_back(rho_factor(false, p, RecursionDenominator::kOneMinusRho));
    }
    std::sort(rep.literal.begin(), rep.literal.end());

    auto in_family = [&](const LinearFactor& f) {
        bool alpha_like = f.ca == 1 && f.cb == 0;
        bool beta_like = f.cb == 1 && f.ca == 0;
        if (!alpha_like && !beta_like) return false;
        if (f.cd == 0) {
            // var + p, 0 <= p <= j
            return denominator(f.c0) == 1 && f.c0 >= 0 && f.c0 <= j;
        }
        if (f.cd == Rational(-1, 2)) {
            // var + 1 - d/2 + p, 0 <= p <= j
            Rational p = f.c0 - 1;
            return denominator(p) == 1 && p >= 0 && p <= j;
        }
        return false;
    };
    for (const auto& f : rep.computed) {
        if (!in_family(f)) {
            rep.contained_in_family = false;
            rep.outside_family.push_back(f);
        }
        if (!std::binary_search(rep.literal.begin(), rep.literal.end(), f))
            rep.computed_not_literal.push_back(f);
    }
    for (const auto& f : rep.literal)
        if (!std::binary_search(rep.computed.begin(), rep.computed.end(), f))
            rep.literal_not_computed.push_back(f);
    return rep;
}

}  // namespace rankone
