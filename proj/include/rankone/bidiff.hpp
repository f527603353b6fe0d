#pragma once

#include "rankone/kernel.hpp"

#include <map>
#include <string>
#include <vector>

namespace rankone {

// Monomial A^pa B^pb C^pc in the commuting generators A = L_x, B = L_y,
// C = grad_x . grad_y.
struct OpMonomial {
    int pa = 0, pb = 0, pc = 0;
    auto operator<=>(const OpMonomial&) const = default;
    int degree() const { return pa + pb + pc; }
};

// Polynomial in A, B, C with RatFun coefficients.
class BidiffOp {
  public:
    BidiffOp() = default;

    static BidiffOp identity();
    static BidiffOp gen_a();
    static BidiffOp gen_b();
    static BidiffOp gen_c();

    bool is_zero() const { return coeffs_.empty(); }
    size_t monomial_count() const { return coeffs_.size(); }
    const std::map<OpMonomial, RatFun>& coeffs() const { return coeffs_; }

    BidiffOp& operator+=(const BidiffOp& o);
    friend BidiffOp operator+(BidiffOp x, const BidiffOp& y) { return x += y; }
    friend BidiffOp operator*(const BidiffOp& x, const BidiffOp& y);
    BidiffOp scaled(const RatFun& c) const;
    bool operator==(const BidiffOp& o) const { return coeffs_ == o.coeffs_; }

    // Substitutes alpha -> alpha+da, beta -> beta+db in every coefficient.
    BidiffOp shifted(int da, int db) const;
    // Swaps (alpha, A) <-> (beta, B).
    BidiffOp swapped() const;
    BidiffOp with_dim(const Rational& value) const;

    // True iff every monomial has total degree m.
    bool homogeneous_of(int m) const;

    KernelExpr apply(const KernelExpr& f) const;

    // Distinct denominator factors over all coefficients.
    std::vector<LinearFactor> denominator_factors() const;

    std::string to_string() const;

  private:
    void add_term(const OpMonomial& m, const RatFun& c);
    std::map<OpMonomial, RatFun> coeffs_;
};

// Denominator convention of the recursion family; the first is the one the
// kernel-reproduction identity certifies, the second fails at m = 2 and is
// kept as a regression guard.
enum class RecursionDenominator { kOneMinusRho, kRhoMinusOne };

// Family M_j: M_0 = I, M_1 = C,
//   M_{j+1} = C M_j - [ j (d-3j-1-2a-2b) / (4 (a+1-d/2)(b+1-d/2)) ]
//             * shift(M_{j-1}, +1, +1) A B.
BidiffOp recursion_family(int j, RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// Scale 2^{2(i+j+k)} and the Pochhammer linear factors of the reproduction
// constant: (a)_{j+k} (a+1-d/2)_j (b)_{i+k} (b+1-d/2)_i.
std::pair<Rational, std::vector<LinearFactor>> reproduction_coeff_parts(int i, int j, int k);

// The constant itself as a polynomial RatFun.
RatFun reproduction_coeff(int i, int j, int k);

// multinomial(i+j+k; i,j,k) (-2)^k / c_{i,j,k}.
RatFun bracket_coefficient(int i, int j, int k);

// E_m = sum_{i+j+k=m} eps_{i,j,k} shift(M_k, j, i) A^j B^i.
BidiffOp bracket_operator(int m, RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// --- exact verification -----------------------------------------------------

struct IdentityCheck {
    int index = 0;
    bool pass = false;
    std::string residual;  // canonical difference when failing, else empty
};

struct VerifyReport {
    std::string name;
    bool pass = true;
    std::vector<IdentityCheck> checks;
    int first_failure = -1;
};

// L_x^j r^{-alpha} = 2^{2j} (alpha)_j (alpha+1-d/2)_j r^{-(alpha+j)}, j <= j_max.
VerifyReport verify_bernstein_identity(int j_max);

// M_m (r^{-a} s^{-b}) = 2^{2m} (a)_m (b)_m t^m r^{-a-m} s^{-b-m}, m <= m_max.
VerifyReport verify_kernel_reproduction(int m_max,
                                        RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// shift(M_k, j, i) A^j B^i (r^{-a}s^{-b}) = c_{i,j,k} t^k r^{-a-j-k} s^{-b-i-k}
// for all i+j+k <= total_max.
VerifyReport verify_mixed_reproduction(int total_max,
                                       RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// E_m (r^{-a}s^{-b}) = ((r+s-2t)/(rs))^m r^{-a}s^{-b}, m <= m_max.
VerifyReport verify_bracket_expansion(int m_max,
                                      RecursionDenominator den = RecursionDenominator::kOneMinusRho);

// --- Fourier symbol ---------------------------------------------------------

// Fast numeric form of the symbol polynomial at fixed (alpha, beta, d).
struct CompiledSymbol {
    struct Term {
        int pa, pb, pc;
        double c;
    };
    std::vector<Term> terms;
    int degree = 0;

    // Q(u, v, w); callers pass u = -|xi|^2, v = -|eta|^2, w = -<xi, eta>.
    double eval(double u, double v, double w) const;
    double eval_freq(std::span<const double> xi, std::span<const double> eta) const;
};

// Polynomial Q(u, v, w) obtained from E_m by A -> u, B -> v, C -> w.
class FourierSymbol {
  public:
    explicit FourierSymbol(const BidiffOp& op);
    int degree() const { return degree_; }
    const std::map<OpMonomial, RatFun>& terms() const { return terms_; }
    CompiledSymbol compile(double alpha, double beta, int dim) const;  // throws PoleError

  private:
    int degree_;
    std::map<OpMonomial, RatFun> terms_;
};

// --- pole audit -------------------------------------------------------------

struct PoleReport {
    int j = 0;
    std::vector<LinearFactor> computed;              // from E_j coefficients, distinct
    std::vector<LinearFactor> literal;               // the stated pole list, as factors
    bool contained_in_family = true;                 // alpha+p / alpha+1-d/2+p (0<=p<=j), beta mirror
    std::vector<LinearFactor> outside_family;
    std::vector<LinearFactor> computed_not_literal;  // discrepancies (warn only)
    std::vector<LinearFactor> literal_not_computed;
};

PoleReport pole_report(int j, RecursionDenominator den = RecursionDenominator::kOneMinusRho);

}  // namespace rankone
