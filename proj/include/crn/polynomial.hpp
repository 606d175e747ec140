#ifndef CRN_POLYNOMIAL_HPP
#define CRN_POLYNOMIAL_HPP

#include "crn/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace crn {

/// Dense univariate polynomial with exact rational coefficients, constant
/// term first. Normalized form has no trailing zero coefficients; the zero
/// polynomial has degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    RationalPolynomial derivative() const;
    RationalPolynomial operator-() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Euclidean division over the rationals; q nonzero.
    static std::pair<RationalPolynomial, RationalPolynomial> divmod(
        const RationalPolynomial& p, const RationalPolynomial& q);

    /// Monic gcd; gcd(0, 0) is the zero polynomial.
    friend RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

    /// p / gcd(p, p'): same distinct roots, all simple.
    RationalPolynomial squarefree_part() const;

    /// Yun decomposition: returns pairs (q_m, m) with p = lc * prod q_m^m,
    /// the q_m monic, squarefree, pairwise coprime, only m with deg q_m >= 1.
    std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition() const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// One distinct real root: open isolating interval (lo, hi) containing
/// exactly that root of the polynomial, endpoints not roots.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
};

struct RootCount {
    int distinct_positive = 0;
    std::vector<IsolatedRoot> roots;  // ascending
};

/// Distinct roots in (0, inf) with multiplicities and pairwise disjoint
/// isolating intervals, by Sturm's theorem on the squarefree part. A root at
/// x = 0 is never counted. Throws std::domain_error on the zero polynomial.
RootCount sturm_positive_roots(const RationalPolynomial& p);

/// Signed-remainder Sturm chain of the given polynomial.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

/// Number of distinct real roots of squarefree f in the open interval
/// (a, b), given f(a) != 0 and f(b) != 0. Pass the chain of f.
int sturm_count_open(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b);

/// Bisects (lo, hi) down to width <= tol and returns the midpoint as a
/// double. Requires p(lo) and p(hi) nonzero with opposite signs; throws
/// std::domain_error otherwise. An exactly hit rational root is returned
/// immediately.
double refine_root(const RationalPolynomial& p, const Rational& lo, const Rational& hi, const Rational& tol);

/// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 for ax^3 + bx^2 + cx + d.
Rational cubic_discriminant(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

struct DeflatedDiscriminant {
    Rational value;
    int effective_degree = 0;
};

/// Discriminant of -S0 x^3 + S1 x^2 - S2 x + S3 after deflating leading
/// zeros to the true degree: cubic discriminant when S0 != 0, quadratic
/// S2^2 - 4 S1 S3 when S0 = 0 != S1, and the convention D = 1 for degrees
/// one and zero. Throws std::domain_error when all four vanish.
DeflatedDiscriminant deflated_discriminant(const Rational& s0, const Rational& s1,
                                           const Rational& s2, const Rational& s3);

}  // namespace crn

#endif  // CRN_POLYNOMIAL_HPP
