#ifndef CRN_MULTIPOLY_HPP
#define CRN_MULTIPOLY_HPP

#include "crn/rational.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace crn {

/// Orders exponent vectors by descending graded-lexicographic rank: higher
/// total degree first, ties broken by lexicographically larger exponents
/// first. Map iteration therefore matches the canonical printed term order.
struct GradedLexDescending {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over a fixed, named variable list with
/// exact rational coefficients. Zero-coefficient terms are never stored.
class MultivariatePolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit MultivariatePolynomial(std::vector<std::string> variables)
        : variables_(std::move(variables)) {}

    static MultivariatePolynomial constant(std::vector<std::string> variables, const Rational& c);
    static MultivariatePolynomial variable(std::vector<std::string> variables, int index);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the given exponent vector (zero when absent).
    const Rational& coefficient(const Exponents& exponents) const;

    void add_term(const Exponents& exponents, const Rational& c);

    /// Total degree of every term when the polynomial is homogeneous;
    /// -1 when it is not (or is zero).
    int homogeneous_degree() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    MultivariatePolynomial operator-() const;
    friend MultivariatePolynomial operator+(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
    friend MultivariatePolynomial operator-(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
    friend MultivariatePolynomial operator*(const Rational& c, const MultivariatePolynomial& p);

    friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
        return a.variables_ == b.variables_ && a.terms_ == b.terms_;
    }

    /// Canonical text form: terms in descending graded-lex order, joined by
    /// " + " / " - ", factors joined by "*", powers as "^". The zero
    /// polynomial prints as "0".
    std::string str() const;

private:
    void check_compatible(const MultivariatePolynomial& other) const;
    std::vector<std::string> variables_;
    TermMap terms_;
};

}  // namespace crn

#endif  // CRN_MULTIPOLY_HPP
