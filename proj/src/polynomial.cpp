#include "crn/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crn {

namespace {
const Rational kZero(0);
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

const Rational& RationalPolynomial::leading_coeff() const {
    if (is_zero()) return kZero;
    return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPolynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = c * p.coeffs_[k];
    return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& p, const RationalPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = p.coeffs_;
    int dq = q.degree();
    if (p.degree() < dq) return {RationalPolynomial{}, p};
    std::vector<Rational> quot(p.degree() - dq + 1, Rational(0));
    const Rational& lead = q.leading_coeff();
    for (int k = p.degree() - dq; k >= 0; --k) {
        Rational factor = rem[k + dq] / lead;
        quot[k] = factor;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= dq; ++j) rem[k + j] -= factor * q.coeffs_[j];
    }
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial u = a, v = b;
    while (!v.is_zero()) {
        auto [q, r] = RationalPolynomial::divmod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return u;
    return (Rational(1) / u.leading_coeff()) * u;  // monic
}

RationalPolynomial RationalPolynomial::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (degree() == 0) return RationalPolynomial{Rational(1)};
    RationalPolynomial g = gcd(*this, derivative());
    auto [q, r] = divmod(*this, g);
    return (Rational(1) / q.leading_coeff()) * q;
}

std::vector<std::pair<RationalPolynomial, int>> RationalPolynomial::squarefree_decomposition() const {
    if (is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (degree() == 0) return out;

    // Yun's algorithm over a field of characteristic zero.
    RationalPolynomial f = (Rational(1) / leading_coeff()) * (*this);
    RationalPolynomial fp = f.derivative();
    RationalPolynomial a = gcd(f, fp);
    RationalPolynomial b = divmod(f, a).first;
    RationalPolynomial c = divmod(fp, a).first;
    RationalPolynomial d = c - b.derivative();
    int multiplicity = 1;
    while (b.degree() > 0) {
        RationalPolynomial factor = gcd(b, d);
        if (factor.degree() > 0) out.emplace_back(factor, multiplicity);
        b = divmod(b, factor).first;
        c = divmod(d, factor).first;
        d = c - b.derivative();
        ++multiplicity;
    }
    return out;
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(p);
    RationalPolynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const RationalPolynomial& a = chain[chain.size() - 2];
        const RationalPolynomial& b = chain[chain.size() - 1];
        RationalPolynomial r = RationalPolynomial::divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q(x).sign());
    return sign_variations(signs);
}

/// 1 + max |a_i / a_n|: upper bound on the modulus of every root.
Rational cauchy_bound(const RationalPolynomial& p) {
    Rational bound(0);
    const Rational lead = abs(p.leading_coeff());
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = abs(p.coeff(k)) / lead;
        if (ratio > bound) bound = ratio;
    }
    return bound + Rational(1);
}

/// 1 / (1 + max |a_i / a_0|): every nonzero root has larger modulus.
/// Requires a nonzero constant term.
Rational cauchy_lower_bound(const RationalPolynomial& p) {
    Rational bound(0);
    const Rational constant = abs(p.coeff(0));
    for (int k = 1; k <= p.degree(); ++k) {
        Rational ratio = abs(p.coeff(k)) / constant;
        if (ratio > bound) bound = ratio;
    }
    return Rational(1) / (bound + Rational(1));
}

/// Splits (lo, hi) at an interior point that is not a root of f.
Rational split_point(const RationalPolynomial& f, const Rational& lo, const Rational& hi) {
    for (long denom = 2;; denom = denom * 2 + 1) {
        for (long j = 1; j < denom; ++j) {
            Rational m = lo + Rational(j, denom) * (hi - lo);
            if (!f(m).is_zero()) return m;
        }
    }
}

void isolate(const RationalPolynomial& f, const std::vector<RationalPolynomial>& chain,
             const Rational& lo, const Rational& hi, int count, std::vector<IsolatedRoot>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi, 1});
        return;
    }
    Rational mid = split_point(f, lo, hi);
    int left = sturm_count_open(chain, lo, mid);
    isolate(f, chain, lo, mid, left, out);
    isolate(f, chain, mid, hi, count - left, out);
}

}  // namespace

int sturm_count_open(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

RootCount sturm_positive_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("root counting on the zero polynomial");

    // Strip roots at x = 0; only strictly positive roots count.
    std::vector<Rational> stripped = p.coeffs();
    size_t shift = 0;
    while (shift < stripped.size() && stripped[shift].is_zero()) ++shift;
    stripped.erase(stripped.begin(), stripped.begin() + shift);
    RationalPolynomial q{std::vector<Rational>(stripped)};

    RootCount result;
    if (q.degree() <= 0) return result;

    auto factors = q.squarefree_decomposition();
    RationalPolynomial f{std::vector<Rational>{Rational(1)}};
    for (const auto& [factor, mult] : factors) f = f * factor;

    auto chain = sturm_chain(f);
    Rational upper = cauchy_bound(f);
    while (f(upper).is_zero()) upper += Rational(1);
    // Start strictly right of zero so that no isolating-interval endpoint
    // is a root of the input (which may vanish at the origin).
    Rational lower = cauchy_lower_bound(f);
    while (f(lower).is_zero()) lower = lower / Rational(2);

    int total = sturm_count_open(chain, lower, upper);
    result.distinct_positive = total;
    if (total == 0) return result;

    isolate(f, chain, lower, upper, total, result.roots);
    std::sort(result.roots.begin(), result.roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });

    for (auto& root : result.roots) {
        for (const auto& [factor, mult] : factors) {
            if (factor(root.lo).sign() * factor(root.hi).sign() < 0) {
                root.multiplicity = mult;
                break;
            }
        }
    }
    return result;
}

double refine_root(const RationalPolynomial& p, const Rational& lo, const Rational& hi, const Rational& tol) {
    if (!(lo < hi)) throw std::domain_error("refine_root: empty interval");
    if (tol.sign() <= 0) throw std::domain_error("refine_root: tolerance must be positive");
    Rational a = lo, b = hi;
    int sa = p(a).sign(), sb = p(b).sign();
    if (sa == 0 || sb == 0 || sa == sb)
        throw std::domain_error("refine_root: interval endpoints do not bracket a sign change");
    while (b - a > tol) {
        Rational mid = (a + b) / Rational(2);
        int sm = p(mid).sign();
        if (sm == 0) return mid.to_double();
        if (sm == sa) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return ((a + b) / Rational(2)).to_double();
}

Rational cubic_discriminant(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
           Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
}

DeflatedDiscriminant deflated_discriminant(const Rational& s0, const Rational& s1,
                                           const Rational& s2, const Rational& s3) {
    if (!s0.is_zero())
        return {cubic_discriminant(-s0, s1, -s2, s3), 3};
    if (!s1.is_zero())
        return {s2 * s2 - Rational(4) * s1 * s3, 2};
    if (!s2.is_zero())
        return {Rational(1), 1};
    if (!s3.is_zero())
        return {Rational(1), 0};
    throw std::domain_error("discriminant of the identically zero coefficient tuple");
}

}  // namespace crn
