#include "crn/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace crn {

namespace {
const Rational kZero(0);
}

MultivariatePolynomial MultivariatePolynomial::constant(std::vector<std::string> variables,
                                                        const Rational& c) {
    MultivariatePolynomial p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), c);
    return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::vector<std::string> variables, int index) {
    MultivariatePolynomial p(std::move(variables));
    if (index < 0 || index >= static_cast<int>(p.variables_.size()))
        throw std::out_of_range("variable index out of range");
    Exponents e(p.variables_.size(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

const Rational& MultivariatePolynomial::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? kZero : it->second;
}

void MultivariatePolynomial::add_term(const Exponents& exponents, const Rational& c) {
    if (exponents.size() != variables_.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultivariatePolynomial::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int degree = -1;
    for (const auto& [exponents, coeff] : terms_) {
        int d = 0;
        for (int e : exponents) d += e;
        if (degree < 0) degree = d;
        if (d != degree) return -1;
    }
    return degree;
}

Rational MultivariatePolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != variables_.size())
        throw std::invalid_argument("evaluation point length does not match variable list");
    Rational total(0);
    for (const auto& [exponents, coeff] : terms_) {
        Rational term = coeff;
        for (size_t i = 0; i < exponents.size(); ++i)
            for (int e = 0; e < exponents[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

void MultivariatePolynomial::check_compatible(const MultivariatePolynomial& other) const {
    if (variables_ != other.variables_)
        throw std::invalid_argument("operands have different variable lists");
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
    MultivariatePolynomial out(variables_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultivariatePolynomial operator+(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    a.check_compatible(b);
    MultivariatePolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MultivariatePolynomial operator-(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    a.check_compatible(b);
    MultivariatePolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    a.check_compatible(b);
    MultivariatePolynomial out(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultivariatePolynomial::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultivariatePolynomial operator*(const Rational& c, const MultivariatePolynomial& p) {
    MultivariatePolynomial out(p.variables_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, c * coeff);
    return out;
}

std::string MultivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exponents, coeff] : terms_) {
        Rational mag = abs(coeff);
        if (first) {
            if (coeff.sign() < 0) os << "-";
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
        }
        bool constant_term = true;
        for (int e : exponents)
            if (e != 0) constant_term = false;
        bool unit = mag == Rational(1);
        if (constant_term || !unit) os << mag.str();
        bool need_star = !unit;
        for (size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (need_star) os << "*";
            os << variables_[i];
            if (exponents[i] > 1) os << "^" << exponents[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace crn
