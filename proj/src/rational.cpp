#include "crn/rational.hpp"

#include <cctype>
#include <ostream>

namespace crn {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty number: '" + std::string(text) + "'");

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num)), mpz_class(std::string(den)));
        if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        mpz_class digits(std::string(whole) + std::string(frac), 10);
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac.size());
        value = mpq_class(digits, denom);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(s)));
    }
    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace crn
