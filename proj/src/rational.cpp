#include "sos/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sos {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(s, 0, s.size())) {
            throw std::invalid_argument("malformed rational: '" + text + "'");
        }
        Rational q(mpz_class(s, 10));
        return negative ? Rational(-q) : q;
    }
    if (!all_digits(s, 0, slash) || !all_digits(s, slash + 1, s.size())) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

double rational_to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace sos
