#include "sos/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace sos {

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return text.substr(start, pos - start);
    }

    // "p" or "p/q", unsigned.
    Rational rational() {
        const std::string num = digits();
        if (peek() == '/') {
            const std::size_t slash = pos;
            ++pos;
            const std::string den = digits();
            if (mpz_class(den, 10) == 0) throw ParseError("zero denominator", slash + 1);
            Rational q(mpz_class(num, 10), mpz_class(den, 10));
            q.canonicalize();
            return q;
        }
        return Rational(mpz_class(num, 10));
    }

    // x<idx>[^<exp>]; idx 1-based in the text.
    std::pair<int, int> factor(int nvars) {
        skip_ws();
        const std::size_t start = pos;
        if (peek() != 'x' && peek() != 'X') throw ParseError("expected variable factor", pos);
        ++pos;
        const std::string idx_digits_str = digits();
        const long idx = std::stol(idx_digits_str);
        if (idx < 1 || idx > nvars) {
            throw ParseError("variable index x" + idx_digits_str + " out of range [1, " +
                                 std::to_string(nvars) + "]",
                             start);
        }
        int exp = 1;
        if (peek() == '^') {
            ++pos;
            exp = static_cast<int>(std::stol(digits()));
        }
        return {static_cast<int>(idx) - 1, exp};
    }
};

bool starts_factor(char c) { return c == 'x' || c == 'X'; }

void append_term(std::string& out, const Exponent& alpha, const Rational& c, bool first) {
    const bool negative = c < 0;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    std::string factors;
    for (int i = 0; i < alpha.nvars(); ++i) {
        if (alpha[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += "x" + std::to_string(i + 1);
        if (alpha[i] > 1) factors += "^" + std::to_string(alpha[i]);
    }
    if (factors.empty()) {
        out += rational_to_string(mag);
    } else if (mag == 1) {
        out += factors;
    } else {
        out += rational_to_string(mag) + "*" + factors;
    }
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, int half_degree) {
    Polynomial f(nvars, half_degree);
    Scanner sc{text};

    if (sc.done()) throw ParseError("empty polynomial", 0);

    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('+')) {
            sign = 1;
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", sc.pos);
        }
        sc.skip_ws();
        const std::size_t term_start = sc.pos;

        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coeff = sc.rational();
            saw_coeff = true;
            sc.accept('*');
            sc.skip_ws();
        }
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        bool saw_factor = false;
        if (starts_factor(sc.peek())) {
            while (true) {
                auto [var, e] = sc.factor(nvars);
                exps[static_cast<std::size_t>(var)] += e;
                saw_factor = true;
                if (!sc.accept('*')) break;
            }
        }
        if (!saw_coeff && !saw_factor) {
            throw ParseError("expected a term", sc.pos);
        }
        Exponent alpha(exps);
        if (alpha.degree() > 2 * half_degree) {
            throw ParseError("term degree " + std::to_string(alpha.degree()) +
                                 " exceeds 2d = " + std::to_string(2 * half_degree),
                             term_start);
        }
        f.add_term(alpha, sign < 0 ? Rational(-coeff) : coeff);
        first = false;
    }
    return f;
}

Polynomial parse_polynomial(const std::string& text, int nvars) {
    // Two passes: a generous parse to learn the degree, then the real one.
    Polynomial probe = parse_polynomial(text, nvars, 1 << 20);
    const int d = std::max(1, (probe.total_degree() + 1) / 2);
    return parse_polynomial(text, nvars, d);
}

std::string emit_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        append_term(out, alpha, c, first);
        first = false;
    }
    return out;
}

}  // namespace sos
