#pragma once

#include <stdexcept>
#include <string>

#include "sos/polynomial.hpp"

namespace sos {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the term grammar: terms joined by '+'/'-'; each term an optional
/// rational coefficient ("p" or "p/q") followed by optional '*'-joined
/// factors "x<idx>" or "x<idx>^<exp>". Variable indices are 1-based in the
/// text. Throws ParseError on syntax errors, variable indices out of
/// [1, nvars], or term degree above 2d.
Polynomial parse_polynomial(const std::string& text, int nvars, int half_degree);

/// Same, with the half-degree defaulted to max(1, ceil(deg(f)/2)).
Polynomial parse_polynomial(const std::string& text, int nvars);

/// Canonical text form: terms in graded-lex order, exact rational
/// coefficients. parse_polynomial(emit_polynomial(f), n, d) == f.
std::string emit_polynomial(const Polynomial& f);

}  // namespace sos
