#pragma once

#include <map>
#include <span>
#include <utility>

#include "sos/exponent.hpp"
#include "sos/rational.hpp"

namespace sos {

/// Sparse multivariate polynomial with exact rational coefficients and a
/// declared half-degree d bounding every term by degree 2d. Immutable in
/// practice: construction fills the term map, after which instances are
/// safe to share across threads.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    Polynomial(int nvars, int half_degree);
    static Polynomial zero(int nvars, int half_degree) { return Polynomial(nvars, half_degree); }

    int nvars() const { return nvars_; }
    int half_degree() const { return half_degree_; }

    /// Adds c to the coefficient of alpha; the entry is erased when the sum
    /// cancels to zero. Throws when alpha has the wrong arity or degree > 2d.
    void add_term(const Exponent& alpha, const Rational& c);
    void set_coeff(const Exponent& alpha, const Rational& c);

    Rational coeff(const Exponent& alpha) const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Largest term degree (0 for the zero polynomial).
    int total_degree() const;

    Polynomial plus(const Polynomial& g) const;
    Polynomial scaled(const Rational& lambda) const;
    Polynomial plus_constant(const Rational& c) const;

    double eval(std::span<const double> point) const;

    bool operator==(const Polynomial& o) const;

private:
    int nvars_;
    int half_degree_;
    TermMap terms_;
};

enum class DecomposeMode {
    top_degree_only,  // extract f0 and the top essential coefficients f_{i,2d}
    all_bands,        // extract f0 and f_{i,2k} for every k = 1..d
};

/// The split f = f0 + sum f_{i,2k} X_i^{2k} + h. The essential map is
/// complete over the extracted (variable, k) grid, absent monomials showing
/// as explicit zeros; the remainder carries everything else and reassembles
/// with the extracted parts to exactly f.
struct Decomposition {
    Rational constant;
    std::map<std::pair<int, int>, Rational> essential;  // (0-based var, k) -> f_{i,2k}
    Polynomial remainder;
    DecomposeMode mode;

    /// min_i f_{i,2k}; the grid is complete so missing monomials count as 0.
    Rational min_essential(int k) const;
    Polynomial reassemble() const;
};

Decomposition decompose(const Polynomial& f, DecomposeMode mode);

}  // namespace sos
