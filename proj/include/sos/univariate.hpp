#pragma once

#include <vector>

#include "sos/conditions.hpp"
#include "sos/polynomial.hpp"

namespace sos {

/// Dense univariate polynomial over the rationals, coefficient index =
/// power of t. Normalized so the highest stored coefficient is nonzero;
/// the zero polynomial is stored as the single coefficient 0.
class UniPoly {
public:
    UniPoly() : coeffs_{Rational(0)} {}
    explicit UniPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    UniPoly derivative() const;
    Rational at_one() const;
    double eval(double t) const;

private:
    std::vector<Rational> coeffs_;
};

/// Univariate comparison polynomial for the top-degree condition family:
/// p(t) = f0 + (min_i f_{i,2d}) t^{2d}
///        - sum_{alpha off the even set} |f_alpha| t^{|alpha|}
///        + sum_{alpha in the even set} min[0, f_alpha] t^{|alpha|},
/// with the sums over the remainder of the top-degree decomposition.
UniPoly build_p(const Polynomial& f);

/// Per-band variant: p_k(t) = w_k f0
///   + t^{2k} (min_i f_{i,2k} + sum_{even alpha in band k} min[0, f_alpha])
///   - sum_{odd alpha in band k} |f_alpha| t^{|alpha|}.
/// k must lie in [1, d].
UniPoly build_p_k(const Polynomial& f, int k, const WeightScheme& w);

/// Exact derivative values (p(1), p'(1), ..., p^(deg)(1)).
std::vector<Rational> derivatives_at_one(const UniPoly& p);

/// Sign variations of a sequence, zero entries dropped.
int sign_variations(const std::vector<Rational>& values);

/// True iff the derivative sequence at t = 1 shows zero sign variations,
/// which certifies that p has no root in (1, +inf). Throws on the zero
/// polynomial.
bool no_root_beyond_one(const UniPoly& p);

}  // namespace sos
