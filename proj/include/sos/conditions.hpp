#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sos/polynomial.hpp"

namespace sos {

enum class Rule { theorem1, corollary1, corollary2 };

std::string rule_name(Rule rule);
Rule rule_from_name(const std::string& name);

/// One linear comparison lhs >= rhs (or lhs > rhs when strict).
struct Inequality {
    std::string label;
    Rational lhs;
    Rational rhs;
    Rational margin;  // lhs - rhs
    bool strict = false;

    bool holds() const { return strict ? margin > 0 : margin >= 0; }
};

/// Per-band detail for the banded rule: the budget w_k*f0, the smallest
/// essential coefficient of the band, and the two remainder sums it must
/// dominate.
struct BandRecord {
    int k = 0;
    Rational f0_share;
    Rational min_essential;
    Rational abs_off_gamma;  // sum of |f_alpha| over non-even exponents
    Rational neg_gamma;      // sum of min[0, f_alpha] over even exponents
    Rational margin_budget;
    Rational margin_essential;
};

/// How the constant term is split across bands: d nonnegative rational
/// weights summing to 1. Band k receives w_k * f0.
class WeightScheme {
public:
    explicit WeightScheme(std::vector<Rational> weights);
    static WeightScheme uniform(int d);

    int bands() const { return static_cast<int>(weights_.size()); }
    const Rational& at(int k) const;  // k is 1-based
    const std::vector<Rational>& weights() const { return weights_; }

private:
    std::vector<Rational> weights_;
};

struct ConditionReport {
    Rule rule = Rule::theorem1;
    bool accepted = false;
    std::vector<Inequality> inequalities;
    std::vector<Rational> weights;          // populated for corollary1
    std::vector<BandRecord> band_breakdown;  // populated for corollary1
};

/// Top-degree rule: f0 must dominate the remainder mass (eq7) and the
/// smallest coefficient among X_i^{2d} must dominate the degree-weighted
/// remainder mass (eq8). Acceptance implies f is a sum of squares.
ConditionReport check_theorem1(const Polynomial& f);

/// Banded rule: for each band k = 1..d, eq13 compares w_k*f0 against the
/// band's remainder mass and eq14 compares min_i f_{i,2k} against the
/// degree-weighted band mass. Acceptance implies f is a sum of squares.
ConditionReport check_corollary1(const Polynomial& f, const WeightScheme& w);
ConditionReport check_corollary1(const Polynomial& f);  // uniform weights

/// Shift rule: the strict comparison eq17 over top-degree remainder terms
/// only. Acceptance implies f + M is a sum of squares for some M >= 0.
/// The zero polynomial is accepted with an empty inequality list.
ConditionReport check_corollary2(const Polynomial& f);

struct ShiftSearchResult {
    bool found = false;
    Rational shift;  // meaningful only when found
    bool corollary2_accepted = false;
    int probes = 0;  // number of oracle calls made
};

/// Smallest shift granularity the search resolves: the returned shift M
/// satisfies certifies(f + M) and either M = lo + 1/1024 for some rejected
/// lo, or M is the first probe that certified.
inline const Rational kShiftTolerance = Rational(1, 1024);

/// Searches for M >= 0 with f + M certified as a sum of squares: probe
/// M = 1, double until certified or m_max is exceeded, then bisect down to
/// kShiftTolerance. Returns not-found when every probe up to m_max fails.
ShiftSearchResult find_shift(const Polynomial& f,
                             const std::function<bool(const Polynomial&)>& certifies,
                             const Rational& m_max);

}  // namespace sos
