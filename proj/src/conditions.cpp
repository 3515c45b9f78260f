#include "sos/conditions.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace sos {

namespace {

Inequality make_inequality(std::string label, Rational lhs, Rational rhs, bool strict) {
    Inequality ineq;
    ineq.label = std::move(label);
    ineq.lhs = std::move(lhs);
    ineq.rhs = std::move(rhs);
    ineq.margin = ineq.lhs - ineq.rhs;
    ineq.strict = strict;
    return ineq;
}

bool all_hold(const std::vector<Inequality>& inequalities) {
    for (const Inequality& ineq : inequalities) {
        if (!ineq.holds()) return false;
    }
    return true;
}

// Remainder mass of one band (or of the whole remainder when the caller
// aggregates): sum of |f_alpha| over non-even exponents, sum of
// min[0, f_alpha] over even ones, and the same sums weighted by
// |alpha| / (2k).
struct RemainderSums {
    Rational abs_off;
    Rational neg_on;
    Rational abs_off_weighted;
    Rational neg_on_weighted;

    void add(const Exponent& alpha, const Rational& c, int two_k) {
        Rational w = Rational(alpha.degree()) / Rational(two_k);
        if (alpha.all_even()) {
            if (c < 0) {
                neg_on += c;
                neg_on_weighted += c * w;
            }
        } else {
            Rational a = abs(c);
            abs_off += a;
            abs_off_weighted += a * w;
        }
    }
};

}  // namespace

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::theorem1: return "theorem1";
        case Rule::corollary1: return "corollary1";
        case Rule::corollary2: return "corollary2";
    }
    throw std::logic_error("unknown rule");
}

Rule rule_from_name(const std::string& name) {
    if (name == "theorem1") return Rule::theorem1;
    if (name == "corollary1") return Rule::corollary1;
    if (name == "corollary2") return Rule::corollary2;
    throw std::invalid_argument("unknown rule name: " + name);
}

WeightScheme::WeightScheme(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("weight scheme must have at least one band");
    }
    Rational sum(0);
    for (const Rational& w : weights_) {
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
        sum += w;
    }
    if (sum != 1) throw std::invalid_argument("weights must sum to 1");
}

WeightScheme WeightScheme::uniform(int d) {
    if (d < 1) throw std::invalid_argument("need at least one band");
    std::vector<Rational> w(static_cast<size_t>(d), Rational(1) / Rational(d));
    return WeightScheme(std::move(w));
}

const Rational& WeightScheme::at(int k) const {
    if (k < 1 || k > bands()) throw std::out_of_range("band index out of range");
    return weights_[static_cast<size_t>(k - 1)];
}

ConditionReport check_theorem1(const Polynomial& f) {
    const int d = f.half_degree();
    Decomposition dec = decompose(f, DecomposeMode::top_degree_only);

    RemainderSums sums;
    for (const auto& [alpha, c] : dec.remainder.terms()) {
        sums.add(alpha, c, 2 * d);
    }

    ConditionReport report;
    report.rule = Rule::theorem1;
    report.inequalities.push_back(
        make_inequality("eq7", dec.constant, sums.abs_off - sums.neg_on, false));
    report.inequalities.push_back(make_inequality(
        "eq8", dec.min_essential(d), sums.abs_off_weighted - sums.neg_on_weighted, false));
    report.accepted = all_hold(report.inequalities);
    return report;
}

ConditionReport check_corollary1(const Polynomial& f, const WeightScheme& w) {
    const int d = f.half_degree();
    if (w.bands() != d) {
        throw std::invalid_argument("weight scheme has " + std::to_string(w.bands()) +
                                    " bands, polynomial needs " + std::to_string(d));
    }
    Decomposition dec = decompose(f, DecomposeMode::all_bands);

    std::vector<RemainderSums> per_band(static_cast<size_t>(d) + 1);
    for (const auto& [alpha, c] : dec.remainder.terms()) {
        int k = classify(alpha).band;
        per_band[static_cast<size_t>(k)].add(alpha, c, 2 * k);
    }

    ConditionReport report;
    report.rule = Rule::corollary1;
    report.weights = w.weights();
    for (int k = 1; k <= d; ++k) {
        const RemainderSums& sums = per_band[static_cast<size_t>(k)];
        Inequality budget = make_inequality("eq13", w.at(k) * dec.constant,
                                            sums.abs_off - sums.neg_on, false);
        Inequality essential =
            make_inequality("eq14", dec.min_essential(k),
                            sums.abs_off_weighted - sums.neg_on_weighted, false);

        BandRecord band;
        band.k = k;
        band.f0_share = budget.lhs;
        band.min_essential = essential.lhs;
        band.abs_off_gamma = sums.abs_off;
        band.neg_gamma = sums.neg_on;
        band.margin_budget = budget.margin;
        band.margin_essential = essential.margin;
        report.band_breakdown.push_back(std::move(band));

        report.inequalities.push_back(std::move(budget));
        report.inequalities.push_back(std::move(essential));
    }
    report.accepted = all_hold(report.inequalities);
    return report;
}

ConditionReport check_corollary1(const Polynomial& f) {
    return check_corollary1(f, WeightScheme::uniform(f.half_degree()));
}

ConditionReport check_corollary2(const Polynomial& f) {
    ConditionReport report;
    report.rule = Rule::corollary2;
    if (f.terms().empty()) {
        // Zero polynomial: already a (trivial) sum of squares with M = 0;
        // the strict comparison is waived rather than evaluated as 0 > 0.
        report.accepted = true;
        return report;
    }

    const int d = f.half_degree();
    Decomposition dec = decompose(f, DecomposeMode::top_degree_only);

    RemainderSums sums;
    for (const auto& [alpha, c] : dec.remainder.terms()) {
        if (alpha.degree() == 2 * d) sums.add(alpha, c, 2 * d);
    }

    report.inequalities.push_back(
        make_inequality("eq17", dec.min_essential(d), sums.abs_off - sums.neg_on, true));
    report.accepted = all_hold(report.inequalities);
    return report;
}

ShiftSearchResult find_shift(const Polynomial& f,
                             const std::function<bool(const Polynomial&)>& certifies,
                             const Rational& m_max) {
    ShiftSearchResult result;
    result.corollary2_accepted = check_corollary2(f).accepted;

    auto probe = [&](const Rational& m) {
        ++result.probes;
        return certifies(f.plus_constant(m));
    };

    Rational lo(0);
    Rational hi(1);
    while (!probe(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > m_max) return result;  // not found
    }
    // certifies(f + hi) holds; tighten until the bracket is small.
    while (hi - lo > kShiftTolerance) {
        Rational mid = (lo + hi) / 2;
        if (probe(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    result.found = true;
    result.shift = hi;
    return result;
}

}  // namespace sos
