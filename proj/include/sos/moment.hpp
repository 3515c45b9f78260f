#pragma once

#include <map>
#include <vector>

#include "sos/exponent.hpp"
#include "sos/kernels.hpp"
#include "sos/polynomial.hpp"

namespace sos {

struct Atom {
    std::vector<double> point;
    double weight = 0.0;
};

/// Finitely supported nonnegative measure: sum of weighted point masses.
/// Its moment matrix is positive semidefinite by construction, which makes
/// it the test-bed generator for the moment-side lemmas.
struct AtomicMeasure {
    std::vector<Atom> atoms;
};

/// Truncated moment sequence: one floating-point value y_alpha for every
/// exponent with |alpha| <= 2d.
class MomentSequence {
public:
    MomentSequence(int nvars, int half_degree);

    int nvars() const { return nvars_; }
    int half_degree() const { return half_degree_; }

    void set(const Exponent& alpha, double value);
    double at(const Exponent& alpha) const;  // throws when the moment is missing
    double y0() const;
    bool complete() const;  // every |alpha| <= 2d present

    const std::map<Exponent, double, GradedLexLess>& values() const { return values_; }

private:
    int nvars_;
    int half_degree_;
    std::map<Exponent, double, GradedLexLess> values_;
};

/// y_alpha = sum_j w_j * x_j^alpha over all |alpha| <= 2d. With normalize,
/// rescales so y_0 = 1. Throws when mu has no atoms.
MomentSequence moments_of(const AtomicMeasure& mu, int half_degree, bool normalize = false);

struct MomentMatrix {
    int order = 0;
    std::vector<Exponent> index;  // graded-lex, |alpha| <= order
    kernels::Matrix entries;      // entries.at(i,j) = y_{index[i] + index[j]}
};

MomentMatrix build_matrix(const MomentSequence& y);

/// tau_d = max_i y_{2d e_i}, the largest top-degree diagonal moment.
double tau(const MomentSequence& y);

/// Every moment is bounded: |y_alpha| <= max(y_0, tau_d).
bool check_lemma1(const MomentSequence& y);

/// For normalized sequences (y_0 = 1): |y_alpha|^(1/|alpha|) <= tau_d^(1/2d)
/// for 1 <= |alpha| <= 2d. Throws when y_0 is not 1.
bool check_lemma2(const MomentSequence& y);

/// Even top-degree moments are dominated: y_{2 alpha} <= tau_d for |alpha| = d.
bool check_lemma3(const MomentSequence& y);

/// For sequences of consecutive orders d, d+1, ... from one measure:
/// tau_d^(1/d) is nondecreasing along the list. Throws when the orders are
/// not consecutive.
bool tau_chain(const std::vector<MomentSequence>& ys);

/// L_y(f) = sum_alpha f_alpha * y_alpha.
double apply_functional(const MomentSequence& y, const Polynomial& f);

}  // namespace sos
