#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sos/kernels.hpp"
#include "sos/polynomial.hpp"

namespace sos {

enum class OracleStatus { certified_sos, likely_not_sos, inconclusive };

std::string status_name(OracleStatus status);

/// All matrix positions (row, col) whose basis exponents sum to gamma,
/// together with the coefficient they must reproduce.
struct GramGroup {
    Exponent gamma;
    double target = 0.0;
    std::vector<std::pair<int, int>> cells;
};

struct GramProblem {
    std::vector<Exponent> basis;
    std::vector<GramGroup> groups;
    // Support exponents no basis pair can produce; nonempty means f has no
    // Gram representation on this basis at all.
    std::vector<Exponent> unmatched;
};

/// Largest monomial basis the oracle accepts.
constexpr long kMaxBasis = 200;

/// Monomial basis (bounding-box reduced) and the affine constraints a Gram
/// matrix for f must satisfy. Throws when the unreduced basis size
/// C(n+d, d) exceeds kMaxBasis.
GramProblem build_gram_problem(const Polynomial& f);

struct OracleVerdict {
    OracleStatus status = OracleStatus::inconclusive;
    double residual = 0.0;  // max |f_gamma - group sum| over gamma
    double min_eig = 0.0;
    int iterations = 0;
    std::optional<kernels::Matrix> gram;
};

struct CertifyOptions {
    int max_iter = 20000;
    double tol = 1e-9;
    kernels::Exec exec = kernels::Exec::parallel;
    bool keep_gram = false;
};

/// Decides SOS membership numerically: alternating projections (Dykstra)
/// between the affine set of matrices reproducing f and the PSD cone.
/// certified_sos is re-verified on the returned iterate and guarantees
/// residual < 1e-7 and min_eig >= -1e-9; likely_not_sos is advisory
/// (projection gap stalled well above tolerance); inconclusive means the
/// iteration budget ran out first.
OracleVerdict certify(const Polynomial& f, const CertifyOptions& opts = {});

/// Falsifier for the necessary condition "SOS implies nonnegative":
/// evaluates f at `trials` uniform points in [-box, box]^n and returns the
/// first point with f(x) < -1e-9, if any.
std::optional<std::vector<double>> sample_nonneg(const Polynomial& f, int trials, uint64_t seed,
                                                 double box = 1.0);

}  // namespace sos
