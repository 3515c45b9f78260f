#pragma once

#include <random>

#include "sos/moment.hpp"
#include "sos/polynomial.hpp"

namespace sos {

struct GenOptions {
    int nvars = 2;
    int half_degree = 2;
    double density = 0.3;  // inclusion probability per candidate exponent
    int coeff_max = 100;   // |numerator| bound; 0 produces the zero polynomial
    int den_max = 16;      // denominator bound
    bool boosted = false;  // overwrite f0 and every X_i^{2k} coefficient upward
};

/// Sparse random polynomial: each exponent with |alpha| <= 2d enters with
/// probability `density` and a uniform rational coefficient p/q. In boosted
/// mode the constant term and all pure even powers are then overwritten
/// with multiples (drawn from [3/4, 2]) of the total remainder mass, which
/// populates the acceptance region of the linear conditions.
Polynomial random_polynomial(const GenOptions& opts, std::mt19937_64& rng);

/// natoms point masses, coordinates uniform in [-3, 3], weights uniform in
/// (0, 1] normalized to total mass 1.
AtomicMeasure random_measure(int nvars, int natoms, std::mt19937_64& rng);

}  // namespace sos
