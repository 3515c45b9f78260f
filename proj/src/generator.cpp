#include "sos/generator.hpp"

#include <stdexcept>

#include "sos/rng.hpp"

namespace sos {

namespace {

Rational random_coefficient(const GenOptions& opts, std::mt19937_64& rng) {
    long p = uniform_int(rng, -opts.coeff_max, opts.coeff_max);
    long q = uniform_int(rng, 1, opts.den_max);
    return Rational(p) / Rational(q);
}

// Uniform dyadic rational in [3/4, 2]. Built with a division so the value
// is canonical; the two-integer mpq constructor skips reduction.
Rational boost_factor(std::mt19937_64& rng) {
    long j = uniform_int(rng, 0, 64);
    return Rational(3, 4) + Rational(5 * j) / 256;
}

}  // namespace

Polynomial random_polynomial(const GenOptions& opts, std::mt19937_64& rng) {
    if (opts.density < 0.0 || opts.density > 1.0) {
        throw std::invalid_argument("density must lie in [0, 1]");
    }
    if (opts.coeff_max < 0 || opts.den_max < 1) {
        throw std::invalid_argument("coefficient bounds out of range");
    }
    const int n = opts.nvars;
    const int d = opts.half_degree;
    Polynomial f(n, d);

    for (const Exponent& alpha : enumerate_exponents(n, 2 * d)) {
        if (uniform_unit(rng) >= opts.density) continue;
        f.set_coeff(alpha, random_coefficient(opts, rng));
    }

    if (opts.boosted) {
        // Total mass of the terms the linear conditions must dominate.
        Rational mass(0);
        for (const auto& [alpha, c] : f.terms()) {
            if (alpha.is_zero()) continue;
            if (alpha.pure_power_var() >= 0 && alpha.degree() % 2 == 0) continue;
            mass += abs(c);
        }
        if (mass == 0) mass = 1;

        f.set_coeff(Exponent::zero(n), boost_factor(rng) * mass);
        for (int k = 1; k <= d; ++k) {
            for (int i = 0; i < n; ++i) {
                f.set_coeff(Exponent::pure(n, i, 2 * k), boost_factor(rng) * mass);
            }
        }
    }
    return f;
}

AtomicMeasure random_measure(int nvars, int natoms, std::mt19937_64& rng) {
    if (nvars < 1 || natoms < 1) throw std::invalid_argument("need at least one atom and variable");
    AtomicMeasure mu;
    mu.atoms.resize(static_cast<size_t>(natoms));
    double mass = 0.0;
    for (Atom& atom : mu.atoms) {
        atom.point.resize(static_cast<size_t>(nvars));
        for (double& c : atom.point) c = uniform_range(rng, -3.0, 3.0);
        atom.weight = 1.0 - uniform_unit(rng);  // (0, 1]
        mass += atom.weight;
    }
    for (Atom& atom : mu.atoms) atom.weight /= mass;
    return mu;
}

}  // namespace sos
