#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "sos/generator.hpp"
#include "sos/kernels.hpp"
#include "sos/moment.hpp"
#include "sos/poly_text.hpp"

using namespace sos;

namespace {

Exponent e(std::vector<int> v) { return Exponent(std::move(v)); }

AtomicMeasure point_mass(std::vector<double> x, double w = 1.0) {
    return AtomicMeasure{{Atom{std::move(x), w}}};
}

}  // namespace

TEST_CASE("moments of point masses") {
    // delta at (1, 1): every moment is 1
    MomentSequence y = moments_of(point_mass({1.0, 1.0}), 2);
    CHECK(y.complete());
    for (const auto& [alpha, value] : y.values()) CHECK(value == doctest::Approx(1.0));

    // delta at (2, 0), order 1: y_00 = 1, y_10 = 2, y_01 = 0, y_20 = 4, ...
    MomentSequence z = moments_of(point_mass({2.0, 0.0}), 1);
    CHECK(z.at(e({0, 0})) == doctest::Approx(1.0));
    CHECK(z.at(e({1, 0})) == doctest::Approx(2.0));
    CHECK(z.at(e({0, 1})) == doctest::Approx(0.0));
    CHECK(z.at(e({2, 0})) == doctest::Approx(4.0));
    CHECK(z.at(e({1, 1})) == doctest::Approx(0.0));

    // (delta_{(1,0)} + delta_{(-1,0)}) / 2: odd moments vanish
    AtomicMeasure mu{{Atom{{1.0, 0.0}, 0.5}, Atom{{-1.0, 0.0}, 0.5}}};
    MomentSequence s = moments_of(mu, 2);
    CHECK(s.y0() == doctest::Approx(1.0));
    CHECK(s.at(e({1, 0})) == doctest::Approx(0.0));
    CHECK(s.at(e({2, 0})) == doctest::Approx(1.0));
    CHECK(s.at(e({3, 0})) == doctest::Approx(0.0));
    CHECK(s.at(e({4, 0})) == doctest::Approx(1.0));
    CHECK(s.at(e({0, 4})) == doctest::Approx(0.0));

    // normalization rescales a non-probability measure
    MomentSequence n = moments_of(point_mass({3.0}, 5.0), 1, true);
    CHECK(n.y0() == doctest::Approx(1.0));
    CHECK(n.at(e({2})) == doctest::Approx(9.0));

    CHECK_THROWS_AS(moments_of(AtomicMeasure{}, 1), std::invalid_argument);
    AtomicMeasure mixed{{Atom{{1.0}, 1.0}, Atom{{1.0, 2.0}, 1.0}}};
    CHECK_THROWS_AS(moments_of(mixed, 1), std::invalid_argument);
    CHECK_THROWS_AS(moments_of(point_mass({1.0}, -1.0), 1), std::invalid_argument);
}

TEST_CASE("moment matrix layout") {
    // delta at (1, 1), order 1: all-ones 3x3
    MomentMatrix m = build_matrix(moments_of(point_mass({1.0, 1.0}), 1));
    REQUIRE(m.entries.size() == 3);
    CHECK(m.order == 1);
    REQUIRE(m.index.size() == 3);
    CHECK(m.index[0] == e({0, 0}));
    CHECK(m.index[1] == e({1, 0}));
    CHECK(m.index[2] == e({0, 1}));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(m.entries.at(i, j) == doctest::Approx(1.0));
    }

    // delta at (2, 0): rank-one structure [1 2 0; 2 4 0; 0 0 0]
    MomentMatrix r = build_matrix(moments_of(point_mass({2.0, 0.0}), 1));
    CHECK(r.entries.at(0, 0) == doctest::Approx(1.0));
    CHECK(r.entries.at(0, 1) == doctest::Approx(2.0));
    CHECK(r.entries.at(1, 1) == doctest::Approx(4.0));
    CHECK(r.entries.at(0, 2) == doctest::Approx(0.0));
    CHECK(r.entries.at(2, 2) == doctest::Approx(0.0));

    // univariate delta at 2: [1 2 4; 2 4 8; 4 8 16]
    MomentMatrix u = build_matrix(moments_of(point_mass({2.0}), 2));
    REQUIRE(u.entries.size() == 3);
    double expect[3][3] = {{1, 2, 4}, {2, 4, 8}, {4, 8, 16}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(u.entries.at(i, j) == doctest::Approx(expect[i][j]));
    }

    // an incomplete sequence cannot be assembled
    MomentSequence partial(1, 1);
    partial.set(e({0}), 1.0);
    CHECK_FALSE(partial.complete());
    CHECK_THROWS_AS(build_matrix(partial), std::out_of_range);
    CHECK_THROWS_AS(partial.at(e({2})), std::out_of_range);
}

TEST_CASE("tau and the bound lemmas on exact cases") {
    // delta at (1, 1): tau = 1 and every bound is tight
    MomentSequence y = moments_of(point_mass({1.0, 1.0}), 2);
    CHECK(tau(y) == doctest::Approx(1.0));
    CHECK(check_lemma1(y));
    CHECK(check_lemma2(y));
    CHECK(check_lemma3(y));

    // delta at (2, 0), order 1: tau_1 = 4, |y_{(1,0)}| = 2 = tau^(1/2)
    MomentSequence z = moments_of(point_mass({2.0, 0.0}), 1);
    CHECK(tau(z) == doctest::Approx(4.0));
    CHECK(check_lemma1(z));
    CHECK(check_lemma2(z));
    CHECK(check_lemma3(z));

    // lemma2 insists on normalized sequences
    MomentSequence un = moments_of(point_mass({2.0}, 3.0), 1);
    CHECK_THROWS_AS(check_lemma2(un), std::invalid_argument);

    // a hand-built sequence violating lemma1: huge mixed moment, tiny tau
    MomentSequence bad(2, 1);
    for (const Exponent& alpha : enumerate_exponents(2, 2)) bad.set(alpha, 0.0);
    bad.set(e({0, 0}), 1.0);
    bad.set(e({2, 0}), 1.0);
    bad.set(e({0, 2}), 1.0);
    bad.set(e({1, 1}), 50.0);
    CHECK_FALSE(check_lemma1(bad));
    CHECK_FALSE(check_lemma2(bad));
    CHECK(check_lemma3(bad));  // diagonal moments themselves are fine
}

TEST_CASE("tau chain grows with the order") {
    // delta at (2, 0): tau_d = 4^d, so tau_d^(1/d) is constant
    AtomicMeasure mu = point_mass({2.0, 0.0});
    std::vector<MomentSequence> chain;
    for (int d = 1; d <= 4; ++d) chain.push_back(moments_of(mu, d));
    CHECK(tau_chain(chain));

    // random measures satisfy the chain as well
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        AtomicMeasure m = random_measure(2, 1 + static_cast<int>(rng() % 4), rng);
        std::vector<MomentSequence> ys;
        for (int d = 1; d <= 3; ++d) ys.push_back(moments_of(m, d, true));
        CHECK(tau_chain(ys));
    }

    // non-consecutive orders are rejected; the empty chain is vacuous
    std::vector<MomentSequence> gap = {moments_of(mu, 1), moments_of(mu, 3)};
    CHECK_THROWS_AS(tau_chain(gap), std::invalid_argument);
    CHECK(tau_chain({}));
}

TEST_CASE("random atomic measures satisfy every lemma") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 3);
        AtomicMeasure mu = random_measure(nvars, 1 + static_cast<int>(rng() % 5), rng);
        MomentSequence y = moments_of(mu, d, true);
        CHECK(y.complete());
        CHECK(check_lemma1(y));
        CHECK(check_lemma2(y));
        CHECK(check_lemma3(y));

        // the moment matrix of a measure is PSD by construction
        MomentMatrix m = build_matrix(y);
        auto eig = kernels::symmetric_eigen(m.entries);
        CHECK(eig.values.front() >= -1e-10 * std::max(1.0, m.entries.frobenius()));
    }
}

TEST_CASE("applying the functional is plain coefficient pairing") {
    Polynomial f = parse_polynomial("2 + 3*x1 - x1^2", 1, 1);
    MomentSequence y = moments_of(point_mass({2.0}), 1);
    // L_y(f) = f(2) for a point mass
    CHECK(apply_functional(y, f) == doctest::Approx(2.0 + 6.0 - 4.0));

    MomentSequence wrong = moments_of(point_mass({1.0, 1.0}), 1);
    CHECK_THROWS_AS(apply_functional(wrong, f), std::invalid_argument);

    // nonnegative polynomial, nonnegative measure: pairing stays nonnegative
    std::mt19937_64 rng(88);
    Polynomial sq = parse_polynomial("1 - 2*x1 + x1^2", 1, 1);  // (1 - x1)^2
    for (int trial = 0; trial < 50; ++trial) {
        AtomicMeasure mu = random_measure(1, 3, rng);
        CHECK(apply_functional(moments_of(mu, 1), sq) >= -1e-9);
    }
}

TEST_CASE("perturbing the constant term shifts the functional exactly") {
    std::mt19937_64 rng(99);
    GenOptions opts;
    opts.nvars = 2;
    opts.half_degree = 2;
    opts.density = 0.5;
    Polynomial f = random_polynomial(opts, rng);
    AtomicMeasure mu = random_measure(2, 4, rng);
    MomentSequence y = moments_of(mu, 2, true);

    double base = apply_functional(y, f);
    for (double eps : {1e-6, 1e-3, 0.5}) {
        // Rational(double) is exact, so the only error is the final pairing
        Polynomial g = f.plus_constant(Rational(eps));
        double shifted = apply_functional(y, g);
        // y_0 = 1, so the shift passes through with no amplification
        CHECK(shifted - base == doctest::Approx(eps).epsilon(1e-7));
    }
}
