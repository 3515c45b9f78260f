#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <fstream>

#include "doctest.h"
#include "sos/gram.hpp"
#include "sos/json_io.hpp"
#include "sos/poly_text.hpp"

using namespace sos;

namespace {

Polynomial load_fixture(const std::string& name) {
    std::ifstream in(std::string(SOSCONE_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    return poly_from_json(Json::parse(in));
}

Exponent e(std::vector<int> v) { return Exponent(std::move(v)); }

}  // namespace

TEST_CASE("status names") {
    CHECK(status_name(OracleStatus::certified_sos) == "certified-sos");
    CHECK(status_name(OracleStatus::likely_not_sos) == "likely-not-sos");
    CHECK(status_name(OracleStatus::inconclusive) == "inconclusive");
}

TEST_CASE("gram problem assembly and basis reduction") {
    // x1*x2 alone: the box filter empties the basis, leaving the support
    // exponent unmatched
    GramProblem bare = build_gram_problem(load_fixture("xy.json"));
    CHECK(bare.basis.empty());
    REQUIRE(bare.unmatched.size() == 1);
    CHECK(bare.unmatched[0] == e({1, 1}));

    // (x1 + x2)^2: the support box is [0,2]x[0,2], so doubling any of 1, x1,
    // x2 stays inside it and all three survive the filter
    Polynomial square = parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2, 1);
    GramProblem full = build_gram_problem(square);
    REQUIRE(full.basis.size() == 3);
    CHECK(full.basis[0] == e({0, 0}));
    CHECK(full.unmatched.empty());
    // gamma = (1,1) is produced by two ordered cells (x1-row, x2-col) and back
    bool saw_mixed = false;
    for (const GramGroup& g : full.groups) {
        if (g.gamma == e({1, 1})) {
            saw_mixed = true;
            CHECK(g.target == doctest::Approx(2.0));
            CHECK(g.cells.size() == 2);
        }
    }
    CHECK(saw_mixed);

    // the motzkin support cuts C(5,3) = 10 candidates down to 8
    GramProblem motzkin = build_gram_problem(load_fixture("motzkin.json"));
    CHECK(motzkin.basis.size() == 8);
    CHECK(motzkin.unmatched.empty());

    // zero polynomial: nothing to match
    GramProblem zero = build_gram_problem(Polynomial(2, 2));
    CHECK(zero.basis.empty());
    CHECK(zero.groups.empty());
    CHECK(zero.unmatched.empty());

    // refuse oversized bases: C(6+4, 4) = 210 > 200
    Polynomial big(6, 4);
    big.set_coeff(Exponent::pure(6, 0, 8), Rational(1));
    CHECK_THROWS_AS(build_gram_problem(big), std::invalid_argument);
    // C(5+4, 4) = 126 is inside the limit
    Polynomial ok(5, 4);
    ok.set_coeff(Exponent::pure(5, 0, 8), Rational(1));
    CHECK_NOTHROW(build_gram_problem(ok));
}

TEST_CASE("oracle certifies a perfect square with the expected gram matrix") {
    Polynomial square = parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2, 1);
    CertifyOptions opts;
    opts.keep_gram = true;
    OracleVerdict v = certify(square, opts);
    CHECK(v.status == OracleStatus::certified_sos);
    CHECK(v.residual < 1e-7);
    CHECK(v.min_eig >= -1e-9);
    REQUIRE(v.gram.has_value());
    REQUIRE(v.gram->size() == 3);
    // basis (1, x1, x2); the unique gram matrix is [[0,0,0],[0,1,1],[0,1,1]]
    double expect[3][3] = {{0, 0, 0}, {0, 1, 1}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(v.gram->at(i, j) == doctest::Approx(expect[i][j]).epsilon(1e-6));
        }
    }
}

TEST_CASE("oracle on the worked acceptance example, pinned numbers") {
    OracleVerdict v = certify(load_fixture("worked_theorem1.json"));
    CHECK(v.status == OracleStatus::certified_sos);
    CHECK(v.iterations == 38);
    CHECK(v.residual == doctest::Approx(5.977964789849466e-10).epsilon(1e-6));
    CHECK(v.min_eig >= 0.0);
    CHECK_FALSE(v.gram.has_value());  // not requested
}

TEST_CASE("oracle rejects without iterating when no basis can match") {
    OracleVerdict v = certify(load_fixture("xy.json"));
    CHECK(v.status == OracleStatus::likely_not_sos);
    CHECK(v.iterations == 0);
    CHECK(v.residual == doctest::Approx(1.0));  // the stranded coefficient
}

TEST_CASE("oracle stalls out on the motzkin polynomial") {
    // nonnegative but not a sum of squares; the projection gap cannot close
    OracleVerdict v = certify(load_fixture("motzkin.json"));
    CHECK(v.status == OracleStatus::likely_not_sos);
    CHECK(v.iterations == 510);  // stagnation detector, pinned
    CHECK(v.residual > 0.05);
}

TEST_CASE("oracle certifies shifted and scaled variants") {
    Polynomial f = load_fixture("worked_theorem1.json");
    CHECK(certify(f.plus_constant(Rational(5))).status == OracleStatus::certified_sos);
    CHECK(certify(f.scaled(Rational(3))).status == OracleStatus::certified_sos);
    CHECK(certify(Polynomial(2, 2)).status == OracleStatus::certified_sos);

    // -x1^2 is matched but never PSD
    OracleVerdict neg = certify(parse_polynomial("-x1^2", 1, 1));
    CHECK(neg.status != OracleStatus::certified_sos);
}

TEST_CASE("iteration budget produces inconclusive, not a wrong answer") {
    CertifyOptions opts;
    opts.max_iter = 3;
    OracleVerdict v = certify(load_fixture("worked_theorem1.json"), opts);
    CHECK(v.status == OracleStatus::inconclusive);
    CHECK(v.iterations == 3);
}

TEST_CASE("negativity sampler") {
    // squares never trip the sampler
    CHECK_FALSE(sample_nonneg(parse_polynomial("x1^2", 1, 1), 2000, 42).has_value());

    // a plainly negative polynomial trips immediately
    auto hit = sample_nonneg(parse_polynomial("-1", 1, 1), 10, 42);
    REQUIRE(hit.has_value());
    CHECK(hit->size() == 1);

    // x1^2 - 1/4 is negative near the origin; a fat box finds it
    auto pt = sample_nonneg(parse_polynomial("x1^2 - 1/4", 1, 1), 2000, 7, 1.0);
    REQUIRE(pt.has_value());
    double x = (*pt)[0];
    CHECK(x * x - 0.25 < -1e-9);

    // deterministic in the seed
    auto a = sample_nonneg(parse_polynomial("x1^2 - 1/4", 1, 1), 2000, 7, 1.0);
    CHECK(a == pt);

    CHECK_THROWS_AS(sample_nonneg(parse_polynomial("x1", 1, 1), 0, 1), std::invalid_argument);
}

TEST_CASE("certified verdicts stay consistent with sampling") {
    // anything the oracle certifies must never evaluate negative
    for (const char* name : {"worked_theorem1.json", "corollary1_example.json"}) {
        Polynomial f = load_fixture(name);
        REQUIRE(certify(f).status == OracleStatus::certified_sos);
        CHECK_FALSE(sample_nonneg(f, 5000, 1234, 2.0).has_value());
    }
    // and the rejected fixture is genuinely somewhere negative
    Polynomial bad = load_fixture("rejected_theorem1.json");
    OracleVerdict v = certify(bad);
    CHECK(v.status != OracleStatus::certified_sos);
    CHECK(sample_nonneg(bad, 5000, 1234, 2.0).has_value());
}
