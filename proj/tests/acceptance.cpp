// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion carries its own wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sos/cli.hpp"
#include "sos/conditions.hpp"
#include "sos/generator.hpp"
#include "sos/gram.hpp"
#include "sos/moment.hpp"
#include "sos/poly_text.hpp"
#include "sos/rational.hpp"
#include "sos/rng.hpp"
#include "sos/univariate.hpp"

using namespace sos;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> body;  // fills a failure detail
};

struct SweepInstance {
    Polynomial f;
    bool by_theorem1 = false;
    bool by_corollary1 = false;
};

// Shared between criteria 2 and 5: every instance accepted by either rule.
std::vector<SweepInstance> g_sweep;

bool derivative_sequence_nonneg(const UniPoly& p) {
    for (const Rational& v : derivatives_at_one(p)) {
        if (v < 0) return false;
    }
    return true;
}

bool criterion1(std::string& detail) {
    Polynomial f = parse_polynomial("1 + x1^4 + x2^4 - x1^2*x2", 2, 2);
    ConditionReport report = check_theorem1(f);
    if (!report.accepted) {
        detail = "worked example rejected";
        return false;
    }
    for (const Inequality& q : report.inequalities) {
        if (q.label == "eq7" && q.margin != 0) {
            detail = "eq7 margin " + rational_to_string(q.margin) + ", want 0";
            return false;
        }
        if (q.label == "eq8" && q.margin != Rational(1, 4)) {
            detail = "eq8 margin " + rational_to_string(q.margin) + ", want 1/4";
            return false;
        }
    }
    OracleVerdict v = certify(f);
    if (v.status != OracleStatus::certified_sos || v.residual >= 1e-7) {
        detail = "oracle " + status_name(v.status) + ", residual " + std::to_string(v.residual);
        return false;
    }
    return true;
}

bool criterion2(std::string& detail) {
    const std::pair<int, int> cells[] = {{2, 2}, {2, 3}, {3, 2}};
    CertifyOptions oracle;
    oracle.tol = 1e-7;

    int checked = 0;
    for (auto [n, d] : cells) {
        GenOptions opts;
        opts.nvars = n;
        opts.half_degree = d;
        opts.boosted = true;
        std::mt19937_64 rng(1000003ULL * n + 17ULL * d);
        for (int trial = 0; trial < 500; ++trial) {
            Polynomial f = random_polynomial(opts, rng);
            SweepInstance inst{f, check_theorem1(f).accepted, check_corollary1(f).accepted};
            if (!inst.by_theorem1 && !inst.by_corollary1) continue;
            g_sweep.push_back(inst);
            ++checked;

            OracleVerdict v = certify(f, oracle);
            if (v.status != OracleStatus::certified_sos || v.residual >= 1e-7) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " trial " +
                         std::to_string(trial) + ": oracle " + status_name(v.status) +
                         " residual " + std::to_string(v.residual) + " on " + emit_polynomial(f);
                return false;
            }
            if (auto bad = sample_nonneg(f, 10000, 0xACCE55ULL + static_cast<uint64_t>(trial))) {
                detail = "accepted instance evaluates negative at a sampled point";
                return false;
            }
        }
    }
    if (checked < 300) {
        detail = "only " + std::to_string(checked) + " acceptances across the sweep";
        return false;
    }
    detail = std::to_string(checked) + " acceptances certified";
    return true;
}

bool criterion3(std::string& detail) {
    GenOptions opts;
    opts.nvars = 2;
    opts.half_degree = 2;
    opts.boosted = true;
    std::mt19937_64 rng(424242);

    auto accepted_by = [](Rule rule, const Polynomial& p) {
        switch (rule) {
            case Rule::theorem1: return check_theorem1(p).accepted;
            case Rule::corollary1: return check_corollary1(p).accepted;
            default: return check_corollary2(p).accepted;
        }
    };

    int pairs = 0;
    while (pairs < 200) {
        Polynomial f = random_polynomial(opts, rng);
        Polynomial g = random_polynomial(opts, rng);
        for (Rule rule : {Rule::theorem1, Rule::corollary1, Rule::corollary2}) {
            if (!accepted_by(rule, f) || !accepted_by(rule, g)) continue;
            Rational lambda = Rational(uniform_int(rng, 0, 40)) / 4;  // [0, 10] in quarter steps
            if (!accepted_by(rule, f.plus(g))) {
                detail = rule_name(rule) + " lost f+g";
                return false;
            }
            if (!accepted_by(rule, f.scaled(lambda))) {
                detail = rule_name(rule) + " lost " + rational_to_string(lambda) + "*f";
                return false;
            }
            ++pairs;
        }
    }
    return true;
}

bool criterion4(std::string& detail) {
    const std::pair<int, int> cells[] = {{2, 2}, {3, 3}};
    for (auto [n, d] : cells) {
        std::mt19937_64 rng(7000ULL + static_cast<uint64_t>(n * 10 + d));
        for (int trial = 0; trial < 1000; ++trial) {
            AtomicMeasure mu = random_measure(n, 1 + static_cast<int>(rng() % 5), rng);
            MomentSequence y = moments_of(mu, d, true);
            MomentSequence next = moments_of(mu, d + 1, true);
            if (!check_lemma1(y) || !check_lemma2(y) || !check_lemma3(y) ||
                !tau_chain({y, next})) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    if (g_sweep.empty()) {
        detail = "criterion 2 produced no instances";
        return false;
    }
    for (const SweepInstance& inst : g_sweep) {
        if (inst.by_theorem1) {
            UniPoly p = build_p(inst.f);
            if (!derivative_sequence_nonneg(p) || !no_root_beyond_one(p)) {
                detail = "top-degree coherence failed on " + emit_polynomial(inst.f);
                return false;
            }
        }
        if (inst.by_corollary1) {
            WeightScheme w = WeightScheme::uniform(inst.f.half_degree());
            for (int k = 1; k <= inst.f.half_degree(); ++k) {
                UniPoly pk = build_p_k(inst.f, k, w);
                if (!derivative_sequence_nonneg(pk) || !no_root_beyond_one(pk)) {
                    detail = "band " + std::to_string(k) + " coherence failed on " +
                             emit_polynomial(inst.f);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(g_sweep.size()) + " instances coherent";
    return true;
}

bool criterion6(std::string& detail) {
    Polynomial xy = parse_polynomial("x1*x2", 2, 1);
    if (certify(xy).status == OracleStatus::certified_sos) {
        detail = "x1*x2 certified";
        return false;
    }
    Polynomial motzkin = parse_polynomial("x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1", 2, 3);
    if (certify(motzkin).status == OracleStatus::certified_sos) {
        detail = "motzkin certified";
        return false;
    }
    ConditionReport report = check_theorem1(parse_polynomial("1 + x1^4 + x2^4 - 3*x1^2*x2", 2, 2));
    if (report.accepted) {
        detail = "negative control accepted";
        return false;
    }
    for (const Inequality& q : report.inequalities) {
        if (q.label == "eq7") {
            if (q.holds()) {
                detail = "eq7 not violated";
                return false;
            }
            return true;
        }
    }
    detail = "eq7 missing from the report";
    return false;
}

bool criterion7(std::string& detail) {
    Polynomial f = parse_polynomial("3*x1^4 + 3*x2^4 - x1^2*x2^2 - x1^3*x2 - 7*x1", 2, 2);
    ConditionReport report = check_corollary2(f);
    if (!report.accepted || report.inequalities.size() != 1 ||
        report.inequalities[0].margin != 1 || !report.inequalities[0].strict) {
        detail = "strict rule report off";
        return false;
    }

    CertifyOptions oracle;
    oracle.tol = 1e-7;
    auto certifies = [&](const Polynomial& g) {
        return certify(g, oracle).status == OracleStatus::certified_sos;
    };
    ShiftSearchResult res = find_shift(f, certifies, Rational(4096));
    if (!res.found) {
        detail = "no shift found";
        return false;
    }
    // regression constant recorded from the first computation
    const Rational expected(2435, 512);
    if (res.shift != expected) {
        detail = "shift " + rational_to_string(res.shift) + ", recorded " +
                 rational_to_string(expected);
        return false;
    }
    if (!certifies(f.plus_constant(res.shift))) {
        detail = "f + M not certified";
        return false;
    }
    detail = "M = " + rational_to_string(res.shift);
    return true;
}

bool criterion8(std::string& detail) {
    const std::vector<std::string> args = {"bench", "--n",    "2",  "--d",      "2",
                                           "--count", "60",   "--seed", "7",    "--boost",
                                           "--format", "json"};
    std::string first;
    for (int round = 0; round < 2; ++round) {
        std::ostringstream out;
        std::ostringstream err;
        if (run_cli(args, out, err) != 0) {
            detail = "bench exited nonzero";
            return false;
        }
        if (round == 0) {
            first = out.str();
        } else if (out.str() != first) {
            detail = "reports differ between runs";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "worked boundary example, exact margins and oracle", 1.0, criterion1},
        {2, "soundness sweep, 500 boosted instances per cell", 300.0, criterion2},
        {3, "cone property over 200 accepted pairs", 120.0, criterion3},
        {4, "moment lemma suite, 1000 measures per cell", 60.0, criterion4},
        {5, "proof coherence of every accepted sweep instance", 60.0, criterion5},
        {6, "negative controls stay rejected", 60.0, criterion6},
        {7, "strict rule plus shift search regression", 30.0, criterion7},
        {8, "bench determinism under a fixed seed", 120.0, criterion8},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            detail = "over budget (" + std::to_string(c.budget_seconds) + " s)";
        }
        std::printf("[%s] criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), elapsed, detail.empty() ? "" : "; ",
                    detail.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
