#include "sos/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sos/conditions.hpp"
#include "sos/generator.hpp"
#include "sos/gram.hpp"
#include "sos/json_io.hpp"
#include "sos/moment.hpp"
#include "sos/poly_text.hpp"
#include "sos/rng.hpp"
#include "sos/univariate.hpp"

namespace sos {

namespace {

constexpr int kExitUsage = 64;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
}

void emit(const std::string& output_path, std::ostream& out, const std::string& text) {
    if (output_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(output_path);
    if (!file) throw std::invalid_argument("cannot open " + output_path + " for writing");
    file << text << "\n";
}

std::string percent(long part, long whole) {
    char buf[32];
    double rate = whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
    std::snprintf(buf, sizeof(buf), "%.2f%%", rate);
    return buf;
}

// Deterministic per-trial stream so trial results do not depend on how the
// trials are scheduled.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
}

struct InputOptions {
    std::string input_path;
    std::string text;
    int nvars = 0;
    int half_degree = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.input_path, "polynomial JSON file (one object or an array)");
    cmd->add_option("--text", in.text, "polynomial in text form, e.g. \"1 + x1^4 - x1^2*x2\"");
    cmd->add_option("--n", in.nvars, "number of variables (with --text)");
    cmd->add_option("--d", in.half_degree, "declared half degree (with --text; default from the degree)");
}

struct LoadedPolys {
    std::vector<Polynomial> polys;
    bool array_input = false;  // render as a JSON array even when size is 1
};

LoadedPolys load_polynomials(const InputOptions& in) {
    if (!in.input_path.empty() && !in.text.empty()) {
        throw std::invalid_argument("--input and --text are mutually exclusive");
    }
    LoadedPolys loaded;
    if (!in.input_path.empty()) {
        Json j = load_json(in.input_path);
        loaded.array_input = j.is_array();
        loaded.polys = polys_from_json(j);
        return loaded;
    }
    if (!in.text.empty()) {
        if (in.nvars < 1) throw std::invalid_argument("--text needs --n");
        loaded.polys.push_back(in.half_degree > 0
                                   ? parse_polynomial(in.text, in.nvars, in.half_degree)
                                   : parse_polynomial(in.text, in.nvars));
        return loaded;
    }
    throw std::invalid_argument("no input: pass --input or --text");
}

std::optional<WeightScheme> parse_weights(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    std::vector<Rational> weights;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) weights.push_back(rational_from_string(item));
    return WeightScheme(std::move(weights));
}

// ---- check ----------------------------------------------------------------

struct CheckConfig {
    InputOptions in;
    std::string rule = "theorem1";
    std::string weights;
    std::string output_path;
    std::string format = "json";
};

std::string report_table(const ConditionReport& report) {
    std::string out = rule_name(report.rule);
    out += report.accepted ? ": accepted\n" : ": rejected\n";
    for (const Inequality& ineq : report.inequalities) {
        out += "  " + ineq.label + ": lhs=" + rational_to_string(ineq.lhs) +
               (ineq.strict ? " > " : " >= ") + "rhs=" + rational_to_string(ineq.rhs) +
               "  margin=" + rational_to_string(ineq.margin) + (ineq.holds() ? "" : "  VIOLATED") +
               "\n";
    }
    for (const BandRecord& band : report.band_breakdown) {
        out += "  band k=" + std::to_string(band.k) + ": f0_share=" +
               rational_to_string(band.f0_share) + " min_essential=" +
               rational_to_string(band.min_essential) + " margin_budget=" +
               rational_to_string(band.margin_budget) + " margin_essential=" +
               rational_to_string(band.margin_essential) + "\n";
    }
    return out;
}

int run_check(const CheckConfig& cfg, std::ostream& out) {
    LoadedPolys loaded = load_polynomials(cfg.in);
    const std::vector<Polynomial>& polys = loaded.polys;
    std::optional<WeightScheme> weights = parse_weights(cfg.weights);
    Rule rule = rule_from_name(cfg.rule);
    if (weights.has_value() && rule != Rule::corollary1) {
        throw std::invalid_argument("--weights is only valid with --rule corollary1");
    }

    std::vector<ConditionReport> reports;
    reports.reserve(polys.size());
    for (const Polynomial& f : polys) {
        switch (rule) {
            case Rule::theorem1: reports.push_back(check_theorem1(f)); break;
            case Rule::corollary1:
                reports.push_back(weights.has_value() ? check_corollary1(f, *weights)
                                                      : check_corollary1(f));
                break;
            case Rule::corollary2: reports.push_back(check_corollary2(f)); break;
        }
    }

    std::string rendered;
    if (cfg.format == "table") {
        for (const ConditionReport& r : reports) rendered += report_table(r);
        if (!rendered.empty() && rendered.back() == '\n') rendered.pop_back();
    } else if (loaded.array_input) {
        Json arr = Json::array();
        for (const ConditionReport& r : reports) arr.push_back(report_to_json(r));
        rendered = arr.dump(2);
    } else {
        rendered = report_to_json(reports.front()).dump(2);
    }
    emit(cfg.output_path, out, rendered);

    for (const ConditionReport& r : reports) {
        if (!r.accepted) return 1;
    }
    return 0;
}

// ---- certify ----------------------------------------------------------------

struct CertifyConfig {
    InputOptions in;
    double tol = 1e-9;
    int max_iter = 20000;
    bool keep_gram = false;
    bool serial = false;
    std::string output_path;
};

int run_certify(const CertifyConfig& cfg, std::ostream& out) {
    LoadedPolys loaded = load_polynomials(cfg.in);
    CertifyOptions opts;
    opts.tol = cfg.tol;
    opts.max_iter = cfg.max_iter;
    opts.keep_gram = cfg.keep_gram;
    opts.exec = cfg.serial ? kernels::Exec::serial : kernels::Exec::parallel;

    bool any_likely = false;
    bool any_inconclusive = false;
    Json arr = Json::array();
    for (const Polynomial& f : loaded.polys) {
        OracleVerdict verdict = certify(f, opts);
        any_likely |= verdict.status == OracleStatus::likely_not_sos;
        any_inconclusive |= verdict.status == OracleStatus::inconclusive;
        arr.push_back(verdict_to_json(verdict));
    }
    emit(cfg.output_path, out, loaded.array_input ? arr.dump(2) : arr.front().dump(2));
    if (any_likely) return 2;
    if (any_inconclusive) return 3;
    return 0;
}

// ---- diagnose ----------------------------------------------------------------

struct DiagnoseConfig {
    InputOptions in;
    std::string weights;
    std::string output_path;
};

Json diagnose_unipoly(const UniPoly& p) {
    Json j;
    j["poly"] = unipoly_to_json(p);
    std::vector<Rational> derivs = derivatives_at_one(p);
    Json jd = Json::array();
    for (const Rational& v : derivs) jd.push_back(rational_to_string(v));
    j["derivatives_at_one"] = std::move(jd);
    j["sign_variations"] = sign_variations(derivs);
    if (p.is_zero()) {
        j["no_root_beyond_one"] = nullptr;
    } else {
        j["no_root_beyond_one"] = no_root_beyond_one(p);
    }
    return j;
}

int run_diagnose(const DiagnoseConfig& cfg, std::ostream& out) {
    LoadedPolys loaded = load_polynomials(cfg.in);
    std::optional<WeightScheme> weights = parse_weights(cfg.weights);

    Json arr = Json::array();
    for (const Polynomial& f : loaded.polys) {
        WeightScheme w = weights.has_value() ? *weights : WeightScheme::uniform(f.half_degree());
        Json j;
        j["p"] = diagnose_unipoly(build_p(f));
        Json bands = Json::array();
        for (int k = 1; k <= f.half_degree(); ++k) {
            Json jb;
            jb["k"] = k;
            jb["p_k"] = diagnose_unipoly(build_p_k(f, k, w));
            bands.push_back(std::move(jb));
        }
        j["bands"] = std::move(bands);
        arr.push_back(std::move(j));
    }
    emit(cfg.output_path, out, loaded.array_input ? arr.dump(2) : arr.front().dump(2));
    return 0;
}

// ---- lemmas ----------------------------------------------------------------

struct LemmasConfig {
    int nvars = 2;
    int half_degree = 2;
    int trials = 1000;
    uint64_t seed = 0;
    int atoms = 5;
    std::string output_path;
};

int run_lemmas(const LemmasConfig& cfg, std::ostream& out) {
    long violations = 0;
    Json first_violation;
    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng = trial_rng(cfg.seed, static_cast<uint64_t>(t));
        AtomicMeasure mu = random_measure(cfg.nvars, cfg.atoms, rng);
        MomentSequence y = moments_of(mu, cfg.half_degree);
        MomentSequence y_next = moments_of(mu, cfg.half_degree + 1);

        std::vector<std::string> failed;
        if (!check_lemma1(y)) failed.push_back("lemma1");
        if (!check_lemma2(y)) failed.push_back("lemma2");
        if (!check_lemma3(y)) failed.push_back("lemma3");
        if (!tau_chain({y, y_next})) failed.push_back("tau_chain");
        if (!failed.empty()) {
            ++violations;
            if (first_violation.is_null()) {
                first_violation["trial"] = t;
                first_violation["failed"] = failed;
                first_violation["moments"] = moments_to_json(y);
            }
        }
    }
    Json j;
    j["nvars"] = cfg.nvars;
    j["half_degree"] = cfg.half_degree;
    j["trials"] = cfg.trials;
    j["violations"] = violations;
    if (!first_violation.is_null()) j["first_violation"] = std::move(first_violation);
    emit(cfg.output_path, out, j.dump(2));
    return violations == 0 ? 0 : 1;
}

// ---- generate ----------------------------------------------------------------

struct GenerateConfig {
    GenOptions gen;
    int count = 10;
    uint64_t seed = 0;
    std::string output_path;
};

int run_generate(const GenerateConfig& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    Json arr = Json::array();
    for (int i = 0; i < cfg.count; ++i) {
        arr.push_back(poly_to_json(random_polynomial(cfg.gen, rng)));
    }
    emit(cfg.output_path, out, arr.dump(2));
    return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchConfig {
    GenOptions gen;
    int count = 100;
    uint64_t seed = 0;
    std::string output_path;
    std::string format = "table";
};

struct BenchRow {
    bool theorem1 = false;
    bool corollary1 = false;
    bool corollary2 = false;
    bool oracle_checked = false;
    bool oracle_agrees = false;
};

int run_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Polynomial> instances;
    instances.reserve(static_cast<size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) instances.push_back(random_polynomial(cfg.gen, rng));

    std::vector<BenchRow> rows(instances.size());
    auto t0 = std::chrono::steady_clock::now();
    // Instances are independent; results land in their own slots, so the
    // merge order is the input order regardless of scheduling.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cfg.count; ++i) {
        const Polynomial& f = instances[static_cast<size_t>(i)];
        BenchRow& row = rows[static_cast<size_t>(i)];
        row.theorem1 = check_theorem1(f).accepted;
        row.corollary1 = check_corollary1(f).accepted;
        row.corollary2 = check_corollary2(f).accepted;
        if (row.theorem1 || row.corollary1) {
            row.oracle_checked = true;
            CertifyOptions opts;
            opts.tol = 1e-7;
            row.oracle_agrees = certify(f, opts).status == OracleStatus::certified_sos;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    double total_s = std::chrono::duration<double>(t1 - t0).count();
    // Wall-clock is run-dependent, so it goes to stderr and never into the
    // report stream.
    char timing[128];
    std::snprintf(timing, sizeof(timing), "bench wall-clock: %.3f s total, %.3f ms per instance",
                  total_s, cfg.count > 0 ? 1e3 * total_s / cfg.count : 0.0);
    err << timing << "\n";

    long n_th1 = 0, n_cor1 = 0, n_cor2 = 0, n_checked = 0, n_agree = 0;
    for (const BenchRow& row : rows) {
        n_th1 += row.theorem1;
        n_cor1 += row.corollary1;
        n_cor2 += row.corollary2;
        n_checked += row.oracle_checked;
        n_agree += row.oracle_agrees;
    }

    std::string rendered;
    if (cfg.format == "json") {
        Json j;
        j["n"] = cfg.gen.nvars;
        j["d"] = cfg.gen.half_degree;
        j["count"] = cfg.count;
        j["seed"] = cfg.seed;
        j["density"] = cfg.gen.density;
        j["coeff_max"] = cfg.gen.coeff_max;
        j["den_max"] = cfg.gen.den_max;
        j["boost"] = cfg.gen.boosted;
        Json acc;
        acc["theorem1"] = n_th1;
        acc["corollary1"] = n_cor1;
        acc["corollary2"] = n_cor2;
        j["accepted"] = std::move(acc);
        Json agr;
        agr["checked"] = n_checked;
        agr["certified"] = n_agree;
        j["oracle_agreement"] = std::move(agr);
        rendered = j.dump(2);
    } else {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "bench n=%d d=%d count=%d seed=%llu density=%.2f coeff_max=%d den_max=%d "
                      "boost=%s",
                      cfg.gen.nvars, cfg.gen.half_degree, cfg.count,
                      static_cast<unsigned long long>(cfg.seed), cfg.gen.density,
                      cfg.gen.coeff_max, cfg.gen.den_max, cfg.gen.boosted ? "on" : "off");
        rendered += line;
        rendered += "\nrule         accepted    rate\n";
        auto add_rule = [&](const char* name, long n) {
            std::snprintf(line, sizeof(line), "%-12s %8ld  %6s\n", name, n,
                          percent(n, cfg.count).c_str());
            rendered += line;
        };
        add_rule("theorem1", n_th1);
        add_rule("corollary1", n_cor1);
        add_rule("corollary2", n_cor2);
        std::snprintf(line, sizeof(line), "oracle agreement on linear acceptances: %ld/%ld (%s)",
                      n_agree, n_checked, percent(n_agree, n_checked).c_str());
        rendered += line;
    }
    emit(cfg.output_path, out, rendered);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"linear sufficient conditions for sum-of-squares membership, with an "
                 "independent Gram-matrix oracle"};
    app.name("soscone");
    app.require_subcommand(1);

    CheckConfig check_cfg;
    CLI::App* check = app.add_subcommand(
        "check", "decide membership in the polyhedral subcone for one rule");
    add_input_options(check, check_cfg.in);
    check->add_option("--rule", check_cfg.rule, "theorem1, corollary1, or corollary2")
        ->required()
        ->check(CLI::IsMember({"theorem1", "corollary1", "corollary2"}));
    check->add_option("--weights", check_cfg.weights,
                      "comma-separated rational band weights (corollary1 only)");
    check->add_option("--output", check_cfg.output_path, "write the report here instead of stdout");
    check->add_option("--format", check_cfg.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    CertifyConfig certify_cfg;
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "run the Gram-matrix feasibility oracle");
    add_input_options(certify_cmd, certify_cfg.in);
    certify_cmd->add_option("--tol", certify_cfg.tol, "projection tolerance")
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--max-iter", certify_cfg.max_iter, "iteration budget")
        ->check(CLI::PositiveNumber);
    certify_cmd->add_flag("--gram", certify_cfg.keep_gram, "include the Gram matrix in the verdict");
    certify_cmd->add_flag("--serial", certify_cfg.serial, "use the serial reference kernels");
    certify_cmd->add_option("--output", certify_cfg.output_path, "write the verdict here");

    DiagnoseConfig diagnose_cfg;
    CLI::App* diagnose = app.add_subcommand(
        "diagnose", "print the univariate comparison polynomials and their derivative signs");
    add_input_options(diagnose, diagnose_cfg.in);
    diagnose->add_option("--weights", diagnose_cfg.weights,
                         "comma-separated rational band weights (default uniform)");
    diagnose->add_option("--output", diagnose_cfg.output_path, "write the JSON here");

    LemmasConfig lemmas_cfg;
    CLI::App* lemmas = app.add_subcommand(
        "lemmas", "property-test the moment-sequence lemmas on random atomic measures");
    lemmas->add_option("--n", lemmas_cfg.nvars, "number of variables")->check(CLI::PositiveNumber);
    lemmas->add_option("--d", lemmas_cfg.half_degree, "moment order")->check(CLI::PositiveNumber);
    lemmas->add_option("--trials", lemmas_cfg.trials, "number of random measures")
        ->check(CLI::PositiveNumber);
    lemmas->add_option("--seed", lemmas_cfg.seed, "random seed");
    lemmas->add_option("--atoms", lemmas_cfg.atoms, "atoms per measure")
        ->check(CLI::PositiveNumber);
    lemmas->add_option("--output", lemmas_cfg.output_path, "write the summary here");

    GenerateConfig generate_cfg;
    CLI::App* generate = app.add_subcommand("generate", "emit seeded random polynomials as JSON");
    generate->add_option("--n", generate_cfg.gen.nvars, "number of variables")
        ->check(CLI::PositiveNumber);
    generate->add_option("--d", generate_cfg.gen.half_degree, "half degree")
        ->check(CLI::PositiveNumber);
    generate->add_option("--count", generate_cfg.count, "how many")->check(CLI::PositiveNumber);
    generate->add_option("--seed", generate_cfg.seed, "random seed");
    generate->add_option("--density", generate_cfg.gen.density, "support density in [0,1]");
    generate->add_option("--coeff-max", generate_cfg.gen.coeff_max, "numerator bound");
    generate->add_option("--den-max", generate_cfg.gen.den_max, "denominator bound");
    generate->add_flag("--boost", generate_cfg.gen.boosted,
                       "overwrite constant and pure even powers upward");
    generate->add_option("--output", generate_cfg.output_path, "write the array here");

    BenchConfig bench_cfg;
    CLI::App* bench = app.add_subcommand(
        "bench", "acceptance rates and oracle agreement over one random cell");
    bench->add_option("--n", bench_cfg.gen.nvars, "number of variables")
        ->check(CLI::PositiveNumber);
    bench->add_option("--d", bench_cfg.gen.half_degree, "half degree")
        ->check(CLI::PositiveNumber);
    bench->add_option("--count", bench_cfg.count, "instances")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.seed, "random seed");
    bench->add_option("--density", bench_cfg.gen.density, "support density in [0,1]");
    bench->add_option("--coeff-max", bench_cfg.gen.coeff_max, "numerator bound (0 = zero polys)");
    bench->add_option("--den-max", bench_cfg.gen.den_max, "denominator bound");
    bench->add_flag("--boost", bench_cfg.gen.boosted, "boosted coefficient distribution");
    bench->add_option("--format", bench_cfg.format, "table or json")
        ->check(CLI::IsMember({"json", "table"}));
    bench->add_option("--output", bench_cfg.output_path, "write the report here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_cfg, out);
        if (certify_cmd->parsed()) return run_certify(certify_cfg, out);
        if (diagnose->parsed()) return run_diagnose(diagnose_cfg, out);
        if (lemmas->parsed()) return run_lemmas(lemmas_cfg, out);
        if (generate->parsed()) return run_generate(generate_cfg, out);
        if (bench->parsed()) return run_bench(bench_cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace sos
