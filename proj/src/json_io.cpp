#include "sos/json_io.hpp"

#include <stdexcept>

namespace sos {

namespace {

Rational coefficient_from_json(const Json& c) {
    if (c.is_string()) return rational_from_string(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw std::invalid_argument("coefficient must be an exact integer or a \"p/q\" string");
}

}  // namespace

Json poly_to_json(const Polynomial& f) {
    Json j;
    j["n"] = f.nvars();
    j["d"] = f.half_degree();
    Json terms = Json::array();
    for (const auto& [alpha, c] : f.terms()) {
        Json term;
        term["alpha"] = alpha.entries();
        term["c"] = rational_to_string(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("polynomial needs an integer \"n\"");
    }
    if (!j.contains("d") || !j["d"].is_number_integer()) {
        throw std::invalid_argument("polynomial needs an integer \"d\"");
    }
    const int n = j["n"].get<int>();
    const int d = j["d"].get<int>();
    Polynomial f(n, d);
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("polynomial needs a \"terms\" array");
    }
    for (const Json& term : j["terms"]) {
        if (!term.is_object() || !term.contains("alpha") || !term.contains("c")) {
            throw std::invalid_argument("each term needs \"alpha\" and \"c\"");
        }
        const Json& ja = term["alpha"];
        if (!ja.is_array() || static_cast<int>(ja.size()) != n) {
            throw std::invalid_argument("\"alpha\" must be an array of n integers");
        }
        std::vector<int> entries;
        entries.reserve(ja.size());
        for (const Json& e : ja) {
            if (!e.is_number_integer()) throw std::invalid_argument("exponents must be integers");
            entries.push_back(e.get<int>());
        }
        f.add_term(Exponent(std::move(entries)), coefficient_from_json(term["c"]));
    }
    return f;
}

std::vector<Polynomial> polys_from_json(const Json& j) {
    std::vector<Polynomial> out;
    if (j.is_array()) {
        for (const Json& item : j) out.push_back(poly_from_json(item));
    } else {
        out.push_back(poly_from_json(j));
    }
    return out;
}

Json report_to_json(const ConditionReport& report) {
    Json j;
    j["rule"] = rule_name(report.rule);
    j["accepted"] = report.accepted;
    Json ineqs = Json::array();
    for (const Inequality& ineq : report.inequalities) {
        Json ji;
        ji["label"] = ineq.label;
        ji["lhs"] = rational_to_string(ineq.lhs);
        ji["rhs"] = rational_to_string(ineq.rhs);
        ji["margin"] = rational_to_string(ineq.margin);
        ji["strict"] = ineq.strict;
        ineqs.push_back(std::move(ji));
    }
    j["inequalities"] = std::move(ineqs);
    if (report.rule == Rule::corollary1) {
        Json weights = Json::array();
        for (const Rational& w : report.weights) weights.push_back(rational_to_string(w));
        j["weights"] = std::move(weights);
        Json bands = Json::array();
        for (const BandRecord& band : report.band_breakdown) {
            Json jb;
            jb["k"] = band.k;
            jb["f0_share"] = rational_to_string(band.f0_share);
            jb["min_essential"] = rational_to_string(band.min_essential);
            jb["abs_off_gamma"] = rational_to_string(band.abs_off_gamma);
            jb["neg_gamma"] = rational_to_string(band.neg_gamma);
            jb["margin_budget"] = rational_to_string(band.margin_budget);
            jb["margin_essential"] = rational_to_string(band.margin_essential);
            bands.push_back(std::move(jb));
        }
        j["band_breakdown"] = std::move(bands);
    }
    return j;
}

Json verdict_to_json(const OracleVerdict& verdict) {
    Json j;
    j["status"] = status_name(verdict.status);
    j["residual"] = verdict.residual;
    j["min_eig"] = verdict.min_eig;
    j["iterations"] = verdict.iterations;
    if (verdict.gram.has_value()) {
        const kernels::Matrix& g = *verdict.gram;
        Json rows = Json::array();
        for (int i = 0; i < g.size(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < g.size(); ++k) row.push_back(g.at(i, k));
            rows.push_back(std::move(row));
        }
        j["gram"] = std::move(rows);
    }
    return j;
}

Json unipoly_to_json(const UniPoly& p) {
    Json j;
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = std::move(coeffs);
    j["text"] = unipoly_text(p);
    return j;
}

std::string unipoly_text(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t m = 0; m < p.coeffs().size(); ++m) {
        const Rational& c = p.coeffs()[m];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (m == 0) {
            out += rational_to_string(mag);
        } else {
            if (!unit) {
                out += rational_to_string(mag);
                out += "*";
            }
            out += "t";
            if (m > 1) out += "^" + std::to_string(m);
        }
    }
    return out;
}

Json moments_to_json(const MomentSequence& y) {
    Json j;
    j["nvars"] = y.nvars();
    j["half_degree"] = y.half_degree();
    Json moments = Json::array();
    for (const auto& [alpha, value] : y.values()) {
        Json jm;
        jm["alpha"] = alpha.entries();
        jm["value"] = value;
        moments.push_back(std::move(jm));
    }
    j["moments"] = std::move(moments);
    return j;
}

}  // namespace sos
