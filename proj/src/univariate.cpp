#include "sos/univariate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sos {

namespace {

void normalize(std::vector<Rational>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Rational(0));
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() == 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t m = 1; m < coeffs_.size(); ++m) {
        out[m - 1] = coeffs_[m] * Rational(static_cast<long>(m));
    }
    return UniPoly(std::move(out));
}

Rational UniPoly::at_one() const {
    Rational sum(0);
    for (const Rational& c : coeffs_) sum += c;
    return sum;
}

double UniPoly::eval(double t) const {
    double acc = 0.0;
    for (size_t m = coeffs_.size(); m-- > 0;) {
        acc = acc * t + rational_to_double(coeffs_[m]);
    }
    return acc;
}

UniPoly build_p(const Polynomial& f) {
    const int d = f.half_degree();
    Decomposition dec = decompose(f, DecomposeMode::top_degree_only);

    std::vector<Rational> coeffs(static_cast<size_t>(2 * d) + 1, Rational(0));
    coeffs[0] = dec.constant;
    coeffs[static_cast<size_t>(2 * d)] = dec.min_essential(d);
    for (const auto& [alpha, c] : dec.remainder.terms()) {
        size_t m = static_cast<size_t>(alpha.degree());
        if (alpha.all_even()) {
            if (c < 0) coeffs[m] += c;
        } else {
            coeffs[m] -= abs(c);
        }
    }
    return UniPoly(std::move(coeffs));
}

UniPoly build_p_k(const Polynomial& f, int k, const WeightScheme& w) {
    const int d = f.half_degree();
    if (k < 1 || k > d) {
        throw std::out_of_range("band index " + std::to_string(k) + " outside [1, " +
                                std::to_string(d) + "]");
    }
    Decomposition dec = decompose(f, DecomposeMode::all_bands);

    std::vector<Rational> coeffs(static_cast<size_t>(2 * k) + 1, Rational(0));
    coeffs[0] = w.at(k) * dec.constant;
    coeffs[static_cast<size_t>(2 * k)] = dec.min_essential(k);
    for (const auto& [alpha, c] : dec.remainder.terms()) {
        if (classify(alpha).band != k) continue;
        if (alpha.all_even()) {
            // even exponents in band k have degree exactly 2k
            if (c < 0) coeffs[static_cast<size_t>(2 * k)] += c;
        } else {
            coeffs[static_cast<size_t>(alpha.degree())] -= abs(c);
        }
    }
    return UniPoly(std::move(coeffs));
}

std::vector<Rational> derivatives_at_one(const UniPoly& p) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    UniPoly cur = p;
    out.push_back(cur.at_one());
    for (int k = 1; k <= p.degree(); ++k) {
        cur = cur.derivative();
        out.push_back(cur.at_one());
    }
    return out;
}

int sign_variations(const std::vector<Rational>& values) {
    int variations = 0;
    int prev = 0;
    for (const Rational& v : values) {
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

bool no_root_beyond_one(const UniPoly& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("zero polynomial has no root-location certificate");
    }
    return sign_variations(derivatives_at_one(p)) == 0;
}

}  // namespace sos
