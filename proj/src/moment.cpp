#include "sos/moment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sos {

namespace {

constexpr double kRelTol = 1e-12;

// a <= b up to relative slack.
bool leq_tol(double a, double b) {
    return a <= b + kRelTol * std::max(1.0, std::abs(b));
}

double pow_int(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

MomentSequence::MomentSequence(int nvars, int half_degree)
    : nvars_(nvars), half_degree_(half_degree) {
    if (nvars < 1) throw std::invalid_argument("need at least one variable");
    if (half_degree < 1) throw std::invalid_argument("half degree must be at least 1");
}

void MomentSequence::set(const Exponent& alpha, double value) {
    if (alpha.nvars() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (alpha.degree() > 2 * half_degree_) {
        throw std::invalid_argument("moment degree exceeds 2d");
    }
    values_[alpha] = value;
}

double MomentSequence::at(const Exponent& alpha) const {
    auto it = values_.find(alpha);
    if (it == values_.end()) {
        throw std::out_of_range("missing moment for an exponent of degree " +
                                std::to_string(alpha.degree()));
    }
    return it->second;
}

double MomentSequence::y0() const { return at(Exponent::zero(nvars_)); }

bool MomentSequence::complete() const {
    return values_.size() == enumerate_exponents(nvars_, 2 * half_degree_).size();
}

MomentSequence moments_of(const AtomicMeasure& mu, int half_degree, bool normalize) {
    if (mu.atoms.empty()) throw std::invalid_argument("measure has no atoms");
    const int nvars = static_cast<int>(mu.atoms.front().point.size());
    for (const Atom& atom : mu.atoms) {
        if (static_cast<int>(atom.point.size()) != nvars) {
            throw std::invalid_argument("atoms have mixed dimensions");
        }
        if (atom.weight <= 0.0) throw std::invalid_argument("atom weights must be positive");
    }

    MomentSequence y(nvars, half_degree);
    double mass = 0.0;
    for (const Atom& atom : mu.atoms) mass += atom.weight;
    const double scale = normalize ? 1.0 / mass : 1.0;

    for (const Exponent& alpha : enumerate_exponents(nvars, 2 * half_degree)) {
        double sum = 0.0;
        for (const Atom& atom : mu.atoms) {
            double mono = atom.weight;
            for (int v = 0; v < nvars; ++v) {
                mono *= pow_int(atom.point[static_cast<size_t>(v)],
                                alpha.entries()[static_cast<size_t>(v)]);
            }
            sum += mono;
        }
        y.set(alpha, sum * scale);
    }
    return y;
}

MomentMatrix build_matrix(const MomentSequence& y) {
    MomentMatrix m;
    m.order = y.half_degree();
    m.index = enumerate_exponents(y.nvars(), m.order);
    const int size = static_cast<int>(m.index.size());
    m.entries = kernels::Matrix(size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            m.entries.at(i, j) =
                y.at(m.index[static_cast<size_t>(i)] + m.index[static_cast<size_t>(j)]);
        }
    }
    return m;
}

double tau(const MomentSequence& y) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < y.nvars(); ++i) {
        best = std::max(best, y.at(Exponent::pure(y.nvars(), i, 2 * y.half_degree())));
    }
    return best;
}

bool check_lemma1(const MomentSequence& y) {
    const double bound = std::max(y.y0(), tau(y));
    for (const auto& [alpha, value] : y.values()) {
        if (!leq_tol(std::abs(value), bound)) return false;
    }
    return true;
}

bool check_lemma2(const MomentSequence& y) {
    if (std::abs(y.y0() - 1.0) > 1e-9) {
        throw std::invalid_argument("lemma2 requires a normalized sequence (y_0 = 1)");
    }
    const double root_tau = std::pow(std::max(tau(y), 0.0), 1.0 / (2.0 * y.half_degree()));
    for (const auto& [alpha, value] : y.values()) {
        if (alpha.degree() == 0) continue;
        double lhs = std::pow(std::abs(value), 1.0 / alpha.degree());
        if (!leq_tol(lhs, root_tau)) return false;
    }
    return true;
}

bool check_lemma3(const MomentSequence& y) {
    const double t = tau(y);
    for (const Exponent& alpha : enumerate_exponents(y.nvars(), y.half_degree())) {
        if (alpha.degree() != y.half_degree()) continue;
        if (!leq_tol(y.at(alpha + alpha), t)) return false;
    }
    return true;
}

bool tau_chain(const std::vector<MomentSequence>& ys) {
    for (size_t i = 0; i + 1 < ys.size(); ++i) {
        if (ys[i + 1].half_degree() != ys[i].half_degree() + 1) {
            throw std::invalid_argument("tau chain needs consecutive orders");
        }
        double lhs = std::pow(std::max(tau(ys[i]), 0.0), 1.0 / ys[i].half_degree());
        double rhs = std::pow(std::max(tau(ys[i + 1]), 0.0), 1.0 / ys[i + 1].half_degree());
        if (!leq_tol(lhs, rhs)) return false;
    }
    return true;
}

double apply_functional(const MomentSequence& y, const Polynomial& f) {
    if (f.nvars() != y.nvars()) throw std::invalid_argument("arity mismatch");
    double sum = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        sum += rational_to_double(c) * y.at(alpha);
    }
    return sum;
}

}  // namespace sos
