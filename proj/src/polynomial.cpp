#include "sos/polynomial.hpp"

#include <stdexcept>

namespace sos {

Polynomial::Polynomial(int nvars, int half_degree) : nvars_(nvars), half_degree_(half_degree) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    if (half_degree < 1) throw std::invalid_argument("half-degree must be positive");
}

void Polynomial::add_term(const Exponent& alpha, const Rational& c) {
    if (alpha.nvars() != nvars_) throw std::invalid_argument("term arity mismatch");
    if (alpha.degree() > 2 * half_degree_) {
        throw std::invalid_argument("term degree exceeds 2d");
    }
    if (c == 0) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::set_coeff(const Exponent& alpha, const Rational& c) {
    if (alpha.nvars() != nvars_) throw std::invalid_argument("term arity mismatch");
    if (alpha.degree() > 2 * half_degree_) {
        throw std::invalid_argument("term degree exceeds 2d");
    }
    if (c == 0) {
        terms_.erase(alpha);
    } else {
        terms_.insert_or_assign(alpha, c);
    }
}

Rational Polynomial::coeff(const Exponent& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Polynomial Polynomial::plus(const Polynomial& g) const {
    if (g.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial sum(nvars_, std::max(half_degree_, g.half_degree_));
    for (const auto& [alpha, c] : terms_) sum.add_term(alpha, c);
    for (const auto& [alpha, c] : g.terms_) sum.add_term(alpha, c);
    return sum;
}

Polynomial Polynomial::scaled(const Rational& lambda) const {
    Polynomial out(nvars_, half_degree_);
    if (lambda == 0) return out;
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, Rational(lambda * c));
    return out;
}

Polynomial Polynomial::plus_constant(const Rational& c) const {
    Polynomial out = *this;
    out.add_term(Exponent::zero(nvars_), c);
    return out;
}

double Polynomial::eval(std::span<const double> point) const {
    double acc = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < nvars_; ++i) {
            const double x = point[static_cast<std::size_t>(i)];
            for (int e = 0; e < alpha[i]; ++e) mono *= x;
        }
        acc += rational_to_double(c) * mono;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && half_degree_ == o.half_degree_ && terms_ == o.terms_;
}

Rational Decomposition::min_essential(int k) const {
    const int n = remainder.nvars();
    Rational best;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        auto it = essential.find({i, k});
        const Rational v = it == essential.end() ? Rational(0) : it->second;
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

Polynomial Decomposition::reassemble() const {
    Polynomial f = remainder;
    f.add_term(Exponent::zero(f.nvars()), constant);
    for (const auto& [key, c] : essential) {
        f.add_term(Exponent::pure(f.nvars(), key.first, 2 * key.second), c);
    }
    return f;
}

Decomposition decompose(const Polynomial& f, DecomposeMode mode) {
    const int n = f.nvars();
    const int d = f.half_degree();
    Decomposition dec{Rational(0), {}, Polynomial::zero(n, d), mode};

    const int k_lo = mode == DecomposeMode::top_degree_only ? d : 1;
    for (int k = k_lo; k <= d; ++k) {
        for (int i = 0; i < n; ++i) dec.essential[{i, k}] = 0;
    }

    for (const auto& [alpha, c] : f.terms()) {
        if (alpha.is_zero()) {
            dec.constant = c;
            continue;
        }
        const int var = alpha.pure_power_var();
        if (var >= 0 && alpha.degree() % 2 == 0) {
            const int k = alpha.degree() / 2;
            if (mode == DecomposeMode::all_bands || k == d) {
                dec.essential[{var, k}] = c;
                continue;
            }
        }
        dec.remainder.set_coeff(alpha, c);
    }
    return dec;
}

}  // namespace sos
