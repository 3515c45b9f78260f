#include "sos/exponent.hpp"

#include <stdexcept>

namespace sos {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("exponent needs at least one variable");
    }
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("negative exponent entry");
        degree_ += e;
    }
}

Exponent Exponent::zero(int nvars) {
    return Exponent(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Exponent Exponent::pure(int nvars, int var, int power) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(var)) = power;
    return Exponent(std::move(e));
}

bool Exponent::all_even() const {
    for (int e : entries_) {
        if (e % 2 != 0) return false;
    }
    return true;
}

int Exponent::pure_power_var() const {
    int var = -1;
    for (int i = 0; i < nvars(); ++i) {
        if (entries_[static_cast<std::size_t>(i)] == 0) continue;
        if (var >= 0) return -1;
        var = i;
    }
    return var;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (o.nvars() != nvars()) {
        throw std::invalid_argument("exponent arity mismatch");
    }
    std::vector<int> sum(entries_);
    for (int i = 0; i < nvars(); ++i) {
        sum[static_cast<std::size_t>(i)] += o.entries_[static_cast<std::size_t>(i)];
    }
    return Exponent(std::move(sum));
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Within a degree the lexicographically larger entry vector comes first.
    return a.entries() > b.entries();
}

GammaClass classify(const Exponent& alpha) {
    GammaClass c;
    c.in_gamma = alpha.all_even();
    c.band = (alpha.degree() + 1) / 2;
    return c;
}

namespace {

void enumerate_degree(int nvars, int pos, int remaining, std::vector<int>& scratch,
                      std::vector<Exponent>& out) {
    if (pos == nvars - 1) {
        scratch[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(Exponent(scratch));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        scratch[static_cast<std::size_t>(pos)] = e;
        enumerate_degree(nvars, pos + 1, remaining - e, scratch, out);
    }
}

}  // namespace

std::vector<Exponent> enumerate_exponents(int nvars, int max_degree) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    std::vector<Exponent> out;
    std::vector<int> scratch(static_cast<std::size_t>(nvars), 0);
    for (int deg = 0; deg <= max_degree; ++deg) {
        enumerate_degree(nvars, 0, deg, scratch, out);
    }
    return out;
}

}  // namespace sos
