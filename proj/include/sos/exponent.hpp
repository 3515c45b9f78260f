#pragma once

#include <vector>

namespace sos {

/// Multi-index alpha in N^n with cached total degree |alpha|.
class Exponent {
public:
    explicit Exponent(std::vector<int> entries);
    static Exponent zero(int nvars);
    /// power * e_var (0-based variable index).
    static Exponent pure(int nvars, int var, int power);

    int nvars() const { return static_cast<int>(entries_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool is_zero() const { return degree_ == 0; }
    bool all_even() const;
    /// Variable index when the exponent is a pure power of one variable,
    /// -1 otherwise (including the zero exponent).
    int pure_power_var() const;

    Exponent operator+(const Exponent& o) const;
    bool operator==(const Exponent& o) const { return entries_ == o.entries_; }
    bool operator!=(const Exponent& o) const { return !(*this == o); }

private:
    std::vector<int> entries_;
    int degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// x1-heavy exponents first, so (1,0) precedes (0,1).
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Even-exponent membership plus the degree band 2k-1 <= |alpha| <= 2k.
struct GammaClass {
    bool in_gamma = false;
    int band = 0;
};

GammaClass classify(const Exponent& alpha);

/// All exponents over nvars variables with |alpha| <= max_degree, in
/// graded-lex order.
std::vector<Exponent> enumerate_exponents(int nvars, int max_degree);

}  // namespace sos
