#include "sos/gram.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "sos/rng.hpp"

namespace sos {

namespace {

long binomial(int n, int k) {
    long out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > 1000000) return out;  // only the comparison against kMaxBasis matters
    }
    return out;
}

double group_residual(const GramProblem& problem, const kernels::Matrix& m) {
    double worst = 0.0;
    for (const GramGroup& g : problem.groups) {
        double sum = 0.0;
        for (const auto& [r, c] : g.cells) sum += m.at(r, c);
        worst = std::max(worst, std::abs(g.target - sum));
    }
    return worst;
}

void project_affine(const GramProblem& problem, kernels::Matrix& m) {
    for (const GramGroup& g : problem.groups) {
        double sum = 0.0;
        for (const auto& [r, c] : g.cells) sum += m.at(r, c);
        double shift = (g.target - sum) / static_cast<double>(g.cells.size());
        for (const auto& [r, c] : g.cells) m.at(r, c) += shift;
    }
}

double frobenius_distance(const kernels::Matrix& a, const kernels::Matrix& b) {
    double sum = 0.0;
    const auto& da = a.storage();
    const auto& db = b.storage();
    for (size_t i = 0; i < da.size(); ++i) {
        double d = da[i] - db[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace

std::string status_name(OracleStatus status) {
    switch (status) {
        case OracleStatus::certified_sos: return "certified-sos";
        case OracleStatus::likely_not_sos: return "likely-not-sos";
        case OracleStatus::inconclusive: return "inconclusive";
    }
    throw std::logic_error("unknown oracle status");
}

GramProblem build_gram_problem(const Polynomial& f) {
    const int n = f.nvars();
    const int d = f.half_degree();
    if (binomial(n + d, d) > kMaxBasis) {
        throw std::invalid_argument("monomial basis of size C(" + std::to_string(n + d) + "," +
                                    std::to_string(d) + ") exceeds " + std::to_string(kMaxBasis));
    }

    GramProblem problem;
    if (f.terms().empty()) return problem;

    // Bounding box of the support; a square in any representation can only
    // use exponents alpha with 2*alpha inside it, coordinatewise.
    std::vector<int> lo(static_cast<size_t>(n), std::numeric_limits<int>::max());
    std::vector<int> hi(static_cast<size_t>(n), 0);
    for (const auto& [gamma, c] : f.terms()) {
        for (int v = 0; v < n; ++v) {
            lo[static_cast<size_t>(v)] = std::min(lo[static_cast<size_t>(v)], gamma[v]);
            hi[static_cast<size_t>(v)] = std::max(hi[static_cast<size_t>(v)], gamma[v]);
        }
    }
    for (const Exponent& alpha : enumerate_exponents(n, d)) {
        bool keep = true;
        for (int v = 0; v < n && keep; ++v) {
            int doubled = 2 * alpha[v];
            keep = lo[static_cast<size_t>(v)] <= doubled && doubled <= hi[static_cast<size_t>(v)];
        }
        if (keep) problem.basis.push_back(alpha);
    }

    const int nbasis = static_cast<int>(problem.basis.size());
    std::map<Exponent, std::vector<std::pair<int, int>>, GradedLexLess> cells_by_gamma;
    for (int r = 0; r < nbasis; ++r) {
        for (int c = 0; c < nbasis; ++c) {
            Exponent gamma =
                problem.basis[static_cast<size_t>(r)] + problem.basis[static_cast<size_t>(c)];
            cells_by_gamma[gamma].emplace_back(r, c);
        }
    }
    problem.groups.reserve(cells_by_gamma.size());
    for (auto& [gamma, cells] : cells_by_gamma) {
        problem.groups.push_back(
            GramGroup{gamma, rational_to_double(f.coeff(gamma)), std::move(cells)});
    }

    for (const auto& [gamma, c] : f.terms()) {
        if (!cells_by_gamma.contains(gamma)) problem.unmatched.push_back(gamma);
    }
    return problem;
}

OracleVerdict certify(const Polynomial& f, const CertifyOptions& opts) {
    OracleVerdict verdict;
    if (f.terms().empty()) {
        verdict.status = OracleStatus::certified_sos;
        if (opts.keep_gram) verdict.gram = kernels::Matrix(0);
        return verdict;
    }

    GramProblem problem = build_gram_problem(f);
    if (!problem.unmatched.empty()) {
        for (const Exponent& gamma : problem.unmatched) {
            verdict.residual = std::max(verdict.residual, std::abs(rational_to_double(f.coeff(gamma))));
        }
        verdict.status = OracleStatus::likely_not_sos;
        return verdict;
    }

    const int nbasis = static_cast<int>(problem.basis.size());
    const double res_thresh = std::min(opts.tol, 1e-7);
    const double eig_thresh = std::min(opts.tol, 1e-9);

    auto certified = [&](const kernels::Matrix& cand, double res, double min_eig, int it) {
        OracleVerdict out;
        out.status = OracleStatus::certified_sos;
        out.residual = res;
        out.min_eig = min_eig;
        out.iterations = it;
        if (opts.keep_gram) out.gram = cand;
        return out;
    };

    kernels::Matrix x(nbasis);  // PSD iterate
    kernels::Matrix q(nbasis);  // Dykstra correction for the cone step
    double prev_dist = -1.0;
    int stall = 0;

    for (int it = 1; it <= opts.max_iter; ++it) {
        kernels::Matrix y = x;
        project_affine(problem, y);
        double dist = frobenius_distance(x, y);

        // The affine iterate reproduces f exactly; it certifies as soon as
        // it is (numerically) PSD. Checked sparsely, it costs an extra
        // eigendecomposition.
        if (it % 8 == 0) {
            kernels::EigenDecomposition eig = kernels::symmetric_eigen(y, opts.exec);
            if (!eig.values.empty() && eig.values.front() >= -eig_thresh) {
                double res = group_residual(problem, y);
                if (res < res_thresh) return certified(y, res, eig.values.front(), it);
            }
        }

        kernels::Matrix z(nbasis);
        for (size_t i = 0; i < z.storage().size(); ++i) {
            z.storage()[i] = y.storage()[i] + q.storage()[i];
        }
        x = kernels::psd_project(z, opts.exec);
        for (size_t i = 0; i < z.storage().size(); ++i) {
            q.storage()[i] = z.storage()[i] - x.storage()[i];
        }

        // The cone iterate is PSD by construction; it certifies as soon as
        // it reproduces f tightly enough.
        double res = group_residual(problem, x);
        if (res < res_thresh) {
            kernels::EigenDecomposition eig = kernels::symmetric_eigen(x, opts.exec);
            if (!eig.values.empty() && eig.values.front() >= -eig_thresh) {
                return certified(x, res, eig.values.front(), it);
            }
        }

        // A projection gap that stops moving while staying far above
        // tolerance indicates the two sets do not intersect.
        if (dist > 10.0 * opts.tol) {
            if (prev_dist >= 0.0 && std::abs(dist - prev_dist) <= 1e-10 * std::max(1.0, dist)) {
                ++stall;
            } else {
                stall = 0;
            }
            if (stall >= 200) {
                kernels::EigenDecomposition eig = kernels::symmetric_eigen(x, opts.exec);
                verdict.status = OracleStatus::likely_not_sos;
                verdict.residual = res;
                verdict.min_eig = eig.values.empty() ? 0.0 : eig.values.front();
                verdict.iterations = it;
                return verdict;
            }
        } else {
            stall = 0;
        }
        prev_dist = dist;
    }

    kernels::EigenDecomposition eig = kernels::symmetric_eigen(x, opts.exec);
    verdict.status = OracleStatus::inconclusive;
    verdict.residual = group_residual(problem, x);
    verdict.min_eig = eig.values.empty() ? 0.0 : eig.values.front();
    verdict.iterations = opts.max_iter;
    return verdict;
}

std::optional<std::vector<double>> sample_nonneg(const Polynomial& f, int trials, uint64_t seed,
                                                 double box) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const int n = f.nvars();
    std::mt19937_64 rng(seed);
    std::vector<double> coords(static_cast<size_t>(trials) * static_cast<size_t>(n));
    for (double& c : coords) c = uniform_range(rng, -box, box);

    std::vector<double> values = kernels::eval_batch(f, coords);
    for (int p = 0; p < trials; ++p) {
        if (values[static_cast<size_t>(p)] < -1e-9) {
            auto first = coords.begin() + static_cast<long>(p) * n;
            return std::vector<double>(first, first + n);
        }
    }
    return std::nullopt;
}

}  // namespace sos
