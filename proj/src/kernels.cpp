#include "sos/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sos::kernels {

namespace {

constexpr int kMaxSweeps = 40;

double stop_threshold(double frobenius_norm) {
    return std::max(1e-12, 1e-14 * frobenius_norm);
}

struct Rotation {
    double c = 1.0;
    double s = 0.0;
};

// Angle annihilating a_pq, classic Jacobi formula.
Rotation make_rotation(double app, double aqq, double apq) {
    if (apq == 0.0) return {};
    double theta = (aqq - app) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    Rotation r;
    r.c = 1.0 / std::sqrt(t * t + 1.0);
    r.s = t * r.c;
    return r;
}

EigenDecomposition finalize(Matrix a, Matrix v) {
    const int n = a.size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

    EigenDecomposition out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[static_cast<size_t>(j)] = a.at(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
        for (int i = 0; i < n; ++i) {
            out.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
        }
    }
    return out;
}

EigenDecomposition jacobi_serial(Matrix a) {
    const int n = a.size();
    Matrix v = Matrix::identity(n);
    const double stop = stop_threshold(a.frobenius());

    for (int sweep = 0; sweep < kMaxSweeps && a.off_diagonal_norm() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                Rotation r = make_rotation(a.at(p, p), a.at(q, q), apq);
                double t = r.s / r.c;
                a.at(p, p) -= t * apq;
                a.at(q, q) += t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a.at(i, p);
                    double aiq = a.at(i, q);
                    a.at(i, p) = r.c * aip - r.s * aiq;
                    a.at(p, i) = a.at(i, p);
                    a.at(i, q) = r.s * aip + r.c * aiq;
                    a.at(q, i) = a.at(i, q);
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v.at(i, p);
                    double viq = v.at(i, q);
                    v.at(i, p) = r.c * vip - r.s * viq;
                    v.at(i, q) = r.s * vip + r.c * viq;
                }
            }
        }
    }
    return finalize(std::move(a), std::move(v));
}

// Round-robin pairing: with m players (m even), fix player 0 and rotate the
// rest; round r pairs cover all index pairs over m-1 rounds, each round's
// pairs disjoint.
std::vector<std::pair<int, int>> tournament_round(int m, int round) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m) / 2);
    auto seat = [&](int pos) {
        if (pos == 0) return 0;
        return 1 + (pos - 1 + round) % (m - 1);
    };
    for (int i = 0; i < m / 2; ++i) {
        int x = seat(i);
        int y = seat(m - 1 - i);
        if (x > y) std::swap(x, y);
        pairs.emplace_back(x, y);
    }
    return pairs;
}

EigenDecomposition jacobi_parallel(Matrix a, Matrix v) {
    const int n = a.size();
    const int m = (n % 2 == 0) ? n : n + 1;  // phantom index n sits out
    const double stop = stop_threshold(a.frobenius());

    std::vector<Rotation> rots(static_cast<size_t>(m) / 2);
    for (int sweep = 0; sweep < kMaxSweeps && a.off_diagonal_norm() > stop; ++sweep) {
        for (int round = 0; round < m - 1; ++round) {
            std::vector<std::pair<int, int>> pairs = tournament_round(m, round);
            // Drop pairs touching the phantom index.
            std::erase_if(pairs, [n](const std::pair<int, int>& pq) { return pq.second >= n; });
            const int npairs = static_cast<int>(pairs.size());

            // Angles from the pre-round matrix; the rotations commute since
            // the pairs are disjoint, so the round equals a serial
            // application in any order.
            for (int j = 0; j < npairs; ++j) {
                auto [p, q] = pairs[static_cast<size_t>(j)];
                rots[static_cast<size_t>(j)] = make_rotation(a.at(p, p), a.at(q, q), a.at(p, q));
            }
            // Column pass: each pair reads and writes only its own two
            // columns, so the loop is safe and deterministic in parallel.
#pragma omp parallel for schedule(static)
            for (int j = 0; j < npairs; ++j) {
                auto [p, q] = pairs[static_cast<size_t>(j)];
                const Rotation r = rots[static_cast<size_t>(j)];
                for (int i = 0; i < n; ++i) {
                    double aip = a.at(i, p);
                    double aiq = a.at(i, q);
                    a.at(i, p) = r.c * aip - r.s * aiq;
                    a.at(i, q) = r.s * aip + r.c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v.at(i, p);
                    double viq = v.at(i, q);
                    v.at(i, p) = r.c * vip - r.s * viq;
                    v.at(i, q) = r.s * vip + r.c * viq;
                }
            }
            // Row pass: same argument with rows.
#pragma omp parallel for schedule(static)
            for (int j = 0; j < npairs; ++j) {
                auto [p, q] = pairs[static_cast<size_t>(j)];
                const Rotation r = rots[static_cast<size_t>(j)];
                for (int i = 0; i < n; ++i) {
                    double api = a.at(p, i);
                    double aqi = a.at(q, i);
                    a.at(p, i) = r.c * api - r.s * aqi;
                    a.at(q, i) = r.s * api + r.c * aqi;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
            }
        }
        a.symmetrize();
    }
    return finalize(std::move(a), std::move(v));
}

}  // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

double Matrix::frobenius() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double x : data_) best = std::max(best, std::abs(x));
    return best;
}

double Matrix::off_diagonal_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            double x = at(i, j);
            sum += x * x;
        }
    }
    return std::sqrt(sum);
}

void Matrix::symmetrize() {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            double m = 0.5 * (at(i, j) + at(j, i));
            at(i, j) = m;
            at(j, i) = m;
        }
    }
}

bool is_symmetric(const Matrix& a, double tol) {
    const double scale = std::max(1.0, a.max_abs());
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            if (std::abs(a.at(i, j) - a.at(j, i)) > tol * scale) return false;
        }
    }
    return true;
}

EigenDecomposition symmetric_eigen(const Matrix& a, Exec exec) {
    if (a.size() == 0) return {};
    if (!is_symmetric(a)) throw std::invalid_argument("matrix is not symmetric");
    if (exec == Exec::serial) return jacobi_serial(a);
    return jacobi_parallel(a, Matrix::identity(a.size()));
}

Matrix psd_project(const Matrix& a, Exec exec) {
    const int n = a.size();
    EigenDecomposition eig = symmetric_eigen(a, exec);
    // Columns with negative eigenvalues drop out entirely.
    int first = 0;
    while (first < n && eig.values[static_cast<size_t>(first)] <= 0.0) ++first;

    Matrix out(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int k = first; k < n; ++k) {
                sum += eig.values[static_cast<size_t>(k)] * eig.vectors.at(i, k) * eig.vectors.at(j, k);
            }
            out.at(i, j) = sum;
        }
    }
    return out;
}

std::vector<double> eval_batch(const Polynomial& f, std::span<const double> coords, Exec exec) {
    const int nvars = f.nvars();
    if (coords.size() % static_cast<size_t>(nvars) != 0) {
        throw std::invalid_argument("coordinate buffer size is not a multiple of nvars");
    }
    const int npoints = static_cast<int>(coords.size() / static_cast<size_t>(nvars));

    // Flatten once so the hot loop touches only doubles and ints.
    const size_t nterms = f.terms().size();
    std::vector<double> coeff(nterms);
    std::vector<int> expo(nterms * static_cast<size_t>(nvars));
    size_t t = 0;
    for (const auto& [alpha, c] : f.terms()) {
        coeff[t] = rational_to_double(c);
        for (int v = 0; v < nvars; ++v) {
            expo[t * static_cast<size_t>(nvars) + static_cast<size_t>(v)] = alpha.entries()[static_cast<size_t>(v)];
        }
        ++t;
    }

    std::vector<double> out(static_cast<size_t>(npoints), 0.0);
    auto eval_point = [&](int p) {
        const double* x = coords.data() + static_cast<size_t>(p) * static_cast<size_t>(nvars);
        double acc = 0.0;
        for (size_t term = 0; term < nterms; ++term) {
            double mono = coeff[term];
            const int* e = expo.data() + term * static_cast<size_t>(nvars);
            for (int v = 0; v < nvars; ++v) {
                double base = x[v];
                for (int rep = 0; rep < e[v]; ++rep) mono *= base;
            }
            acc += mono;
        }
        out[static_cast<size_t>(p)] = acc;
    };

    if (exec == Exec::serial) {
        for (int p = 0; p < npoints; ++p) eval_point(p);
    } else {
#pragma omp parallel for schedule(static)
        for (int p = 0; p < npoints; ++p) eval_point(p);
    }
    return out;
}

}  // namespace sos::kernels
