#include "specham/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specham/jsonio.hpp"

namespace specham {

SymMatrix::SymMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 0) throw PreconditionError("SymMatrix: negative order");
}

SymMatrix::SymMatrix(int n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
    if (n < 0) throw PreconditionError("SymMatrix: negative order");
    if (data_.size() != static_cast<std::size_t>(n) * n) {
        throw PreconditionError("SymMatrix: data size does not match order");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) {
                throw PreconditionError("SymMatrix: input is not symmetric at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
        for (int j = 0; j < n_; ++j) {
            if (!std::isfinite(at(i, j))) {
                throw PreconditionError("SymMatrix: non-finite entry");
            }
        }
    }
}

void SymMatrix::set(int i, int j, double value) {
    data_[static_cast<std::size_t>(i) * n_ + j] = value;
    data_[static_cast<std::size_t>(j) * n_ + i] = value;
}

void SymMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        const double* row = data_.data() + static_cast<std::size_t>(i) * n_;
        double acc = 0;
        for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

double SymMatrix::max_abs_row_sum() const {
    double best = 0;
    for (int i = 0; i < n_; ++i) {
        double s = 0;
        for (int j = 0; j < n_; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) m.set(u, v, 1.0);
        }
    }
    return m;
}

SymMatrix signless_laplacian_matrix(const Graph& g) {
    SymMatrix m = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) m.set(v, v, static_cast<double>(g.degree(v)));
    return m;
}

namespace {

double norm2(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}


double rayleigh(const SymMatrix& m, const std::vector<double>& x, std::vector<double>& mx) {
    m.multiply(x, mx);
    double num = 0, den = 0;
    for (int i = 0; i < m.order(); ++i) {
        num += x[i] * mx[i];
        den += x[i] * x[i];
    }
    return den > 0 ? num / den : 0.0;
}

double residual_inf(const std::vector<double>& mx, double lambda, const std::vector<double>& x) {
    double r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r = std::max(r, std::abs(mx[i] - lambda * x[i]));
    }
    return r;
}

// Shared worker: when `deflate` is nonempty the iterate is re-orthogonalized
// against it each step, which converges to the next eigenpair down.
EigenEstimate power_iterate(const SymMatrix& m, double tol, long long budget,
                            const std::vector<double>& deflate) {
    const int n = m.order();
    if (n < 1) throw PreconditionError("largest_eigenvalue: empty matrix");
    if (tol <= 0) throw PreconditionError("largest_eigenvalue: tolerance must be positive");

    const double shift = std::max(static_cast<double>(n), m.max_abs_row_sum());
    auto project_out = [&](std::vector<double>& x) {
        if (deflate.empty()) return;
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += deflate[i] * x[i];
        for (int i = 0; i < n; ++i) x[i] -= dot * deflate[i];
    };
    // Projects against the deflated direction and renormalizes. Returns false
    // when x lies numerically inside the deflated span. The norm check must
    // precede the division: the round-off left by projecting a vector that is
    // almost parallel to `deflate` can itself be parallel to `deflate` (for a
    // regular graph the error is identical in every component), and blind
    // normalization would resurrect it at full strength. A second projection
    // pass clears the component the division re-amplified.
    auto project_and_normalize = [&](std::vector<double>& x) -> bool {
        project_out(x);
        double nrm = norm2(x);
        if (nrm < 1e-6) return false;
        for (double& v : x) v /= nrm;
        project_out(x);
        nrm = norm2(x);
        if (nrm < 0.5) return false;
        for (double& v : x) v /= nrm;
        return true;
    };

    std::vector<double> x(n, 1.0), mx(n), next(n);
    if (!project_and_normalize(x)) {
        x.assign(n, 0.0); // flag for the fallback branch below
    }
    int fallback = 0; // next basis vector to try if the iterate degenerates

    long long iterations = 0;
    double lambda = 0;
    double prev_residual = std::numeric_limits<double>::infinity();
    long long stagnant = 0;
    while (true) {
        if (norm2(x) < 0.5) {
            // Degenerate iterate (start vector orthogonal to the eigenspace,
            // e.g. all-ones deflated against the Perron vector of a regular
            // graph): restart from the next standard basis vector.
            if (fallback >= n) {
                throw BudgetExceeded("largest_eigenvalue: no usable start vector");
            }
            x.assign(n, 0.0);
            x[fallback++] = 1.0;
            if (!project_and_normalize(x)) x.assign(n, 0.0);
            prev_residual = std::numeric_limits<double>::infinity();
            stagnant = 0;
            continue;
        }
        lambda = rayleigh(m, x, mx);
        double res = residual_inf(mx, lambda, x);
        if (res <= tol) {
            return EigenEstimate{lambda, x, res, iterations, tol};
        }
        if (++iterations > budget) {
            throw BudgetExceeded("largest_eigenvalue: residual " + std::to_string(res) +
                                 " above tolerance after " + std::to_string(budget) +
                                 " iterations");
        }
        if (res >= prev_residual * (1 - 1e-15)) {
            // No progress; after a grace period switch the start vector, which
            // handles iterates trapped in an invariant subspace.
            if (++stagnant > 200 && fallback < n) {
                x.assign(n, 0.0);
                x[fallback++] = 1.0;
                if (!project_and_normalize(x)) x.assign(n, 0.0);
                prev_residual = std::numeric_limits<double>::infinity();
                stagnant = 0;
                continue;
            }
        } else {
            stagnant = 0;
        }
        prev_residual = res;
        // next = (M + shift I) x, then renormalize
        for (int i = 0; i < n; ++i) next[i] = mx[i] + shift * x[i];
        if (!project_and_normalize(next)) next.assign(n, 0.0);
        x.swap(next);
    }
}

} // namespace

EigenEstimate largest_eigenvalue(const SymMatrix& m, double tol, long long budget) {
    return power_iterate(m, tol, budget, {});
}

EigenEstimate second_largest_eigenvalue(const SymMatrix& m, double tol, long long budget) {
    if (m.order() < 2) {
        throw PreconditionError("second_largest_eigenvalue: need order >= 2");
    }
    EigenEstimate top = largest_eigenvalue(m, std::min(tol, kDefaultEigenTolerance), budget);
    return power_iterate(m, tol, budget, top.vector);
}

SpectralReport spectral_report(const Graph& g, double tol) {
    const int n = g.order();
    if (n < 2) {
        throw PreconditionError("spectral_report: need n >= 2, got " + std::to_string(n));
    }
    SpectralReport report;
    report.n = n;
    report.e = g.edge_count();
    report.tol = tol;

    EigenEstimate a = largest_eigenvalue(adjacency_matrix(g), tol);
    EigenEstimate q = largest_eigenvalue(signless_laplacian_matrix(g), tol);
    EigenEstimate c = largest_eigenvalue(adjacency_matrix(g.complement()), tol);
    report.mu = a.value;
    report.q = q.value;
    report.mu_complement = c.value;
    report.iterations = a.iterations + q.iterations + c.iterations;

    const std::vector<int> degs = g.degrees();
    bool has_isolated = std::find(degs.begin(), degs.end(), 0) != degs.end();
    if (!has_isolated) {
        report.hong_bound = std::sqrt(2.0 * static_cast<double>(report.e) - n + 1);
    }
    report.feng_yu_bound = 2.0 * static_cast<double>(report.e) / (n - 1) + n - 2;
    double sum_sq = 0;
    for (int d : degs) sum_sq += static_cast<double>(d) * d;
    report.hofmeister_lower = std::sqrt(sum_sq / n);
    return report;
}

std::string to_json(const SpectralReport& report) {
    jsonio::Value doc = jsonio::Value::object();
    doc.set("n", report.n);
    doc.set("e", report.e);
    doc.set("mu", report.mu);
    doc.set("q", report.q);
    doc.set("mu_complement", report.mu_complement);
    if (report.hong_bound) {
        doc.set("hong", *report.hong_bound);
    } else {
        doc.set("hong", jsonio::Value());
    }
    doc.set("feng_yu", report.feng_yu_bound);
    doc.set("hofmeister", report.hofmeister_lower);
    doc.set("tol", report.tol);
    doc.set("iterations", report.iterations);
    return doc.dump();
}

} // namespace specham
