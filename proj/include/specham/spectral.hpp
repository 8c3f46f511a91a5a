#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specham/errors.hpp"
#include "specham/graph.hpp"

namespace specham {

// Dense real symmetric matrix. Mutation is only possible through the
// symmetric setter, so symmetry is an invariant rather than a runtime check.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);
    // Validates symmetry of row-major data; throws PreconditionError otherwise.
    SymMatrix(int n, std::vector<double> row_major);

    int order() const { return n_; }
    double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double value); // writes (i,j) and (j,i)

    // y = M x
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;
    double max_abs_row_sum() const;

private:
    int n_ = 0;
    std::vector<double> data_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix signless_laplacian_matrix(const Graph& g); // Q = D + A

struct EigenEstimate {
    double value = 0;
    std::vector<double> vector; // unit Euclidean norm
    double residual = 0;        // ‖Mx − λx‖∞, guaranteed ≤ tolerance
    long long iterations = 0;
    double tolerance = 0;
};

inline constexpr double kDefaultEigenTolerance = 1e-10;
inline constexpr long long kDefaultEigenBudget = 1'000'000;

// Largest eigenvalue by shifted power iteration. Deterministic: the start
// vector is all-ones (renormalized), falling back to standard basis vectors
// if the iteration stagnates with the Rayleigh residual still large. The
// shift max(n, max abs row sum) makes M + sI positive semidefinite so its
// dominant eigenvalue is λ_max(M) + s.
// Throws BudgetExceeded if the residual does not reach tol within the budget.
EigenEstimate largest_eigenvalue(const SymMatrix& m, double tol = kDefaultEigenTolerance,
                                 long long budget = kDefaultEigenBudget);

// Second-largest eigenvalue via per-iteration deflation against the Perron
// vector of the largest one. The achievable residual is limited by the
// accuracy of that vector, hence the looser default tolerance.
EigenEstimate second_largest_eigenvalue(const SymMatrix& m, double tol = 1e-8,
                                        long long budget = kDefaultEigenBudget);

struct SpectralReport {
    double mu = 0;            // largest adjacency eigenvalue
    double q = 0;             // largest signless-Laplacian eigenvalue
    double mu_complement = 0; // largest adjacency eigenvalue of the complement
    std::optional<double> hong_bound; // √(2e − n + 1); absent if any isolated vertex
    double feng_yu_bound = 0;         // 2e/(n−1) + n − 2, upper bound on q
    double hofmeister_lower = 0;      // √(Σ d(v)² / n), lower bound on mu
    int n = 0;
    long long e = 0;
    double tol = 0;
    long long iterations = 0; // summed over the three eigensolves
};

// Requires n ≥ 2 (the q upper bound divides by n−1).
SpectralReport spectral_report(const Graph& g, double tol = kDefaultEigenTolerance);

std::string to_json(const SpectralReport& report);

} // namespace specham
