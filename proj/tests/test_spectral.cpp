#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#ifdef SPECHAM_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include "specham/codec.hpp"
#include "specham/errors.hpp"
#include "specham/extremal.hpp"
#include "specham/graph.hpp"
#include "specham/spectral.hpp"

using namespace specham;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g = empty_graph(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) < p) g.add_edge(u, v);
        }
    }
    return g;
}

double mu_of(const Graph& g) { return largest_eigenvalue(adjacency_matrix(g)).value; }
double q_of(const Graph& g) { return largest_eigenvalue(signless_laplacian_matrix(g)).value; }

} // namespace

TEST_CASE("SymMatrix basics") {
    SymMatrix m(3);
    m.set(0, 1, 2.5);
    m.set(2, 2, -1.0);
    CHECK(m.at(1, 0) == 2.5);
    CHECK(m.at(0, 1) == 2.5);
    CHECK(m.at(2, 2) == -1.0);
    CHECK(m.at(0, 2) == 0.0);
    CHECK(m.max_abs_row_sum() == doctest::Approx(2.5));

    std::vector<double> y(3);
    m.multiply({1.0, 1.0, 1.0}, y);
    CHECK(y[0] == doctest::Approx(2.5));
    CHECK(y[1] == doctest::Approx(2.5));
    CHECK(y[2] == doctest::Approx(-1.0));

    CHECK_THROWS_AS(SymMatrix(2, {0, 1, 2, 0}), PreconditionError); // not symmetric
    CHECK_NOTHROW(SymMatrix(2, {0, 1, 1, 0}));
}

TEST_CASE("calibration on closed-form spectra") {
    for (int m = 2; m <= 50; ++m) {
        CHECK(std::abs(mu_of(complete_graph(m)) - (m - 1)) < 1e-9);
        CHECK(std::abs(q_of(complete_graph(m)) - (2 * m - 2)) < 1e-9);
        CHECK(std::abs(mu_of(star_graph(m)) - std::sqrt(double(m))) < 1e-9);
        if (m >= 3) CHECK(std::abs(mu_of(cycle_graph(m)) - 2.0) < 1e-9);
    }
    // a handful of independently computed values
    CHECK(mu_of(path_graph(4)) == doctest::Approx(1.61803398875).epsilon(1e-9));
    CHECK(q_of(path_graph(4)) == doctest::Approx(3.41421356237).epsilon(1e-9));
    CHECK(q_of(star_graph(3)) == doctest::Approx(4.0).epsilon(1e-9));
    const Graph petersen = parse_graph6("IheA@GUAo");
    CHECK(mu_of(petersen) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(q_of(petersen) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(mu_of(petersen.complement()) == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("frozen spectra of the extremal families") {
    struct Row {
        int n;
        bool prime;
        double mu, q, comu;
    };
    // independently computed with a dense symmetric eigensolver
    const Row rows[] = {
        {10, false, 3.94387913929, 8.33565571084, 5.63512841595},
        {12, false, 5.33453614007, 11.3889118921, 6.89660664921},
        {12, true, 5.25093341503, 11.0433916346, 6.75583549383},
        {20, false, 13.0394964774, 26.5060473972, 10.2841550625},
        {20, true, 13.0265760292, 26.3428122474, 10.0614549079},
        {33, false, 26.0092960455, 52.2431366641, 13.9572526185},
        {33, true, 26.0062088683, 52.1626924352, 13.6989384811},
    };
    for (const Row& row : rows) {
        const Graph g = build_ep(row.n, row.prime ? EpVariant::Prime : EpVariant::Standard);
        CHECK(mu_of(g) == doctest::Approx(row.mu).epsilon(1e-9));
        CHECK(q_of(g) == doctest::Approx(row.q).epsilon(1e-9));
        CHECK(mu_of(g.complement()) == doctest::Approx(row.comu).epsilon(1e-9));
    }
    const Graph en10 = build_en(10);
    CHECK(mu_of(en10) == doctest::Approx(6.07153907242).epsilon(1e-9));
    CHECK(q_of(en10) == doctest::Approx(12.5078227887).epsilon(1e-9));
    CHECK(mu_of(en10.complement()) == doctest::Approx(5.12310562562).epsilon(1e-9));
    CHECK(mu_of(build_en(18)) == doctest::Approx(14.0143255771).epsilon(1e-9));
    CHECK(q_of(build_en(18)) == doctest::Approx(28.219298626).epsilon(1e-9));
}

TEST_CASE("second largest eigenvalue") {
    // K_n has spectrum {n-1, -1, ..., -1}
    CHECK(second_largest_eigenvalue(adjacency_matrix(complete_graph(8))).value ==
          doctest::Approx(-1.0).epsilon(1e-6));
    // C_6 has second-largest eigenvalue 1 (eigenvalues 2, 1, 1, -1, -1, -2)
    CHECK(second_largest_eigenvalue(adjacency_matrix(cycle_graph(6))).value ==
          doctest::Approx(1.0).epsilon(1e-6));
    // values frozen from a dense eigensolver
    CHECK(second_largest_eigenvalue(adjacency_matrix(build_ep(12, EpVariant::Standard))).value ==
          doctest::Approx(2.3476505201).epsilon(1e-6));
    CHECK(second_largest_eigenvalue(adjacency_matrix(build_ep(40, EpVariant::Standard))).value ==
          doctest::Approx(2.82489903407).epsilon(1e-6));
}

TEST_CASE("estimates expose residuals within tolerance") {
    const EigenEstimate est = largest_eigenvalue(adjacency_matrix(build_en(12)), 1e-12);
    CHECK(est.residual <= 1e-12);
    CHECK(est.tolerance == 1e-12);
    CHECK(est.iterations > 0);
    CHECK(est.vector.size() == 12);
    double norm = 0;
    for (double x : est.vector) norm += x * x;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));

    // A regular graph converges instantly from the uniform start vector, so the
    // budget check needs an irregular graph whose Perron vector is non-uniform.
    CHECK_THROWS_AS(largest_eigenvalue(adjacency_matrix(path_graph(30)), 1e-12, 2),
                    BudgetExceeded);
    CHECK_THROWS_AS(largest_eigenvalue(adjacency_matrix(cycle_graph(12)), -1.0),
                    PreconditionError);
}

TEST_CASE("spectral report fields on a frozen example") {
    const SpectralReport rep = spectral_report(build_en(10));
    CHECK(rep.n == 10);
    CHECK(rep.e == 24);
    CHECK(rep.mu == doctest::Approx(6.07153907242).epsilon(1e-9));
    CHECK(rep.q == doctest::Approx(12.5078227887).epsilon(1e-9));
    CHECK(rep.mu_complement == doctest::Approx(5.12310562562).epsilon(1e-9));
    REQUIRE(rep.hong_bound.has_value());
    CHECK(*rep.hong_bound == doctest::Approx(6.2449979984).epsilon(1e-9));
    CHECK(rep.feng_yu_bound == doctest::Approx(13.3333333333).epsilon(1e-9));
    CHECK(rep.hofmeister_lower == doctest::Approx(5.42217668469).epsilon(1e-9));

    // the degree-0 vertex disables Hong's bound
    Graph with_isolated = empty_graph(4);
    with_isolated.add_edge(0, 1);
    with_isolated.add_edge(1, 2);
    CHECK_FALSE(spectral_report(with_isolated).hong_bound.has_value());
    CHECK_THROWS_AS(spectral_report(complete_graph(1)), PreconditionError);
}

TEST_CASE("bound inequalities on random connected graphs") {
    std::mt19937_64 rng(987654321);
    int tested = 0;
    while (tested < 300) {
        const int n = 2 + static_cast<int>(rng() % 24);
        const Graph g = random_graph(n, 0.15 + 0.8 * (rng() % 100) / 100.0, rng);
        if (!g.is_connected()) continue;
        ++tested;
        const SpectralReport rep = spectral_report(g);
        REQUIRE(rep.hong_bound.has_value());
        CHECK(rep.mu <= *rep.hong_bound + 1e-8);
        CHECK(rep.q <= rep.feng_yu_bound + 1e-8);
        CHECK(rep.mu >= rep.hofmeister_lower - 1e-8);
        // complement eigenvalue bound: mu(G) + mu(co-G) >= n - 1
        CHECK(rep.mu + rep.mu_complement >= n - 1 - 1e-8);
    }
}

#ifdef SPECHAM_HAVE_EIGEN
TEST_CASE("power iteration agrees with a dense eigensolver") {
    std::mt19937_64 rng(13579);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 28);
        const Graph g = random_graph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);

        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u != v && g.has_edge(u, v)) {
                    a(u, v) = 1;
                    q(u, v) = 1;
                }
            }
            q(u, u) = g.degree(u);
        }
        const double mu_ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a)
                                  .eigenvalues()
                                  .maxCoeff();
        const double q_ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(q)
                                 .eigenvalues()
                                 .maxCoeff();
        CHECK(mu_of(g) == doctest::Approx(mu_ref).epsilon(1e-8));
        CHECK(q_of(g) == doctest::Approx(q_ref).epsilon(1e-8));
    }
}
#endif
