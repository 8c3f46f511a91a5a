#pragma once

#include <array>
#include <string>
#include <vector>

#include "specham/exact.hpp"
#include "specham/extremal.hpp"
#include "specham/graph.hpp"
#include "specham/jsonio.hpp"
#include "specham/spectral.hpp"

namespace specham {

// The six stated closed-form polynomials tied to the two blown-up families:
// Adj*/Q*/CoAdj* carry the largest adjacency / signless-Laplacian /
// complement-adjacency eigenvalue of EP_n resp. EP'_n as a root.
enum class PolyFamily { AdjEP, AdjEPPrime, QEP, QEPPrime, CoAdjEP, CoAdjEPPrime };

inline constexpr std::array<PolyFamily, 6> kAllPolyFamilies = {
    PolyFamily::AdjEP,  PolyFamily::AdjEPPrime,  PolyFamily::QEP,
    PolyFamily::QEPPrime, PolyFamily::CoAdjEP, PolyFamily::CoAdjEPPrime};

const char* family_name(PolyFamily family);

// Exact integer coefficients (ascending degree) of the stated closed form at
// integer n. Requires n >= 10.
exact::Poly family_coefficients(PolyFamily family, int n);

// Two of the stated forms do not annihilate the constructed eigenvalues; the
// corrected coefficient tables below do. For the other four families this is
// identical to family_coefficients.
exact::Poly family_coefficients_corrected(PolyFamily family, int n);
bool family_has_correction(PolyFamily family);

// Compensated floating evaluation of the stated form.
double poly_eval(PolyFamily family, int n, double x);

// The eigenvalue the family is supposed to annihilate, from the full matrix
// of the built graph.
double family_lambda(PolyFamily family, int n, double tol = kDefaultEigenTolerance);

struct ResidualReport {
    double residual = 0;          // |p(lambda)|
    double relative_residual = 0; // |p(lambda)| / sum of |monomial| magnitudes
    bool pass = false;            // relative_residual <= 1e-6
};

ResidualReport residual_check(PolyFamily family, int n, double lambda);
ResidualReport residual_check_corrected(PolyFamily family, int n, double lambda);

// One entry per family over an n-range: does the stated form hold, and if
// not, which corrected coefficients do.
struct CoefficientFinding {
    PolyFamily family;
    bool stated_passes = false;
    bool corrected_passes = false;
    double worst_relative_residual_stated = 0;
    double worst_relative_residual_corrected = 0;
    int worst_n = 0;
    std::string note; // names the family and the offending coefficient when stated fails
};

std::vector<CoefficientFinding> residual_survey(int n_lo, int n_hi,
                                                double tol = kDefaultEigenTolerance);

// 4x4 quotient of an equitable partition of EP_n / EP'_n, rows in the fixed
// role order u (apex, degree 2), v (small-triangle, degree 4), w (clique
// vertices carrying outside neighbors, degree n-5), z (pure clique vertices,
// degree n-7). Classes are discovered from the built graph by color
// refinement, not hard-coded; entries verified constant per class.
enum class QuotientKind { Adjacency, SignlessLaplacian, ComplementAdjacency };

struct QuotientMatrix {
    std::array<std::array<long long, 4>, 4> entries{};
    std::array<int, 4> class_sizes{};
    std::array<VertexSet, 4> classes{};

    exact::Poly charpoly() const; // exact integer characteristic polynomial
    double largest_eigenvalue() const;
};

// Requires n >= 10; throws PreconditionError if refinement does not produce
// exactly four classes matching the role anchors.
QuotientMatrix quotient_matrix(EpVariant variant, QuotientKind kind, int n);

// Sign verification of the two-sided root brackets at the stated evaluation
// points: pass means f(t) < 0 and g(s) < 0 < g(t), established in exact
// arithmetic. `claimed` marks n at or above the kind's stated threshold
// (adjacency 12, q-index 27, complement 55).
enum class BracketKind { Adjacency, QIndex, Complement };

struct BracketReport {
    BracketKind kind = BracketKind::Adjacency;
    int n = 0;
    double s = 0, t = 0;
    double f_t = 0, g_s = 0, g_t = 0;
    bool pass = false;
    bool claimed = false;
};

int bracket_threshold(BracketKind kind);
const char* bracket_kind_name(BracketKind kind);
BracketReport bracket_check(BracketKind kind, int n);

// The complement bracket as stated never passes; with the corrected cubic and
// the evaluation point moved from sqrt(n(n-6)) to sqrt(6(n-6)) it passes for
// exactly n >= 55, matching the stated threshold.
BracketReport bracket_check_repaired_complement(int n);

// Exact comparisons of the largest roots of the adjacency quotient
// polynomials against the adjacency bracket points s and t.
bool ep_root_above_t(int n);                 // largest root for EP_n  > t
bool ep_prime_root_between_s_and_t(int n);   // s < largest root for EP'_n < t

// Numerical side-by-side of the two families' eigenvalues and the three
// comparison chains, each required to hold with margin > 1e-6.
struct CompareRow {
    int n = 0;
    double mu_ep = 0, mu_ep_prime = 0, n_minus_7 = 0;
    double q_ep = 0, q_ep_prime = 0, two_n_minus_14 = 0;
    double mu_co_ep_prime = 0, mu_co_ep = 0, k6_bound = 0;
    bool pass_mu = false, pass_q = false, pass_complement = false;
};

inline constexpr double kCompareMargin = 1e-6;

CompareRow compare_row(int n, double tol = kDefaultEigenTolerance);

jsonio::Value to_json(const BracketReport& report);
std::string bracket_csv_header();
std::string bracket_csv_row(const BracketReport& report);
jsonio::Value to_json(const CompareRow& row);
std::string compare_csv_header();
std::string compare_csv_row(const CompareRow& row);

} // namespace specham
