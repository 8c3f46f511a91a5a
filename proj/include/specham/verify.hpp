#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specham/graph.hpp"
#include "specham/hamilton.hpp"
#include "specham/jsonio.hpp"

namespace specham {

// Identifiers for the Hamiltonicity/traceability statements this library can
// check on a concrete graph.  Each id binds a hypothesis predicate, a
// conclusion predicate, and an (optionally empty) exception set of extremal
// graphs that satisfy the hypothesis but not the conclusion.
enum class TheoremId {
  FiNi_trace,   // mu(G) >= n-2            -> traceable,   except K_{n-1} + K_1
  FiNi_ham,     // mu(G) >  n-2            -> Hamiltonian, except K_1 v (K_1 + K_{n-2})
  FiNiC_trace,  // mu(co-G) <= sqrt(n-1)   -> traceable,   except K_{n-1} + K_1
  FiNiC_ham,    // mu(co-G) <= sqrt(n-2)   -> Hamiltonian, except K_1 v (K_1 + K_{n-2})
  NiLi_mu,      // connected claw-free, mu(G) >= n-4            -> traceable, except EN_n
  NiLi_comu,    // connected claw-free, n>=24, mu(co-G) <= mu(co-EN_n) -> traceable, except EN_n
  Traceable_q,  // connected claw-free, n>=18, q(G) >= q(EN_n)  -> traceable, except EN_n
  Ham_mu,       // 2-connected claw-free, n>=33, mu(G) >= mu(EP_n)  -> Hamiltonian, except EP_n
  Ham_q,        // 2-connected claw-free, n>=51, q(G) >= q(EP_n)    -> Hamiltonian, except EP_n
  Ham_comu,     // 2-connected claw-free, n>=219, mu(co-G) <= mu(co-EP'_n) -> Hamiltonian, except EP'_n
  L_dudv,       // 2-connected closed claw-free, exists nonadjacent u,v with
                // d(u)+d(v) >= n -> Hamiltonian
  L_eG,         // closed claw-free non-Hamiltonian, n >= 2k,
                // e >= C(n-k-1,2)+C(k+2,2)+1 -> omega >= n-k   (parametrised by k)
  L_ENn,        // connected closed claw-free non-traceable, omega >= n-3 -> G = EN_n
  L_eG_ENn,     // connected claw-free, n>=6, e >= n(n-9)/2+21 -> traceable,
                // except spanning subgraphs of EN_n
  L_EPn,        // 2-connected closed claw-free non-Hamiltonian, omega >= n-6
                // -> G isomorphic to a member of the EP family
  L_eG_EPn,     // claw-free, n>=12, e >= n(n-15)/2+57 -> Hamiltonian, except
                // spanning subgraphs of EP_n / EP'_n.  The published statement
                // is inconsistent (see check()); the verdict evaluates the
                // repaired reading (2-connected hypothesis) as primary and
                // reports both literal readings in its notes.
};

// A theorem reference: an id plus the clique parameter k (used by L_eG only).
struct TheoremRef {
  TheoremId id = TheoremId::FiNi_trace;
  int k = 0;  // meaningful only for L_eG

  friend bool operator==(const TheoremRef& a, const TheoremRef& b) {
    return a.id == b.id && (a.id != TheoremId::L_eG || a.k == b.k);
  }
};

// CLI-facing names: "fini-trace", "finic-ham", "nili-mu", "l-dudv",
// "l-eg:4", "l-enn", "l-eg-enn", "l-epn", "l-eg-epn", ...
std::string theorem_ref_name(const TheoremRef& ref);
// Parses a name as produced by theorem_ref_name.  Throws ParseError on
// unknown names or a malformed/out-of-range k ("l-eg" requires ":k", k >= 1).
TheoremRef parse_theorem_ref(const std::string& name);
// Every checkable reference; L_eG is expanded to k = 3..6.
std::vector<TheoremRef> all_theorem_refs();

// Outcome of checking one statement on one graph.
//
// consistent == !hypothesis_holds || conclusion_holds || is_exception.
// resolved is false when an oracle (Hamiltonicity search or clique search)
// ran out of budget before the verdict could be decided; an unresolved
// verdict is never reported as consistent.
struct TheoremVerdict {
  TheoremRef ref;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool is_exception = false;
  bool consistent = true;
  bool resolved = true;
  // Signed distance from the binding numeric comparison to its threshold,
  // positive when the comparison holds; absent when the verdict was decided
  // structurally (precondition failure, no numeric comparison reached).
  std::optional<double> margin;
  // Evaluated quantities (n, e, mu, q, thresholds, omega, ...) in insertion
  // order, for reports.
  std::vector<std::pair<std::string, double>> details;
  // Human-readable notes: precondition failures, skipped evaluations,
  // alternate readings, budget exhaustion.
  std::vector<std::string> notes;
};

// Margin applied to spectral comparisons: "x >= t" holds when x >= t - tol,
// "x > t" requires x > t + tol, "x <= t" holds when x <= t + tol.  Borderline
// values are classified toward the hypothesis for non-strict comparisons and
// away from it for strict ones, so exact-equality extremal graphs land on the
// documented side.
inline constexpr double kDefaultVerdictTolerance = 1e-8;

// Evaluates one statement on one graph.  Structural preconditions that fail
// (connectivity, claw-freeness, closedness, n-range) yield
// hypothesis_holds = false with the reason in notes.  The conclusion oracle
// runs only when the hypothesis holds, and the exception test only when the
// conclusion also fails; skipped evaluations are noted.
TheoremVerdict check(const Graph& g, const TheoremRef& ref,
                     double tol = kDefaultVerdictTolerance,
                     long long hamilton_budget = kDefaultHamiltonBudget);

jsonio::Value to_json(const TheoremVerdict& verdict);

// Restricts which labeled graphs an exhaustive scan visits.
enum class ScanFilter {
  All,
  ClawfreeConnected,
  Clawfree2Connected,
};

std::string scan_filter_name(ScanFilter filter);
ScanFilter parse_scan_filter(const std::string& name);  // ParseError on unknown

inline constexpr int kMaxScanOrder = 7;
inline constexpr int kMaxRecordedCounterexamples = 32;

// Tally of an exhaustive scan over all labeled graphs of a fixed order.
struct ScanReport {
  TheoremRef ref;
  int n = 0;
  ScanFilter filter = ScanFilter::All;
  long long graphs_total = 0;       // all 2^C(n,2) labeled graphs
  long long graphs_considered = 0;  // graphs passing the filter
  long long hypothesis_hits = 0;    // considered graphs whose hypothesis holds
  long long conclusion_hits = 0;    // hypothesis hits whose conclusion holds
  long long exception_hits = 0;     // hypothesis hits saved by the exception set
  long long counterexamples = 0;    // hypothesis hits that are neither
  long long unresolved = 0;         // verdicts lost to oracle budgets
  std::vector<std::string> counterexample_graph6;  // first few, as graph6
};

// Visits every labeled graph on n vertices (n <= 7) in deterministic mask
// order, applies the filter, and tallies verdicts.  The four spectral ids
// with closed-form thresholds (FiNi_trace/ham, FiNiC_trace/ham) are
// classified with exact integer characteristic-polynomial arithmetic, so the
// scan is an exact oracle rather than a floating-point approximation; the
// remaining ids delegate to check().
ScanReport exhaustive_scan(int n, const TheoremRef& ref,
                           ScanFilter filter = ScanFilter::All);

jsonio::Value to_json(const ScanReport& report);
std::string scan_csv_header();
std::string scan_csv_row(const ScanReport& report);

// Instance generators for randomized testing.
enum class RandomMode {
  LineGraph,         // line graph of a random connected graph with n edges
  ClosurePerturbed,  // line graph with random edge deletions that keep the
                     // graph connected and claw-free; even seeds additionally
                     // replace the result by its closure
};

std::string random_mode_name(RandomMode mode);
RandomMode parse_random_mode(const std::string& name);  // ParseError on unknown

// Deterministic per (n, seed, mode); always connected and claw-free with
// exactly n vertices.  Requires n >= 4.
Graph random_clawfree(int n, std::uint64_t seed, RandomMode mode);

}  // namespace specham
