#include "specham/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "specham/jsonio.hpp"

namespace specham {

using exact::Int;
using exact::Poly;
using exact::Rational;

const char* family_name(PolyFamily family) {
    switch (family) {
        case PolyFamily::AdjEP: return "AdjEP";
        case PolyFamily::AdjEPPrime: return "AdjEPPrime";
        case PolyFamily::QEP: return "QEP";
        case PolyFamily::QEPPrime: return "QEPPrime";
        case PolyFamily::CoAdjEP: return "CoAdjEP";
        case PolyFamily::CoAdjEPPrime: return "CoAdjEPPrime";
    }
    return "?";
}

namespace {

void require_family_n(int n) {
    if (n < 10) {
        throw PreconditionError("closed-form coefficients need n >= 10, got " +
                                std::to_string(n));
    }
}

} // namespace

exact::Poly family_coefficients(PolyFamily family, int n) {
    require_family_n(n);
    const long long N = n;
    switch (family) {
        case PolyFamily::AdjEP:
            return exact::make_poly({N - 7, 5 * N - 42, N - 12, -(N - 6), 1});
        case PolyFamily::AdjEPPrime:
            return exact::make_poly({2 * N - 14, 6 * N - 48, N - 13, -(N - 6), 1});
        case PolyFamily::QEP:
            return exact::make_poly({22 * N * N - 298 * N + 960,
                                     -(16 * N * N - 179 * N + 432), 2 * N * N - 2 * N - 73,
                                     -(3 * N - 12), 1});
        case PolyFamily::QEPPrime:
            return exact::make_poly({20 * N * N - 276 * N + 928,
                                     -(16 * N * N - 182 * N + 468), 2 * N * N - 2 * N - 72,
                                     -(3 * N - 12), 1});
        case PolyFamily::CoAdjEP:
            return exact::make_poly({-(6 * N - 46), -(6 * N - 50), -2, 1});
        case PolyFamily::CoAdjEPPrime:
            return exact::make_poly({4 * N - 32, -(2 * N - 14), -(6 * N - 41), -2, 1});
    }
    throw PreconditionError("family_coefficients: unhandled family");
}

exact::Poly family_coefficients_corrected(PolyFamily family, int n) {
    require_family_n(n);
    const long long N = n;
    switch (family) {
        case PolyFamily::QEPPrime:
            // Constant term: the stated form ends "... - 4n + 32"; the
            // construction requires "+ 4n - 32" (shift of 8n - 64).
            return exact::make_poly({20 * N * N - 268 * N + 864,
                                     -(16 * N * N - 182 * N + 468), 2 * N * N - 2 * N - 72,
                                     -(3 * N - 12), 1});
        case PolyFamily::CoAdjEP:
            // Linear coefficient: stated -(6n-50); the construction requires
            // -(6n-42) (shift of 8).
            return exact::make_poly({-(6 * N - 46), -(6 * N - 42), -2, 1});
        default:
            return family_coefficients(family, n);
    }
}

bool family_has_correction(PolyFamily family) {
    return family == PolyFamily::QEPPrime || family == PolyFamily::CoAdjEP;
}

namespace {

// Kahan-compensated sum of the monomials c_i x^i in long double.
double eval_compensated(const Poly& coeffs, double x) {
    long double sum = 0, comp = 0, power = 1;
    for (const Int& c : coeffs) {
        long double term = c.convert_to<long double>() * power;
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        power *= x;
    }
    return static_cast<double>(sum);
}

double eval_monomial_scale(const Poly& coeffs, double x) {
    long double scale = 0, power = 1;
    for (const Int& c : coeffs) {
        scale += std::fabs(c.convert_to<long double>() * power);
        power *= x;
    }
    return static_cast<double>(scale);
}

ResidualReport residual_from(const Poly& coeffs, double lambda) {
    ResidualReport report;
    report.residual = std::fabs(eval_compensated(coeffs, lambda));
    double scale = eval_monomial_scale(coeffs, lambda);
    report.relative_residual = scale > 0 ? report.residual / scale : report.residual;
    report.pass = report.relative_residual <= 1e-6;
    return report;
}

} // namespace

double poly_eval(PolyFamily family, int n, double x) {
    return eval_compensated(family_coefficients(family, n), x);
}

double family_lambda(PolyFamily family, int n, double tol) {
    EpVariant variant;
    switch (family) {
        case PolyFamily::AdjEP:
        case PolyFamily::QEP:
        case PolyFamily::CoAdjEP: variant = EpVariant::Standard; break;
        default: variant = EpVariant::Prime; break;
    }
    Graph g = build_ep(n, variant);
    SymMatrix m;
    switch (family) {
        case PolyFamily::AdjEP:
        case PolyFamily::AdjEPPrime: m = adjacency_matrix(g); break;
        case PolyFamily::QEP:
        case PolyFamily::QEPPrime: m = signless_laplacian_matrix(g); break;
        case PolyFamily::CoAdjEP:
        case PolyFamily::CoAdjEPPrime: m = adjacency_matrix(g.complement()); break;
    }
    return largest_eigenvalue(m, tol).value;
}

ResidualReport residual_check(PolyFamily family, int n, double lambda) {
    return residual_from(family_coefficients(family, n), lambda);
}

ResidualReport residual_check_corrected(PolyFamily family, int n, double lambda) {
    return residual_from(family_coefficients_corrected(family, n), lambda);
}

std::vector<CoefficientFinding> residual_survey(int n_lo, int n_hi, double tol) {
    if (n_lo < 10 || n_hi < n_lo) {
        throw PreconditionError("residual_survey: need 10 <= n_lo <= n_hi");
    }
    std::vector<CoefficientFinding> findings;
    for (PolyFamily family : kAllPolyFamilies) {
        CoefficientFinding finding;
        finding.family = family;
        finding.stated_passes = true;
        finding.corrected_passes = true;
        for (int n = n_lo; n <= n_hi; ++n) {
            double lambda = family_lambda(family, n, tol);
            ResidualReport stated = residual_check(family, n, lambda);
            ResidualReport corrected = residual_check_corrected(family, n, lambda);
            if (stated.relative_residual >= finding.worst_relative_residual_stated) {
                finding.worst_relative_residual_stated = stated.relative_residual;
                finding.worst_n = n;
            }
            finding.worst_relative_residual_corrected =
                std::max(finding.worst_relative_residual_corrected,
                         corrected.relative_residual);
            finding.stated_passes = finding.stated_passes && stated.pass;
            finding.corrected_passes = finding.corrected_passes && corrected.pass;
        }
        if (!finding.stated_passes) {
            const Poly stated = family_coefficients(family, finding.worst_n);
            const Poly corrected = family_coefficients_corrected(family, finding.worst_n);
            std::string diffs;
            for (std::size_t i = 0; i < std::max(stated.size(), corrected.size()); ++i) {
                Int s = i < stated.size() ? stated[i] : Int(0);
                Int c = i < corrected.size() ? corrected[i] : Int(0);
                if (s != c) {
                    if (!diffs.empty()) diffs += "; ";
                    diffs += "x^" + std::to_string(i) + " stated " + s.str() +
                             " vs corrected " + c.str();
                }
            }
            finding.note = std::string(family_name(family)) +
                           ": stated closed form does not annihilate the constructed "
                           "eigenvalue (worst relative residual " +
                           jsonio::format_double(finding.worst_relative_residual_stated) +
                           " at n=" + std::to_string(finding.worst_n) + "); at that n: " +
                           diffs + (finding.corrected_passes
                                        ? "; corrected form passes"
                                        : "; corrected form also fails");
        }
        findings.push_back(std::move(finding));
    }
    return findings;
}

namespace {

// Single-graph color refinement to the coarsest equitable partition that
// refines the degree partition.
std::vector<int> refine_classes(const Graph& g) {
    std::vector<int> color(g.order());
    for (int v = 0; v < g.order(); ++v) color[v] = g.degree(v);
    int classes = -1;
    for (int round = 0; round <= g.order(); ++round) {
        using Signature = std::pair<int, std::vector<int>>;
        std::vector<Signature> sig(g.order());
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<Signature, int> ids;
        for (const Signature& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (int v = 0; v < g.order(); ++v) color[v] = ids[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

} // namespace

QuotientMatrix quotient_matrix(EpVariant variant, QuotientKind kind, int n) {
    if (n < 10) {
        throw PreconditionError("quotient_matrix: need n >= 10, got " + std::to_string(n));
    }
    Graph g = build_ep(n, variant);
    std::vector<int> color = refine_classes(g);
    std::map<int, VertexSet> by_color;
    for (int v = 0; v < g.order(); ++v) by_color[color[v]].push_back(v);
    if (by_color.size() != 4) {
        throw PreconditionError("quotient_matrix: refinement produced " +
                                std::to_string(by_color.size()) +
                                " classes, expected 4 (construction bug)");
    }
    // Role anchors fixed by the documented labeling of build_ep.
    const std::array<int, 4> anchors = variant == EpVariant::Standard
                                           ? std::array<int, 4>{6, 0, 3, 9}
                                           : std::array<int, 4>{7, 1, 0, 6};
    QuotientMatrix out;
    std::array<int, 4> role_color{};
    for (int r = 0; r < 4; ++r) {
        role_color[r] = color[anchors[r]];
        out.classes[r] = by_color.at(role_color[r]);
        out.class_sizes[r] = static_cast<int>(out.classes[r].size());
    }
    for (int r = 0; r < 4; ++r) {
        for (int s = r + 1; s < 4; ++s) {
            if (role_color[r] == role_color[s]) {
                throw PreconditionError("quotient_matrix: role anchors collapsed into one "
                                        "class (construction bug)");
            }
        }
    }
    const Graph target = kind == QuotientKind::ComplementAdjacency ? g.complement() : g;
    for (int r = 0; r < 4; ++r) {
        std::array<long long, 4> counts{};
        bool first = true;
        for (int v : out.classes[r]) {
            std::array<long long, 4> mine{};
            for (int u : target.neighbors(v)) {
                for (int s = 0; s < 4; ++s) {
                    if (color[u] == role_color[s]) {
                        ++mine[s];
                        break;
                    }
                }
            }
            if (first) {
                counts = mine;
                first = false;
            } else if (counts != mine) {
                throw PreconditionError("quotient_matrix: partition is not equitable "
                                        "(construction bug)");
            }
        }
        for (int s = 0; s < 4; ++s) out.entries[r][s] = counts[s];
    }
    if (kind == QuotientKind::SignlessLaplacian) {
        for (int r = 0; r < 4; ++r) {
            long long degree = 0;
            for (int s = 0; s < 4; ++s) degree += out.entries[r][s];
            out.entries[r][r] += degree;
        }
    }
    return out;
}

exact::Poly QuotientMatrix::charpoly() const {
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) m[r][s] = entries[r][s];
    return exact::charpoly(m);
}

double QuotientMatrix::largest_eigenvalue() const {
    return static_cast<double>(exact::largest_root_newton(charpoly()).estimate);
}

int bracket_threshold(BracketKind kind) {
    switch (kind) {
        case BracketKind::Adjacency: return 12;
        case BracketKind::QIndex: return 27;
        case BracketKind::Complement: return 55;
    }
    return 0;
}

const char* bracket_kind_name(BracketKind kind) {
    switch (kind) {
        case BracketKind::Adjacency: return "adjacency";
        case BracketKind::QIndex: return "q_index";
        case BracketKind::Complement: return "complement";
    }
    return "?";
}

namespace {

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

BracketReport complement_bracket(int n, const Poly& f, const Poly& g, long long radicand,
                                 bool claimed) {
    BracketReport report;
    report.kind = BracketKind::Complement;
    report.n = n;
    report.claimed = claimed;
    const Int d(radicand);
    // s = sqrt(d), t = s + 1.3 = (13 + 10 sqrt(d)) / 10.
    int f_t = exact::sign_at_quadratic(f, Int(13), Int(10), d, Int(10));
    int g_s = exact::sign_at_quadratic(g, Int(0), Int(1), d, Int(1));
    int g_t = exact::sign_at_quadratic(g, Int(13), Int(10), d, Int(10));
    report.pass = f_t < 0 && g_s < 0 && g_t > 0;
    const double s_num = std::sqrt(static_cast<double>(radicand));
    const double t_num = s_num + 1.3;
    report.s = s_num;
    report.t = t_num;
    report.f_t = eval_compensated(f, t_num);
    report.g_s = eval_compensated(g, s_num);
    report.g_t = eval_compensated(g, t_num);
    return report;
}

} // namespace

BracketReport bracket_check(BracketKind kind, int n) {
    require_family_n(n);
    const long long N = n;
    const bool claimed = n >= bracket_threshold(kind);
    if (kind == BracketKind::Complement) {
        return complement_bracket(n, family_coefficients(PolyFamily::CoAdjEP, n),
                                  family_coefficients(PolyFamily::CoAdjEPPrime, n),
                                  N * (N - 6), claimed);
    }
    BracketReport report;
    report.kind = kind;
    report.n = n;
    report.claimed = claimed;
    Poly f, g;
    Rational s, t;
    if (kind == BracketKind::Adjacency) {
        f = family_coefficients(PolyFamily::AdjEP, n);
        g = family_coefficients(PolyFamily::AdjEPPrime, n);
        const long long m = N - 7;
        s = Rational(m * m * m + 4, m * m);
        t = Rational(m * m * m + 7, m * m);
    } else {
        f = family_coefficients(PolyFamily::QEP, n);
        g = family_coefficients(PolyFamily::QEPPrime, n);
        const long long m = N - 7;
        s = Rational(2 * N * m + 4, N);
        t = Rational(2 * m * m + 6, m);
    }
    report.pass = exact::sign_at(f, t) < 0 && exact::sign_at(g, s) < 0 &&
                  exact::sign_at(g, t) > 0;
    report.s = rational_to_double(s);
    report.t = rational_to_double(t);
    report.f_t = rational_to_double(exact::eval(f, t));
    report.g_s = rational_to_double(exact::eval(g, s));
    report.g_t = rational_to_double(exact::eval(g, t));
    return report;
}

BracketReport bracket_check_repaired_complement(int n) {
    require_family_n(n);
    const long long N = n;
    return complement_bracket(n, family_coefficients_corrected(PolyFamily::CoAdjEP, n),
                              family_coefficients_corrected(PolyFamily::CoAdjEPPrime, n),
                              6 * (N - 6), n >= bracket_threshold(BracketKind::Complement));
}

namespace {

Rational adjacency_point(int n, long long offset) {
    const long long m = static_cast<long long>(n) - 7;
    return Rational(m * m * m + offset, m * m);
}

} // namespace

bool ep_root_above_t(int n) {
    Poly p = quotient_matrix(EpVariant::Standard, QuotientKind::Adjacency, n).charpoly();
    return exact::largest_root_exceeds(p, adjacency_point(n, 7));
}

bool ep_prime_root_between_s_and_t(int n) {
    Poly p = quotient_matrix(EpVariant::Prime, QuotientKind::Adjacency, n).charpoly();
    return exact::largest_root_exceeds(p, adjacency_point(n, 4)) &&
           !exact::largest_root_reaches(p, adjacency_point(n, 7));
}

CompareRow compare_row(int n, double tol) {
    if (n < 10) throw PreconditionError("compare_row: need n >= 10");
    CompareRow row;
    row.n = n;
    Graph ep = build_ep(n, EpVariant::Standard);
    Graph epp = build_ep(n, EpVariant::Prime);
    row.mu_ep = largest_eigenvalue(adjacency_matrix(ep), tol).value;
    row.mu_ep_prime = largest_eigenvalue(adjacency_matrix(epp), tol).value;
    row.q_ep = largest_eigenvalue(signless_laplacian_matrix(ep), tol).value;
    row.q_ep_prime = largest_eigenvalue(signless_laplacian_matrix(epp), tol).value;
    row.mu_co_ep = largest_eigenvalue(adjacency_matrix(ep.complement()), tol).value;
    row.mu_co_ep_prime = largest_eigenvalue(adjacency_matrix(epp.complement()), tol).value;
    row.n_minus_7 = n - 7;
    row.two_n_minus_14 = 2.0 * n - 14;
    row.k6_bound = (5.0 + std::sqrt(24.0 * n - 119.0)) / 2.0;
    row.pass_mu = row.mu_ep > row.mu_ep_prime + kCompareMargin &&
                  row.mu_ep_prime > row.n_minus_7 + kCompareMargin;
    row.pass_q = row.q_ep > row.q_ep_prime + kCompareMargin &&
                 row.q_ep_prime > row.two_n_minus_14 + kCompareMargin;
    row.pass_complement = row.mu_co_ep_prime < row.mu_co_ep - kCompareMargin &&
                          row.mu_co_ep < row.k6_bound - kCompareMargin;
    return row;
}

jsonio::Value to_json(const BracketReport& report) {
    jsonio::Value doc = jsonio::Value::object();
    doc.set("n", report.n);
    doc.set("kind", bracket_kind_name(report.kind));
    doc.set("s", report.s);
    doc.set("t", report.t);
    doc.set("f_t", report.f_t);
    doc.set("g_s", report.g_s);
    doc.set("g_t", report.g_t);
    doc.set("pass", report.pass);
    doc.set("claimed", report.claimed);
    return doc;
}

std::string bracket_csv_header() { return "n,kind,s,t,f_t,g_s,g_t,pass"; }

std::string bracket_csv_row(const BracketReport& report) {
    std::string out = std::to_string(report.n);
    out += ",";
    out += bracket_kind_name(report.kind);
    for (double v : {report.s, report.t, report.f_t, report.g_s, report.g_t}) {
        out += ",";
        out += jsonio::format_double(v);
    }
    out += report.pass ? ",true" : ",false";
    return out;
}

jsonio::Value to_json(const CompareRow& row) {
    jsonio::Value doc = jsonio::Value::object();
    doc.set("n", row.n);
    doc.set("mu_ep", row.mu_ep);
    doc.set("mu_ep_prime", row.mu_ep_prime);
    doc.set("n_minus_7", row.n_minus_7);
    doc.set("q_ep", row.q_ep);
    doc.set("q_ep_prime", row.q_ep_prime);
    doc.set("two_n_minus_14", row.two_n_minus_14);
    doc.set("mu_co_ep_prime", row.mu_co_ep_prime);
    doc.set("mu_co_ep", row.mu_co_ep);
    doc.set("k6_bound", row.k6_bound);
    doc.set("pass_mu", row.pass_mu);
    doc.set("pass_q", row.pass_q);
    doc.set("pass_complement", row.pass_complement);
    return doc;
}

std::string compare_csv_header() {
    return "n,mu_ep,mu_ep_prime,n_minus_7,q_ep,q_ep_prime,two_n_minus_14,"
           "mu_co_ep_prime,mu_co_ep,k6_bound,pass_mu,pass_q,pass_complement";
}

std::string compare_csv_row(const CompareRow& row) {
    std::string out = std::to_string(row.n);
    for (double v : {row.mu_ep, row.mu_ep_prime, row.n_minus_7, row.q_ep, row.q_ep_prime,
                     row.two_n_minus_14, row.mu_co_ep_prime, row.mu_co_ep, row.k6_bound}) {
        out += ",";
        out += jsonio::format_double(v);
    }
    for (bool b : {row.pass_mu, row.pass_q, row.pass_complement}) {
        out += b ? ",true" : ",false";
    }
    return out;
}

} // namespace specham
