// Command-line front end: builds extremal graphs, reports spectral data,
// runs closure/Hamiltonicity oracles, checks the theorem statements on
// graphs, scans small orders exhaustively, and reproduces the comparison
// tables and sign brackets.  All numeric output is printed at 12 significant
// digits so identical invocations produce byte-identical artifacts.
//
// Exit codes: 0 success; 2 malformed arguments or inputs; 3 precondition
// violations; 4 a counterexample / contradiction finding; 5 an oracle budget
// was exhausted before the answer was decided.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "specham/charpoly.hpp"
#include "specham/clawfree.hpp"
#include "specham/codec.hpp"
#include "specham/errors.hpp"
#include "specham/extremal.hpp"
#include "specham/graph.hpp"
#include "specham/hamilton.hpp"
#include "specham/jsonio.hpp"
#include "specham/spectral.hpp"
#include "specham/verify.hpp"

namespace {

using namespace specham;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitFinding = 4;
constexpr int kExitBudget = 5;

struct Range {
    int lo = 0;
    int hi = 0;
};

int parse_positive_int(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(std::string("malformed ") + what + " '" + text + "'");
    }
    long long value = 0;
    for (char c : text) {
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw ParseError(std::string(what) + " out of range: '" + text + "'");
    }
    return static_cast<int>(value);
}

// Inclusive "a..b"; a bare "a" means a..a.
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_positive_int(text, "range bound");
        return {v, v};
    }
    Range r{parse_positive_int(text.substr(0, dots), "range bound"),
            parse_positive_int(text.substr(dots + 2), "range bound")};
    if (r.lo > r.hi) throw ParseError("empty range '" + text + "'");
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file '" + out_path + "'");
    out << content;
}

// graph6 payload bytes all lie in 63..126, so any byte below that range
// (digits, spaces, '#', '=') pins the file as an edge list.
Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    if (format == "edgelist") return parse_edgelist(text);
    std::string line;
    std::size_t start = 0;
    while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
    std::size_t end = start;
    while (end < text.size() && text[end] != '\n' && text[end] != '\r') ++end;
    line = text.substr(start, end - start);
    if (format == "graph6") return parse_graph6(line);
    // auto
    bool looks_graph6 = !line.empty();
    for (char c : line) {
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126) {
            looks_graph6 = false;
            break;
        }
    }
    return looks_graph6 ? parse_graph6(line) : parse_edgelist(text);
}

long long resolve_budget(const std::optional<long long>& flag) {
    if (flag) {
        if (*flag <= 0) throw ParseError("--budget must be a positive integer");
        return *flag;
    }
    if (const char* env = std::getenv("SPECHAM_BUDGET")) {
        const std::string text = env;
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("SPECHAM_BUDGET must be a positive integer, got '" + text + "'");
        }
        long long value = 0;
        for (char c : text) {
            value = value * 10 + (c - '0');
            if (value > 4'000'000'000'000'000'000LL) {
                throw ParseError("SPECHAM_BUDGET out of range: '" + text + "'");
            }
        }
        if (value <= 0) throw ParseError("SPECHAM_BUDGET must be positive");
        return value;
    }
    return kDefaultHamiltonBudget;
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::string out = "|";
    for (const std::string& cell : header) out += " " + cell + " |";
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : rows) {
        out += "|";
        for (const std::string& cell : row) out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& row) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : row) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string spec;
    std::string out;
};

int run_build(const BuildArgs& args) {
    const Graph g = build_extremal(parse_extremal_spec(args.spec));
    write_output(args.out, emit_graph6(g) + "\n");
    return kExitOk;
}

struct ReportArgs {
    std::string in;
    std::string in_format = "auto";
    std::string out;
    double tol = kDefaultEigenTolerance;
};

int run_report(const ReportArgs& args) {
    const Graph g = load_graph(args.in, args.in_format);
    write_output(args.out, to_json(spectral_report(g, args.tol)));
    return kExitOk;
}

struct ClosureArgs {
    std::string in;
    std::string in_format = "auto";
    std::string out;
    std::string out_graph;
};

int run_closure(const ClosureArgs& args) {
    const Graph g = load_graph(args.in, args.in_format);
    const ClosureResult result = closure(g);
    write_output(args.out, to_json(result.trace));
    if (!args.out_graph.empty()) {
        write_output(args.out_graph, emit_graph6(result.graph) + "\n");
    }
    return kExitOk;
}

struct HamiltonArgs {
    std::string in;
    std::string in_format = "auto";
    std::string out;
    std::string kind = "cycle";
    std::optional<long long> budget;
};

int run_hamilton(const HamiltonArgs& args) {
    const Graph g = load_graph(args.in, args.in_format);
    HamiltonKind kind;
    if (args.kind == "cycle") {
        kind = HamiltonKind::Cycle;
    } else if (args.kind == "path") {
        kind = HamiltonKind::Path;
    } else {
        throw ParseError("unknown --kind '" + args.kind + "' (expected cycle or path)");
    }
    const HamiltonResult result = hamilton(g, kind, resolve_budget(args.budget));
    write_output(args.out, to_json(result));
    return result.status == HamiltonStatus::BudgetExceeded ? kExitBudget : kExitOk;
}

struct VerifyArgs {
    std::string in;
    std::string in_format = "auto";
    std::string spec;
    std::vector<std::string> ids;
    std::string out;
    double tol = kDefaultVerdictTolerance;
    std::optional<long long> budget;
};

std::vector<TheoremRef> expand_ids(const std::vector<std::string>& names) {
    if (names.empty()) return all_theorem_refs();
    std::vector<TheoremRef> refs;
    for (const std::string& name : names) {
        if (name == "all") {
            for (const TheoremRef& ref : all_theorem_refs()) refs.push_back(ref);
        } else {
            refs.push_back(parse_theorem_ref(name));
        }
    }
    return refs;
}

int run_verify(const VerifyArgs& args) {
    if (args.in.empty() == args.spec.empty()) {
        throw ParseError("verify needs exactly one of --in or --spec");
    }
    const Graph g = args.in.empty() ? build_extremal(parse_extremal_spec(args.spec))
                                    : load_graph(args.in, args.in_format);
    const long long budget = resolve_budget(args.budget);
    bool found_counterexample = false;
    bool found_unresolved = false;
    jsonio::Value doc = jsonio::Value::object();
    doc.set("graph", emit_graph6(g));
    doc.set("n", g.order());
    doc.set("e", g.edge_count());
    jsonio::Value verdicts = jsonio::Value::array();
    for (const TheoremRef& ref : expand_ids(args.ids)) {
        const TheoremVerdict v = check(g, ref, args.tol, budget);
        if (!v.resolved) {
            found_unresolved = true;
        } else if (!v.consistent) {
            found_counterexample = true;
        }
        verdicts.push(to_json(v));
    }
    doc.set("verdicts", std::move(verdicts));
    write_output(args.out, doc.dump());
    if (found_counterexample) return kExitFinding;
    if (found_unresolved) return kExitBudget;
    return kExitOk;
}

struct ScanArgs {
    std::string id;
    int n = 0;
    std::string filter = "all";
    std::string format = "json";
    std::string out;
    std::optional<long long> budget;
    long long random_count = 0; // 0 = exhaustive
    std::uint64_t seed = 1;
    std::string mode = "line_graph";
};

int scan_exit_code(long long counterexamples, long long unresolved) {
    if (counterexamples > 0) return kExitFinding;
    if (unresolved > 0) return kExitBudget;
    return kExitOk;
}

int run_scan(const ScanArgs& args) {
    const TheoremRef ref = parse_theorem_ref(args.id);
    if (args.format != "json" && args.format != "csv") {
        throw ParseError("scan supports --format json or csv");
    }
    if (args.random_count == 0) {
        const ScanReport report = exhaustive_scan(args.n, ref, parse_scan_filter(args.filter));
        if (args.format == "csv") {
            write_output(args.out, scan_csv_header() + "\n" + scan_csv_row(report) + "\n");
        } else {
            write_output(args.out, to_json(report).dump());
        }
        return scan_exit_code(report.counterexamples, report.unresolved);
    }
    // Randomized scan: check the statement on random connected claw-free
    // instances generated from consecutive seeds.
    const RandomMode mode = parse_random_mode(args.mode);
    const long long budget = resolve_budget(args.budget);
    long long hypothesis_hits = 0, conclusion_hits = 0, exception_hits = 0;
    long long counterexamples = 0, unresolved = 0;
    std::vector<std::string> counterexample_graph6;
    for (long long i = 0; i < args.random_count; ++i) {
        const Graph g = random_clawfree(args.n, args.seed + static_cast<std::uint64_t>(i), mode);
        const TheoremVerdict v = check(g, ref, kDefaultVerdictTolerance, budget);
        if (!v.resolved) {
            ++unresolved;
            continue;
        }
        if (!v.hypothesis_holds) continue;
        ++hypothesis_hits;
        if (v.conclusion_holds) {
            ++conclusion_hits;
        } else if (v.is_exception) {
            ++exception_hits;
        } else {
            ++counterexamples;
            if (static_cast<int>(counterexample_graph6.size()) < kMaxRecordedCounterexamples) {
                counterexample_graph6.push_back(emit_graph6(g));
            }
        }
    }
    if (args.format == "csv") {
        std::string body = "n,id,mode,seed,instances,hypothesis_hits,conclusion_hits,"
                           "exception_hits,counterexamples,unresolved\n";
        body += std::to_string(args.n) + "," + theorem_ref_name(ref) + "," +
                random_mode_name(mode) + "," + std::to_string(args.seed);
        for (long long value : {args.random_count, hypothesis_hits, conclusion_hits,
                                exception_hits, counterexamples, unresolved}) {
            body += "," + std::to_string(value);
        }
        body += "\n";
        write_output(args.out, body);
    } else {
        jsonio::Value doc = jsonio::Value::object();
        doc.set("id", theorem_ref_name(ref));
        doc.set("n", args.n);
        doc.set("mode", random_mode_name(mode));
        doc.set("seed", static_cast<long long>(args.seed));
        doc.set("instances", args.random_count);
        doc.set("hypothesis_hits", hypothesis_hits);
        doc.set("conclusion_hits", conclusion_hits);
        doc.set("exception_hits", exception_hits);
        doc.set("counterexamples", counterexamples);
        doc.set("unresolved", unresolved);
        jsonio::Value examples = jsonio::Value::array();
        for (const std::string& g6 : counterexample_graph6) examples.push(g6);
        doc.set("counterexample_graph6", std::move(examples));
        write_output(args.out, doc.dump());
    }
    return scan_exit_code(counterexamples, unresolved);
}

struct TableArgs {
    std::string range = "10..60";
    std::string kind = "all";
    std::string format = "csv";
    std::string out;
};

int run_table(const TableArgs& args) {
    const Range range = parse_range(args.range);
    if (args.kind != "all" && args.kind != "mu" && args.kind != "q" &&
        args.kind != "complement") {
        throw ParseError("unknown --kind '" + args.kind +
                         "' (expected all, mu, q, or complement)");
    }
    std::vector<CompareRow> rows;
    rows.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
    for (int n = range.lo; n <= range.hi; ++n) rows.push_back(compare_row(n));
    // --kind selects which comparison chains gate the exit status; the table
    // itself always carries all columns.
    bool all_pass = true;
    for (const CompareRow& row : rows) {
        if (args.kind == "all" || args.kind == "mu") all_pass = all_pass && row.pass_mu;
        if (args.kind == "all" || args.kind == "q") all_pass = all_pass && row.pass_q;
        if (args.kind == "all" || args.kind == "complement") {
            all_pass = all_pass && row.pass_complement;
        }
    }
    if (args.format == "csv") {
        std::string body = compare_csv_header() + "\n";
        for (const CompareRow& row : rows) body += compare_csv_row(row) + "\n";
        write_output(args.out, body);
    } else if (args.format == "md") {
        std::vector<std::vector<std::string>> cells;
        for (const CompareRow& row : rows) cells.push_back(split_csv(compare_csv_row(row)));
        write_output(args.out, md_table(split_csv(compare_csv_header()), cells));
    } else if (args.format == "json") {
        jsonio::Value doc = jsonio::Value::array();
        for (const CompareRow& row : rows) doc.push(to_json(row));
        write_output(args.out, doc.dump());
    } else {
        throw ParseError("table supports --format csv, md, or json");
    }
    return all_pass ? kExitOk : kExitFinding;
}

struct BracketsArgs {
    std::string kind = "all";
    std::string range; // empty = each kind's claimed threshold .. 200
    std::string format = "csv";
    std::string out;
};

int run_brackets(const BracketsArgs& args) {
    std::vector<std::string> kinds;
    if (args.kind == "all") {
        kinds = {"adjacency", "q_index", "complement"};
    } else if (args.kind == "adjacency" || args.kind == "q_index" ||
               args.kind == "complement" || args.kind == "repaired_complement") {
        kinds = {args.kind};
    } else {
        throw ParseError("unknown --kind '" + args.kind +
                         "' (expected adjacency, q_index, complement, "
                         "repaired_complement, or all)");
    }
    std::vector<BracketReport> reports;
    bool claimed_failure = false;
    for (const std::string& kind_name : kinds) {
        const bool repaired = kind_name == "repaired_complement";
        const BracketKind kind = repaired ? BracketKind::Complement
                                          : [&] {
                                                if (kind_name == "adjacency") return BracketKind::Adjacency;
                                                if (kind_name == "q_index") return BracketKind::QIndex;
                                                return BracketKind::Complement;
                                            }();
        Range range{bracket_threshold(kind), 200};
        if (!args.range.empty()) range = parse_range(args.range);
        for (int n = range.lo; n <= range.hi; ++n) {
            const BracketReport report =
                repaired ? bracket_check_repaired_complement(n) : bracket_check(kind, n);
            if (report.claimed && !report.pass) claimed_failure = true;
            reports.push_back(report);
        }
    }
    if (args.format == "csv") {
        std::string body = bracket_csv_header() + "\n";
        for (const BracketReport& report : reports) body += bracket_csv_row(report) + "\n";
        write_output(args.out, body);
    } else if (args.format == "md") {
        std::vector<std::vector<std::string>> cells;
        for (const BracketReport& report : reports) {
            cells.push_back(split_csv(bracket_csv_row(report)));
        }
        write_output(args.out, md_table(split_csv(bracket_csv_header()), cells));
    } else if (args.format == "json") {
        jsonio::Value doc = jsonio::Value::array();
        for (const BracketReport& report : reports) doc.push(to_json(report));
        write_output(args.out, doc.dump());
    } else {
        throw ParseError("brackets supports --format csv, md, or json");
    }
    return claimed_failure ? kExitFinding : kExitOk;
}

struct FamilyArgs {
    int n = 0;
    std::string format = "json";
    std::string out;
    std::optional<long long> budget;
};

int run_family(const FamilyArgs& args) {
    const std::vector<Graph> members = ep_family(args.n);
    const long long budget = resolve_budget(args.budget);
    bool budget_hit = false;

    struct Summary {
        int index;
        std::string graph6;
        long long e;
        int omega;
        bool two_connected;
        bool closed;
        std::string hamilton_status;
    };
    std::vector<Summary> summaries;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Graph& g = members[i];
        const HamiltonResult ham = hamilton(g, HamiltonKind::Cycle, budget);
        std::string status = "absent";
        if (ham.status == HamiltonStatus::Found) status = "found";
        if (ham.status == HamiltonStatus::BudgetExceeded) {
            status = "budget_exceeded";
            budget_hit = true;
        }
        summaries.push_back(Summary{static_cast<int>(i), emit_graph6(g), g.edge_count(),
                                    clique_number(g), g.is_two_connected(), is_closed(g),
                                    status});
    }
    if (args.format == "json") {
        jsonio::Value doc = jsonio::Value::object();
        doc.set("n", args.n);
        doc.set("count", static_cast<long long>(members.size()));
        jsonio::Value arr = jsonio::Value::array();
        for (const Summary& s : summaries) {
            jsonio::Value m = jsonio::Value::object();
            m.set("index", s.index);
            m.set("graph6", s.graph6);
            m.set("e", s.e);
            m.set("omega", s.omega);
            m.set("two_connected", s.two_connected);
            m.set("closed", s.closed);
            m.set("hamilton", s.hamilton_status);
            arr.push(std::move(m));
        }
        doc.set("members", std::move(arr));
        write_output(args.out, doc.dump());
    } else if (args.format == "csv" || args.format == "md") {
        const std::vector<std::string> header = {"index",  "graph6", "e",       "omega",
                                                 "two_connected", "closed", "hamilton"};
        std::vector<std::vector<std::string>> cells;
        for (const Summary& s : summaries) {
            cells.push_back({std::to_string(s.index), s.graph6, std::to_string(s.e),
                             std::to_string(s.omega), s.two_connected ? "true" : "false",
                             s.closed ? "true" : "false", s.hamilton_status});
        }
        if (args.format == "md") {
            write_output(args.out, md_table(header, cells));
        } else {
            std::string body;
            for (std::size_t i = 0; i < header.size(); ++i) {
                body += (i ? "," : "") + header[i];
            }
            body += "\n";
            for (const auto& row : cells) {
                for (std::size_t i = 0; i < row.size(); ++i) body += (i ? "," : "") + row[i];
                body += "\n";
            }
            write_output(args.out, body);
        }
    } else {
        throw ParseError("family supports --format json, csv, or md");
    }
    return budget_hit ? kExitBudget : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral Hamiltonicity toolkit for claw-free graphs"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "construct an extremal graph, emit graph6");
    build->add_option("--spec", build_args.spec,
                      "graph spec: en:N, ep:N, ep':N, brousek:X,Y,Z (X in {T,3,4,...}), family:N/I")
        ->required();
    build->add_option("--out", build_args.out, "output path (default stdout)");

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "spectral report for a graph");
    report->add_option("--in", report_args.in, "input graph file")->required();
    report->add_option("--in-format", report_args.in_format, "auto|graph6|edgelist");
    report->add_option("--tol", report_args.tol, "eigensolver tolerance");
    report->add_option("--out", report_args.out, "output path (default stdout)");

    ClosureArgs closure_args;
    auto* closure_cmd = app.add_subcommand("closure", "closure of a claw-free graph with trace");
    closure_cmd->add_option("--in", closure_args.in, "input graph file")->required();
    closure_cmd->add_option("--in-format", closure_args.in_format, "auto|graph6|edgelist");
    closure_cmd->add_option("--out", closure_args.out, "trace output path (default stdout)");
    closure_cmd->add_option("--out-graph", closure_args.out_graph,
                            "also write the closed graph as graph6");

    HamiltonArgs hamilton_args;
    auto* hamilton_cmd = app.add_subcommand("hamilton", "Hamiltonian cycle/path decision");
    hamilton_cmd->add_option("--in", hamilton_args.in, "input graph file")->required();
    hamilton_cmd->add_option("--in-format", hamilton_args.in_format, "auto|graph6|edgelist");
    hamilton_cmd->add_option("--kind", hamilton_args.kind, "cycle|path (default cycle)");
    hamilton_cmd->add_option("--budget", hamilton_args.budget,
                             "search node budget (default SPECHAM_BUDGET or 1e8)");
    hamilton_cmd->add_option("--out", hamilton_args.out, "output path (default stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "evaluate theorem statements on a graph");
    verify_cmd->add_option("--in", verify_args.in, "input graph file");
    verify_cmd->add_option("--in-format", verify_args.in_format, "auto|graph6|edgelist");
    verify_cmd->add_option("--spec", verify_args.spec, "build the graph from an extremal spec");
    verify_cmd->add_option("--id", verify_args.ids,
                           "statement ids (repeatable or comma-separated; default all)")
        ->delimiter(',');
    verify_cmd->add_option("--tol", verify_args.tol, "spectral comparison margin");
    verify_cmd->add_option("--budget", verify_args.budget, "oracle node budget");
    verify_cmd->add_option("--out", verify_args.out, "output path (default stdout)");

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "exhaustive (n <= 7) or randomized scan");
    scan_cmd->add_option("--id", scan_args.id, "statement id, e.g. fini-trace")->required();
    scan_cmd->add_option("--n", scan_args.n, "graph order")->required();
    scan_cmd->add_option("--filter", scan_args.filter,
                         "all|clawfree_connected|clawfree_2connected (exhaustive only)");
    scan_cmd->add_option("--random", scan_args.random_count,
                         "check this many random claw-free instances instead");
    scan_cmd->add_option("--seed", scan_args.seed, "first seed for --random (default 1)");
    scan_cmd->add_option("--mode", scan_args.mode,
                         "line_graph|closure_perturbed (with --random)");
    scan_cmd->add_option("--budget", scan_args.budget, "oracle node budget (with --random)");
    scan_cmd->add_option("--format", scan_args.format, "json|csv (default json)");
    scan_cmd->add_option("--out", scan_args.out, "output path (default stdout)");

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand(
        "table", "eigenvalue comparison table for the two blown-up families");
    table_cmd->add_option("--n", table_args.range, "n range a..b (default 10..60)");
    table_cmd->add_option("--kind", table_args.kind,
                          "which chains gate the exit code: all|mu|q|complement");
    table_cmd->add_option("--format", table_args.format, "csv|md|json (default csv)");
    table_cmd->add_option("--out", table_args.out, "output path (default stdout)");

    BracketsArgs brackets_args;
    auto* brackets_cmd =
        app.add_subcommand("brackets", "two-sided root bracket sign checks over an n range");
    brackets_cmd->add_option("--kind", brackets_args.kind,
                             "adjacency|q_index|complement|repaired_complement|all");
    brackets_cmd->add_option("--n", brackets_args.range,
                             "n range a..b (default: kind's claimed threshold..200)");
    brackets_cmd->add_option("--format", brackets_args.format, "csv|md|json (default csv)");
    brackets_cmd->add_option("--out", brackets_args.out, "output path (default stdout)");

    FamilyArgs family_args;
    auto* family_cmd =
        app.add_subcommand("family", "list the blown-up family members with invariants");
    family_cmd->add_option("--n", family_args.n, "graph order (>= 9)")->required();
    family_cmd->add_option("--budget", family_args.budget, "Hamiltonicity search budget");
    family_cmd->add_option("--format", family_args.format, "json|csv|md (default json)");
    family_cmd->add_option("--out", family_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (report->parsed()) return run_report(report_args);
        if (closure_cmd->parsed()) return run_closure(closure_args);
        if (hamilton_cmd->parsed()) return run_hamilton(hamilton_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (scan_cmd->parsed()) return run_scan(scan_args);
        if (table_cmd->parsed()) return run_table(table_args);
        if (brackets_cmd->parsed()) return run_brackets(brackets_args);
        if (family_cmd->parsed()) return run_family(family_args);
        std::cerr << "error: no subcommand\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
