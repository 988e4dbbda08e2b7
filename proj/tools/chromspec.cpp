// chromspec: spectral chromatic-number bounds on graph6 input.
//
// Exit status: 0 success, 1 a bound or conjecture was violated, 2 usage or
// input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromspec/harness.hpp"

using namespace chromspec;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
    std::string input = "-";
    std::string format = "jsonl";
    std::string mode = "raw";
    std::string summary_path;
    std::vector<std::string> checks;
    int jobs = default_parallelism();
    int n = 0;
    int chi = 0;
    int a = 0;
    int a0 = 0;
    int labeled = -1;
    int max_n = 16;
    bool connected = false;
    bool all = false;
    bool reports = false;
};

class Input {
public:
    explicit Input(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ifstream>(path);
            if (!*file_) throw std::runtime_error("cannot open input file " + path);
        }
    }
    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

void emit(const BoundReport& r, const std::string& format) {
    if (format == "csv")
        std::cout << to_csv(r) << '\n';
    else
        std::cout << to_json(r).dump() << '\n';
    std::cout.flush();
}

CheckSet parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) return all_checks();
    CheckSet set{};
    for (const auto& name : names) {
        const auto c = check_from_name(name);
        if (!c) throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
        set[static_cast<std::size_t>(*c)] = true;
    }
    return set;
}

int cmd_analyze(const Options& o) {
    Input in(o.input);
    if (o.format == "csv") std::cout << csv_header() << '\n';
    int status = kOk;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in.stream(), line)) {
        ++line_no;
        if (is_blank(line) || line == ">>graph6<<") continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            std::cerr << "line " << line_no << ": malformed graph6: " << e.what() << '\n';
            return kUsage;
        }
        if (g.order() < 1) {
            std::cerr << "line " << line_no << ": null graph has no bounds\n";
            return kUsage;
        }
        const BoundReport r = analyze(g);
        if (!r.violations().empty()) status = kViolation;
        emit(r, o.format);
    }
    return status;
}

int cmd_extremal(const Options& o) {
    const ExtremalParams p{o.n, o.chi, o.a, o.a0};
    const Graph g = extremal_graph(p);
    const double ln = lambda_min(g);
    ordered_json j;
    j["graph6"] = to_graph6(g);
    j["n"] = p.n;
    j["chi"] = p.chi;
    j["a"] = p.a;
    j["a0"] = p.a0;
    j["b"] = p.b();
    j["b0"] = p.b0();
    j["m"] = g.size();
    j["lambdan"] = sig10(ln);
    j["quartic_root"] = sig10(smallest_negative_root(p));
    j["xi"] = sig10(xi(p.n, p.chi).xi);
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_roots(const Options& o) {
    for (const auto& p : feasible_pairs(o.n, o.chi)) {
        const QuarticCoeffs f = quartic(p);
        ordered_json j;
        j["a"] = p.a;
        j["a0"] = p.a0;
        j["b"] = p.b();
        j["b0"] = p.b0();
        j["coefficients"] = {f.c[4], f.c[3], f.c[2], f.c[1], f.c[0]};
        j["descartes_pattern"] = f.gsigns_match();
        j["root"] = sig10(smallest_negative_root(p));
        std::cout << j.dump() << '\n';
    }
    const auto arg = argmin_feasible(o.n, o.chi);
    ordered_json j;
    j["argmin_root"] = sig10(arg.root);
    j["minimizers"] = ordered_json::array();
    for (const auto& p : arg.minimizers) j["minimizers"].push_back({p.a, p.a0});
    j["classes"] = ordered_json::array();
    for (const auto& p : arg.classes) j["classes"].push_back({p.a, p.a0});
    j["unique"] = arg.unique();
    const auto expected = conjectured_minimizer(o.n, o.chi);
    j["matches_conjectured"] = arg.unique() && arg.classes.front() == expected;
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_xi(const Options& o) {
    const XiQuantities x = xi(o.n, o.chi);
    ordered_json j;
    j["n"] = o.n;
    j["chi"] = o.chi;
    j["xi"] = sig10(x.xi);
    j["mu"] = sig10(x.mu);
    j["alpha"] = sig10(x.alpha);
    j["beta"] = sig10(x.beta);
    j["quadratic_residual"] = sig10(x.quadratic_residual);
    j["key_identity_residual"] = sig10(x.key_residual);
    if (o.chi >= 3) j["endpoint_positivity"] = sig10(endpoint_positivity(o.n, o.chi).direct);
    std::cout << j.dump() << '\n';
    return kOk;
}

int finish_summary(const Summary& s, const CheckSet& checks, const std::string& path) {
    const std::string doc = s.to_json(checks).dump();
    std::cerr << doc << '\n';
    if (!path.empty()) {
        std::ofstream out(path);
        out << doc << '\n';
    }
    for (const auto& v : s.violations)
        std::cerr << "VIOLATION " << v.check << ' ' << v.graph6 << '\n';
    if (s.violations_total > 0) return kViolation;
    return s.malformed > 0 ? kUsage : kOk;
}

int cmd_verify(const Options& o) {
    const CheckSet checks = parse_checks(o.checks);
    if (o.labeled >= 0) return finish_summary(verify_labeled(o.labeled, o.connected, checks, o.jobs), checks, o.summary_path);
    Input in(o.input);
    if (o.reports && o.format == "csv") std::cout << csv_header() << '\n';
    const Summary s = verify_stream(in.stream(), checks, o.jobs, [&](const StreamItem& item) {
        if (!item.report)
            std::cerr << "line " << item.line << ": " << item.error << '\n';
        else if (o.reports)
            emit(*item.report, o.format);
    });
    return finish_summary(s, checks, o.summary_path);
}

int cmd_compare(const Options& o) {
    const CompareMode mode = o.mode == "ceiling" ? CompareMode::ceiling : CompareMode::raw;
    std::uint64_t malformed = 0;
    ComparisonCounts c;
    if (o.labeled >= 0) {
        c = compare_labeled(o.labeled, mode, !o.all);
    } else {
        Input in(o.input);
        c = compare_stream(in.stream(), mode, !o.all, &malformed);
    }
    ordered_json j = c.to_json();
    j["malformed"] = malformed;
    std::cout << j.dump() << '\n';
    return malformed > 0 ? kUsage : kOk;
}

int cmd_equality_scan(const Options& o) {
    bool ok = true;
    for (const auto& e : equality_case_scan(o.max_n)) {
        std::cout << to_json(e).dump() << '\n';
        ok = ok && e.ok();
    }
    return ok ? kOk : kViolation;
}

int cmd_enumerate(const Options& o) {
    enumerate_labeled(o.n, o.connected, [](const Graph& g) { std::cout << to_graph6(g) << '\n'; });
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral bounds on the chromatic number: analysis, extremal graphs and verification sweeps"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Per-graph output format")->check(CLI::IsMember({"jsonl", "csv"}));
    };
    auto add_jobs = [&](CLI::App* c) {
        c->add_option("-j,--jobs", o.jobs, "Worker threads (default $CHROMSPEC_JOBS or 1)")->check(CLI::PositiveNumber);
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Bound report for each graph6 line");
    analyze_cmd->add_option("input", o.input, "graph6 file or - for stdin");
    add_format(analyze_cmd);

    auto* extremal_cmd = app.add_subcommand("extremal", "Construct G(a,a0) and compare lambda_n with xi");
    extremal_cmd->add_option("--n", o.n)->required();
    extremal_cmd->add_option("--chi", o.chi)->required();
    extremal_cmd->add_option("--a", o.a)->required();
    extremal_cmd->add_option("--a0", o.a0)->required();

    auto* roots_cmd = app.add_subcommand("roots", "Quartic roots over all feasible pairs and their argmin");
    roots_cmd->add_option("--n", o.n)->required();
    roots_cmd->add_option("--chi", o.chi)->required();

    auto* xi_cmd = app.add_subcommand("xi", "Closed-form xi(n, chi) with its identity residuals");
    xi_cmd->add_option("--n", o.n)->required();
    xi_cmd->add_option("--chi", o.chi)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check every bound over a graph6 stream or a labeled enumeration");
    verify_cmd->add_option("input", o.input, "graph6 file or - for stdin");
    verify_cmd->add_option("--labeled", o.labeled, "Sweep all labeled graphs on N vertices instead of reading input")
        ->check(CLI::Range(0, kEnumerationCap));
    verify_cmd->add_flag("--connected", o.connected, "With --labeled, connected graphs only");
    verify_cmd->add_option("--checks", o.checks, "Subset of checks to run")->delimiter(',');
    verify_cmd->add_option("--summary", o.summary_path, "Also write the summary JSON to this file");
    verify_cmd->add_flag("--reports", o.reports, "Write per-graph reports to stdout");
    add_format(verify_cmd);
    add_jobs(verify_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "Tally Wilf vs FYW and the edge conjecture vs FYW");
    compare_cmd->add_option("input", o.input, "graph6 file or - for stdin");
    compare_cmd->add_option("--labeled", o.labeled)->check(CLI::Range(0, kEnumerationCap));
    compare_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"raw", "ceiling"}));
    compare_cmd->add_flag("--all", o.all, "Include disconnected graphs");

    auto* eq_cmd = app.add_subcommand("equality-scan", "Confirm the equality family for even n, chi");
    eq_cmd->add_option("--max-n", o.max_n)->check(CLI::Range(6, 16));

    auto* enum_cmd = app.add_subcommand("enumerate", "Print all labeled graphs on n vertices as graph6");
    enum_cmd->add_option("--n", o.n)->required()->check(CLI::Range(0, kEnumerationCap));
    enum_cmd->add_flag("--connected", o.connected);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(o);
        if (extremal_cmd->parsed()) return cmd_extremal(o);
        if (roots_cmd->parsed()) return cmd_roots(o);
        if (xi_cmd->parsed()) return cmd_xi(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (compare_cmd->parsed()) return cmd_compare(o);
        if (eq_cmd->parsed()) return cmd_equality_scan(o);
        if (enum_cmd->parsed()) return cmd_enumerate(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
