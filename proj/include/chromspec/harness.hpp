#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chromspec/bounds.hpp"
#include "chromspec/chroma.hpp"
#include "chromspec/fyw_theory.hpp"
#include "chromspec/graph.hpp"
#include "chromspec/graph6.hpp"
#include "chromspec/spectra.hpp"

namespace chromspec {

using ordered_json = nlohmann::ordered_json;

/// Every check a sweep can run, in report order.
enum class Check : int {
    wilf,
    hoffman,
    fyw_chi_upper,
    fyw_lambda_lower,
    conjecture61,
    powers,
    wu_elphick,
    constantine,
    col_chain,
};
inline constexpr std::size_t kCheckCount = 9;
inline constexpr std::array<const char*, kCheckCount> kCheckNames{
    "wilf",   "hoffman",    "fyw_chi_upper", "fyw_lambda_lower", "conjecture61",
    "powers", "wu_elphick", "constantine",   "col_chain"};

using CheckSet = std::array<bool, kCheckCount>;

inline CheckSet all_checks() {
    CheckSet s;
    s.fill(true);
    return s;
}

inline std::optional<Check> check_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kCheckCount; ++i)
        if (name == kCheckNames[i]) return static_cast<Check>(i);
    return std::nullopt;
}

/// Rounds to 10 significant digits for printing.
inline double sig10(double v) {
    if (!std::isfinite(v) || v == 0) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::strtod(buf, nullptr);
}

struct BoundReport {
    std::string graph6;
    int n = 0;
    long m = 0;
    std::optional<int> chi;
    int col = 0;
    double lambda1 = 0;
    double lambdan = 0;
    std::vector<BoundValue> bounds;  // indexed by Check
    std::vector<std::string> gaps;
    bool rechecked = false;

    const BoundValue& bound(Check c) const { return bounds[static_cast<std::size_t>(c)]; }
    bool violates(Check c) const {
        const auto& b = bound(c);
        return b.applicable && b.holds.has_value() && !*b.holds;
    }
    std::vector<std::string> violations(const CheckSet& checks = all_checks()) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < kCheckCount; ++i)
            if (checks[i] && violates(static_cast<Check>(i))) out.emplace_back(kCheckNames[i]);
        return out;
    }
};

namespace detail {

inline std::vector<BoundValue> evaluate_bounds(int n, long m, std::optional<int> chi, int col, double l1,
                                               double ln) {
    std::vector<BoundValue> b(kCheckCount);
    auto needs_chi = [&](BoundValue v) {
        return chi ? v : not_applicable(std::move(v), "chromatic number unavailable");
    };
    const double chi_d = chi ? *chi : 0.0;

    b[0] = needs_chi(settle(wilf(l1), chi_d));
    b[1] = needs_chi(settle(hoffman(l1, ln), chi_d));
    if (chi) {
        b[2] = settle(fyw_chi_upper(n, ln, *chi), chi_d);
        b[3] = settle(fyw_lambda_lower(n, *chi), ln);
    } else {
        b[2] = needs_chi(fyw_chi_upper(n, ln));
        b[3] = needs_chi(BoundValue{"fyw_lambda_lower", 0, true, Direction::lower, {}, {}, {}});
    }
    b[4] = needs_chi(settle(conjecture61(m, ln), chi_d * (chi_d - 1)));
    b[5] = powers_check(m, ln);
    b[6] = needs_chi(wu_elphick_check(chi ? *chi : 0, l1, m));
    b[7] = constantine_check(n, ln);

    BoundValue chain{"col_chain", 1 + l1, true, Direction::upper, {}, {}, {}};
    chain.holds = (!chi || *chi <= col) && col <= 1 + l1 + kHoldsTol;
    chain.equality = std::fabs(col - (1 + l1)) <= kEqualityTol;
    b[8] = chain;
    return b;
}

}  // namespace detail

/// Full bound report for one graph. Any violation is re-evaluated with the
/// extended-precision eigensolver before it is allowed to stand.
inline BoundReport analyze(const Graph& g) {
    if (g.order() < 1) throw std::domain_error("analyze requires n >= 1");
    BoundReport r;
    r.graph6 = g.order() <= kGraph6MaxOrder ? to_graph6(g) : std::string{};
    r.n = g.order();
    r.m = static_cast<long>(g.size());
    try {
        r.chi = chromatic_number(g).chi;
    } catch (const SolverCapError& e) {
        r.gaps.emplace_back(std::string("chi: ") + e.what());
    }
    r.col = coloring_number(g);
    const Spectrum s = spectrum(g);
    r.lambda1 = s.lambda_max();
    r.lambdan = s.lambda_min();
    r.bounds = detail::evaluate_bounds(r.n, r.m, r.chi, r.col, r.lambda1, r.lambdan);
    if (!r.violations().empty()) {
        const Spectrum t = tight_spectrum(g);
        r.lambda1 = t.lambda_max();
        r.lambdan = t.lambda_min();
        r.bounds = detail::evaluate_bounds(r.n, r.m, r.chi, r.col, r.lambda1, r.lambdan);
        r.rechecked = true;
    }
    return r;
}

inline ordered_json to_json(const BoundValue& b) {
    ordered_json j;
    j["name"] = b.name;
    j["value"] = b.applicable || b.value != 0 ? ordered_json(sig10(b.value)) : ordered_json(nullptr);
    j["applicable"] = b.applicable;
    j["direction"] = b.direction == Direction::upper ? "upper" : "lower";
    j["holds"] = b.holds ? ordered_json(*b.holds) : ordered_json(nullptr);
    j["equality"] = b.equality ? ordered_json(*b.equality) : ordered_json(nullptr);
    return j;
}

inline ordered_json to_json(const BoundReport& r) {
    ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["chi"] = r.chi ? ordered_json(*r.chi) : ordered_json(nullptr);
    j["col"] = r.col;
    j["lambda1"] = sig10(r.lambda1);
    j["lambdan"] = sig10(r.lambdan);
    j["bounds"] = ordered_json::array();
    for (const auto& b : r.bounds) j["bounds"].push_back(to_json(b));
    j["violations"] = r.violations();
    j["gaps"] = r.gaps;
    j["rechecked"] = r.rechecked;
    return j;
}

inline std::string csv_header() {
    std::string h = "graph6,n,m,chi,col,lambda1,lambdan";
    for (const char* name : kCheckNames) h += std::string(",") + name + "," + name + "_holds";
    return h + ",violations";
}

inline std::string to_csv(const BoundReport& r) {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    std::string line = r.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                       (r.chi ? std::to_string(*r.chi) : std::string{}) + "," + std::to_string(r.col) + "," +
                       num(r.lambda1) + "," + num(r.lambdan);
    for (const auto& b : r.bounds) {
        line += "," + (b.applicable ? num(b.value) : std::string{});
        line += "," + (b.holds ? std::string(*b.holds ? "1" : "0") : std::string{});
    }
    std::string v;
    for (const auto& name : r.violations()) v += (v.empty() ? "" : ";") + name;
    return line + "," + v;
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kEnumerationCap = 7;

/// Graph whose k-th edge slot (graph6 upper-triangle order) is bit k of mask.
inline Graph labeled_graph(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) g.add_edge(i, j);
    return g;
}

inline std::uint64_t labeled_count(int n) {
    if (n < 0 || n > kEnumerationCap)
        throw std::out_of_range("labeled enumeration supports 0 <= n <= 7; use graph6 ingestion for larger orders");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Visits every labeled graph on n vertices in edge-mask order.
inline void enumerate_labeled(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
    const std::uint64_t total = labeled_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = labeled_graph(n, mask);
        if (!connected_only || g.connected()) visit(g);
    }
}

// ---------------------------------------------------------------------------
// Summaries

inline constexpr std::size_t kViolationBuffer = 100;

struct CheckTally {
    std::uint64_t pass = 0;
    std::uint64_t violation = 0;
    std::uint64_t skipped = 0;
};

struct ViolationRecord {
    std::string graph6;
    std::string check;
    friend auto operator<=>(const ViolationRecord&, const ViolationRecord&) = default;
};

struct Summary {
    std::uint64_t processed = 0;
    std::uint64_t malformed = 0;
    std::uint64_t gaps = 0;
    std::array<CheckTally, kCheckCount> tallies{};
    std::uint64_t violations_total = 0;
    std::vector<ViolationRecord> violations;   // smallest kViolationBuffer, sorted
    std::vector<std::uint64_t> malformed_lines;  // smallest kViolationBuffer, sorted

    void record(const BoundReport& r, const CheckSet& checks) {
        ++processed;
        if (!r.gaps.empty()) ++gaps;
        for (std::size_t i = 0; i < kCheckCount; ++i) {
            if (!checks[i]) continue;
            const auto& b = r.bounds[i];
            if (!b.applicable || !b.holds) {
                ++tallies[i].skipped;
            } else if (*b.holds) {
                ++tallies[i].pass;
            } else {
                ++tallies[i].violation;
                ++violations_total;
                violations.push_back({r.graph6, kCheckNames[i]});
            }
        }
        trim();
    }

    void merge(const Summary& o) {
        processed += o.processed;
        malformed += o.malformed;
        gaps += o.gaps;
        for (std::size_t i = 0; i < kCheckCount; ++i) {
            tallies[i].pass += o.tallies[i].pass;
            tallies[i].violation += o.tallies[i].violation;
            tallies[i].skipped += o.tallies[i].skipped;
        }
        violations_total += o.violations_total;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
        malformed_lines.insert(malformed_lines.end(), o.malformed_lines.begin(), o.malformed_lines.end());
        trim();
    }

    void trim() {
        std::sort(violations.begin(), violations.end());
        if (violations.size() > kViolationBuffer) violations.resize(kViolationBuffer);
        std::sort(malformed_lines.begin(), malformed_lines.end());
        if (malformed_lines.size() > kViolationBuffer) malformed_lines.resize(kViolationBuffer);
    }

    ordered_json to_json(const CheckSet& checks = all_checks()) const {
        ordered_json j;
        j["processed"] = processed;
        j["malformed"] = malformed;
        j["malformed_lines"] = malformed_lines;
        j["gaps"] = gaps;
        ordered_json c = ordered_json::object();
        for (std::size_t i = 0; i < kCheckCount; ++i) {
            if (!checks[i]) continue;
            c[kCheckNames[i]] = {{"pass", tallies[i].pass},
                                 {"violation", tallies[i].violation},
                                 {"skipped", tallies[i].skipped}};
        }
        j["checks"] = c;
        j["violations_total"] = violations_total;
        j["violations"] = ordered_json::array();
        for (const auto& v : violations) j["violations"].push_back({{"graph6", v.graph6}, {"check", v.check}});
        return j;
    }
};

// ---------------------------------------------------------------------------
// Parallel sweeps. Work is split into fixed chunks whose results are merged
// in chunk order, so tallies do not depend on the number of workers.

inline int default_parallelism() {
    if (const char* env = std::getenv("CHROMSPEC_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

template <class ChunkFn>
void run_chunks(std::size_t chunks, int jobs, ChunkFn&& fn) {
    if (jobs <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), chunks);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < chunks; c = next++) fn(c);
        });
    for (auto& t : pool) t.join();
}

inline constexpr std::uint64_t kSweepChunk = 4096;

/// Every labeled graph on n vertices (optionally connected only).
inline Summary verify_labeled(int n, bool connected_only, const CheckSet& checks, int jobs) {
    const std::uint64_t total = labeled_count(n);
    const std::size_t chunks = static_cast<std::size_t>((total + kSweepChunk - 1) / kSweepChunk);
    std::vector<Summary> parts(chunks);
    run_chunks(chunks, jobs, [&](std::size_t c) {
        const std::uint64_t begin = c * kSweepChunk;
        const std::uint64_t end = std::min(total, begin + kSweepChunk);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const Graph g = labeled_graph(n, mask);
            if (g.order() < 1 || (connected_only && !g.connected())) continue;
            parts[c].record(analyze(g), checks);
        }
    });
    Summary out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

struct StreamItem {
    std::uint64_t line = 0;
    std::optional<BoundReport> report;
    std::string error;
};

inline bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

/// Reads graph6 lines in batches, analyses each batch in parallel and hands
/// the items to `sink` in input order.
inline void process_stream(std::istream& in, int jobs, const std::function<void(const StreamItem&)>& sink) {
    constexpr std::size_t batch = 1 << 14;
    std::uint64_t line_no = 0;
    std::vector<std::pair<std::uint64_t, std::string>> lines;
    std::string line;
    bool eof = false;
    while (!eof) {
        lines.clear();
        while (lines.size() < batch) {
            if (!std::getline(in, line)) {
                eof = true;
                break;
            }
            ++line_no;
            if (is_blank(line) || line == ">>graph6<<") continue;
            lines.emplace_back(line_no, line);
        }
        std::vector<StreamItem> items(lines.size());
        const std::size_t chunks = (lines.size() + 255) / 256;
        run_chunks(chunks, jobs, [&](std::size_t c) {
            for (std::size_t i = c * 256; i < std::min(lines.size(), (c + 1) * 256); ++i) {
                items[i].line = lines[i].first;
                try {
                    const Graph g = parse_graph6(lines[i].second);
                    if (g.order() < 1) throw std::domain_error("null graph (n = 0) has no bounds");
                    items[i].report = analyze(g);
                } catch (const std::exception& e) {
                    items[i].error = e.what();
                }
            }
        });
        for (const auto& item : items) sink(item);
    }
}

/// Summary over a graph6 stream; `on_item` sees each analysed line in order.
inline Summary verify_stream(std::istream& in, const CheckSet& checks, int jobs,
                             const std::function<void(const StreamItem&)>& on_item = {}) {
    Summary s;
    process_stream(in, jobs, [&](const StreamItem& item) {
        if (item.report) {
            s.record(*item.report, checks);
        } else {
            ++s.malformed;
            s.malformed_lines.push_back(item.line);
            s.trim();
        }
        if (on_item) on_item(item);
    });
    return s;
}

// ---------------------------------------------------------------------------
// Bound comparisons

enum class CompareMode { raw, ceiling };

struct Tally {
    std::uint64_t first_wins = 0;
    std::uint64_t second_wins = 0;
    std::uint64_t ties = 0;
};

struct ComparisonCounts {
    CompareMode criterion = CompareMode::raw;
    std::string population;
    std::uint64_t population_size = 0;
    std::uint64_t skipped = 0;
    Tally wilf_vs_fyw;         // first = Wilf, second = FYW chi upper bound
    Tally conjecture_vs_fyw;   // first = edge conjecture (as a chi bound), second = FYW

    ordered_json to_json() const {
        ordered_json j;
        j["criterion"] = criterion == CompareMode::raw ? "raw" : "ceiling";
        j["population"] = population;
        j["population_size"] = population_size;
        j["skipped"] = skipped;
        j["wilf_vs_fyw"] = {{"wilf_wins", wilf_vs_fyw.first_wins},
                            {"fyw_wins", wilf_vs_fyw.second_wins},
                            {"ties", wilf_vs_fyw.ties}};
        j["conjecture61_vs_fyw"] = {{"conjecture61_wins", conjecture_vs_fyw.first_wins},
                                    {"fyw_wins", conjecture_vs_fyw.second_wins},
                                    {"ties", conjecture_vs_fyw.ties}};
        return j;
    }
};

/// Which of two upper bounds on chi is better (smaller): 1 first, 2 second, 0 tie.
inline int better_upper(double first, double second, CompareMode mode) {
    if (mode == CompareMode::ceiling) {
        first = std::ceil(first - kEqualityTol);
        second = std::ceil(second - kEqualityTol);
        return first < second ? 1 : second < first ? 2 : 0;
    }
    if (first < second - kEqualityTol) return 1;
    if (second < first - kEqualityTol) return 2;
    return 0;
}

class BoundComparer {
public:
    BoundComparer(CompareMode mode, bool connected_only) {
        counts_.criterion = mode;
        connected_only_ = connected_only;
        counts_.population = std::string(connected_only ? "connected, " : "") + "3 <= chi <= n - 1";
    }

    void add(const Graph& g, const BoundReport& r) {
        if (!r.chi || *r.chi < 3 || *r.chi > r.n - 1 || (connected_only_ && !g.connected())) {
            ++counts_.skipped;
            return;
        }
        const auto& fyw = r.bound(Check::fyw_chi_upper);
        const auto& conj = r.bound(Check::conjecture61);
        ++counts_.population_size;
        bump(counts_.wilf_vs_fyw, better_upper(r.bound(Check::wilf).value, fyw.value, counts_.criterion));
        bump(counts_.conjecture_vs_fyw,
             better_upper(chi_from_product_bound(conj.value), fyw.value, counts_.criterion));
    }

    void skip() { ++counts_.skipped; }
    const ComparisonCounts& counts() const { return counts_; }

private:
    static void bump(Tally& t, int winner) { (winner == 1 ? t.first_wins : winner == 2 ? t.second_wins : t.ties)++; }

    ComparisonCounts counts_;
    bool connected_only_ = true;
};

inline ComparisonCounts compare_labeled(int n, CompareMode mode, bool connected_only) {
    BoundComparer cmp(mode, connected_only);
    enumerate_labeled(n, false, [&](const Graph& g) {
        if (g.order() < 1) return cmp.skip();
        cmp.add(g, analyze(g));
    });
    return cmp.counts();
}

inline ComparisonCounts compare_stream(std::istream& in, CompareMode mode, bool connected_only,
                                       std::uint64_t* malformed = nullptr) {
    BoundComparer cmp(mode, connected_only);
    std::uint64_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank(line) || line == ">>graph6<<") continue;
        try {
            const Graph g = parse_graph6(line);
            if (g.order() < 1) {
                cmp.skip();
                continue;
            }
            cmp.add(g, analyze(g));
        } catch (const Graph6Error&) {
            ++bad;
        }
    }
    if (malformed) *malformed = bad;
    return cmp.counts();
}

// ---------------------------------------------------------------------------
// Equality family

struct EqualityCase {
    int n = 0;
    int chi = 0;
    double lambdan = 0;
    double xi = 0;
    double chi_upper = 0;
    bool lambda_matches = false;  // |lambda_n - xi| <= 1e-8
    bool chi_matches = false;     // |chi_upper - chi| <= 1e-6
    bool unique_minimizer = false;
    bool ok() const { return lambda_matches && chi_matches && unique_minimizer; }
};

inline std::vector<EqualityCase> equality_case_scan(int max_n) {
    if (max_n > 16) throw std::out_of_range("equality_case_scan supports max_n <= 16");
    std::vector<EqualityCase> out;
    for (int n = 6; n <= max_n; n += 2) {
        for (int chi = 4; chi <= n - 2; chi += 2) {
            const ExtremalParams sym{n, chi, chi / 2, (n - chi) / 2};
            EqualityCase e;
            e.n = n;
            e.chi = chi;
            e.lambdan = lambda_min(extremal_graph(sym));
            e.xi = xi(n, chi).xi;
            e.chi_upper = fyw_chi_upper(n, e.lambdan, chi).value;
            e.lambda_matches = std::fabs(e.lambdan - e.xi) <= 1e-8;
            e.chi_matches = std::fabs(e.chi_upper - chi) <= kEqualityTol;
            const auto arg = argmin_feasible(n, chi);
            e.unique_minimizer = arg.minimizers.size() == 1 && arg.minimizers.front() == sym;
            out.push_back(e);
        }
    }
    return out;
}

inline ordered_json to_json(const EqualityCase& e) {
    return {{"n", e.n},
            {"chi", e.chi},
            {"lambdan", sig10(e.lambdan)},
            {"xi", sig10(e.xi)},
            {"fyw_chi_upper", sig10(e.chi_upper)},
            {"lambda_matches", e.lambda_matches},
            {"chi_matches", e.chi_matches},
            {"unique_minimizer", e.unique_minimizer}};
}

}  // namespace chromspec
