#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "chromspec/harness.hpp"

using namespace chromspec;
using Catch::Matchers::WithinAbs;

namespace {
std::string labeled_stream(int n) {
    std::string out;
    enumerate_labeled(n, false, [&](const Graph& g) { out += to_graph6(g) + "\n"; });
    return out;
}

Graph k4_minus_edge() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    return g;
}
}  // namespace

TEST_CASE("analyze K33", "[harness]") {
    const auto r = analyze(complete_bipartite(3, 3));
    CHECK(r.chi == 2);
    CHECK(r.col == 4);
    CHECK_THAT(r.lambda1, WithinAbs(3.0, 1e-10));
    CHECK_THAT(r.lambdan, WithinAbs(-3.0, 1e-10));
    CHECK_THAT(r.bound(Check::fyw_chi_upper).value, WithinAbs(2.0, 1e-9));
    CHECK_FALSE(r.bound(Check::fyw_chi_upper).applicable);  // chi = 2 is outside the hypothesis
    CHECK_THAT(r.bound(Check::conjecture61).value, WithinAbs(2.0, 1e-9));
    CHECK(*r.bound(Check::conjecture61).equality);
    CHECK(*r.bound(Check::constantine).equality);
    CHECK(r.violations().empty());
    // col exceeds the FYW value: the bound cannot be stated for col.
    CHECK(r.col > r.bound(Check::fyw_chi_upper).value + 1);
}

TEST_CASE("analyze K4", "[harness]") {
    const auto r = analyze(complete(4));
    CHECK(r.chi == 4);
    CHECK(*r.bound(Check::wilf).equality);
    CHECK_THAT(r.bound(Check::conjecture61).value, WithinAbs(12.0, 1e-9));
    CHECK(*r.bound(Check::conjecture61).equality);
    CHECK(*r.bound(Check::wu_elphick).equality);
    CHECK_FALSE(r.bound(Check::fyw_chi_upper).applicable);
}

TEST_CASE("analyze the equality graph G(2,2) for n = 8, chi = 4", "[harness]") {
    const auto r = analyze(extremal_graph({8, 4, 2, 2}));
    CHECK(r.chi == 4);
    CHECK(*r.bound(Check::fyw_chi_upper).equality);
    CHECK(*r.bound(Check::fyw_lambda_lower).equality);
    CHECK(r.violations().empty());
}

TEST_CASE("report serialisation has a stable key order", "[harness]") {
    const auto j = to_json(analyze(complete(4)));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"graph6", "n", "m", "chi", "col", "lambda1", "lambdan", "bounds",
                                           "violations", "gaps", "rechecked"});
    CHECK(j["bounds"].size() == kCheckCount);
    CHECK(j["lambda1"].get<double>() == 3.0);

    const std::string csv = to_csv(analyze(complete(4)));
    CHECK(csv.starts_with("C~,4,6,4,4,3,-1,"));
    const std::string header = csv_header();
    CHECK(std::count(csv.begin(), csv.end(), ',') == std::count(header.begin(), header.end(), ','));
}

TEST_CASE("solver cap yields a partial report", "[harness]") {
    const auto r = analyze(cycle(70));
    CHECK_FALSE(r.chi.has_value());
    REQUIRE(r.gaps.size() == 1);
    CHECK_THAT(r.gaps.front(), Catch::Matchers::ContainsSubstring("exact solver cap"));
    CHECK_FALSE(r.bound(Check::wilf).applicable);
    CHECK(*r.bound(Check::constantine).holds);
    CHECK(r.violations().empty());
}

TEST_CASE("labeled enumeration counts", "[harness]") {
    auto count = [](int n, bool connected) {
        std::uint64_t c = 0;
        enumerate_labeled(n, connected, [&](const Graph&) { ++c; });
        return c;
    };
    CHECK(count(3, false) == 8);
    CHECK(count(3, true) == 4);
    CHECK(count(4, false) == 64);
    CHECK(count(4, true) == 38);
    CHECK(count(5, false) == 1024);
    CHECK(count(5, true) == 728);
    CHECK_THROWS_AS(labeled_count(8), std::out_of_range);
}

TEST_CASE("verify a stream of all labeled graphs on 5 vertices", "[harness]") {
    std::istringstream in(labeled_stream(5));
    CheckSet only{};
    only[static_cast<std::size_t>(Check::conjecture61)] = true;
    const Summary s = verify_stream(in, only, 1);
    CHECK(s.processed == 1024);
    CHECK(s.tallies[static_cast<std::size_t>(Check::conjecture61)].violation == 0);
    CHECK(s.tallies[static_cast<std::size_t>(Check::conjecture61)].skipped == 1);  // m = 0
    CHECK(s.violations_total == 0);
}

TEST_CASE("verify fyw_chi_upper on all labeled graphs with 6 vertices", "[harness]") {
    CheckSet only{};
    only[static_cast<std::size_t>(Check::fyw_chi_upper)] = true;
    const Summary s = verify_labeled(6, false, only, 2);
    const auto& t = s.tallies[static_cast<std::size_t>(Check::fyw_chi_upper)];
    CHECK(t.violation == 0);
    CHECK(t.pass > 0);
    CHECK(t.pass + t.skipped == 32768);
}

TEST_CASE("single-line stream", "[harness]") {
    std::istringstream in("C~\n");
    CheckSet only{};
    only[static_cast<std::size_t>(Check::constantine)] = true;
    const Summary s = verify_stream(in, only, 1);
    CHECK(s.processed == 1);
    CHECK(s.tallies[static_cast<std::size_t>(Check::constantine)].pass == 1);
    const auto j = s.to_json(only);
    CHECK(j["checks"].size() == 1);
}

TEST_CASE("malformed lines are counted and processing continues", "[harness]") {
    std::istringstream in(">>graph6<<\nC~\nC!\n\nBw\n?\n");
    std::vector<std::uint64_t> bad_lines;
    const Summary s = verify_stream(in, all_checks(), 1, [&](const StreamItem& item) {
        if (!item.report) bad_lines.push_back(item.line);
    });
    CHECK(s.processed == 2);
    CHECK(s.malformed == 2);
    CHECK(bad_lines == std::vector<std::uint64_t>{3, 6});
    CHECK(s.malformed_lines == bad_lines);
}

TEST_CASE("summaries do not depend on parallelism", "[harness]") {
    const auto serial = verify_labeled(5, false, all_checks(), 1).to_json().dump();
    const auto parallel = verify_labeled(5, false, all_checks(), 8).to_json().dump();
    CHECK(serial == parallel);

    std::istringstream a(labeled_stream(5));
    std::istringstream b(labeled_stream(5));
    CHECK(verify_stream(a, all_checks(), 1).to_json().dump() == verify_stream(b, all_checks(), 4).to_json().dump());
}

TEST_CASE("summary merge keeps the smallest violation records in order", "[harness]") {
    Summary a;
    Summary b;
    for (int i = 0; i < 150; ++i) {
        Summary& dst = i % 2 ? a : b;
        dst.violations.push_back({"g" + std::to_string(1000 + i), "wilf"});
        ++dst.violations_total;
    }
    a.trim();
    b.trim();
    Summary ab = a;
    ab.merge(b);
    Summary ba = b;
    ba.merge(a);
    CHECK(ab.to_json().dump() == ba.to_json().dump());
    CHECK(ab.violations.size() == kViolationBuffer);
    CHECK(ab.violations.front().graph6 == "g1000");
    CHECK(ab.violations_total == 150);
}

TEST_CASE("bound comparison", "[harness]") {
    BoundComparer raw(CompareMode::raw, true);
    const Graph g = k4_minus_edge();
    raw.add(g, analyze(g));
    const auto& c = raw.counts();
    CHECK(c.population_size == 1);
    CHECK(c.wilf_vs_fyw.first_wins + c.wilf_vs_fyw.second_wins + c.wilf_vs_fyw.ties == 1);
    CHECK(c.conjecture_vs_fyw.first_wins + c.conjecture_vs_fyw.second_wins + c.conjecture_vs_fyw.ties == 1);

    raw.add(complete(4), analyze(complete(4)));
    CHECK(raw.counts().skipped == 1);

    CHECK(better_upper(3.2, 3.9, CompareMode::ceiling) == 0);
    CHECK(better_upper(3.2, 3.9, CompareMode::raw) == 1);
    CHECK(better_upper(4.0000000001, 4.5, CompareMode::ceiling) == 1);
    CHECK(better_upper(5, 5 + 1e-8, CompareMode::raw) == 0);
}

TEST_CASE("comparison over connected labeled graphs on 6 vertices", "[harness]") {
    const auto c = compare_labeled(6, CompareMode::raw, true);
    CHECK(c.wilf_vs_fyw.first_wins + c.wilf_vs_fyw.second_wins + c.wilf_vs_fyw.ties == c.population_size);
    CHECK(c.population_size + c.skipped == 32768);
    // Fixture from this enumeration (not a published count).
    // 26704 connected labeled graphs minus 3031 connected bipartite ones and K6.
    CHECK(c.population_size == 23672);
    CHECK(c.to_json().dump() == R"({"criterion":"raw","population":"connected, 3 <= chi <= n - 1","population_size":23672,"skipped":9096,"wilf_vs_fyw":{"wilf_wins":20667,"fyw_wins":3005,"ties":0},"conjecture61_vs_fyw":{"conjecture61_wins":20067,"fyw_wins":3605,"ties":0}})");

    const auto ceil = compare_labeled(6, CompareMode::ceiling, true);
    CHECK(ceil.to_json().dump() == R"({"criterion":"ceiling","population":"connected, 3 <= chi <= n - 1","population_size":23672,"skipped":9096,"wilf_vs_fyw":{"wilf_wins":16497,"fyw_wins":1085,"ties":6090},"conjecture61_vs_fyw":{"conjecture61_wins":14232,"fyw_wins":1550,"ties":7890}})");
}

TEST_CASE("equality family scan", "[harness]") {
    const auto cases = equality_case_scan(12);
    REQUIRE_FALSE(cases.empty());
    for (const auto& e : cases) CHECK(e.ok());
    auto find = [&](int n, int chi) {
        return std::find_if(cases.begin(), cases.end(), [&](const auto& e) { return e.n == n && e.chi == chi; });
    };
    CHECK(find(8, 4) != cases.end());
    CHECK(find(12, 6) != cases.end());
    CHECK(find(8, 6) != cases.end());
    CHECK_THROWS_AS(equality_case_scan(18), std::out_of_range);
}

TEST_CASE("violations reproduce from their graph6 string", "[harness]") {
    // No true violation exists, so exercise reproducibility on reports instead.
    const Graph g = petersen();
    const auto r1 = analyze(g);
    const auto r2 = analyze(parse_graph6(r1.graph6));
    CHECK(to_json(r1).dump() == to_json(r2).dump());
}
