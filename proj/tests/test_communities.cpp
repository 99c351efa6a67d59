#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "gevo/communities.hpp"
#include "gevo/temporal.hpp"
#include "helpers.hpp"

using namespace gevo;
using testutil::clique_edges;
using testutil::community_sets;
using testutil::ids;
using testutil::make_snap;

TEST_SUITE("communities") {

TEST_CASE("label propagation recovers disconnected cliques for any seed") {
    NodeTable names;
    auto edges = clique_edges({"a", "b", "c", "d"});
    for (auto& e : clique_edges({"p", "q", "r", "s", "t"})) edges.push_back(e);
    Snapshot s = make_snap(names, 1, edges);

    for (std::uint64_t seed : {1ull, 7ull, 42ull, 1234567ull}) {
        GroupingResult g = label_propagation(s, seed);
        CHECK(g.timeframe == 1);
        CHECK(!g.overlapping);
        CHECK(g.source.detector == Detector::label_propagation);
        std::set<std::vector<NodeId>> want = {ids(names, {"a", "b", "c", "d"}),
                                              ids(names, {"p", "q", "r", "s", "t"})};
        CHECK(community_sets(g) == want);
    }
}

TEST_CASE("label propagation is deterministic in the seed") {
    NodeTable names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        int a = static_cast<int>(rng() % 18), b = static_cast<int>(rng() % 18);
        if (a == b) continue;
        edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b)});
    }
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g1 = label_propagation(s, 99);
    GroupingResult g2 = label_propagation(s, 99);
    REQUIRE(g1.communities.size() == g2.communities.size());
    for (std::size_t i = 0; i < g1.communities.size(); ++i) {
        CHECK(g1.communities[i].id == g2.communities[i].id);
        CHECK(g1.communities[i].members == g2.communities[i].members);
    }
}

TEST_CASE("label propagation drops classes below the minimum size") {
    NodeTable names;
    auto edges = clique_edges({"a", "b", "c"});
    edges.push_back({"x", "y"});  // separate two-node component
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g = label_propagation(s, 3, 3);
    REQUIRE(g.communities.size() == 1);
    CHECK(g.communities[0].members == ids(names, {"a", "b", "c"}));
    GroupingResult keep = label_propagation(s, 3, 2);
    CHECK(keep.communities.size() == 2);
}

TEST_CASE("label propagation community ids follow member order") {
    NodeTable names;
    auto edges = clique_edges({"a", "b", "c"});
    for (auto& e : clique_edges({"x", "y", "z"})) edges.push_back(e);
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g = label_propagation(s, 17);
    REQUIRE(g.communities.size() == 2);
    CHECK(g.communities[0].id == "c1");
    CHECK(g.communities[1].id == "c2");
    CHECK(g.communities[0].members < g.communities[1].members);
    for (const Community& c : g.communities) CHECK(c.timeframe == 1);
}

TEST_CASE("clique percolation merges cliques sharing all but one node") {
    NodeTable names;
    // two 4-cliques overlapping in three nodes chain into one community
    auto edges = clique_edges({"1", "2", "3", "4"});
    for (auto& e : clique_edges({"2", "3", "4", "5"})) edges.push_back(e);
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g = clique_percolation(s, 4);
    REQUIRE(g.communities.size() == 1);
    CHECK(g.communities[0].members == ids(names, {"1", "2", "3", "4", "5"}));
    CHECK(g.overlapping);
    CHECK(g.source.detector == Detector::clique_percolation);
    CHECK(g.source.k == 4);
}

TEST_CASE("clique percolation keeps weakly overlapping cliques apart") {
    NodeTable names;
    // sharing only two nodes is below the k-1 adjacency requirement
    auto edges = clique_edges({"1", "2", "3", "4"});
    for (auto& e : clique_edges({"3", "4", "5", "6"})) edges.push_back(e);
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g = clique_percolation(s, 4);
    REQUIRE(g.communities.size() == 2);
    std::set<std::vector<NodeId>> want = {ids(names, {"1", "2", "3", "4"}),
                                          ids(names, {"3", "4", "5", "6"})};
    CHECK(community_sets(g) == want);
}

TEST_CASE("nodes outside any k-clique never enter a community") {
    NodeTable names;
    auto edges = clique_edges({"1", "2", "3"});
    Snapshot s = make_snap(names, 1, edges);
    CHECK(clique_percolation(s, 4).communities.empty());
    GroupingResult g3 = clique_percolation(s, 3);
    REQUIRE(g3.communities.size() == 1);
    CHECK(g3.communities[0].members == ids(names, {"1", "2", "3"}));
}

TEST_CASE("triangle chains percolate at k three") {
    NodeTable names;
    // triangles 1-2-3, 2-3-4, 4-5-6: the first two share an edge, the third
    // hangs on by a single node and stays separate
    std::vector<std::pair<std::string, std::string>> edges = {
        {"1", "2"}, {"1", "3"}, {"2", "3"}, {"2", "4"}, {"3", "4"},
        {"4", "5"}, {"4", "6"}, {"5", "6"},
    };
    Snapshot s = make_snap(names, 1, edges);
    GroupingResult g = clique_percolation(s, 3);
    std::set<std::vector<NodeId>> want = {ids(names, {"1", "2", "3", "4"}),
                                          ids(names, {"4", "5", "6"})};
    CHECK(community_sets(g) == want);
}

TEST_CASE("clique percolation rejects k below three") {
    NodeTable names;
    Snapshot s = make_snap(names, 1, clique_edges({"1", "2", "3"}));
    CHECK_THROWS_AS((void)clique_percolation(s, 2), std::invalid_argument);
}

TEST_CASE("clique percolation agrees with the brute-force oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        double p = 0.25 + 0.1 * static_cast<double>(rng() % 6);
        NodeTable names;
        std::vector<std::pair<std::string, std::string>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p)
                    edges.push_back({"v" + std::to_string(i), "v" + std::to_string(j)});
        if (edges.empty()) continue;
        Snapshot s = make_snap(names, 1, edges);
        for (int k : {3, 4}) {
            GroupingResult g = clique_percolation(s, k);
            CHECK(community_sets(g) == testutil::cpm_oracle(s, k));
        }
    }
}

TEST_CASE("imported groupings align to frames and keep groups verbatim") {
    std::vector<TemporalEdge> edges = {{"a", "b", 0.0, 1.0}, {"b", "c", 0.0, 1.0},
                                       {"a", "b", 1.0, 1.0}};
    TemporalSocialNetwork tsn = slice(edges, {SliceMode::disjoint, 1.0, 0.0});
    REQUIRE(tsn.frame_count() == 2);
    std::istringstream in(
        "# external partition\n"
        "1 g1 a\n"
        "1 g1 b\n"
        "1 g2 c\n");
    std::vector<GroupingResult> gs = import_groupings(in, tsn);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].timeframe == 1);
    REQUIRE(gs[0].communities.size() == 2);
    CHECK(gs[0].communities[0].id == "g1");
    CHECK(gs[0].communities[0].members == ids(tsn.names, {"a", "b"}));
    CHECK(gs[0].communities[1].size() == 1);  // no minimum-size filtering
    CHECK(!gs[0].overlapping);
    CHECK(gs[0].source.detector == Detector::imported);
    CHECK(gs[1].communities.empty());  // frame without lines comes back empty
}

TEST_CASE("imported overlap is inferred from shared nodes") {
    std::vector<TemporalEdge> edges = {{"a", "b", 0.0, 1.0}, {"b", "c", 0.0, 1.0}};
    TemporalSocialNetwork tsn = slice(edges, {SliceMode::disjoint, 1.0, 0.0});
    std::istringstream in(
        "1 g1 a\n"
        "1 g1 b\n"
        "1 g2 b\n"
        "1 g2 c\n");
    std::vector<GroupingResult> gs = import_groupings(in, tsn);
    CHECK(gs[0].overlapping);
}

TEST_CASE("imported groupings reject unknown frames and absent nodes") {
    std::vector<TemporalEdge> edges = {{"a", "b", 0.0, 1.0}, {"c", "d", 1.0, 1.0},
                                       {"e", "f", 2.0, 1.0}};
    TemporalSocialNetwork tsn = slice(edges, {SliceMode::disjoint, 1.0, 0.0});
    REQUIRE(tsn.frame_count() == 3);

    std::istringstream bad_frame("9 g1 a\n");
    CHECK_THROWS_AS((void)import_groupings(bad_frame, tsn), std::runtime_error);

    // node exists in the network but not in frame 2's snapshot
    std::istringstream bad_node("2 g1 a\n");
    try {
        (void)import_groupings(bad_node, tsn);
        FAIL("expected a diagnostic");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("a") != std::string::npos);
    }

    std::istringstream bad_arity("1 g1\n");
    CHECK_THROWS_AS((void)import_groupings(bad_arity, tsn), std::runtime_error);
}

TEST_CASE("uniform importance weights every member alike") {
    NodeTable names;
    Snapshot s = make_snap(names, 1, {{"a", "b"}, {"b", "c"}});
    Community c = testutil::comm(names, "g", 1, {"a", "b", "c"});
    NodeImportanceMap ni = compute_node_importance(s, c, ImportanceMeasure::uniform);
    CHECK(ni.community_id == "g");
    REQUIRE(ni.values.size() == 3);
    for (const auto& [node, v] : ni.values) CHECK(v == 1.0);
}

TEST_CASE("degree importance counts fellow members plus one") {
    NodeTable names;
    // path a-b-c: ends touch one member, the middle two
    Snapshot s = make_snap(names, 1, {{"a", "b"}, {"b", "c"}});
    Community c = testutil::comm(names, "g", 1, {"a", "b", "c"});
    NodeImportanceMap ni = compute_node_importance(s, c, ImportanceMeasure::in_group_degree);
    CHECK(ni.values.at(names.lookup("a")) == 2.0);
    CHECK(ni.values.at(names.lookup("b")) == 3.0);
    CHECK(ni.values.at(names.lookup("c")) == 2.0);
}

TEST_CASE("degree importance ignores edges leaving the group and never vanishes") {
    NodeTable names;
    // d has only an outside neighbor x, so inside the group it scores 1
    Snapshot s = make_snap(names, 1, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "x"}});
    Community c = testutil::comm(names, "g", 1, {"a", "b", "c", "d"});
    NodeImportanceMap ni = compute_node_importance(s, c, ImportanceMeasure::in_group_degree);
    CHECK(ni.values.at(names.lookup("a")) == 3.0);
    CHECK(ni.values.at(names.lookup("d")) == 1.0);
    for (const auto& [node, v] : ni.values) CHECK(v > 0.0);
}

TEST_CASE("degree importance counts neighbors, not weights") {
    NodeTable names;
    Snapshot s = make_snap(names, 1, {{"a", "b"}, {"b", "c"}}, 5.0);
    Community c = testutil::comm(names, "g", 1, {"a", "b", "c"});
    NodeImportanceMap ni = compute_node_importance(s, c, ImportanceMeasure::in_group_degree);
    CHECK(ni.values.at(names.lookup("b")) == 3.0);
}

}  // TEST_SUITE
