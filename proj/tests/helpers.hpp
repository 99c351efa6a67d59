#pragma once

// Shared fixture builders and independent oracles for the test binaries.
// Oracles use brute-force definitions on purpose; keep them free of the
// library's own algorithmic shortcuts.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gevo/chains.hpp"
#include "gevo/communities.hpp"
#include "gevo/event.hpp"
#include "gevo/temporal.hpp"

namespace testutil {

using gevo::NodeId;

// snapshot over a shared node table; duplicate directed pairs aggregate
inline gevo::Snapshot make_snap(gevo::NodeTable& names, int index,
                                const std::vector<std::pair<std::string, std::string>>& edges,
                                double weight = 1.0) {
    std::map<std::pair<NodeId, NodeId>, double> agg;
    for (const auto& [a, b] : edges) agg[{names.intern(a), names.intern(b)}] += weight;
    gevo::Snapshot s;
    s.index = index;
    s.interval = {static_cast<double>(index - 1), static_cast<double>(index)};
    for (const auto& [key, w] : agg) {
        s.edges.push_back({key.first, key.second, w});
        s.nodes.push_back(key.first);
        s.nodes.push_back(key.second);
    }
    std::sort(s.nodes.begin(), s.nodes.end());
    s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
    return s;
}

// one direction per unordered pair is enough, detectors symmetrize
inline std::vector<std::pair<std::string, std::string>> clique_edges(
    const std::vector<std::string>& nodes) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) out.push_back({nodes[i], nodes[j]});
    return out;
}

inline std::vector<std::pair<std::string, std::string>> cycle_edges(
    const std::vector<std::string>& nodes) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out.push_back({nodes[i], nodes[(i + 1) % nodes.size()]});
    return out;
}

inline std::vector<NodeId> ids(gevo::NodeTable& names, const std::vector<std::string>& members) {
    std::vector<NodeId> out;
    out.reserve(members.size());
    for (const std::string& m : members) out.push_back(names.intern(m));
    std::sort(out.begin(), out.end());
    return out;
}

inline gevo::Community comm(gevo::NodeTable& names, const std::string& id, int frame,
                            const std::vector<std::string>& members) {
    gevo::Community c;
    c.id = id;
    c.timeframe = frame;
    c.members = ids(names, members);
    return c;
}

inline gevo::GroupingResult grouping(int frame, std::vector<gevo::Community> communities,
                                     gevo::GroupingSource source = {gevo::Detector::imported, 0},
                                     bool overlapping = false) {
    gevo::GroupingResult g;
    g.timeframe = frame;
    g.communities = std::move(communities);
    g.overlapping = overlapping;
    g.source = source;
    return g;
}

// event skeleton for list comparisons that ignore the diagnostic measures
struct EventShape {
    gevo::EventType type;
    int frame_i;
    int frame_j;
    std::vector<std::string> sources;
    std::vector<std::string> targets;

    bool operator==(const EventShape&) const = default;
};

inline std::vector<EventShape> shapes(const std::vector<gevo::EventRecord>& events) {
    std::vector<EventShape> out;
    out.reserve(events.size());
    for (const gevo::EventRecord& e : events)
        out.push_back({e.type, e.frame_i, e.frame_j, e.sources, e.targets});
    return out;
}

// ---- independent oracles ----

// clique percolation from first principles: every k-node clique, adjacency
// on sharing k-1 nodes, connected components, node unions
inline std::set<std::vector<NodeId>> cpm_oracle(const gevo::Snapshot& s, int k) {
    gevo::UndirectedAdjacency adj = gevo::undirected_adjacency(s);
    std::set<std::pair<NodeId, NodeId>> links;
    for (const auto& [n, nbrs] : adj)
        for (const auto& [m, w] : nbrs) links.insert({n, m});

    const std::vector<NodeId>& nodes = s.nodes;
    std::vector<std::vector<NodeId>> cliques;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == pick.size()) {
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    if (!links.count({nodes[pick[i]], nodes[pick[j]]})) return;
            std::vector<NodeId> c;
            for (std::size_t p : pick) c.push_back(nodes[p]);
            cliques.push_back(std::move(c));
            return;
        }
        for (std::size_t i = start; i + (pick.size() - depth) <= nodes.size(); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (nodes.size() >= pick.size()) rec(0, 0);

    std::vector<std::size_t> parent(cliques.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            std::vector<NodeId> common;
            std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                                  cliques[j].end(), std::back_inserter(common));
            if (common.size() >= static_cast<std::size_t>(k - 1)) parent[find(i)] = find(j);
        }

    std::map<std::size_t, std::set<NodeId>> members;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        members[find(i)].insert(cliques[i].begin(), cliques[i].end());
    std::set<std::vector<NodeId>> out;
    for (const auto& [root, nodes_of] : members)
        out.insert(std::vector<NodeId>(nodes_of.begin(), nodes_of.end()));
    return out;
}

inline std::set<std::vector<NodeId>> community_sets(const gevo::GroupingResult& g) {
    std::set<std::vector<NodeId>> out;
    for (const gevo::Community& c : g.communities) out.insert(c.members);
    return out;
}

inline double jaccard_oracle(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::set<NodeId> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::set<NodeId> uni = sa;
    uni.insert(sb.begin(), sb.end());
    std::size_t common = 0;
    for (NodeId n : sa) common += sb.count(n);
    return uni.empty() ? 0.0 : static_cast<double>(common) / static_cast<double>(uni.size());
}

// maximal root-to-sink path count by dynamic programming, independent of
// the chain extraction walk
inline long path_count_oracle(const gevo::LineageGraph& lg) {
    std::vector<long> memo(lg.nodes.size(), -1);
    std::function<long(std::size_t)> paths = [&](std::size_t n) -> long {
        if (lg.nodes[n].out_arcs.empty()) return 1;
        if (memo[n] >= 0) return memo[n];
        long total = 0;
        for (int a : lg.nodes[n].out_arcs) total += paths(static_cast<std::size_t>(lg.arcs[a].dst));
        return memo[n] = total;
    };
    long total = 0;
    for (std::size_t i = 0; i < lg.nodes.size(); ++i)
        if (lg.nodes[i].in_arcs.empty()) total += paths(i);
    return total;
}

// hand-encoded decision table for the pairwise classifier: one row per
// (cleared-thresholds pattern, size ordering, forward count, backward count).
// Kept as literal data so the implementation cannot share bugs with it.
struct ClassifyCase {
    bool m1;  // I(G1,G2) cleared alpha
    bool m2;  // I(G2,G1) cleared beta
    int cmp;  // -1: |G1|<|G2|, 0: equal, +1: |G1|>|G2|
    int fwd;
    int bwd;
    std::optional<gevo::EventType> expected;
};

inline const std::vector<ClassifyCase>& classify_oracle_table() {
    using T = gevo::EventType;
    static const std::optional<T> none = std::nullopt;
    static const std::vector<ClassifyCase> table = {
        // both cleared: size comparison alone decides
        {true, true, 1, 0, 0, T::shrinking},  {true, true, 1, 0, 1, T::shrinking},
        {true, true, 1, 0, 2, T::shrinking},  {true, true, 1, 1, 0, T::shrinking},
        {true, true, 1, 1, 1, T::shrinking},  {true, true, 1, 1, 2, T::shrinking},
        {true, true, 1, 2, 0, T::shrinking},  {true, true, 1, 2, 1, T::shrinking},
        {true, true, 1, 2, 2, T::shrinking},
        {true, true, 0, 0, 0, T::continuing}, {true, true, 0, 0, 1, T::continuing},
        {true, true, 0, 0, 2, T::continuing}, {true, true, 0, 1, 0, T::continuing},
        {true, true, 0, 1, 1, T::continuing}, {true, true, 0, 1, 2, T::continuing},
        {true, true, 0, 2, 0, T::continuing}, {true, true, 0, 2, 1, T::continuing},
        {true, true, 0, 2, 2, T::continuing},
        {true, true, -1, 0, 0, T::growing},   {true, true, -1, 0, 1, T::growing},
        {true, true, -1, 0, 2, T::growing},   {true, true, -1, 1, 0, T::growing},
        {true, true, -1, 1, 1, T::growing},   {true, true, -1, 1, 2, T::growing},
        {true, true, -1, 2, 0, T::growing},   {true, true, -1, 2, 1, T::growing},
        {true, true, -1, 2, 2, T::growing},
        // forward only, source not smaller: several forward matches split,
        // otherwise a single backward match shrinks
        {true, false, 1, 0, 0, none},         {true, false, 1, 0, 1, T::shrinking},
        {true, false, 1, 0, 2, none},         {true, false, 1, 1, 0, none},
        {true, false, 1, 1, 1, T::shrinking}, {true, false, 1, 1, 2, none},
        {true, false, 1, 2, 0, T::splitting}, {true, false, 1, 2, 1, T::splitting},
        {true, false, 1, 2, 2, T::splitting},
        {true, false, 0, 0, 0, none},         {true, false, 0, 0, 1, T::shrinking},
        {true, false, 0, 0, 2, T::merging},   {true, false, 0, 1, 0, none},
        {true, false, 0, 1, 1, T::shrinking}, {true, false, 0, 1, 2, T::merging},
        {true, false, 0, 2, 0, T::splitting}, {true, false, 0, 2, 1, T::splitting},
        {true, false, 0, 2, 2, T::splitting},
        {true, false, -1, 0, 0, none},        {true, false, -1, 0, 1, none},
        {true, false, -1, 0, 2, T::merging},  {true, false, -1, 1, 0, T::growing},
        {true, false, -1, 1, 1, T::growing},  {true, false, -1, 1, 2, T::merging},
        {true, false, -1, 2, 0, none},        {true, false, -1, 2, 1, none},
        {true, false, -1, 2, 2, T::merging},
        // backward only: mirrors the forward-only block, except the
        // equal-size single-match tie leans toward growing
        {false, true, 1, 0, 0, none},         {false, true, 1, 0, 1, T::shrinking},
        {false, true, 1, 0, 2, none},         {false, true, 1, 1, 0, none},
        {false, true, 1, 1, 1, T::shrinking}, {false, true, 1, 1, 2, none},
        {false, true, 1, 2, 0, T::splitting}, {false, true, 1, 2, 1, T::splitting},
        {false, true, 1, 2, 2, T::splitting},
        {false, true, 0, 0, 0, none},         {false, true, 0, 0, 1, none},
        {false, true, 0, 0, 2, T::merging},   {false, true, 0, 1, 0, T::growing},
        {false, true, 0, 1, 1, T::growing},   {false, true, 0, 1, 2, T::merging},
        {false, true, 0, 2, 0, T::splitting}, {false, true, 0, 2, 1, T::splitting},
        {false, true, 0, 2, 2, T::splitting},
        {false, true, -1, 0, 0, none},        {false, true, -1, 0, 1, none},
        {false, true, -1, 0, 2, T::merging},  {false, true, -1, 1, 0, T::growing},
        {false, true, -1, 1, 1, T::growing},  {false, true, -1, 1, 2, T::merging},
        {false, true, -1, 2, 0, none},        {false, true, -1, 2, 1, none},
        {false, true, -1, 2, 2, T::merging},
        // neither cleared: never an event
        {false, false, 1, 0, 0, none},  {false, false, 1, 0, 1, none},
        {false, false, 1, 0, 2, none},  {false, false, 1, 1, 0, none},
        {false, false, 1, 1, 1, none},  {false, false, 1, 1, 2, none},
        {false, false, 1, 2, 0, none},  {false, false, 1, 2, 1, none},
        {false, false, 1, 2, 2, none},
        {false, false, 0, 0, 0, none},  {false, false, 0, 0, 1, none},
        {false, false, 0, 0, 2, none},  {false, false, 0, 1, 0, none},
        {false, false, 0, 1, 1, none},  {false, false, 0, 1, 2, none},
        {false, false, 0, 2, 0, none},  {false, false, 0, 2, 1, none},
        {false, false, 0, 2, 2, none},
        {false, false, -1, 0, 0, none}, {false, false, -1, 0, 1, none},
        {false, false, -1, 0, 2, none}, {false, false, -1, 1, 0, none},
        {false, false, -1, 1, 1, none}, {false, false, -1, 1, 2, none},
        {false, false, -1, 2, 0, none}, {false, false, -1, 2, 1, none},
        {false, false, -1, 2, 2, none},
    };
    return table;
}

// the bit masks of a small universe as sorted member vectors
inline std::vector<std::vector<NodeId>> mask_sets(int universe) {
    std::vector<std::vector<NodeId>> sets(static_cast<std::size_t>(1) << universe);
    for (std::size_t mask = 0; mask < sets.size(); ++mask)
        for (int bit = 0; bit < universe; ++bit)
            if (mask & (static_cast<std::size_t>(1) << bit)) sets[mask].push_back(static_cast<NodeId>(bit));
    return sets;
}

}  // namespace testutil
