#include "gevo/communities.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gevo/rng.hpp"

namespace gevo {

namespace {

// Communities are sorted by member list and renamed c1, c2, ... so detector
// output is stable for a given input.
std::vector<Community> finalize_communities(std::vector<std::vector<NodeId>> groups,
                                            int timeframe, int min_size) {
    std::vector<Community> out;
    groups.erase(std::remove_if(groups.begin(), groups.end(),
                                [&](const std::vector<NodeId>& g) {
                                    return g.size() < static_cast<std::size_t>(min_size);
                                }),
                 groups.end());
    std::sort(groups.begin(), groups.end());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        Community c;
        c.id = "c" + std::to_string(i + 1);
        c.timeframe = timeframe;
        c.members = std::move(groups[i]);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

GroupingResult label_propagation(const Snapshot& s, std::uint64_t seed, int min_size) {
    if (min_size < 1) throw std::invalid_argument("label_propagation: min_size must be >= 1");
    UndirectedAdjacency adj = undirected_adjacency(s);

    std::vector<NodeId> order(s.nodes);
    std::map<NodeId, NodeId> label;
    for (NodeId n : s.nodes) label[n] = n;

    Rng rng(seed);
    const int max_rounds = 100;
    for (int round = 0; round < max_rounds; ++round) {
        rng.shuffle(order);
        std::size_t changed = 0;
        for (NodeId n : order) {
            const auto& nbrs = adj[n];
            if (nbrs.empty()) continue;
            // weighted label vote over the neighborhood
            std::map<NodeId, double> votes;
            for (const auto& [m, w] : nbrs) votes[label[m]] += w;
            double best = 0;
            for (const auto& [l, w] : votes) best = std::max(best, w);
            std::vector<NodeId> top;
            for (const auto& [l, w] : votes)
                if (w == best) top.push_back(l);
            if (std::find(top.begin(), top.end(), label[n]) != top.end()) continue;
            label[n] = top[rng.bounded(top.size())];
            ++changed;
        }
        if (changed == 0) break;
    }

    std::map<NodeId, std::vector<NodeId>> classes;
    for (NodeId n : s.nodes) classes[label[n]].push_back(n);
    std::vector<std::vector<NodeId>> groups;
    for (auto& [l, members] : classes) groups.push_back(std::move(members));

    GroupingResult result;
    result.timeframe = s.index;
    result.communities = finalize_communities(std::move(groups), s.index, min_size);
    result.overlapping = false;
    result.source = {Detector::label_propagation, 0};
    return result;
}

namespace {

using AdjSets = std::map<NodeId, std::vector<NodeId>>;

bool adjacent(const AdjSets& adj, NodeId a, NodeId b) {
    const auto& v = adj.at(a);
    return std::binary_search(v.begin(), v.end(), b);
}

// Bron-Kerbosch with pivoting; reports each maximal clique as a sorted
// member vector.
void bron_kerbosch(const AdjSets& adj, std::vector<NodeId>& r, std::vector<NodeId> p,
                   std::vector<NodeId> x, std::vector<std::vector<NodeId>>& out) {
    if (p.empty() && x.empty()) {
        std::vector<NodeId> clique(r);
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
        return;
    }
    // pivot: vertex of P u X with most neighbors inside P
    NodeId pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (const std::vector<NodeId>* side : {&p, &x}) {
        for (NodeId u : *side) {
            const auto& nu = adj.at(u);
            std::size_t cnt = 0;
            for (NodeId v : p)
                if (std::binary_search(nu.begin(), nu.end(), v)) ++cnt;
            if (!have || cnt > best) {
                pivot = u;
                best = cnt;
                have = true;
            }
        }
    }
    std::vector<NodeId> candidates;
    for (NodeId v : p)
        if (!adjacent(adj, pivot, v)) candidates.push_back(v);
    for (NodeId v : candidates) {
        const auto& nv = adj.at(v);
        std::vector<NodeId> p2, x2;
        for (NodeId u : p)
            if (std::binary_search(nv.begin(), nv.end(), u)) p2.push_back(u);
        for (NodeId u : x)
            if (std::binary_search(nv.begin(), nv.end(), u)) x2.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

std::size_t intersection_count(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GroupingResult clique_percolation(const Snapshot& s, int k, int min_size) {
    if (k < 3) throw std::invalid_argument("clique_percolation: k must be >= 3");
    if (min_size < 1) throw std::invalid_argument("clique_percolation: min_size must be >= 1");

    AdjSets adj;
    for (NodeId n : s.nodes) adj[n];
    for (const auto& [n, nbrs] : undirected_adjacency(s))
        for (const auto& [m, w] : nbrs) adj[n].push_back(m);

    std::vector<std::vector<NodeId>> cliques;
    {
        std::vector<NodeId> r, p(s.nodes), x;
        bron_kerbosch(adj, r, std::move(p), x, cliques);
    }
    // Only maximal cliques of size >= k host any k-clique. Two of them carry
    // percolation-adjacent k-cliques exactly when they share k-1 nodes, so
    // connected components of that relation are the communities.
    cliques.erase(std::remove_if(cliques.begin(), cliques.end(),
                                 [&](const std::vector<NodeId>& c) {
                                     return c.size() < static_cast<std::size_t>(k);
                                 }),
                  cliques.end());
    std::sort(cliques.begin(), cliques.end());

    std::map<NodeId, std::vector<int>> node_cliques;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (NodeId n : cliques[i]) node_cliques[n].push_back(static_cast<int>(i));

    UnionFind uf(cliques.size());
    std::set<std::pair<int, int>> tested;
    for (const auto& [n, list] : node_cliques) {
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                auto key = std::minmax(list[a], list[b]);
                if (!tested.insert(key).second) continue;
                if (intersection_count(cliques[key.first], cliques[key.second]) >=
                    static_cast<std::size_t>(k - 1))
                    uf.join(key.first, key.second);
            }
        }
    }

    std::map<int, std::set<NodeId>> unions;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        auto& u = unions[uf.find(static_cast<int>(i))];
        u.insert(cliques[i].begin(), cliques[i].end());
    }
    std::vector<std::vector<NodeId>> groups;
    for (const auto& [root, members] : unions)
        groups.emplace_back(members.begin(), members.end());

    GroupingResult result;
    result.timeframe = s.index;
    result.communities = finalize_communities(std::move(groups), s.index, min_size);
    result.overlapping = true;
    result.source = {Detector::clique_percolation, k};
    return result;
}

std::vector<GroupingResult> import_groupings(std::istream& in,
                                             const TemporalSocialNetwork& tsn) {
    const int m = static_cast<int>(tsn.frame_count());
    // frame -> group id -> member names (set keeps duplicates idempotent)
    std::map<int, std::map<std::string, std::set<std::string>>> raw;
    std::vector<std::string> offenders;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, c, extra;
        if (!(fields >> a)) continue;
        if (a[0] == '#') continue;
        if (!(fields >> b >> c) || (fields >> extra)) {
            throw std::runtime_error("groupings line " + std::to_string(line_no) +
                                     ": expected 'timeframe group_id node'");
        }
        int frame = 0;
        try {
            std::size_t pos = 0;
            frame = std::stoi(a, &pos);
            if (pos != a.size()) throw std::invalid_argument(a);
        } catch (const std::exception&) {
            throw std::runtime_error("groupings line " + std::to_string(line_no) +
                                     ": bad timeframe '" + a + "'");
        }
        if (frame < 1 || frame > m) {
            offenders.push_back("line " + std::to_string(line_no) + ": timeframe " +
                                std::to_string(frame) + " outside 1.." + std::to_string(m));
            continue;
        }
        if (!tsn.names.contains(c) || !tsn.snapshot_at(frame).has_node(tsn.names.lookup(c))) {
            offenders.push_back("line " + std::to_string(line_no) + ": node '" + c +
                                "' not present in timeframe " + std::to_string(frame));
            continue;
        }
        raw[frame][b].insert(c);
    }
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << "groupings rejected, " << offenders.size() << " offender(s):";
        std::size_t shown = std::min<std::size_t>(offenders.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) msg << "\n  " << offenders[i];
        if (shown < offenders.size()) msg << "\n  ...";
        throw std::runtime_error(msg.str());
    }

    std::vector<GroupingResult> out(static_cast<std::size_t>(m));
    for (int f = 1; f <= m; ++f) {
        GroupingResult& g = out[static_cast<std::size_t>(f) - 1];
        g.timeframe = f;
        g.source = {Detector::imported, 0};
        auto it = raw.find(f);
        if (it == raw.end()) continue;
        std::map<NodeId, int> seen;
        for (const auto& [gid, members] : it->second) {
            Community c;
            c.id = gid;
            c.timeframe = f;
            for (const std::string& name : members) c.members.push_back(tsn.names.lookup(name));
            std::sort(c.members.begin(), c.members.end());
            for (NodeId n : c.members) ++seen[n];
            g.communities.push_back(std::move(c));
        }
        for (const auto& [n, cnt] : seen)
            if (cnt > 1) g.overlapping = true;
    }
    return out;
}

NodeImportanceMap compute_node_importance(const Snapshot& s, const Community& c,
                                          ImportanceMeasure measure) {
    if (c.members.empty())
        throw std::invalid_argument("compute_node_importance: empty community");
    NodeImportanceMap ni;
    ni.community_id = c.id;
    if (measure == ImportanceMeasure::uniform) {
        for (NodeId n : c.members) ni.values[n] = 1.0;
        return ni;
    }
    // 1 + in-group degree over the symmetrized snapshot; the offset keeps
    // every value positive so inclusion denominators never vanish
    UndirectedAdjacency adj = undirected_adjacency(s);
    for (NodeId n : c.members) {
        double deg = 0;
        auto it = adj.find(n);
        if (it != adj.end()) {
            for (const auto& [m, w] : it->second)
                if (std::binary_search(c.members.begin(), c.members.end(), m)) deg += 1;
        }
        ni.values[n] = 1.0 + deg;
    }
    return ni;
}

}  // namespace gevo
