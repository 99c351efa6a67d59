#include "gevo/palla.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <stdexcept>
#include <utility>

namespace gevo {

void PallaParams::validate() const {
    if (k < 3) throw std::invalid_argument("palla: k must be at least 3");
    if (min_size < 1) throw std::invalid_argument("palla: min_size must be positive");
}

namespace {

std::size_t isect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

bool is_subset(const std::vector<NodeId>& sub, const std::vector<NodeId>& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// index of the joint group the community belongs to, or -1
int attach(const Community& c, const std::vector<Community>& joint_groups) {
    for (std::size_t i = 0; i < joint_groups.size(); ++i)
        if (is_subset(c.members, joint_groups[i].members)) return static_cast<int>(i);
    // percolation at matching k keeps every frame community inside one joint
    // group; anything else is degenerate input, resolved by largest overlap
    int best = -1;
    std::size_t best_common = 0;
    for (std::size_t i = 0; i < joint_groups.size(); ++i) {
        std::size_t common = isect(c.members, joint_groups[i].members);
        if (common > best_common) { best_common = common; best = static_cast<int>(i); }
    }
    if (best >= 0)
        std::cerr << "warning: community " << c.id << " in frame " << c.timeframe
                  << " straddles joint groups, attached by largest overlap\n";
    return best;
}

}  // namespace

Snapshot joint_graph(const Snapshot& s1, const Snapshot& s2) {
    Snapshot joint;
    joint.index = s1.index;
    joint.interval = {s1.interval.start, s2.interval.end};

    joint.nodes.reserve(s1.nodes.size() + s2.nodes.size());
    std::set_union(s1.nodes.begin(), s1.nodes.end(), s2.nodes.begin(), s2.nodes.end(),
                   std::back_inserter(joint.nodes));

    // one entry per unordered pair, weight the max over directions and frames
    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const Snapshot* s : {&s1, &s2}) {
        for (const SnapshotEdge& e : s->edges) {
            auto key = std::minmax(e.src, e.dst);
            auto [it, inserted] = merged.emplace(key, e.weight);
            if (!inserted && e.weight > it->second) it->second = e.weight;
        }
    }
    joint.edges.reserve(merged.size());
    for (const auto& [key, w] : merged) joint.edges.push_back({key.first, key.second, w});
    return joint;
}

double relative_overlap(const std::vector<NodeId>& c1, const std::vector<NodeId>& c2) {
    if (c1.empty() && c2.empty())
        throw std::invalid_argument("relative_overlap: both sets empty");
    std::size_t common = isect(c1, c2);
    std::size_t unioned = c1.size() + c2.size() - common;
    return static_cast<double>(common) / static_cast<double>(unioned);
}

std::vector<EventRecord> run_palla(const Snapshot& s1, const Snapshot& s2,
                                   const GroupingResult& g1, const GroupingResult& g2,
                                   const PallaParams& params) {
    params.validate();
    for (const GroupingResult* g : {&g1, &g2}) {
        if (g->source.detector != Detector::clique_percolation || g->source.k != params.k)
            throw std::invalid_argument(
                "palla: groupings must come from clique percolation with the matcher's k");
    }

    Snapshot joint = joint_graph(s1, s2);
    GroupingResult jg = clique_percolation(joint, params.k, params.min_size);
    const std::vector<Community>& joint_groups = jg.communities;

    // joint group index -> attached community indices, per side
    std::vector<std::vector<int>> side1(joint_groups.size()), side2(joint_groups.size());
    for (std::size_t i = 0; i < g1.communities.size(); ++i) {
        int at = attach(g1.communities[i], joint_groups);
        if (at >= 0) side1[at].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < g2.communities.size(); ++i) {
        int at = attach(g2.communities[i], joint_groups);
        if (at >= 0) side2[at].push_back(static_cast<int>(i));
    }

    std::vector<EventRecord> events;
    std::vector<bool> in_record1(g1.communities.size(), false);
    std::vector<bool> in_record2(g2.communities.size(), false);

    auto make = [&](EventType t) {
        EventRecord e;
        e.method = "palla";
        e.type = t;
        e.frame_i = g1.timeframe;
        e.frame_j = g2.timeframe;
        return e;
    };

    for (std::size_t jgi = 0; jgi < joint_groups.size(); ++jgi) {
        const std::vector<int>& a_idx = side1[jgi];
        const std::vector<int>& b_idx = side2[jgi];

        // greedy maximum-overlap matching inside the joint group
        struct Cand { double overlap; int a; int b; };
        std::vector<Cand> cands;
        for (int a : a_idx) {
            for (int b : b_idx) {
                double ov = relative_overlap(g1.communities[a].members, g2.communities[b].members);
                if (ov > 0) cands.push_back({ov, a, b});
            }
        }
        std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
            if (x.overlap != y.overlap) return x.overlap > y.overlap;
            if (g1.communities[x.a].id != g1.communities[y.a].id)
                return g1.communities[x.a].id < g1.communities[y.a].id;
            return g2.communities[x.b].id < g2.communities[y.b].id;
        });
        std::vector<bool> used_a(g1.communities.size(), false), used_b(g2.communities.size(), false);
        for (const Cand& c : cands) {
            if (used_a[c.a] || used_b[c.b]) continue;
            used_a[c.a] = used_b[c.b] = true;
            const Community& ca = g1.communities[c.a];
            const Community& cb = g2.communities[c.b];
            EventType t = ca.size() < cb.size()   ? EventType::growing
                          : ca.size() > cb.size() ? EventType::shrinking
                                                  : EventType::continuing;
            EventRecord e = make(t);
            e.sources = {ca.id};
            e.targets = {cb.id};
            e.i12 = c.overlap;
            events.push_back(std::move(e));
            in_record1[c.a] = in_record2[c.b] = true;
        }

        // one source scattering over several counterparts splits; the mirror
        // merges; neither requires the counterparts to have won the pairing
        for (int a : a_idx) {
            std::vector<int> hits;
            for (int b : b_idx)
                if (isect(g1.communities[a].members, g2.communities[b].members) > 0)
                    hits.push_back(b);
            if (hits.size() < 2) continue;
            for (int b : hits) {
                EventRecord e = make(EventType::splitting);
                e.sources = {g1.communities[a].id};
                e.targets = {g2.communities[b].id};
                e.i12 = relative_overlap(g1.communities[a].members, g2.communities[b].members);
                events.push_back(std::move(e));
                in_record1[a] = in_record2[b] = true;
            }
        }
        for (int b : b_idx) {
            std::vector<int> hits;
            for (int a : a_idx)
                if (isect(g1.communities[a].members, g2.communities[b].members) > 0)
                    hits.push_back(a);
            if (hits.size() < 2) continue;
            for (int a : hits) {
                EventRecord e = make(EventType::merging);
                e.sources = {g1.communities[a].id};
                e.targets = {g2.communities[b].id};
                e.i12 = relative_overlap(g1.communities[a].members, g2.communities[b].members);
                events.push_back(std::move(e));
                in_record1[a] = in_record2[b] = true;
            }
        }
    }

    // communities touched by nothing die or are born
    for (std::size_t i = 0; i < g1.communities.size(); ++i) {
        if (in_record1[i]) continue;
        EventRecord e = make(EventType::dissolving);
        e.sources = {g1.communities[i].id};
        events.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < g2.communities.size(); ++i) {
        if (in_record2[i]) continue;
        EventRecord e = make(EventType::forming);
        e.targets = {g2.communities[i].id};
        events.push_back(std::move(e));
    }

    sort_events(events);
    return events;
}

std::vector<EventRecord> run_palla_all(const TemporalSocialNetwork& tsn,
                                       const std::vector<GroupingResult>& groupings,
                                       const PallaParams& params) {
    if (groupings.size() != tsn.frame_count())
        throw std::invalid_argument("palla: one grouping per timeframe required");
    for (std::size_t i = 0; i < groupings.size(); ++i)
        if (groupings[i].timeframe != static_cast<int>(i) + 1)
            throw std::invalid_argument("palla: groupings out of frame order");

    std::vector<EventRecord> events;
    for (std::size_t i = 0; i + 1 < groupings.size(); ++i) {
        std::vector<EventRecord> pair_events =
            run_palla(tsn.snapshots[i], tsn.snapshots[i + 1], groupings[i], groupings[i + 1], params);
        events.insert(events.end(), std::make_move_iterator(pair_events.begin()),
                      std::make_move_iterator(pair_events.end()));
    }
    sort_events(events);
    return events;
}

}  // namespace gevo
