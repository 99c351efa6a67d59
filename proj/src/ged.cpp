#include "gevo/ged.hpp"

#include <algorithm>
#include <stdexcept>

namespace gevo {

void GedParams::validate() const {
    if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("ged: alpha must be in (0, 1]");
    if (!(beta > 0 && beta <= 1)) throw std::invalid_argument("ged: beta must be in (0, 1]");
    if (!(form_dissolve_threshold > 0 && form_dissolve_threshold < std::min(alpha, beta)))
        throw std::invalid_argument(
            "ged: form/dissolve threshold must satisfy 0 < threshold < min(alpha, beta)");
}

double inclusion(const std::vector<NodeId>& g1, const std::vector<NodeId>& g2,
                 const NodeImportanceMap& ni) {
    if (g1.empty()) throw std::invalid_argument("inclusion: empty source group");
    std::size_t common = 0;
    double ni_common = 0.0, ni_total = 0.0;
    std::size_t j = 0;
    for (NodeId x : g1) {
        auto it = ni.values.find(x);
        if (it == ni.values.end() || it->second <= 0)
            throw std::invalid_argument("inclusion: importance missing or non-positive for a member");
        ni_total += it->second;
        while (j < g2.size() && g2[j] < x) ++j;
        if (j < g2.size() && g2[j] == x) {
            ++common;
            ni_common += it->second;
        }
    }
    return (static_cast<double>(common) / static_cast<double>(g1.size())) * (ni_common / ni_total);
}

const PairInclusion& MatchMatrix::at(std::size_t src, std::size_t dst) const {
    return pairs[src * dst_count + dst];
}

MatchMatrix build_match_matrix(const GroupingResult& gi, const GroupingResult& gj,
                               const Snapshot& si, const Snapshot& sj, const GedParams& params) {
    params.validate();
    MatchMatrix mm;
    mm.src_count = gi.communities.size();
    mm.dst_count = gj.communities.size();
    mm.forward_matches.assign(mm.src_count, 0);
    mm.backward_matches.assign(mm.dst_count, 0);
    mm.pairs.reserve(mm.src_count * mm.dst_count);

    std::vector<NodeImportanceMap> ni_i, ni_j;
    for (const Community& c : gi.communities)
        ni_i.push_back(compute_node_importance(si, c, params.importance));
    for (const Community& c : gj.communities)
        ni_j.push_back(compute_node_importance(sj, c, params.importance));

    for (std::size_t a = 0; a < mm.src_count; ++a) {
        for (std::size_t b = 0; b < mm.dst_count; ++b) {
            const Community& g1 = gi.communities[a];
            const Community& g2 = gj.communities[b];
            PairInclusion p;
            p.src = a;
            p.dst = b;
            p.i12 = inclusion(g1.members, g2.members, ni_i[a]);
            p.i21 = inclusion(g2.members, g1.members, ni_j[b]);
            p.matched = p.i12 >= params.alpha || p.i21 >= params.beta;
            if (p.matched) {
                ++mm.forward_matches[a];
                ++mm.backward_matches[b];
            }
            mm.pairs.push_back(p);
        }
    }
    return mm;
}

std::optional<EventType> classify_pair(double i12, double i21, std::size_t size1,
                                       std::size_t size2, int forward_matches,
                                       int backward_matches, const GedParams& params) {
    const bool m1 = i12 >= params.alpha;
    const bool m2 = i21 >= params.beta;
    if (!m1 && !m2) return std::nullopt;

    if (m1 && m2) {
        if (size1 > size2) return EventType::shrinking;
        if (size1 < size2) return EventType::growing;
        return EventType::continuing;
    }

    // One-sided pair. Multi-match outcomes take precedence: a source with
    // several next-frame matches is a split even when the single-match
    // shrinking clause also holds, and the same for merges.
    if (size1 >= size2 && forward_matches > 1) return EventType::splitting;
    if (size1 <= size2 && backward_matches > 1) return EventType::merging;

    if (size1 > size2) return backward_matches == 1 ? std::optional(EventType::shrinking) : std::nullopt;
    if (size1 < size2) return forward_matches == 1 ? std::optional(EventType::growing) : std::nullopt;

    // Equal sizes with single matches: the side that cleared its threshold
    // picks the branch, I(G1,G2) toward shrinking, I(G2,G1) toward growing.
    if (m1) return backward_matches == 1 ? std::optional(EventType::shrinking) : std::nullopt;
    return forward_matches == 1 ? std::optional(EventType::growing) : std::nullopt;
}

std::vector<EventRecord> detect_forming_dissolving(const GroupingResult& gi,
                                                   const GroupingResult& gj,
                                                   const MatchMatrix& mm,
                                                   const GedParams& params) {
    params.validate();
    const double thr = params.form_dissolve_threshold;
    std::vector<EventRecord> out;

    for (std::size_t a = 0; a < mm.src_count; ++a) {
        bool below = true;
        for (std::size_t b = 0; b < mm.dst_count && below; ++b) {
            const PairInclusion& p = mm.at(a, b);
            below = p.i12 < thr && p.i21 < thr;
        }
        if (below) {
            EventRecord e;
            e.method = "ged";
            e.type = EventType::dissolving;
            e.frame_i = gi.timeframe;
            e.frame_j = gj.timeframe;
            e.sources = {gi.communities[a].id};
            out.push_back(std::move(e));
        }
    }
    for (std::size_t b = 0; b < mm.dst_count; ++b) {
        bool below = true;
        for (std::size_t a = 0; a < mm.src_count && below; ++a) {
            const PairInclusion& p = mm.at(a, b);
            below = p.i12 < thr && p.i21 < thr;
        }
        if (below) {
            EventRecord e;
            e.method = "ged";
            e.type = EventType::forming;
            e.frame_i = gi.timeframe;
            e.frame_j = gj.timeframe;
            e.targets = {gj.communities[b].id};
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<EventRecord> run_ged(const std::vector<GroupingResult>& groupings,
                                 const TemporalSocialNetwork& tsn, const GedParams& params) {
    params.validate();
    if (groupings.size() != tsn.frame_count())
        throw std::invalid_argument("run_ged: groupings do not align with the network's frames");
    for (std::size_t i = 0; i < groupings.size(); ++i)
        if (groupings[i].timeframe != static_cast<int>(i) + 1)
            throw std::invalid_argument("run_ged: grouping timeframes must be consecutive from 1");

    std::vector<EventRecord> events;
    for (std::size_t i = 0; i + 1 < groupings.size(); ++i) {
        const GroupingResult& gi = groupings[i];
        const GroupingResult& gj = groupings[i + 1];
        MatchMatrix mm = build_match_matrix(gi, gj, tsn.snapshots[i], tsn.snapshots[i + 1], params);

        for (const PairInclusion& p : mm.pairs) {
            if (!p.matched) continue;
            auto type = classify_pair(p.i12, p.i21, gi.communities[p.src].size(),
                                      gj.communities[p.dst].size(), mm.forward_matches[p.src],
                                      mm.backward_matches[p.dst], params);
            if (!type) continue;
            EventRecord e;
            e.method = "ged";
            e.type = *type;
            e.frame_i = gi.timeframe;
            e.frame_j = gj.timeframe;
            e.sources = {gi.communities[p.src].id};
            e.targets = {gj.communities[p.dst].id};
            e.i12 = p.i12;
            e.i21 = p.i21;
            events.push_back(std::move(e));
        }
        auto boundary = detect_forming_dissolving(gi, gj, mm, params);
        events.insert(events.end(), boundary.begin(), boundary.end());
    }
    sort_events(events);
    return events;
}

}  // namespace gevo
