#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "gevo/temporal.hpp"

namespace gevo {

// Node group within one timeframe. Members are sorted and unique and must
// all be present in the frame's snapshot.
struct Community {
    std::string id;      // unique within the timeframe
    int timeframe = 0;   // 1-based
    std::vector<NodeId> members;

    std::size_t size() const { return members.size(); }
};

enum class Detector { label_propagation, clique_percolation, imported };

struct GroupingSource {
    Detector detector = Detector::imported;
    int k = 0;  // clique size, clique_percolation only
};

// All communities of one timeframe plus how they were obtained. The
// overlapping flag describes the grouping kind: clique percolation may
// assign a node to several groups, label propagation never does.
struct GroupingResult {
    int timeframe = 0;
    std::vector<Community> communities;
    bool overlapping = false;
    GroupingSource source;
};

// Asynchronous label propagation. Visit order and tie-breaks come from the
// seed, so identical (snapshot, seed) inputs give identical groupings.
// Label classes smaller than min_size are discarded.
GroupingResult label_propagation(const Snapshot& s, std::uint64_t seed, int min_size = 3);

// k-clique percolation: a community is the node union of a maximal set of
// k-cliques chained by (k-1)-node overlaps. Exact, intended for desk-scale
// snapshots. k >= 3 required.
GroupingResult clique_percolation(const Snapshot& s, int k, int min_size = 3);

// Reads "timeframe group_id node" lines ('#' comments allowed) and aligns
// them to the network's frames; unknown frames or nodes fail with a
// diagnostic listing the offenders. Frames without lines come back empty.
// External groups are taken as-is, no minimum-size filtering.
std::vector<GroupingResult> import_groupings(std::istream& in, const TemporalSocialNetwork& tsn);

enum class ImportanceMeasure { uniform, in_group_degree };

// Per-member positive weight used by the inclusion measure.
struct NodeImportanceMap {
    std::string community_id;
    std::unordered_map<NodeId, double> values;
};

// uniform: every member 1. in_group_degree: 1 + number of fellow members
// adjacent in the symmetrized snapshot, so values never vanish.
NodeImportanceMap compute_node_importance(const Snapshot& s, const Community& c,
                                          ImportanceMeasure measure);

}  // namespace gevo
