#pragma once

#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"

namespace gevo {

struct PallaParams {
    int k = 4;         // clique size, must equal the detector's k
    int min_size = 3;

    void validate() const;
};

// Union of two consecutive snapshots: merged node set, symmetrized edges
// stored once per node pair (low id first), weight the max across frames.
Snapshot joint_graph(const Snapshot& s1, const Snapshot& s2);

// |c1 n c2| / |c1 u c2| for non-empty member sets.
double relative_overlap(const std::vector<NodeId>& c1, const std::vector<NodeId>& c2);

// Clique-percolation matching of two consecutive frames.
//
// Runs percolation with the same k on the joint graph; each frame community
// attaches to the joint group containing it (set containment holds by
// construction when both groupings come from percolation at the same k; a
// majority-intersection fallback covers degenerate inputs). Within a joint
// group, frame-1 and frame-2 communities are paired greedily by descending
// relative overlap (ties by source id, then target id; zero overlap never
// pairs). Pairs are labeled growing/shrinking/continuing by size. A frame-1
// community intersecting two or more frame-2 communities of its joint group
// also yields one splitting record per counterpart, and symmetrically for
// merging. Communities left out of every record dissolve (frame 1) or form
// (frame 2).
//
// Both groupings must come from clique percolation with k equal to params.k,
// otherwise a configuration error is thrown.
std::vector<EventRecord> run_palla(const Snapshot& s1, const Snapshot& s2,
                                   const GroupingResult& g1, const GroupingResult& g2,
                                   const PallaParams& params);

// All consecutive frame pairs of a network.
std::vector<EventRecord> run_palla_all(const TemporalSocialNetwork& tsn,
                                       const std::vector<GroupingResult>& groupings,
                                       const PallaParams& params);

}  // namespace gevo
