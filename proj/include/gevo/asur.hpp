#pragma once

#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"

namespace gevo {

struct AsurParams {
    double kappa = 0.5;  // merge/split overlap threshold, 0 < kappa < 1

    void validate() const;
};

// Two frame-i groups vk, vl merge into frame-j group vj when the union
// overlaps vj by more than kappa relative to the larger of the two, and each
// source keeps more than half its members inside vj:
//
//   |(vk u vl) n vj| / max(|vk u vl|, |vj|) > kappa
//   and |vk n vj| > |vk| / 2 and |vl n vj| > |vl| / 2
//
// All sets must be non-empty.
bool asur_merge_test(const std::vector<NodeId>& vk, const std::vector<NodeId>& vl,
                     const std::vector<NodeId>& vj, double kappa);

// Frame-i group vj splits into frame-j groups vk, vl under the exact frame
// mirror of the merge condition.
bool asur_split_test(const std::vector<NodeId>& vj, const std::vector<NodeId>& vk,
                     const std::vector<NodeId>& vl, double kappa);

// Event sweep. Asur predicates are independent: every passing predicate is
// reported, so one group may appear in several records. Continue requires
// identical member sets; dissolve means sharing at most one node with every
// next-frame group (form is the mirror); merge/split candidates are
// enumerated over unordered pairs of groups.
std::vector<EventRecord> run_asur(const std::vector<GroupingResult>& groupings,
                                  const AsurParams& params);

}  // namespace gevo
