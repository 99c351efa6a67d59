#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"

namespace gevo {

struct GedParams {
    double alpha = 0.5;  // threshold on I(G1, G2)
    double beta = 0.5;   // threshold on I(G2, G1)
    // Groups below this inclusion against every counterpart form/dissolve.
    // Fixed by the method at 10%, independent of alpha and beta.
    double form_dissolve_threshold = 0.10;
    ImportanceMeasure importance = ImportanceMeasure::uniform;

    // requires 0 < alpha, beta <= 1 and 0 < threshold < min(alpha, beta)
    void validate() const;
};

// Inclusion of g1 in g2: the fraction of g1's members that are in g2,
// scaled by the importance those members carry within g1.
//
//   I(G1, G2) = (|G1 n G2| / |G1|) * (sum NI over G1 n G2 / sum NI over G1)
//
// ni must cover every member of g1 with a positive value. Result is in
// [0, 1]; 1 exactly iff g1 is a subset of g2, 0 iff disjoint.
double inclusion(const std::vector<NodeId>& g1, const std::vector<NodeId>& g2,
                 const NodeImportanceMap& ni);

struct PairInclusion {
    std::size_t src = 0;  // community index in the earlier frame
    std::size_t dst = 0;  // community index in the later frame
    double i12 = 0.0;     // I(src, dst)
    double i21 = 0.0;     // I(dst, src)
    bool matched = false; // i12 >= alpha or i21 >= beta
};

struct MatchMatrix {
    std::size_t src_count = 0;
    std::size_t dst_count = 0;
    std::vector<PairInclusion> pairs;     // row-major, src * dst_count + dst
    std::vector<int> forward_matches;     // per src community
    std::vector<int> backward_matches;    // per dst community

    const PairInclusion& at(std::size_t src, std::size_t dst) const;
};

// Both-way inclusions for every cross-frame pair. Importance is computed per
// community on its own snapshot with params.importance.
MatchMatrix build_match_matrix(const GroupingResult& gi, const GroupingResult& gj,
                               const Snapshot& si, const Snapshot& sj, const GedParams& params);

// Event type for one matched pair, or nothing when no rule applies.
//
// Decision order (kept total and mutually exclusive):
//   both inclusions clear their thresholds -> continuing/shrinking/growing
//     by size comparison alone;
//   one-sided pair, |G1| >= |G2|, source matches several next-frame groups
//     -> splitting;
//   one-sided pair, |G1| <= |G2|, target matches several previous-frame
//     groups -> merging;
//   remaining one-sided pairs with match count 1 -> shrinking when
//     |G1| > |G2|, growing when |G1| < |G2|; at equal sizes the cleared
//     side decides: I(G1,G2) side shrinking, I(G2,G1) side growing.
// Multi-match rules are checked first: a pair can satisfy both a splitting
// and a single-match shrinking clause, and the split must win.
std::optional<EventType> classify_pair(double i12, double i21, std::size_t size1,
                                       std::size_t size2, int forward_matches,
                                       int backward_matches, const GedParams& params);

// 10% rule: a frame-i group whose inclusions stay below the threshold both
// ways against every frame-j group dissolves; the mirror produces forming.
// Vacuously true against an empty opposite frame.
std::vector<EventRecord> detect_forming_dissolving(const GroupingResult& gi,
                                                   const GroupingResult& gj,
                                                   const MatchMatrix& mm,
                                                   const GedParams& params);

// Full sweep over consecutive frame pairs; one record per classified pair
// plus forming/dissolving records, in canonical order.
std::vector<EventRecord> run_ged(const std::vector<GroupingResult>& groupings,
                                 const TemporalSocialNetwork& tsn, const GedParams& params);

}  // namespace gevo
