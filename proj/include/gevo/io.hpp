#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"
#include "gevo/temporal.hpp"

namespace gevo {

// Plain-text formats shared by the CLI stages. All writers are
// deterministic: the same data always serializes to the same bytes.

// "src dst t [weight]" lines; weight written only when not 1.
void write_edge_file(std::ostream& out, const std::vector<TemporalEdge>& edges);

// Frame-tagged edge table with interval headers; restores the network
// exactly, including empty frames and the slicing policy.
void write_snapshots(std::ostream& out, const TemporalSocialNetwork& tsn);
TemporalSocialNetwork read_snapshots(std::istream& in);

// "timeframe group_id node" lines plus provenance comments (detector, k).
void write_groupings(std::ostream& out, const std::vector<GroupingResult>& groupings,
                     const NodeTable& names);
// import_groupings plus provenance recovery from the header comments.
std::vector<GroupingResult> read_groupings(std::istream& in, const TemporalSocialNetwork& tsn);

// Tab-separated: method frame_i frame_j event sources targets I12 I21.
// Id lists are ';'-joined, empty lists and absent measures read "-" / "NA".
void write_events(std::ostream& out, const std::vector<EventRecord>& events);
std::vector<EventRecord> read_events(std::istream& in);

std::string detector_name(Detector d);

}  // namespace gevo
