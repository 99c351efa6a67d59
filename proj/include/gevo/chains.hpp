#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"

namespace gevo {

// Community life cycles as a DAG: one node per (frame, community), one arc
// per evolution event between consecutive frames. Forming and dissolving
// carry no counterpart group, so they become node markers instead of arcs.
struct LineageNode {
    int frame = 0;
    std::string id;
    bool forming = false;
    bool dissolving = false;
    std::vector<int> out_arcs;  // indices into LineageGraph::arcs
    std::vector<int> in_arcs;
};

struct LineageArc {
    int src = 0;  // node indices
    int dst = 0;
    EventType type = EventType::continuing;
};

struct LineageGraph {
    std::vector<LineageNode> nodes;
    std::vector<LineageArc> arcs;
    std::map<std::pair<int, std::string>, int> index;  // (frame, id) -> node
    int frame_count = 0;

    int node_of(int frame, const std::string& id) const;  // -1 when absent
};

// Every community appears, matched or not; events referencing unknown
// communities are an error. Arcs are deduplicated per (src, dst, type).
LineageGraph build_lineage(const std::vector<EventRecord>& events,
                           const std::vector<GroupingResult>& groupings);

// One step of a community's history. community is empty at the "No group"
// boundaries before forming and after dissolving; event is the transition
// leading out of this frame (empty on the last entry).
struct ChainEntry {
    int frame = 0;
    std::optional<std::string> community;
    std::optional<EventType> event;

    bool operator==(const ChainEntry&) const = default;
};

struct EvolutionChain {
    std::vector<ChainEntry> entries;

    bool operator==(const EvolutionChain&) const = default;
};

// One chain per maximal arc path. A split forks into one chain per branch
// sharing the duplicated prefix; converging merge branches each keep their
// own full chain through the merged community. Forming prepends and
// dissolving appends a "No group" boundary entry when the adjacent frame
// exists. Chains come out sorted by their entry sequences.
std::vector<EvolutionChain> extract_chains(const LineageGraph& lg);

// Flat table in frame order: columns alternate "Group in T_i" and
// "Event type", cells outside a chain's span hold "-", boundary cells hold
// "No group", events use their short names. delimiter is ',' or '\t'.
std::string export_chain_table(const std::vector<EvolutionChain>& chains, int frame_count,
                               char delimiter);

// Inverse of export_chain_table; round-trips exactly.
std::vector<EvolutionChain> parse_chain_table(const std::string& table, char delimiter);

}  // namespace gevo
