#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gevo {

// Shared event taxonomy. GED can produce all seven, Asur has no growing or
// shrinking, Palla's birth/death map onto forming/dissolving.
enum class EventType {
    continuing,
    shrinking,
    growing,
    splitting,
    merging,
    dissolving,
    forming,
};

inline constexpr int kEventTypeCount = 7;

std::string_view event_name(EventType t);        // "continuing", "splitting", ...
std::string_view event_short_name(EventType t);  // "continue", "split", ...
std::optional<EventType> event_from_name(std::string_view name);  // accepts either form

// One identified transition between consecutive frames. Dissolving has no
// targets, forming no sources; every other type has at least one of each.
struct EventRecord {
    std::string method;  // "ged", "asur" or "palla"
    EventType type = EventType::continuing;
    int frame_i = 0;
    int frame_j = 0;  // always frame_i + 1
    std::vector<std::string> sources;  // community ids in frame_i
    std::vector<std::string> targets;  // community ids in frame_j
    std::optional<double> i12;  // method-specific measure, diagnostics only
    std::optional<double> i21;

    bool operator==(const EventRecord& other) const;
};

// Canonical order: frame pair, records with sources before sourceless ones,
// then source ids, target ids, type.
void sort_events(std::vector<EventRecord>& events);

}  // namespace gevo
