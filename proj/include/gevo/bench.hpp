#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gevo/communities.hpp"
#include "gevo/event.hpp"
#include "gevo/temporal.hpp"

namespace gevo {

enum class DirectiveKind { form, grow, shrink, split, merge, keep, dissolve };

struct SplitPart {
    std::string id;
    int size = 0;
};

// One scripted change. Fields are used per kind: form takes id and amount
// (the size), grow/shrink take id and amount, split takes id and parts,
// merge takes sources and id (the merged group), keep/dissolve take id only.
struct Directive {
    int frame = 0;
    DirectiveKind kind = DirectiveKind::form;
    std::string id;
    int amount = 0;
    std::vector<SplitPart> parts;
    std::vector<std::string> sources;
};

struct EventScript {
    std::vector<Directive> directives;  // grouped by frame, ascending
    int frame_count = 0;
};

// Script lines, '#' comments allowed:
//   T1 form A 8
//   T2 grow A +4
//   T3 shrink A -2
//   T4 split A -> B:4 C:6
//   T5 merge B C -> D
//   T6 continue D
//   T7 dissolve D
// Frames must start at T1 and every frame must keep at least one live group.
EventScript parse_event_script(std::istream& in);

struct BenchParams {
    double p_in = 1.0;   // intra-community directed edge probability
    double p_out = 0.0;  // cross-community directed edge probability
    std::uint64_t seed = 1;
    int min_size = 3;       // smallest group a directive may create or leave
    long node_budget = 0;   // fresh node limit, 0 means unlimited

    void validate() const;  // requires 0 <= p_out < p_in <= 1
};

// Scripted network with known history. Edges of frame f carry t = f - 1 and
// slice back into the same frames with a disjoint unit window. Unmentioned
// live groups carry over unchanged and contribute expected continuing
// records; fresh node ids are drawn from a single counter and never reused.
struct PlantedScenario {
    TemporalSocialNetwork tsn;
    std::vector<TemporalEdge> edges;
    std::vector<GroupingResult> truth;      // ground-truth groupings per frame
    std::vector<EventRecord> expected;      // planted events, canonical order
};

PlantedScenario generate_scenario(const EventScript& script, const BenchParams& params);

struct TypeScore {
    int expected = 0;
    int observed = 0;
    int matched = 0;
    double precision = 1.0;  // vacuously 1 when nothing was observed
    double recall = 1.0;     // vacuously 1 when nothing was expected
    bool vacuous_precision = true;
    bool vacuous_recall = true;
};

struct RecoveryReport {
    std::map<EventType, TypeScore> per_type;
    bool exact_match = false;  // decomposed observed set equals expected set
};

// Per-type precision/recall. Records are decomposed into (source, target)
// pairs and deduplicated first, so a grouped merge record and its pairwise
// equivalents score identically. Comparison key: frame pair, type, source,
// target.
RecoveryReport score_recovery(const std::vector<EventRecord>& expected,
                              const std::vector<EventRecord>& observed);

// Plain community lists parsed straight from a grouping file, no snapshot
// validation. Used to align detected community ids with truth ids.
struct RawGrouping {
    int frame = 0;
    std::map<std::string, std::vector<std::string>> groups;  // id -> sorted members
};

std::vector<RawGrouping> read_raw_groupings(std::istream& in);

// For each frame, maps an observed community id to the truth id with the
// largest member overlap (ties to the lexicographically smallest truth id;
// zero overlap leaves the id unmapped).
std::vector<std::map<std::string, std::string>> map_ids_by_overlap(
    const std::vector<RawGrouping>& truth, const std::vector<RawGrouping>& observed);

std::vector<EventRecord> relabel_events(const std::vector<EventRecord>& events,
                                        const std::vector<std::map<std::string, std::string>>& maps);

}  // namespace gevo
