#include "gevo/bench.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "gevo/rng.hpp"

namespace gevo {

namespace {

int parse_int(const std::string& tok, const char* what, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size())
        throw std::invalid_argument("script line " + std::to_string(line) + ": bad " + what +
                                    " '" + tok + "'");
    return v;
}

[[noreturn]] void script_fail(int line, const std::string& message) {
    throw std::invalid_argument("script line " + std::to_string(line) + ": " + message);
}

}  // namespace

EventScript parse_event_script(std::istream& in) {
    EventScript script;
    int line_no = 0;
    int prev_frame = 0;

    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 2) script_fail(line_no, "expected 'T<frame> <directive> ...'");

        if (tok[0].size() < 2 || tok[0][0] != 'T')
            script_fail(line_no, "frame token must look like T3");
        Directive d;
        d.frame = parse_int(tok[0].substr(1), "frame number", line_no);
        if (d.frame < 1) script_fail(line_no, "frames start at T1");
        if (script.directives.empty() && d.frame != 1)
            script_fail(line_no, "the first directive must be at T1");
        if (d.frame < prev_frame) script_fail(line_no, "frames must be non-decreasing");
        prev_frame = d.frame;

        const std::string& kind = tok[1];
        if (kind == "form") {
            if (tok.size() != 4) script_fail(line_no, "form takes an id and a size");
            d.kind = DirectiveKind::form;
            d.id = tok[2];
            d.amount = parse_int(tok[3], "size", line_no);
            if (d.amount < 1) script_fail(line_no, "form size must be positive");
        } else if (kind == "grow" || kind == "shrink") {
            if (tok.size() != 4) script_fail(line_no, kind == "grow" ? "grow takes an id and a count"
                                                                     : "shrink takes an id and a count");
            d.kind = kind == "grow" ? DirectiveKind::grow : DirectiveKind::shrink;
            d.id = tok[2];
            d.amount = std::abs(parse_int(tok[3], "count", line_no));
            if (d.amount == 0) script_fail(line_no, "count must be nonzero");
        } else if (kind == "split") {
            // split A -> B:4 C:6
            if (tok.size() < 6 || tok[3] != "->")
                script_fail(line_no, "split syntax: split <id> -> <id>:<n> <id>:<n> ...");
            d.kind = DirectiveKind::split;
            d.id = tok[2];
            for (std::size_t i = 4; i < tok.size(); ++i) {
                std::size_t colon = tok[i].find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == tok[i].size())
                    script_fail(line_no, "split part must look like id:size");
                SplitPart part;
                part.id = tok[i].substr(0, colon);
                part.size = parse_int(tok[i].substr(colon + 1), "part size", line_no);
                if (part.size < 1) script_fail(line_no, "part sizes must be positive");
                d.parts.push_back(std::move(part));
            }
            if (d.parts.size() < 2) script_fail(line_no, "split needs at least two parts");
        } else if (kind == "merge") {
            // merge B C -> D
            auto arrow = std::find(tok.begin(), tok.end(), std::string("->"));
            if (arrow == tok.end() || arrow + 2 != tok.end())
                script_fail(line_no, "merge syntax: merge <id> <id> ... -> <id>");
            d.kind = DirectiveKind::merge;
            d.sources.assign(tok.begin() + 2, arrow);
            if (d.sources.size() < 2) script_fail(line_no, "merge needs at least two sources");
            d.id = tok.back();
        } else if (kind == "continue") {
            if (tok.size() != 3) script_fail(line_no, "continue takes an id");
            d.kind = DirectiveKind::keep;
            d.id = tok[2];
        } else if (kind == "dissolve") {
            if (tok.size() != 3) script_fail(line_no, "dissolve takes an id");
            d.kind = DirectiveKind::dissolve;
            d.id = tok[2];
        } else {
            script_fail(line_no, "unknown directive '" + kind + "'");
        }
        script.frame_count = std::max(script.frame_count, d.frame);
        script.directives.push_back(std::move(d));
    }
    if (script.directives.empty()) throw std::invalid_argument("script: no directives");
    return script;
}

void BenchParams::validate() const {
    if (!(p_out >= 0 && p_out < p_in && p_in <= 1))
        throw std::invalid_argument("bench: need 0 <= p_out < p_in <= 1");
    // single-member groups cannot receive the fallback edge that keeps every
    // member visible in its frame
    if (min_size < 2) throw std::invalid_argument("bench: min_size must be at least 2");
    if (node_budget < 0) throw std::invalid_argument("bench: node budget must be non-negative");
}

namespace {

[[noreturn]] void frame_fail(int frame, const std::string& message) {
    throw std::invalid_argument("frame " + std::to_string(frame) + ": " + message);
}

}  // namespace

PlantedScenario generate_scenario(const EventScript& script, const BenchParams& params) {
    params.validate();
    if (script.directives.empty()) throw std::invalid_argument("bench: empty script");

    Rng rng(params.seed);
    long node_counter = 0;
    auto fresh_nodes = [&](int n, int frame) {
        std::vector<std::string> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            ++node_counter;
            if (params.node_budget > 0 && node_counter > params.node_budget)
                frame_fail(frame, "node budget exhausted");
            out.push_back("n" + std::to_string(node_counter));
        }
        return out;
    };

    std::map<std::string, std::vector<std::string>> live;  // id -> sorted members
    std::set<std::string> ever_used;
    std::vector<TemporalEdge> edges;
    std::vector<EventRecord> expected;
    // group id -> member names per frame, converted to Community once sliced
    std::vector<std::map<std::string, std::vector<std::string>>> frames;

    auto claim_id = [&](const std::string& id, int frame) {
        if (!ever_used.insert(id).second) frame_fail(frame, "group id " + id + " reused");
    };

    auto expect = [&](int frame, EventType t, std::vector<std::string> srcs,
                      std::vector<std::string> tgts) {
        if (frame == 1) return;  // the seed frame has no predecessor
        EventRecord e;
        e.method = "truth";
        e.type = t;
        e.frame_i = frame - 1;
        e.frame_j = frame;
        e.sources = std::move(srcs);
        e.targets = std::move(tgts);
        expected.push_back(std::move(e));
    };

    std::size_t di = 0;
    for (int frame = 1; frame <= script.frame_count; ++frame) {
        std::set<std::string> mentioned;
        auto mention = [&](const std::string& id) {
            if (!mentioned.insert(id).second)
                frame_fail(frame, "group " + id + " appears in two directives");
        };
        auto require_live = [&](const std::string& id) {
            if (!live.count(id)) frame_fail(frame, "group " + id + " is not live");
        };

        for (; di < script.directives.size() && script.directives[di].frame == frame; ++di) {
            const Directive& d = script.directives[di];
            if (frame == 1 && d.kind != DirectiveKind::form)
                frame_fail(frame, "only form directives may seed the first frame");
            switch (d.kind) {
                case DirectiveKind::form: {
                    claim_id(d.id, frame);
                    mention(d.id);
                    if (d.amount < params.min_size) frame_fail(frame, "formed group below min size");
                    std::vector<std::string> members = fresh_nodes(d.amount, frame);
                    std::sort(members.begin(), members.end());
                    live[d.id] = std::move(members);
                    expect(frame, EventType::forming, {}, {d.id});
                    break;
                }
                case DirectiveKind::grow: {
                    require_live(d.id);
                    mention(d.id);
                    std::vector<std::string> extra = fresh_nodes(d.amount, frame);
                    std::vector<std::string>& members = live[d.id];
                    members.insert(members.end(), extra.begin(), extra.end());
                    std::sort(members.begin(), members.end());
                    expect(frame, EventType::growing, {d.id}, {d.id});
                    break;
                }
                case DirectiveKind::shrink: {
                    require_live(d.id);
                    mention(d.id);
                    std::vector<std::string>& members = live[d.id];
                    int remaining = static_cast<int>(members.size()) - d.amount;
                    if (remaining < params.min_size)
                        frame_fail(frame, "shrinking " + d.id + " below min size");
                    rng.shuffle(members);  // departures drawn at random
                    members.resize(static_cast<std::size_t>(remaining));
                    std::sort(members.begin(), members.end());
                    expect(frame, EventType::shrinking, {d.id}, {d.id});
                    break;
                }
                case DirectiveKind::split: {
                    require_live(d.id);
                    mention(d.id);
                    std::vector<std::string> members = live[d.id];
                    int total = 0;
                    for (const SplitPart& p : d.parts) {
                        if (p.size < params.min_size)
                            frame_fail(frame, "split part " + p.id + " below min size");
                        total += p.size;
                    }
                    if (total != static_cast<int>(members.size()))
                        frame_fail(frame, "split sizes must sum to the group size");
                    rng.shuffle(members);
                    live.erase(d.id);
                    std::size_t at = 0;
                    for (const SplitPart& p : d.parts) {
                        claim_id(p.id, frame);
                        mention(p.id);
                        std::vector<std::string> part(members.begin() + at,
                                                      members.begin() + at + p.size);
                        at += static_cast<std::size_t>(p.size);
                        std::sort(part.begin(), part.end());
                        live[p.id] = std::move(part);
                        expect(frame, EventType::splitting, {d.id}, {p.id});
                    }
                    break;
                }
                case DirectiveKind::merge: {
                    claim_id(d.id, frame);
                    mention(d.id);
                    std::vector<std::string> merged;
                    for (const std::string& s : d.sources) {
                        require_live(s);
                        mention(s);
                        merged.insert(merged.end(), live[s].begin(), live[s].end());
                        live.erase(s);
                        expect(frame, EventType::merging, {s}, {d.id});
                    }
                    std::sort(merged.begin(), merged.end());
                    live[d.id] = std::move(merged);
                    break;
                }
                case DirectiveKind::keep: {
                    require_live(d.id);
                    mention(d.id);
                    expect(frame, EventType::continuing, {d.id}, {d.id});
                    break;
                }
                case DirectiveKind::dissolve: {
                    require_live(d.id);
                    mention(d.id);
                    live.erase(d.id);
                    expect(frame, EventType::dissolving, {d.id}, {});
                    break;
                }
            }
        }

        // untouched groups carry over and count as continuing
        for (const auto& [id, members] : live)
            if (!mentioned.count(id)) expect(frame, EventType::continuing, {id}, {id});

        if (live.empty()) frame_fail(frame, "no live groups left");
        frames.push_back(live);

        // sample this frame's interactions
        double t = static_cast<double>(frame - 1);
        std::set<std::string> incident;
        auto emit = [&](const std::string& a, const std::string& b) {
            edges.push_back({a, b, t, 1.0});
            incident.insert(a);
            incident.insert(b);
        };
        if (params.p_out > 0) {
            std::vector<std::string> all;
            std::unordered_map<std::string, const std::string*> group_of;
            for (const auto& [id, members] : live)
                for (const std::string& m : members) {
                    all.push_back(m);
                    group_of[m] = &id;
                }
            std::sort(all.begin(), all.end());
            for (const std::string& a : all)
                for (const std::string& b : all) {
                    if (a == b) continue;
                    double p = group_of[a] == group_of[b] ? params.p_in : params.p_out;
                    if (rng.bernoulli(p)) emit(a, b);
                }
        } else {
            for (const auto& [id, members] : live)
                for (const std::string& a : members)
                    for (const std::string& b : members) {
                        if (a == b) continue;
                        if (rng.bernoulli(params.p_in)) emit(a, b);
                    }
        }
        // keep every member visible in its frame
        for (const auto& [id, members] : live) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (incident.count(members[i])) continue;
                edges.push_back({members[i], members[(i + 1) % members.size()], t, 1.0});
                incident.insert(members[i]);
            }
        }
    }

    PlantedScenario scenario;
    scenario.edges = std::move(edges);
    scenario.tsn = slice(scenario.edges, {SliceMode::disjoint, 1.0, 0.0});
    if (scenario.tsn.frame_count() != static_cast<std::size_t>(script.frame_count))
        throw std::logic_error("bench: sliced frame count diverged from the script");

    for (int frame = 1; frame <= script.frame_count; ++frame) {
        GroupingResult g;
        g.timeframe = frame;
        g.overlapping = false;
        g.source = {Detector::imported, 0};
        const Snapshot& snap = scenario.tsn.snapshot_at(frame);
        for (const auto& [id, members] : frames[static_cast<std::size_t>(frame - 1)]) {
            Community c;
            c.id = id;
            c.timeframe = frame;
            for (const std::string& name : members) {
                NodeId node = scenario.tsn.names.lookup(name);
                if (!snap.has_node(node))
                    throw std::logic_error("bench: planted member missing from its snapshot");
                c.members.push_back(node);
            }
            std::sort(c.members.begin(), c.members.end());
            g.communities.push_back(std::move(c));
        }
        scenario.truth.push_back(std::move(g));
    }

    sort_events(expected);
    scenario.expected = std::move(expected);
    return scenario;
}

namespace {

using PairKey = std::tuple<int, int, EventType, std::string, std::string>;

std::set<PairKey> decompose(const std::vector<EventRecord>& events) {
    std::set<PairKey> keys;
    for (const EventRecord& e : events) {
        if (e.sources.empty() && e.targets.empty()) continue;
        if (e.sources.empty()) {
            for (const std::string& t : e.targets) keys.insert({e.frame_i, e.frame_j, e.type, "", t});
        } else if (e.targets.empty()) {
            for (const std::string& s : e.sources) keys.insert({e.frame_i, e.frame_j, e.type, s, ""});
        } else {
            for (const std::string& s : e.sources)
                for (const std::string& t : e.targets)
                    keys.insert({e.frame_i, e.frame_j, e.type, s, t});
        }
    }
    return keys;
}

}  // namespace

RecoveryReport score_recovery(const std::vector<EventRecord>& expected,
                              const std::vector<EventRecord>& observed) {
    std::set<PairKey> want = decompose(expected);
    std::set<PairKey> got = decompose(observed);

    RecoveryReport report;
    for (int t = 0; t < kEventTypeCount; ++t)
        report.per_type[static_cast<EventType>(t)] = TypeScore{};

    for (const PairKey& k : want) ++report.per_type[std::get<2>(k)].expected;
    for (const PairKey& k : got) {
        TypeScore& ts = report.per_type[std::get<2>(k)];
        ++ts.observed;
        if (want.count(k)) ++ts.matched;
    }
    for (auto& [type, ts] : report.per_type) {
        if (ts.observed > 0) {
            ts.precision = static_cast<double>(ts.matched) / ts.observed;
            ts.vacuous_precision = false;
        }
        if (ts.expected > 0) {
            ts.recall = static_cast<double>(ts.matched) / ts.expected;
            ts.vacuous_recall = false;
        }
    }
    report.exact_match = want == got;
    return report;
}

std::vector<RawGrouping> read_raw_groupings(std::istream& in) {
    std::map<int, std::map<std::string, std::set<std::string>>> acc;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::string frame_tok, group, node, extra;
        if (!(ls >> frame_tok)) continue;
        if (!(ls >> group >> node) || (ls >> extra))
            throw std::invalid_argument("groupings line " + std::to_string(line_no) +
                                        ": expected 'timeframe group node'");
        acc[parse_int(frame_tok, "timeframe", line_no)][group].insert(node);
    }
    std::vector<RawGrouping> out;
    for (const auto& [frame, groups] : acc) {
        RawGrouping rg;
        rg.frame = frame;
        for (const auto& [id, members] : groups)
            rg.groups[id] = std::vector<std::string>(members.begin(), members.end());
        out.push_back(std::move(rg));
    }
    return out;
}

std::vector<std::map<std::string, std::string>> map_ids_by_overlap(
    const std::vector<RawGrouping>& truth, const std::vector<RawGrouping>& observed) {
    int max_frame = 0;
    for (const RawGrouping& g : truth) max_frame = std::max(max_frame, g.frame);
    for (const RawGrouping& g : observed) max_frame = std::max(max_frame, g.frame);
    std::vector<std::map<std::string, std::string>> maps(static_cast<std::size_t>(max_frame));

    for (const RawGrouping& obs : observed) {
        if (obs.frame < 1) throw std::invalid_argument("groupings: frames are 1-based");
        const RawGrouping* tru = nullptr;
        for (const RawGrouping& g : truth)
            if (g.frame == obs.frame) { tru = &g; break; }
        if (!tru) continue;
        for (const auto& [oid, omembers] : obs.groups) {
            std::size_t best = 0;
            std::string best_id;
            for (const auto& [tid, tmembers] : tru->groups) {
                std::size_t common = 0;
                std::size_t i = 0, j = 0;
                while (i < omembers.size() && j < tmembers.size()) {
                    if (omembers[i] < tmembers[j]) ++i;
                    else if (omembers[i] > tmembers[j]) ++j;
                    else { ++common; ++i; ++j; }
                }
                // ties break to the smallest truth id via the sorted map walk
                if (common > best) { best = common; best_id = tid; }
            }
            if (best > 0) maps[static_cast<std::size_t>(obs.frame - 1)][oid] = best_id;
        }
    }
    return maps;
}

std::vector<EventRecord> relabel_events(const std::vector<EventRecord>& events,
                                        const std::vector<std::map<std::string, std::string>>& maps) {
    auto rename = [&](const std::vector<std::string>& ids, int frame) {
        std::vector<std::string> out;
        out.reserve(ids.size());
        const std::map<std::string, std::string>* m =
            frame >= 1 && frame <= static_cast<int>(maps.size())
                ? &maps[static_cast<std::size_t>(frame - 1)]
                : nullptr;
        for (const std::string& id : ids) {
            if (!m) { out.push_back(id); continue; }
            auto it = m->find(id);
            out.push_back(it != m->end() ? it->second : id);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<EventRecord> out = events;
    for (EventRecord& e : out) {
        e.sources = rename(e.sources, e.frame_i);
        e.targets = rename(e.targets, e.frame_j);
    }
    sort_events(out);
    return out;
}

}  // namespace gevo
