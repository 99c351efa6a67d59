#include "gevo/chains.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gevo {

int LineageGraph::node_of(int frame, const std::string& id) const {
    auto it = index.find({frame, id});
    return it == index.end() ? -1 : it->second;
}

LineageGraph build_lineage(const std::vector<EventRecord>& events,
                           const std::vector<GroupingResult>& groupings) {
    LineageGraph lg;
    lg.frame_count = static_cast<int>(groupings.size());

    for (std::size_t i = 0; i < groupings.size(); ++i) {
        if (groupings[i].timeframe != static_cast<int>(i) + 1)
            throw std::invalid_argument("lineage: groupings out of frame order");
        for (const Community& c : groupings[i].communities) {
            LineageNode n;
            n.frame = groupings[i].timeframe;
            n.id = c.id;
            lg.index[{n.frame, n.id}] = static_cast<int>(lg.nodes.size());
            lg.nodes.push_back(std::move(n));
        }
    }

    auto resolve = [&](int frame, const std::string& id) {
        int n = lg.node_of(frame, id);
        if (n < 0)
            throw std::invalid_argument("lineage: event references unknown community " + id +
                                        " in frame " + std::to_string(frame));
        return n;
    };

    std::set<std::tuple<int, int, int>> seen;
    for (const EventRecord& e : events) {
        if (e.frame_j != e.frame_i + 1 || e.frame_i < 1 || e.frame_j > lg.frame_count)
            throw std::invalid_argument("lineage: event frames out of range");
        if (e.sources.empty()) {
            for (const std::string& t : e.targets) lg.nodes[resolve(e.frame_j, t)].forming = true;
            continue;
        }
        if (e.targets.empty()) {
            for (const std::string& s : e.sources) lg.nodes[resolve(e.frame_i, s)].dissolving = true;
            continue;
        }
        for (const std::string& s : e.sources) {
            int src = resolve(e.frame_i, s);
            for (const std::string& t : e.targets) {
                int dst = resolve(e.frame_j, t);
                if (!seen.insert({src, dst, static_cast<int>(e.type)}).second) continue;
                int arc = static_cast<int>(lg.arcs.size());
                lg.arcs.push_back({src, dst, e.type});
                lg.nodes[src].out_arcs.push_back(arc);
                lg.nodes[dst].in_arcs.push_back(arc);
            }
        }
    }
    return lg;
}

namespace {

void finish_chain(const LineageGraph& lg, const std::vector<int>& path,
                  const std::vector<EventType>& arc_types, std::vector<EvolutionChain>& out) {
    EvolutionChain chain;
    const LineageNode& first = lg.nodes[path.front()];
    if (first.forming && first.frame > 1)
        chain.entries.push_back({first.frame - 1, std::nullopt, EventType::forming});
    for (std::size_t i = 0; i < path.size(); ++i) {
        const LineageNode& n = lg.nodes[path[i]];
        ChainEntry entry{n.frame, n.id, std::nullopt};
        if (i + 1 < path.size()) entry.event = arc_types[i];
        else if (n.dissolving && n.frame < lg.frame_count) entry.event = EventType::dissolving;
        chain.entries.push_back(std::move(entry));
    }
    const LineageNode& last = lg.nodes[path.back()];
    if (last.dissolving && last.frame < lg.frame_count)
        chain.entries.push_back({last.frame + 1, std::nullopt, std::nullopt});
    out.push_back(std::move(chain));
}

void walk(const LineageGraph& lg, std::vector<int>& path, std::vector<EventType>& arc_types,
          std::vector<EvolutionChain>& out) {
    const LineageNode& n = lg.nodes[path.back()];
    if (n.out_arcs.empty()) {
        finish_chain(lg, path, arc_types, out);
        return;
    }
    for (int a : n.out_arcs) {
        path.push_back(lg.arcs[a].dst);
        arc_types.push_back(lg.arcs[a].type);
        walk(lg, path, arc_types, out);
        path.pop_back();
        arc_types.pop_back();
    }
}

// nullopt sorts before any id; event-less entries before labeled ones
std::tuple<int, int, std::string, int, int> entry_key(const ChainEntry& e) {
    return {e.frame, e.community.has_value() ? 1 : 0, e.community.value_or(""),
            e.event.has_value() ? 1 : 0, e.event ? static_cast<int>(*e.event) : 0};
}

}  // namespace

std::vector<EvolutionChain> extract_chains(const LineageGraph& lg) {
    std::vector<EvolutionChain> chains;
    std::vector<int> path;
    std::vector<EventType> arc_types;
    for (std::size_t i = 0; i < lg.nodes.size(); ++i) {
        if (!lg.nodes[i].in_arcs.empty()) continue;
        path.push_back(static_cast<int>(i));
        walk(lg, path, arc_types, chains);
        path.pop_back();
    }
    std::sort(chains.begin(), chains.end(), [](const EvolutionChain& a, const EvolutionChain& b) {
        return std::lexicographical_compare(
            a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
            [](const ChainEntry& x, const ChainEntry& y) { return entry_key(x) < entry_key(y); });
    });
    return chains;
}

namespace {

void check_delimiter(char d) {
    if (d != ',' && d != '\t') throw std::invalid_argument("chain table: delimiter must be ',' or tab");
}

}  // namespace

std::string export_chain_table(const std::vector<EvolutionChain>& chains, int frame_count,
                               char delimiter) {
    check_delimiter(delimiter);
    if (frame_count < 1) throw std::invalid_argument("chain table: frame count must be positive");

    std::ostringstream out;
    for (int f = 1; f <= frame_count; ++f) {
        if (f > 1) out << delimiter << "Event type" << delimiter;
        out << "Group in T" << f;
    }
    out << '\n';

    for (const EvolutionChain& chain : chains) {
        std::vector<std::string> cells(2 * frame_count - 1, "-");
        for (const ChainEntry& e : chain.entries) {
            if (e.frame < 1 || e.frame > frame_count)
                throw std::invalid_argument("chain table: entry frame out of range");
            cells[2 * (e.frame - 1)] = e.community ? *e.community : "No group";
            if (e.event) {
                if (e.frame == frame_count)
                    throw std::invalid_argument("chain table: event after the last frame");
                cells[2 * (e.frame - 1) + 1] = std::string(event_short_name(*e.event));
            }
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << delimiter;
            out << cells[i];
        }
        out << '\n';
    }
    return out.str();
}

std::vector<EvolutionChain> parse_chain_table(const std::string& table, char delimiter) {
    check_delimiter(delimiter);

    std::vector<std::string> lines;
    std::istringstream in(table);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    if (lines.empty()) throw std::invalid_argument("chain table: empty input");

    auto split = [&](const std::string& line) {
        std::vector<std::string> cells;
        std::string cur;
        for (char ch : line) {
            if (ch == delimiter) { cells.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        cells.push_back(cur);
        return cells;
    };

    std::vector<std::string> header = split(lines[0]);
    if (header.empty() || header[0] != "Group in T1" || header.size() % 2 == 0)
        throw std::invalid_argument("chain table: malformed header");
    int frame_count = static_cast<int>(header.size() + 1) / 2;

    std::vector<EvolutionChain> chains;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::vector<std::string> cells = split(lines[li]);
        if (cells.size() != header.size())
            throw std::invalid_argument("chain table: row " + std::to_string(li + 1) +
                                        " has wrong cell count");
        EvolutionChain chain;
        bool span_ended = false;
        for (int f = 1; f <= frame_count; ++f) {
            const std::string& group = cells[2 * (f - 1)];
            std::string event = f < frame_count ? cells[2 * (f - 1) + 1] : std::string("-");
            if (group == "-") {
                if (event != "-")
                    throw std::invalid_argument("chain table: event without a group cell");
                if (!chain.entries.empty()) span_ended = true;
                continue;
            }
            if (span_ended)
                throw std::invalid_argument("chain table: chain span is not contiguous");
            ChainEntry entry;
            entry.frame = f;
            if (group != "No group") entry.community = group;
            if (event != "-") {
                std::optional<EventType> t = event_from_name(event);
                if (!t) throw std::invalid_argument("chain table: unknown event name " + event);
                entry.event = t;
            }
            chain.entries.push_back(std::move(entry));
        }
        if (chain.entries.empty())
            throw std::invalid_argument("chain table: empty chain row");
        chains.push_back(std::move(chain));
    }
    return chains;
}

}  // namespace gevo
