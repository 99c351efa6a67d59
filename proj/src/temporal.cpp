#include "gevo/temporal.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gevo {

NodeId NodeTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    NodeId id = static_cast<NodeId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

NodeId NodeTable::lookup(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) throw std::out_of_range("unknown node: " + std::string(name));
    return it->second;
}

bool NodeTable::contains(std::string_view name) const {
    return ids_.find(std::string(name)) != ids_.end();
}

const std::string& NodeTable::name(NodeId id) const {
    if (id >= names_.size()) throw std::out_of_range("node id out of range");
    return names_[id];
}

bool Snapshot::has_node(NodeId id) const {
    return std::binary_search(nodes.begin(), nodes.end(), id);
}

void SlicingPolicy::validate() const {
    switch (mode) {
        case SliceMode::disjoint:
            if (window <= 0) throw std::invalid_argument("slicing: window must be positive");
            break;
        case SliceMode::sliding:
            if (window <= 0) throw std::invalid_argument("slicing: window must be positive");
            if (step <= 0) throw std::invalid_argument("slicing: step must be positive");
            if (step > window) throw std::invalid_argument("slicing: step must not exceed window");
            break;
        case SliceMode::cumulative:
            // either field may carry the growth increment, step preferred
            if (step <= 0 && window <= 0)
                throw std::invalid_argument("slicing: cumulative needs a positive step or window");
            break;
    }
}

const Snapshot& TemporalSocialNetwork::snapshot_at(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > snapshots.size())
        throw std::out_of_range("snapshot index " + std::to_string(index) + " out of range 1.." +
                                std::to_string(snapshots.size()));
    return snapshots[static_cast<std::size_t>(index) - 1];
}

namespace {

bool parse_number(const std::string& token, double& out) {
    std::size_t pos = 0;
    try {
        out = std::stod(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

}  // namespace

EdgeParseResult parse_edges(std::istream& in) {
    EdgeParseResult result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        std::string t;
        while (fields >> t) tok.push_back(t);
        if (tok.empty()) continue;          // blank line
        if (tok[0][0] == '#') continue;     // comment
        if (tok.size() < 3 || tok.size() > 4) {
            result.rejected.push_back({line_no, "expected 'src dst t [weight]', got " +
                                                    std::to_string(tok.size()) + " fields"});
            continue;
        }
        TemporalEdge e;
        e.src = tok[0];
        e.dst = tok[1];
        if (e.src == e.dst) {
            result.rejected.push_back({line_no, "self-loop on '" + e.src + "'"});
            continue;
        }
        if (!parse_number(tok[2], e.t) || e.t < 0) {
            result.rejected.push_back({line_no, "bad timestamp '" + tok[2] + "'"});
            continue;
        }
        if (tok.size() == 4) {
            if (!parse_number(tok[3], e.weight) || e.weight <= 0) {
                result.rejected.push_back({line_no, "bad weight '" + tok[3] + "'"});
                continue;
            }
        }
        result.edges.push_back(std::move(e));
    }
    return result;
}

std::vector<TemporalEdge> read_edge_file(const std::string& path, bool lenient) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge file: " + path);
    EdgeParseResult r = parse_edges(in);
    if (!r.rejected.empty() && !lenient) {
        std::ostringstream msg;
        msg << path << ": " << r.rejected.size() << " bad line(s)";
        std::size_t shown = std::min<std::size_t>(r.rejected.size(), 5);
        for (std::size_t i = 0; i < shown; ++i)
            msg << "\n  line " << r.rejected[i].line << ": " << r.rejected[i].message;
        if (shown < r.rejected.size()) msg << "\n  ...";
        throw std::runtime_error(msg.str());
    }
    return std::move(r.edges);
}

TemporalSocialNetwork slice(const std::vector<TemporalEdge>& edges, const SlicingPolicy& policy) {
    policy.validate();
    if (edges.empty()) throw std::invalid_argument("slice: no edges");

    double t_min = edges[0].t, t_max = edges[0].t;
    for (const TemporalEdge& e : edges) {
        t_min = std::min(t_min, e.t);
        t_max = std::max(t_max, e.t);
    }

    // Window list per mode. Windows are generated until the first one whose
    // end passes t_max, so the last timestamp is always covered and no
    // window beyond it is emitted.
    std::vector<Interval> windows;
    if (policy.mode == SliceMode::cumulative) {
        double inc = policy.step > 0 ? policy.step : policy.window;
        for (int j = 0;; ++j) {
            Interval w{t_min, t_min + inc * (j + 1)};
            windows.push_back(w);
            if (w.end > t_max) break;
        }
    } else {
        double shift = policy.mode == SliceMode::disjoint ? policy.window : policy.step;
        for (int j = 0;; ++j) {
            Interval w{t_min + shift * j, t_min + shift * j + policy.window};
            windows.push_back(w);
            if (w.end > t_max) break;
        }
    }

    TemporalSocialNetwork tsn;
    tsn.policy = policy;
    for (const TemporalEdge& e : edges) {
        // intern in input order so ids are reproducible
        tsn.names.intern(e.src);
        tsn.names.intern(e.dst);
    }

    tsn.snapshots.reserve(windows.size());
    for (std::size_t j = 0; j < windows.size(); ++j) {
        Snapshot s;
        s.index = static_cast<int>(j) + 1;
        s.interval = windows[j];
        std::map<std::pair<NodeId, NodeId>, double> agg;
        for (const TemporalEdge& e : edges) {
            if (!s.interval.contains(e.t)) continue;
            NodeId a = tsn.names.lookup(e.src);
            NodeId b = tsn.names.lookup(e.dst);
            agg[{a, b}] += e.weight;
        }
        std::vector<NodeId> nodes;
        for (const auto& [key, w] : agg) {
            s.edges.push_back({key.first, key.second, w});
            nodes.push_back(key.first);
            nodes.push_back(key.second);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        s.nodes = std::move(nodes);
        tsn.snapshots.push_back(std::move(s));
    }
    return tsn;
}

UndirectedAdjacency undirected_adjacency(const Snapshot& s) {
    std::map<std::pair<NodeId, NodeId>, double> sym;
    for (const SnapshotEdge& e : s.edges) {
        auto key = std::minmax(e.src, e.dst);
        auto [it, inserted] = sym.emplace(std::make_pair(key.first, key.second), e.weight);
        if (!inserted) it->second = std::max(it->second, e.weight);
    }
    UndirectedAdjacency adj;
    for (NodeId n : s.nodes) adj[n];  // isolated endpoints keep an empty list
    for (const auto& [key, w] : sym) {
        adj[key.first].emplace_back(key.second, w);
        adj[key.second].emplace_back(key.first, w);
    }
    for (auto& [n, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::string format_double(double v) {
    // shortest representation that parses back to the same bits
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::stod(buf) == v) return buf;
    }
    return buf;
}

}  // namespace gevo
