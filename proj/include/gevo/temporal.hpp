#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gevo {

using NodeId = std::uint32_t;

// Bidirectional map between external node tokens and dense ids. Ids are
// assigned in first-seen order, so the same input always produces the
// same numbering.
class NodeTable {
public:
    NodeId intern(std::string_view name);
    // throws std::out_of_range for unknown names
    NodeId lookup(std::string_view name) const;
    bool contains(std::string_view name) const;
    const std::string& name(NodeId id) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> ids_;
};

// One interaction: directed src -> dst at time t. Loops are rejected at
// parse time, so src != dst holds everywhere downstream.
struct TemporalEdge {
    std::string src;
    std::string dst;
    double t = 0.0;
    double weight = 1.0;
};

// Half-open [start, end): an edge on the boundary belongs to the next window.
struct Interval {
    double start = 0.0;
    double end = 0.0;
    bool contains(double t) const { return t >= start && t < end; }
};

struct SnapshotEdge {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 0.0;
};

// Static network for one timeframe. Nodes are exactly the endpoints of the
// aggregated edges; edges are unique (src, dst) pairs with summed weights,
// sorted ascending.
struct Snapshot {
    int index = 0;  // 1-based frame number
    Interval interval;
    std::vector<NodeId> nodes;       // sorted
    std::vector<SnapshotEdge> edges; // sorted by (src, dst)

    bool has_node(NodeId id) const;
};

enum class SliceMode { disjoint, sliding, cumulative };

struct SlicingPolicy {
    SliceMode mode = SliceMode::disjoint;
    double window = 0.0;
    double step = 0.0;  // sliding: shift between starts; cumulative: growth increment

    void validate() const;  // throws std::invalid_argument
};

struct TemporalSocialNetwork {
    SlicingPolicy policy;
    NodeTable names;
    std::vector<Snapshot> snapshots;

    std::size_t frame_count() const { return snapshots.size(); }
    // 1-based, bounds-checked
    const Snapshot& snapshot_at(int index) const;
};

struct EdgeParseDiagnostic {
    int line = 0;
    std::string message;
};

struct EdgeParseResult {
    std::vector<TemporalEdge> edges;     // accepted, in input order
    std::vector<EdgeParseDiagnostic> rejected;
};

// Line format: "src dst t [weight]", whitespace separated, '#' starts a
// comment line, blank lines are skipped. Rejects loops, negative t,
// non-positive weight, wrong arity.
EdgeParseResult parse_edges(std::istream& in);

// Convenience wrapper: throws std::runtime_error listing offending lines
// unless lenient is set, in which case bad lines are dropped silently.
std::vector<TemporalEdge> read_edge_file(const std::string& path, bool lenient = false);

TemporalSocialNetwork slice(const std::vector<TemporalEdge>& edges, const SlicingPolicy& policy);

// Symmetrized view: undirected weight of {a, b} is the max of the two
// directed weights. Neighbor lists are sorted.
using UndirectedAdjacency = std::map<NodeId, std::vector<std::pair<NodeId, double>>>;
UndirectedAdjacency undirected_adjacency(const Snapshot& s);

std::string format_double(double v);  // shortest round-trippable decimal

}  // namespace gevo
