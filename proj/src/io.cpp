#include "gevo/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gevo {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == delim) { out.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& tok, const std::string& context) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument(context + ": bad number '" + tok + "'");
    return v;
}

int parse_int(const std::string& tok, const std::string& context) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument(context + ": bad integer '" + tok + "'");
    return v;
}

const char* mode_name(SliceMode m) {
    switch (m) {
        case SliceMode::disjoint: return "disjoint";
        case SliceMode::sliding: return "sliding";
        case SliceMode::cumulative: return "cumulative";
    }
    return "disjoint";
}

SliceMode mode_from_name(const std::string& name) {
    if (name == "disjoint") return SliceMode::disjoint;
    if (name == "sliding") return SliceMode::sliding;
    if (name == "cumulative") return SliceMode::cumulative;
    throw std::invalid_argument("snapshots: unknown slicing mode '" + name + "'");
}

}  // namespace

void write_edge_file(std::ostream& out, const std::vector<TemporalEdge>& edges) {
    for (const TemporalEdge& e : edges) {
        out << e.src << ' ' << e.dst << ' ' << format_double(e.t);
        if (e.weight != 1.0) out << ' ' << format_double(e.weight);
        out << '\n';
    }
}

void write_snapshots(std::ostream& out, const TemporalSocialNetwork& tsn) {
    out << "# tsn mode=" << mode_name(tsn.policy.mode) << " window="
        << format_double(tsn.policy.window) << " step=" << format_double(tsn.policy.step) << '\n';
    for (const Snapshot& s : tsn.snapshots) {
        out << "# frame " << s.index << " start=" << format_double(s.interval.start)
            << " end=" << format_double(s.interval.end) << '\n';
        for (const SnapshotEdge& e : s.edges)
            out << s.index << ' ' << tsn.names.name(e.src) << ' ' << tsn.names.name(e.dst) << ' '
                << format_double(e.weight) << '\n';
    }
}

TemporalSocialNetwork read_snapshots(std::istream& in) {
    TemporalSocialNetwork tsn;
    bool have_policy = false;
    int line_no = 0;
    auto fail = [&](const std::string& message) -> std::invalid_argument {
        return std::invalid_argument("snapshots line " + std::to_string(line_no) + ": " + message);
    };

    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, kind;
            ls >> hash >> kind;
            if (kind == "tsn") {
                std::string field;
                while (ls >> field) {
                    std::size_t eq = field.find('=');
                    if (eq == std::string::npos) throw fail("malformed header field");
                    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
                    if (key == "mode") tsn.policy.mode = mode_from_name(value);
                    else if (key == "window") tsn.policy.window = parse_double(value, "snapshots");
                    else if (key == "step") tsn.policy.step = parse_double(value, "snapshots");
                    else throw fail("unknown header field " + key);
                }
                have_policy = true;
            } else if (kind == "frame") {
                int index = 0;
                std::string start_field, end_field;
                if (!(ls >> index >> start_field >> end_field)) throw fail("malformed frame header");
                if (index != static_cast<int>(tsn.snapshots.size()) + 1)
                    throw fail("frames must appear in order starting at 1");
                Snapshot s;
                s.index = index;
                if (start_field.rfind("start=", 0) != 0 || end_field.rfind("end=", 0) != 0)
                    throw fail("frame header needs start= and end=");
                s.interval.start = parse_double(start_field.substr(6), "snapshots");
                s.interval.end = parse_double(end_field.substr(4), "snapshots");
                tsn.snapshots.push_back(std::move(s));
            }
            // other comments are ignored
            continue;
        }
        int frame = 0;
        std::string src, dst, weight_tok, extra;
        if (!(ls >> frame >> src >> dst >> weight_tok) || (ls >> extra))
            throw fail("expected 'frame src dst weight'");
        if (tsn.snapshots.empty() || frame != tsn.snapshots.back().index)
            throw fail("edge line outside its frame block");
        if (src == dst) throw fail("loop edge");
        double w = parse_double(weight_tok, "snapshots");
        if (w <= 0) throw fail("non-positive weight");
        SnapshotEdge e;
        e.src = tsn.names.intern(src);
        e.dst = tsn.names.intern(dst);
        e.weight = w;
        tsn.snapshots.back().edges.push_back(e);
    }
    if (!have_policy) throw std::invalid_argument("snapshots: missing '# tsn' header");
    if (tsn.snapshots.empty()) throw std::invalid_argument("snapshots: no frames");
    tsn.policy.validate();

    for (Snapshot& s : tsn.snapshots) {
        std::sort(s.edges.begin(), s.edges.end(), [](const SnapshotEdge& a, const SnapshotEdge& b) {
            return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
        });
        for (std::size_t i = 1; i < s.edges.size(); ++i)
            if (s.edges[i - 1].src == s.edges[i].src && s.edges[i - 1].dst == s.edges[i].dst)
                throw std::invalid_argument("snapshots: duplicate edge in frame " +
                                            std::to_string(s.index));
        for (const SnapshotEdge& e : s.edges) {
            s.nodes.push_back(e.src);
            s.nodes.push_back(e.dst);
        }
        std::sort(s.nodes.begin(), s.nodes.end());
        s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
    }
    return tsn;
}

std::string detector_name(Detector d) {
    switch (d) {
        case Detector::label_propagation: return "lpa";
        case Detector::clique_percolation: return "cpm";
        case Detector::imported: return "import";
    }
    return "import";
}

void write_groupings(std::ostream& out, const std::vector<GroupingResult>& groupings,
                     const NodeTable& names) {
    if (!groupings.empty()) {
        const GroupingSource& src = groupings.front().source;
        for (const GroupingResult& g : groupings)
            if (g.source.detector != src.detector || g.source.k != src.k)
                throw std::invalid_argument("groupings: frames disagree on their detector");
        out << "# detector " << detector_name(src.detector) << '\n';
        if (src.detector == Detector::clique_percolation) out << "# k " << src.k << '\n';
    }
    for (const GroupingResult& g : groupings)
        for (const Community& c : g.communities)
            for (NodeId n : c.members)
                out << g.timeframe << ' ' << c.id << ' ' << names.name(n) << '\n';
}

std::vector<GroupingResult> read_groupings(std::istream& in, const TemporalSocialNetwork& tsn) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    bool have_detector = false;
    Detector detector = Detector::imported;
    int k = 0;
    {
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) {
            std::istringstream ls(line);
            std::string hash, key;
            if (!(ls >> hash) || hash != "#") continue;
            if (!(ls >> key)) continue;
            if (key == "detector") {
                std::string name;
                if (!(ls >> name)) throw std::invalid_argument("groupings: empty detector comment");
                if (name == "lpa") detector = Detector::label_propagation;
                else if (name == "cpm") detector = Detector::clique_percolation;
                else if (name == "import") detector = Detector::imported;
                else throw std::invalid_argument("groupings: unknown detector '" + name + "'");
                have_detector = true;
            } else if (key == "k") {
                std::string value;
                if (!(ls >> value)) throw std::invalid_argument("groupings: empty k comment");
                k = parse_int(value, "groupings");
            }
        }
    }

    std::istringstream body(text);
    std::vector<GroupingResult> groupings = import_groupings(body, tsn);
    if (have_detector) {
        if (detector == Detector::clique_percolation && k < 3)
            throw std::invalid_argument("groupings: cpm provenance requires a k comment");
        for (GroupingResult& g : groupings) {
            g.source = {detector, detector == Detector::clique_percolation ? k : 0};
            if (detector == Detector::clique_percolation) g.overlapping = true;
            else if (detector == Detector::label_propagation) g.overlapping = false;
        }
    }
    return groupings;
}

void write_events(std::ostream& out, const std::vector<EventRecord>& events) {
    out << "# method\tframe_i\tframe_j\tevent\tsources\ttargets\tI12\tI21\n";
    auto join = [](const std::vector<std::string>& ids) {
        if (ids.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) s += ';';
            s += ids[i];
        }
        return s;
    };
    for (const EventRecord& e : events) {
        out << e.method << '\t' << e.frame_i << '\t' << e.frame_j << '\t' << event_name(e.type)
            << '\t' << join(e.sources) << '\t' << join(e.targets) << '\t'
            << (e.i12 ? format_double(*e.i12) : "NA") << '\t'
            << (e.i21 ? format_double(*e.i21) : "NA") << '\n';
    }
}

std::vector<EventRecord> read_events(std::istream& in) {
    std::vector<EventRecord> events;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::string context = "events line " + std::to_string(line_no);
        std::vector<std::string> cells = split(line, '\t');
        if (cells.size() != 8)
            throw std::invalid_argument(context + ": expected 8 tab-separated fields");
        EventRecord e;
        e.method = cells[0];
        e.frame_i = parse_int(cells[1], context);
        e.frame_j = parse_int(cells[2], context);
        std::optional<EventType> type = event_from_name(cells[3]);
        if (!type) throw std::invalid_argument(context + ": unknown event '" + cells[3] + "'");
        e.type = *type;
        if (cells[4] != "-")
            for (std::string& id : split(cells[4], ';')) e.sources.push_back(std::move(id));
        if (cells[5] != "-")
            for (std::string& id : split(cells[5], ';')) e.targets.push_back(std::move(id));
        if (cells[6] != "NA") e.i12 = parse_double(cells[6], context);
        if (cells[7] != "NA") e.i21 = parse_double(cells[7], context);
        events.push_back(std::move(e));
    }
    return events;
}

}  // namespace gevo
