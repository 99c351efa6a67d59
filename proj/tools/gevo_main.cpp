// Command-line frontend for the evolution tracker: slice, detect, track,
// chains, bench, score. Every run with the same inputs, flags and seed
// writes byte-identical outputs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gevo/asur.hpp"
#include "gevo/bench.hpp"
#include "gevo/chains.hpp"
#include "gevo/communities.hpp"
#include "gevo/event.hpp"
#include "gevo/ged.hpp"
#include "gevo/io.hpp"
#include "gevo/palla.hpp"
#include "gevo/temporal.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one generator stream per frame, derived from the run seed
std::uint64_t frame_seed(std::uint64_t seed, int frame) {
    return seed ^ (static_cast<std::uint64_t>(frame) * 0x9E3779B97F4A7C15ull);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return in;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out = open_out(path);
    out << text;
}

gevo::SlicingPolicy policy_from_flags(const std::string& mode, double window, double step) {
    gevo::SlicingPolicy policy;
    if (mode == "disjoint") policy.mode = gevo::SliceMode::disjoint;
    else if (mode == "sliding") policy.mode = gevo::SliceMode::sliding;
    else if (mode == "cumulative") policy.mode = gevo::SliceMode::cumulative;
    else throw ConfigError("unknown slicing mode " + mode);
    policy.window = window;
    policy.step = step;
    policy.validate();
    return policy;
}

json tsn_to_json(const gevo::TemporalSocialNetwork& tsn) {
    const char* mode = tsn.policy.mode == gevo::SliceMode::disjoint   ? "disjoint"
                       : tsn.policy.mode == gevo::SliceMode::sliding ? "sliding"
                                                                     : "cumulative";
    json frames = json::array();
    for (const gevo::Snapshot& s : tsn.snapshots) {
        json nodes = json::array();
        for (gevo::NodeId n : s.nodes) nodes.push_back(tsn.names.name(n));
        json edges = json::array();
        for (const gevo::SnapshotEdge& e : s.edges)
            edges.push_back({{"src", tsn.names.name(e.src)},
                             {"dst", tsn.names.name(e.dst)},
                             {"weight", e.weight}});
        frames.push_back({{"index", s.index},
                          {"start", s.interval.start},
                          {"end", s.interval.end},
                          {"nodes", nodes},
                          {"edges", edges}});
    }
    return {{"policy", {{"mode", mode}, {"window", tsn.policy.window}, {"step", tsn.policy.step}}},
            {"frames", frames}};
}

json groupings_to_json(const std::vector<gevo::GroupingResult>& groupings,
                       const gevo::NodeTable& names) {
    json frames = json::array();
    for (const gevo::GroupingResult& g : groupings) {
        json communities = json::array();
        for (const gevo::Community& c : g.communities) {
            json members = json::array();
            for (gevo::NodeId n : c.members) members.push_back(names.name(n));
            communities.push_back({{"id", c.id}, {"members", members}});
        }
        json frame = {{"timeframe", g.timeframe},
                      {"overlapping", g.overlapping},
                      {"detector", gevo::detector_name(g.source.detector)},
                      {"communities", communities}};
        if (g.source.detector == gevo::Detector::clique_percolation) frame["k"] = g.source.k;
        frames.push_back(std::move(frame));
    }
    return frames;
}

json events_to_json(const std::vector<gevo::EventRecord>& events) {
    json out = json::array();
    for (const gevo::EventRecord& e : events) {
        json rec = {{"method", e.method},
                    {"frame_i", e.frame_i},
                    {"frame_j", e.frame_j},
                    {"event", std::string(gevo::event_name(e.type))},
                    {"sources", e.sources},
                    {"targets", e.targets}};
        rec["i12"] = e.i12 ? json(*e.i12) : json(nullptr);
        rec["i21"] = e.i21 ? json(*e.i21) : json(nullptr);
        out.push_back(std::move(rec));
    }
    return out;
}

json chains_to_json(const std::vector<gevo::EvolutionChain>& chains) {
    json out = json::array();
    for (const gevo::EvolutionChain& chain : chains) {
        json entries = json::array();
        for (const gevo::ChainEntry& e : chain.entries) {
            json entry = {{"frame", e.frame}};
            entry["community"] = e.community ? json(*e.community) : json(nullptr);
            entry["event"] = e.event ? json(std::string(gevo::event_name(*e.event))) : json(nullptr);
            entries.push_back(std::move(entry));
        }
        out.push_back({{"entries", entries}});
    }
    return out;
}

json report_to_json(const gevo::RecoveryReport& report) {
    json per_type = json::object();
    for (const auto& [type, score] : report.per_type)
        per_type[std::string(gevo::event_name(type))] = {
            {"expected", score.expected},
            {"observed", score.observed},
            {"matched", score.matched},
            {"precision", score.precision},
            {"recall", score.recall},
            {"vacuous_precision", score.vacuous_precision},
            {"vacuous_recall", score.vacuous_recall}};
    return {{"exact_match", report.exact_match}, {"per_type", per_type}};
}

void dump_json(const fs::path& path, const json& value) {
    write_text(path, value.dump(2) + "\n");
}

// ---- subcommand state ----

struct SliceArgs {
    std::string input, out;
    std::string mode = "disjoint";
    double window = 1.0, step = 0.0;
    bool lenient = false, mirror = false;
};

struct DetectArgs {
    std::string snapshots, out, groupings;
    std::string detector = "lpa";
    int k = 4, min_size = 3;
    std::uint64_t seed = 1;
    bool mirror = false;
};

struct TrackArgs {
    std::string input, snapshots, groupings, out = "out";
    std::string mode = "disjoint";
    double window = 1.0, step = 0.0;
    std::string detector = "lpa", method = "ged", importance = "uniform";
    int k = 4, min_size = 3;
    double alpha = 0.5, beta = 0.5, kappa = 0.5;
    std::uint64_t seed = 1;
    bool lenient = false, mirror = false;
};

struct ChainsArgs {
    std::string events, snapshots, groupings, out;
    std::string delimiter = "comma";
    bool mirror = false;
};

struct BenchArgs {
    std::string script, out = "bench_out";
    double p_in = 1.0, p_out = 0.0;
    std::uint64_t seed = 1;
    int min_size = 3;
    long node_budget = 0;
    bool mirror = false;
};

struct ScoreArgs {
    std::string expected, observed, truth_groupings, observed_groupings, out;
    bool as_json = false;
};

std::vector<gevo::GroupingResult> detect_all(const gevo::TemporalSocialNetwork& tsn,
                                             const std::string& detector, int k, int min_size,
                                             std::uint64_t seed, const std::string& groupings_path) {
    std::vector<gevo::GroupingResult> groupings;
    if (detector == "lpa") {
        for (const gevo::Snapshot& s : tsn.snapshots)
            groupings.push_back(gevo::label_propagation(s, frame_seed(seed, s.index), min_size));
    } else if (detector == "cpm") {
        for (const gevo::Snapshot& s : tsn.snapshots)
            groupings.push_back(gevo::clique_percolation(s, k, min_size));
    } else if (detector == "import") {
        if (groupings_path.empty()) throw ConfigError("--detector import requires --groupings");
        std::ifstream in = open_in(groupings_path);
        groupings = gevo::read_groupings(in, tsn);
    } else {
        throw ConfigError("unknown detector " + detector);
    }
    return groupings;
}

std::size_t community_count(const std::vector<gevo::GroupingResult>& groupings) {
    std::size_t n = 0;
    for (const gevo::GroupingResult& g : groupings) n += g.communities.size();
    return n;
}

void cmd_slice(const SliceArgs& a) {
    gevo::SlicingPolicy policy = policy_from_flags(a.mode, a.window, a.step);
    gevo::TemporalSocialNetwork tsn = gevo::slice(gevo::read_edge_file(a.input, a.lenient), policy);
    {
        std::ofstream out = open_out(a.out);
        gevo::write_snapshots(out, tsn);
    }
    if (a.mirror) dump_json(fs::path(a.out).replace_extension(".json"), tsn_to_json(tsn));
    std::size_t edges = 0;
    for (const gevo::Snapshot& s : tsn.snapshots) edges += s.edges.size();
    std::cout << "frames: " << tsn.frame_count() << "\nnodes: " << tsn.names.size()
              << "\nedges: " << edges << '\n';
}

void cmd_detect(const DetectArgs& a) {
    std::ifstream in = open_in(a.snapshots);
    gevo::TemporalSocialNetwork tsn = gevo::read_snapshots(in);
    std::vector<gevo::GroupingResult> groupings =
        detect_all(tsn, a.detector, a.k, a.min_size, a.seed, a.groupings);
    {
        std::ofstream out = open_out(a.out);
        gevo::write_groupings(out, groupings, tsn.names);
    }
    if (a.mirror)
        dump_json(fs::path(a.out).replace_extension(".json"), groupings_to_json(groupings, tsn.names));
    std::cout << "frames: " << tsn.frame_count() << "\ncommunities: " << community_count(groupings)
              << '\n';
}

void cmd_track(const TrackArgs& a) {
    if (a.method == "palla" && a.detector == "lpa")
        throw ConfigError("matcher palla requires clique-percolation groupings (--detector cpm)");
    if (a.input.empty() == a.snapshots.empty())
        throw ConfigError("track needs exactly one of --input or --snapshots");

    gevo::TemporalSocialNetwork tsn;
    if (!a.input.empty()) {
        tsn = gevo::slice(gevo::read_edge_file(a.input, a.lenient),
                          policy_from_flags(a.mode, a.window, a.step));
    } else {
        std::ifstream in = open_in(a.snapshots);
        tsn = gevo::read_snapshots(in);
    }

    std::vector<gevo::GroupingResult> groupings =
        detect_all(tsn, a.detector, a.k, a.min_size, a.seed, a.groupings);

    bool overlapping = false;
    for (const gevo::GroupingResult& g : groupings) overlapping |= g.overlapping;

    std::vector<gevo::EventRecord> events;
    if (a.method == "ged") {
        gevo::GedParams params;
        params.alpha = a.alpha;
        params.beta = a.beta;
        params.importance = a.importance == "degree" ? gevo::ImportanceMeasure::in_group_degree
                                                     : gevo::ImportanceMeasure::uniform;
        events = gevo::run_ged(groupings, tsn, params);
    } else if (a.method == "asur") {
        if (overlapping)
            std::cerr << "warning: asur assumes disjoint groups, results on overlapping"
                         " groupings are best-effort\n";
        gevo::AsurParams params;
        params.kappa = a.kappa;
        events = gevo::run_asur(groupings, params);
    } else if (a.method == "palla") {
        gevo::PallaParams params;
        params.k = a.k;
        params.min_size = a.min_size;
        events = gevo::run_palla_all(tsn, groupings, params);
    } else {
        throw ConfigError("unknown method " + a.method);
    }

    gevo::LineageGraph lineage = gevo::build_lineage(events, groupings);
    std::vector<gevo::EvolutionChain> chains = gevo::extract_chains(lineage);

    fs::create_directories(a.out);
    fs::path dir(a.out);
    {
        std::ofstream out = open_out(dir / "snapshots.tsv");
        gevo::write_snapshots(out, tsn);
    }
    {
        std::ofstream out = open_out(dir / "groupings.tsv");
        gevo::write_groupings(out, groupings, tsn.names);
    }
    {
        std::ofstream out = open_out(dir / "events.tsv");
        gevo::write_events(out, events);
    }
    write_text(dir / "chains.csv",
               gevo::export_chain_table(chains, static_cast<int>(tsn.frame_count()), ','));

    json config = {{"command", "track"},
                   {"input", a.input},
                   {"snapshots", a.snapshots},
                   {"mode", a.mode},
                   {"window", a.window},
                   {"step", a.step},
                   {"detector", a.detector},
                   {"groupings", a.groupings},
                   {"k", a.k},
                   {"min_size", a.min_size},
                   {"method", a.method},
                   {"alpha", a.alpha},
                   {"beta", a.beta},
                   {"kappa", a.kappa},
                   {"importance", a.importance},
                   {"seed", a.seed},
                   {"lenient", a.lenient},
                   {"out", a.out}};
    dump_json(dir / "run_config.json", config);

    if (a.mirror) {
        dump_json(dir / "snapshots.json", tsn_to_json(tsn));
        dump_json(dir / "groupings.json", groupings_to_json(groupings, tsn.names));
        dump_json(dir / "events.json", events_to_json(events));
        dump_json(dir / "chains.json", chains_to_json(chains));
    }

    std::size_t edges = 0;
    for (const gevo::Snapshot& s : tsn.snapshots) edges += s.edges.size();
    std::cout << "frames: " << tsn.frame_count() << "\nnodes: " << tsn.names.size()
              << "\nedges: " << edges << "\ncommunities: " << community_count(groupings)
              << "\nevents: " << events.size() << "\nchains: " << chains.size() << '\n';
}

void cmd_chains(const ChainsArgs& a) {
    if (a.delimiter != "comma" && a.delimiter != "tab")
        throw ConfigError("--delimiter must be comma or tab");
    std::ifstream snap_in = open_in(a.snapshots);
    gevo::TemporalSocialNetwork tsn = gevo::read_snapshots(snap_in);
    std::ifstream group_in = open_in(a.groupings);
    std::vector<gevo::GroupingResult> groupings = gevo::read_groupings(group_in, tsn);
    std::ifstream event_in = open_in(a.events);
    std::vector<gevo::EventRecord> events = gevo::read_events(event_in);

    gevo::LineageGraph lineage = gevo::build_lineage(events, groupings);
    std::vector<gevo::EvolutionChain> chains = gevo::extract_chains(lineage);
    char delim = a.delimiter == "tab" ? '\t' : ',';
    write_text(a.out, gevo::export_chain_table(chains, static_cast<int>(tsn.frame_count()), delim));
    if (a.mirror) dump_json(fs::path(a.out).replace_extension(".json"), chains_to_json(chains));
    std::cout << "chains: " << chains.size() << '\n';
}

void cmd_bench(const BenchArgs& a) {
    gevo::BenchParams params;
    params.p_in = a.p_in;
    params.p_out = a.p_out;
    params.seed = a.seed;
    params.min_size = a.min_size;
    params.node_budget = a.node_budget;

    std::ifstream script_in = open_in(a.script);
    gevo::EventScript script = gevo::parse_event_script(script_in);
    gevo::PlantedScenario scenario = gevo::generate_scenario(script, params);

    fs::create_directories(a.out);
    fs::path dir(a.out);
    {
        std::ofstream out = open_out(dir / "edges.txt");
        gevo::write_edge_file(out, scenario.edges);
    }
    {
        std::ofstream out = open_out(dir / "snapshots.tsv");
        gevo::write_snapshots(out, scenario.tsn);
    }
    {
        std::ofstream out = open_out(dir / "groupings.tsv");
        gevo::write_groupings(out, scenario.truth, scenario.tsn.names);
    }
    {
        std::ofstream out = open_out(dir / "expected_events.tsv");
        gevo::write_events(out, scenario.expected);
    }
    json config = {{"command", "bench"}, {"script", a.script},
                   {"p_in", a.p_in},     {"p_out", a.p_out},
                   {"seed", a.seed},     {"min_size", a.min_size},
                   {"node_budget", a.node_budget}, {"out", a.out}};
    dump_json(dir / "run_config.json", config);
    if (a.mirror) {
        dump_json(dir / "snapshots.json", tsn_to_json(scenario.tsn));
        dump_json(dir / "groupings.json", groupings_to_json(scenario.truth, scenario.tsn.names));
        dump_json(dir / "expected_events.json", events_to_json(scenario.expected));
    }

    std::size_t edges = 0;
    for (const gevo::Snapshot& s : scenario.tsn.snapshots) edges += s.edges.size();
    std::cout << "frames: " << scenario.tsn.frame_count() << "\nnodes: " << scenario.tsn.names.size()
              << "\nedges: " << edges << "\ncommunities: " << community_count(scenario.truth)
              << "\nexpected events: " << scenario.expected.size() << '\n';
}

void cmd_score(const ScoreArgs& a) {
    std::ifstream exp_in = open_in(a.expected);
    std::vector<gevo::EventRecord> expected = gevo::read_events(exp_in);
    std::ifstream obs_in = open_in(a.observed);
    std::vector<gevo::EventRecord> observed = gevo::read_events(obs_in);

    if (a.truth_groupings.empty() != a.observed_groupings.empty())
        throw ConfigError("--truth-groupings and --observed-groupings go together");
    if (!a.truth_groupings.empty()) {
        std::ifstream truth_in = open_in(a.truth_groupings);
        std::vector<gevo::RawGrouping> truth = gevo::read_raw_groupings(truth_in);
        std::ifstream og_in = open_in(a.observed_groupings);
        std::vector<gevo::RawGrouping> obs_groups = gevo::read_raw_groupings(og_in);
        observed = gevo::relabel_events(observed, gevo::map_ids_by_overlap(truth, obs_groups));
    }

    gevo::RecoveryReport report = gevo::score_recovery(expected, observed);
    json report_json = report_to_json(report);
    if (!a.out.empty()) dump_json(a.out, report_json);
    if (a.as_json) {
        std::cout << report_json.dump(2) << '\n';
        return;
    }
    std::cout << "type\texpected\tobserved\tmatched\tprecision\trecall\n";
    for (const auto& [type, score] : report.per_type) {
        std::cout << gevo::event_name(type) << '\t' << score.expected << '\t' << score.observed
                  << '\t' << score.matched << '\t' << gevo::format_double(score.precision)
                  << (score.vacuous_precision ? "*" : "") << '\t'
                  << gevo::format_double(score.recall) << (score.vacuous_recall ? "*" : "") << '\n';
    }
    std::cout << "exact_match: " << (report.exact_match ? "yes" : "no")
              << "\n(* vacuous: nothing expected or observed for the type)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"community evolution tracking over temporal networks"};
    app.require_subcommand(1);

    SliceArgs slice_args;
    CLI::App* slice_cmd = app.add_subcommand("slice", "slice an edge file into snapshots");
    slice_cmd->add_option("--input", slice_args.input, "edge file: src dst t [weight]")->required();
    slice_cmd->add_option("--mode", slice_args.mode, "disjoint|sliding|cumulative")
        ->check(CLI::IsMember({"disjoint", "sliding", "cumulative"}));
    slice_cmd->add_option("--window", slice_args.window, "window length");
    slice_cmd->add_option("--step", slice_args.step, "sliding shift / cumulative increment");
    slice_cmd->add_option("--out", slice_args.out, "snapshot file to write")->required();
    slice_cmd->add_flag("--lenient", slice_args.lenient, "drop malformed edge lines");
    slice_cmd->add_flag("--json", slice_args.mirror, "also write a JSON mirror");

    DetectArgs detect_args;
    CLI::App* detect_cmd = app.add_subcommand("detect", "find communities per snapshot");
    detect_cmd->add_option("--snapshots", detect_args.snapshots, "snapshot file")->required();
    detect_cmd->add_option("--detector", detect_args.detector, "lpa|cpm|import")
        ->check(CLI::IsMember({"lpa", "cpm", "import"}));
    detect_cmd->add_option("--k", detect_args.k, "clique size for cpm");
    detect_cmd->add_option("--min-size", detect_args.min_size, "smallest community kept");
    detect_cmd->add_option("--seed", detect_args.seed, "rng seed for lpa");
    detect_cmd->add_option("--groupings", detect_args.groupings, "grouping file for import");
    detect_cmd->add_option("--out", detect_args.out, "grouping file to write")->required();
    detect_cmd->add_flag("--json", detect_args.mirror, "also write a JSON mirror");

    TrackArgs track_args;
    CLI::App* track_cmd = app.add_subcommand("track", "full pipeline: slice, detect, match");
    track_cmd->add_option("--input", track_args.input, "edge file (slices with --mode/--window)");
    track_cmd->add_option("--snapshots", track_args.snapshots, "pre-sliced snapshot file");
    track_cmd->add_option("--mode", track_args.mode, "disjoint|sliding|cumulative")
        ->check(CLI::IsMember({"disjoint", "sliding", "cumulative"}));
    track_cmd->add_option("--window", track_args.window, "window length");
    track_cmd->add_option("--step", track_args.step, "sliding shift / cumulative increment");
    track_cmd->add_option("--detector", track_args.detector, "lpa|cpm|import")
        ->check(CLI::IsMember({"lpa", "cpm", "import"}));
    track_cmd->add_option("--groupings", track_args.groupings, "grouping file for import");
    track_cmd->add_option("--k", track_args.k, "clique size for cpm/palla");
    track_cmd->add_option("--min-size", track_args.min_size, "smallest community kept");
    track_cmd->add_option("--method", track_args.method, "ged|asur|palla")
        ->check(CLI::IsMember({"ged", "asur", "palla"}));
    track_cmd->add_option("--alpha", track_args.alpha, "ged forward threshold");
    track_cmd->add_option("--beta", track_args.beta, "ged backward threshold");
    track_cmd->add_option("--kappa", track_args.kappa, "asur overlap threshold");
    track_cmd->add_option("--importance", track_args.importance, "uniform|degree")
        ->check(CLI::IsMember({"uniform", "degree"}));
    track_cmd->add_option("--seed", track_args.seed, "rng seed");
    track_cmd->add_option("--out", track_args.out, "output directory");
    track_cmd->add_flag("--lenient", track_args.lenient, "drop malformed edge lines");
    track_cmd->add_flag("--json", track_args.mirror, "also write JSON mirrors");

    ChainsArgs chains_args;
    CLI::App* chains_cmd = app.add_subcommand("chains", "assemble evolution chains from events");
    chains_cmd->add_option("--events", chains_args.events, "event table")->required();
    chains_cmd->add_option("--snapshots", chains_args.snapshots, "snapshot file")->required();
    chains_cmd->add_option("--groupings", chains_args.groupings, "grouping file")->required();
    chains_cmd->add_option("--out", chains_args.out, "chain table to write")->required();
    chains_cmd->add_option("--delimiter", chains_args.delimiter, "comma|tab")
        ->check(CLI::IsMember({"comma", "tab"}));
    chains_cmd->add_flag("--json", chains_args.mirror, "also write a JSON mirror");

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "generate a planted-event scenario");
    bench_cmd->add_option("--script", bench_args.script, "event script file")->required();
    bench_cmd->add_option("--p-in", bench_args.p_in, "intra-community edge probability");
    bench_cmd->add_option("--p-out", bench_args.p_out, "cross-community edge probability");
    bench_cmd->add_option("--seed", bench_args.seed, "rng seed");
    bench_cmd->add_option("--min-size", bench_args.min_size, "smallest plantable group");
    bench_cmd->add_option("--node-budget", bench_args.node_budget, "fresh node limit, 0 = unlimited");
    bench_cmd->add_option("--out", bench_args.out, "output directory");
    bench_cmd->add_flag("--json", bench_args.mirror, "also write JSON mirrors");

    ScoreArgs score_args;
    CLI::App* score_cmd = app.add_subcommand("score", "compare observed events against a plant");
    score_cmd->add_option("--expected", score_args.expected, "expected event table")->required();
    score_cmd->add_option("--observed", score_args.observed, "observed event table")->required();
    score_cmd->add_option("--truth-groupings", score_args.truth_groupings,
                          "truth grouping file for id mapping");
    score_cmd->add_option("--observed-groupings", score_args.observed_groupings,
                          "observed grouping file for id mapping");
    score_cmd->add_option("--out", score_args.out, "also write the JSON report here");
    score_cmd->add_flag("--json", score_args.as_json, "print the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (slice_cmd->parsed()) cmd_slice(slice_args);
        else if (detect_cmd->parsed()) cmd_detect(detect_args);
        else if (track_cmd->parsed()) cmd_track(track_args);
        else if (chains_cmd->parsed()) cmd_chains(chains_args);
        else if (bench_cmd->parsed()) cmd_bench(bench_args);
        else if (score_cmd->parsed()) cmd_score(score_args);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
