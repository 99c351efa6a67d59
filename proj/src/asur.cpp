#include "gevo/asur.hpp"

#include <algorithm>
#include <stdexcept>

namespace gevo {

void AsurParams::validate() const {
    if (!(kappa > 0 && kappa < 1)) throw std::invalid_argument("asur: kappa must be in (0, 1)");
}

namespace {

std::size_t isect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

std::vector<NodeId> set_union(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::vector<NodeId> u;
    u.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

void require_nonempty(const std::vector<NodeId>& v, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string("asur: empty group in ") + what);
}

}  // namespace

// merge_test and split_test are deliberately spelled out separately, each
// following its own defining condition, so the frame-mirror identity between
// them stays an observable property instead of an artifact of shared code.

bool asur_merge_test(const std::vector<NodeId>& vk, const std::vector<NodeId>& vl,
                     const std::vector<NodeId>& vj, double kappa) {
    require_nonempty(vk, "merge test");
    require_nonempty(vl, "merge test");
    require_nonempty(vj, "merge test");
    std::vector<NodeId> u = set_union(vk, vl);
    double joint = static_cast<double>(isect(u, vj)) /
                   static_cast<double>(std::max(u.size(), vj.size()));
    if (!(joint > kappa)) return false;
    if (!(static_cast<double>(isect(vk, vj)) > static_cast<double>(vk.size()) / 2.0)) return false;
    if (!(static_cast<double>(isect(vl, vj)) > static_cast<double>(vl.size()) / 2.0)) return false;
    return true;
}

bool asur_split_test(const std::vector<NodeId>& vj, const std::vector<NodeId>& vk,
                     const std::vector<NodeId>& vl, double kappa) {
    require_nonempty(vj, "split test");
    require_nonempty(vk, "split test");
    require_nonempty(vl, "split test");
    std::vector<NodeId> fragments = set_union(vk, vl);
    double joint = static_cast<double>(isect(fragments, vj)) /
                   static_cast<double>(std::max(fragments.size(), vj.size()));
    if (!(joint > kappa)) return false;
    if (!(static_cast<double>(isect(vk, vj)) > static_cast<double>(vk.size()) / 2.0)) return false;
    if (!(static_cast<double>(isect(vl, vj)) > static_cast<double>(vl.size()) / 2.0)) return false;
    return true;
}

std::vector<EventRecord> run_asur(const std::vector<GroupingResult>& groupings,
                                  const AsurParams& params) {
    params.validate();
    std::vector<EventRecord> events;

    for (std::size_t fi = 0; fi + 1 < groupings.size(); ++fi) {
        const GroupingResult& gi = groupings[fi];
        const GroupingResult& gj = groupings[fi + 1];
        const auto& ci = gi.communities;
        const auto& cj = gj.communities;

        auto make = [&](EventType t) {
            EventRecord e;
            e.method = "asur";
            e.type = t;
            e.frame_i = gi.timeframe;
            e.frame_j = gj.timeframe;
            return e;
        };

        // continue: identical member sets
        for (const Community& a : ci) {
            for (const Community& b : cj) {
                if (a.members == b.members) {
                    EventRecord e = make(EventType::continuing);
                    e.sources = {a.id};
                    e.targets = {b.id};
                    events.push_back(std::move(e));
                }
            }
        }
        // dissolve: at most one node carried into any next-frame group
        for (const Community& a : ci) {
            bool gone = true;
            for (const Community& b : cj)
                if (isect(a.members, b.members) > 1) { gone = false; break; }
            if (gone) {
                EventRecord e = make(EventType::dissolving);
                e.sources = {a.id};
                events.push_back(std::move(e));
            }
        }
        // form: mirror of dissolve
        for (const Community& b : cj) {
            bool fresh = true;
            for (const Community& a : ci)
                if (isect(b.members, a.members) > 1) { fresh = false; break; }
            if (fresh) {
                EventRecord e = make(EventType::forming);
                e.targets = {b.id};
                events.push_back(std::move(e));
            }
        }
        // merge: unordered source pairs against each next-frame group
        for (std::size_t k = 0; k < ci.size(); ++k) {
            for (std::size_t l = k + 1; l < ci.size(); ++l) {
                for (const Community& b : cj) {
                    if (!asur_merge_test(ci[k].members, ci[l].members, b.members, params.kappa))
                        continue;
                    EventRecord e = make(EventType::merging);
                    e.sources = {ci[k].id, ci[l].id};
                    std::sort(e.sources.begin(), e.sources.end());
                    e.targets = {b.id};
                    std::vector<NodeId> u = set_union(ci[k].members, ci[l].members);
                    e.i12 = static_cast<double>(isect(u, b.members)) /
                            static_cast<double>(std::max(u.size(), b.members.size()));
                    events.push_back(std::move(e));
                }
            }
        }
        // split: one source against unordered pairs of next-frame groups
        for (const Community& a : ci) {
            for (std::size_t k = 0; k < cj.size(); ++k) {
                for (std::size_t l = k + 1; l < cj.size(); ++l) {
                    if (!asur_split_test(a.members, cj[k].members, cj[l].members, params.kappa))
                        continue;
                    EventRecord e = make(EventType::splitting);
                    e.sources = {a.id};
                    e.targets = {cj[k].id, cj[l].id};
                    std::sort(e.targets.begin(), e.targets.end());
                    std::vector<NodeId> u = set_union(cj[k].members, cj[l].members);
                    e.i12 = static_cast<double>(isect(u, a.members)) /
                            static_cast<double>(std::max(u.size(), a.members.size()));
                    events.push_back(std::move(e));
                }
            }
        }
    }
    sort_events(events);
    return events;
}

}  // namespace gevo
