#include "gevo/event.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace gevo {

namespace {

constexpr std::array<std::string_view, kEventTypeCount> kLongNames = {
    "continuing", "shrinking", "growing", "splitting", "merging", "dissolving", "forming"};
constexpr std::array<std::string_view, kEventTypeCount> kShortNames = {
    "continue", "shrink", "grow", "split", "merge", "dissolve", "form"};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += v[i];
    }
    return out;
}

}  // namespace

std::string_view event_name(EventType t) { return kLongNames[static_cast<std::size_t>(t)]; }

std::string_view event_short_name(EventType t) { return kShortNames[static_cast<std::size_t>(t)]; }

std::optional<EventType> event_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kLongNames.size(); ++i)
        if (name == kLongNames[i] || name == kShortNames[i])
            return static_cast<EventType>(i);
    return std::nullopt;
}

bool EventRecord::operator==(const EventRecord& other) const {
    return method == other.method && type == other.type && frame_i == other.frame_i &&
           frame_j == other.frame_j && sources == other.sources && targets == other.targets &&
           i12 == other.i12 && i21 == other.i21;
}

void sort_events(std::vector<EventRecord>& events) {
    using Key = std::tuple<int, int, std::string, std::string, int>;
    std::vector<std::pair<Key, EventRecord>> keyed;
    keyed.reserve(events.size());
    for (EventRecord& e : events) {
        Key k{e.frame_i, e.sources.empty() ? 1 : 0, join(e.sources), join(e.targets),
              static_cast<int>(e.type)};
        keyed.emplace_back(std::move(k), std::move(e));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    events.clear();
    for (auto& [k, e] : keyed) events.push_back(std::move(e));
}

}  // namespace gevo
