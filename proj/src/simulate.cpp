#include "tempograph/simulate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tempograph {

InfectionLog simulate(const TemporalGraph& g, const SeedSet& seeds, const SirParams& params,
                      TieBreak tie_break) {
    AdjacencyIndex adj(g);
    return simulate(g, adj, seeds, params, tie_break);
}

InfectionLog simulate(const TemporalGraph& g, const AdjacencyIndex& adj, const SeedSet& seeds,
                      const SirParams& params, TieBreak tie_break) {
    if (auto err = validate_seeds(g, seeds, params)) throw std::invalid_argument(*err);

    InfectionLog log;
    if (seeds.empty()) return log;

    SeedSet ordered = seeds;
    std::sort(ordered.begin(), ordered.end());

    std::vector<int> infection_time(g.n, -1);
    std::vector<int> infectious; // nodes whose window may still be open
    size_t next_seed = 0;
    int t = ordered.front().time;

    while (t <= g.tmax) {
        // seeds scheduled at t fire first; a non-susceptible node is skipped
        while (next_seed < ordered.size() && ordered[next_seed].time == t) {
            const Seed& s = ordered[next_seed++];
            if (infection_time[s.node] < 0) {
                infection_time[s.node] = t;
                log.entries.push_back({s.node, s.node, t});
                infectious.push_back(s.node);
            }
        }

        // edge infections at t, based on the state entering the step
        std::map<int, int> chosen; // infectee -> infector
        for (size_t i = 0; i < infectious.size();) {
            int u = infectious[i];
            if (infection_time[u] + params.delta < t) {
                infectious[i] = infectious.back();
                infectious.pop_back();
                continue;
            }
            if (infection_time[u] < t) { // infectious during [t_u+1, t_u+delta]
                auto [lo, hi] = adj.at(u, t);
                for (const AdjacencyIndex::Incident* it = lo; it != hi; ++it) {
                    int v = it->other;
                    if (infection_time[v] >= 0) continue;
                    auto [pos, inserted] = chosen.emplace(v, u);
                    if (!inserted) {
                        bool take = tie_break == TieBreak::LowestInfector ? u < pos->second
                                                                          : u > pos->second;
                        if (take) pos->second = u;
                    }
                }
            }
            ++i;
        }
        for (const auto& [v, u] : chosen) {
            infection_time[v] = t;
            log.entries.push_back({u, v, t});
            infectious.push_back(v);
        }

        ++t;
        if (infectious.empty()) {
            if (next_seed >= ordered.size()) break;
            t = std::max(t, ordered[next_seed].time);
        }
    }
    return log;
}

Timetable project_timetable(const InfectionLog& log) { return project_timetable(log, 0); }

Timetable project_timetable(const InfectionLog& log, int n) {
    Timetable t(n);
    for (const LogEntry& e : log.entries) t.set(e.infectee, e.time);
    return t;
}

bool check_consistency(const TemporalGraph& g, const SeedSet& seeds, const InfectionLog& log,
                       const SirParams& params) {
    // structural validity of the log itself
    std::vector<int> time_of(g.n, -1);
    for (const LogEntry& e : log.entries) {
        if (e.infectee < 0 || e.infectee >= g.n || e.infector < 0 || e.infector >= g.n) return false;
        if (e.time < 0 || e.time > g.tmax) return false;
        if (time_of[e.infectee] >= 0) return false; // infectee appears twice
        time_of[e.infectee] = e.time;
    }
    for (const LogEntry& e : log.entries) {
        if (e.is_seed()) {
            bool declared = false;
            for (const Seed& s : seeds)
                if (s.node == e.infectee && s.time == e.time) declared = true;
            if (!declared) return false;
        } else {
            if (find_instance(g, e.infector, e.infectee, e.time) < 0) return false;
            int tu = time_of[e.infector];
            if (tu < 0) return false;
            if (!(tu < e.time && e.time <= tu + params.delta)) return false;
        }
    }
    // any tie-break yields the same timetable, so one reference run decides
    InfectionLog ref = simulate(g, seeds, params, TieBreak::LowestInfector);
    return project_timetable(log, g.n) == project_timetable(ref, g.n);
}

} // namespace tempograph
