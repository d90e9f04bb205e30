#include "tempograph/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tempograph {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

} // namespace

GraphFile parse_temporal_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    GraphFile out;
    if (!std::getline(in, line)) parse_fail(1, "missing header");
    ++line_no;
    {
        std::istringstream hdr(line);
        int n, m, tmax, delta;
        std::string mode;
        if (!(hdr >> n >> m >> tmax >> delta >> mode))
            parse_fail(line_no, "header must be `n m tmax delta mode`");
        std::string rest;
        if (hdr >> rest) parse_fail(line_no, "trailing tokens in header");
        auto parsed_mode = edge_mode_from_string(mode);
        if (!parsed_mode) parse_fail(line_no, "unknown mode `" + mode + "`");
        if (n < 0 || m < 0 || tmax < 1 || delta < 1) parse_fail(line_no, "bad header values");
        out.graph.n = n;
        out.graph.tmax = tmax;
        out.graph.mode = *parsed_mode;
        out.delta = delta;
        out.graph.edges.reserve(m);
        for (int i = 0; i < m; ++i) {
            if (!std::getline(in, line)) parse_fail(line_no + 1, "unexpected end of file");
            ++line_no;
            std::istringstream row(line);
            int u, v, t;
            if (!(row >> u >> v >> t)) parse_fail(line_no, "edge line must be `u v t`");
            if (row >> rest) parse_fail(line_no, "trailing tokens in edge line");
            out.graph.edges.push_back({u, v, t});
        }
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty()) parse_fail(line_no, "trailing content after edge list");
    }
    if (auto err = validate(out.graph)) throw std::runtime_error("invalid graph: " + *err);
    return out;
}

std::string write_temporal_edge_list(const GraphFile& file) {
    std::ostringstream out;
    out << file.graph.n << ' ' << file.graph.edges.size() << ' ' << file.graph.tmax << ' '
        << file.delta << ' ' << to_string(file.graph.mode) << '\n';
    for (const EdgeInstance& e : file.graph.edges)
        out << e.u << ' ' << e.v << ' ' << e.label << '\n';
    return out.str();
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_temporal_edge_list(buf.str());
}

void write_graph_file(const std::string& path, const GraphFile& file) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_temporal_edge_list(file);
}

SnapIngestResult snap_ingest(const std::string& csv_text, int tmax_buckets) {
    if (tmax_buckets < 1) throw std::invalid_argument("need at least one bucket");
    std::istringstream in(csv_text);
    std::string line;
    int line_no = 0;

    struct Row {
        long long u, v, ts;
    };
    std::vector<Row> rows;
    int dropped = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream row(line);
        long long u, v, ts;
        if (!(row >> u >> v >> ts)) {
            if (first) { // a header row is tolerated
                first = false;
                continue;
            }
            parse_fail(line_no, "expected `u,v,timestamp`");
        }
        first = false;
        if (u == v) {
            ++dropped;
            continue;
        }
        rows.push_back({u, v, ts});
    }

    SnapIngestResult res;
    res.dropped_self_loops = dropped;
    res.rows = static_cast<int>(rows.size());
    res.graph.mode = EdgeMode::Multiedge;
    res.graph.tmax = tmax_buckets;
    if (rows.empty()) {
        res.graph.n = 0;
        return res;
    }

    long long lo = rows.front().ts, hi = rows.front().ts;
    for (const Row& r : rows) {
        lo = std::min(lo, r.ts);
        hi = std::max(hi, r.ts);
    }
    std::map<long long, int> ids; // renumbered by first appearance
    auto id_of = [&](long long raw) {
        auto [it, inserted] = ids.emplace(raw, static_cast<int>(ids.size()));
        return it->second;
    };
    std::set<std::tuple<int, int, int>> seen;
    for (const Row& r : rows) {
        int u = id_of(r.u), v = id_of(r.v);
        long long span = hi - lo + 1;
        int bucket = static_cast<int>(1 + (r.ts - lo) * tmax_buckets / span);
        PairKey key(u, v);
        if (seen.insert({key.a, key.b, bucket}).second)
            res.graph.edges.push_back({key.a, key.b, bucket});
    }
    res.graph.n = static_cast<int>(ids.size());
    if (auto err = validate(res.graph))
        throw std::runtime_error("ingested graph invalid: " + *err);
    return res;
}

namespace {

std::string phase_name(Phase p) {
    switch (p) {
    case Phase::ComponentDiscovery: return "discovery";
    case Phase::ComponentExploration: return "exploration";
    case Phase::Other: return "other";
    }
    return "other";
}

} // namespace

std::string write_transcript(const DiscoveryTranscript& tr) {
    std::ostringstream out;
    for (size_t i = 0; i < tr.rounds.size(); ++i) {
        const DiscoveryRound& r = tr.rounds[i];
        out << "ROUND " << i + 1 << " PHASE " << phase_name(r.phase) << " SEEDS";
        for (const Seed& s : r.seeds) out << " (" << s.node << ',' << s.time << ')';
        out << " FEEDBACK";
        if (tr.cfg.feedback == FeedbackMode::FullLog) {
            out << " LOG";
            for (const LogEntry& e : r.log.entries)
                out << " (" << e.infector << ',' << e.infectee << ',' << e.time << ')';
        } else {
            out << " TIMES";
            for (int v = 0; v < r.times.size(); ++v)
                if (r.times.infected(v)) out << " (" << v << ',' << r.times.time_of(v) << ')';
        }
        out << '\n';
    }
    if (tr.claim) {
        out << "CLAIM " << tr.claim->n << ' ' << tr.claim->edges.size() << ' ' << tr.claim->tmax
            << ' ' << to_string(tr.claim->mode) << " EDGES";
        for (const EdgeInstance& e : tr.claim->edges)
            out << " (" << e.u << ',' << e.v << ',' << e.label << ')';
        out << '\n';
    }
    out << "VERDICT " << (tr.verdict.discoverer_wins ? "DISCOVERER" : "ADVERSARY");
    if (tr.timed_out)
        out << " timeout";
    else if (!tr.verdict.reason.empty())
        out << ' ' << tr.verdict.reason;
    out << '\n';
    return out.str();
}

} // namespace tempograph
