#include "tempocut/trace.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

namespace tempocut {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::int64_t integer(const std::string& cell, const char* what, int line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
    throw InputError("line " + std::to_string(line) + ": " + what + " '" + cell + "' is not an integer");
  }
  if (v < 0) throw InputError("line " + std::to_string(line) + ": " + what + " must be nonnegative");
  return v;
}

}  // namespace

std::vector<ContactRecord> parse_contact_trace(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  std::vector<ContactRecord> out;
  while (std::getline(in, raw)) {
    ++line;
    const std::string row = trim(raw);
    if (row.empty()) continue;
    if (!header) {
      if (split(row) != std::vector<std::string>{"node_a", "node_b", "start", "duration"}) {
        throw InputError("line " + std::to_string(line) + ": expected header node_a,node_b,start,duration");
      }
      header = true;
      continue;
    }
    const auto cells = split(row);
    if (cells.size() != 4) {
      throw InputError("line " + std::to_string(line) + ": expected 4 fields, got " +
                       std::to_string(cells.size()));
    }
    if (cells[0].empty() || cells[1].empty()) {
      throw InputError("line " + std::to_string(line) + ": empty node identifier");
    }
    out.push_back({cells[0], cells[1], integer(cells[2], "start", line),
                   integer(cells[3], "duration", line)});
  }
  if (!header) throw InputError("missing header node_a,node_b,start,duration");
  return out;
}

TimeVaryingGraph discretize(const std::vector<ContactRecord>& records, std::int64_t window_start,
                            int horizon) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  std::vector<std::string> names;
  std::map<std::string, NodeId> ids;
  auto node = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<NodeId>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::vector<std::pair<NodeId, NodeId>> order;
  std::map<std::pair<NodeId, NodeId>, std::set<Slot>> slots;
  const std::int64_t window_end = window_start + horizon - 1;
  for (const ContactRecord& r : records) {
    const NodeId a = node(r.node_a);
    const NodeId b = node(r.node_b);
    if (a == b) continue;
    const auto key = std::minmax(a, b);
    auto [it, fresh] = slots.try_emplace(key);
    if (fresh) order.emplace_back(a, b);
    const std::int64_t lo = std::max(r.start, window_start);
    const std::int64_t hi = std::min(r.start + r.duration - 1, window_end);
    for (std::int64_t t = lo; t <= hi; ++t) it->second.insert(static_cast<Slot>(t - window_start + 1));
  }
  TimeVaryingGraph g(horizon);
  for (const auto& n : names) g.add_node(n);
  for (const auto& [a, b] : order) {
    const auto& s = slots.at(std::minmax(a, b));
    const std::vector<Slot> active(s.begin(), s.end());
    g.add_edge(a, b, active);
    g.add_edge(b, a, active);
  }
  return g;
}

ContactStats contact_stats(const std::vector<ContactRecord>& records) {
  ContactStats stats;
  for (const ContactRecord& r : records) ++stats.duration_histogram[r.duration];
  stats.intervals = records;
  std::sort(stats.intervals.begin(), stats.intervals.end());
  return stats;
}

std::string histogram_csv(const ContactStats& stats) {
  std::string out = "duration,count\n";
  for (const auto& [d, c] : stats.duration_histogram) {
    out += std::to_string(d) + "," + std::to_string(c) + "\n";
  }
  return out;
}

std::string trace_csv(const std::vector<ContactRecord>& records) {
  std::string out = "node_a,node_b,start,duration\n";
  for (const ContactRecord& r : records) {
    out += r.node_a + "," + r.node_b + "," + std::to_string(r.start) + "," +
           std::to_string(r.duration) + "\n";
  }
  return out;
}

std::string intervals_csv(const ContactStats& stats) { return trace_csv(stats.intervals); }

std::vector<ContactRecord> synthetic_trace(int core, int periphery, int uplinks, std::int64_t length,
                                           int burst, int period, std::uint64_t seed) {
  if (core < 2) throw InputError("synthetic trace needs at least 2 core nodes");
  if (uplinks < 1 || uplinks > core) throw InputError("uplinks must lie in [1, core]");
  if (periphery < 0 || length < 1 || burst < 1 || period < burst) {
    throw InputError("synthetic trace needs periphery >= 0, length >= 1 and 1 <= burst <= period");
  }
  std::mt19937_64 rng(seed);
  std::vector<ContactRecord> out;
  auto name = [](int i) { return "n" + std::to_string(i); };
  for (int i = 0; i + 1 < core; ++i) out.push_back({name(i), name(i + 1), 0, length});
  std::uniform_int_distribution<int> phase(0, period - 1);
  std::uniform_int_distribution<int> anchor(0, core - 1);
  for (int j = 0; j < periphery; ++j) {
    const int v = core + j;
    std::set<int> hubs;
    while (static_cast<int>(hubs.size()) < uplinks) hubs.insert(anchor(rng));
    for (int hub : hubs) {
      for (std::int64_t t = phase(rng) - period; t < length; t += period) {
        const std::int64_t lo = std::max<std::int64_t>(t, 0);
        const std::int64_t hi = std::min<std::int64_t>(t + burst, length);
        if (hi > lo) out.push_back({name(v), name(hub), lo, hi - lo});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ContactRecord& a, const ContactRecord& b) {
    return std::tie(a.start, a.node_a, a.node_b) < std::tie(b.start, b.node_a, b.node_b);
  });
  return out;
}

}  // namespace tempocut
