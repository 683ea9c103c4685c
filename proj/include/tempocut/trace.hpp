#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempocut/tvg.hpp"

namespace tempocut {

struct ContactRecord {
  std::string node_a;
  std::string node_b;
  std::int64_t start = 0;
  std::int64_t duration = 0;
  auto operator<=>(const ContactRecord&) const = default;
};

/// CSV with header `node_a,node_b,start,duration`; blank lines are skipped.
/// Errors carry the 1-based line number.
std::vector<ContactRecord> parse_contact_trace(const std::string& text);

/// Seconds [window_start, window_start + horizon - 1] become slots 1..horizon.
/// Nodes appear in first-seen order; each unordered pair becomes a->b and b->a.
TimeVaryingGraph discretize(const std::vector<ContactRecord>& records, std::int64_t window_start,
                            int horizon);

struct ContactStats {
  std::map<std::int64_t, int> duration_histogram;
  /// Sorted by (node_a, node_b, start, duration).
  std::vector<ContactRecord> intervals;
};

ContactStats contact_stats(const std::vector<ContactRecord>& records);

std::string histogram_csv(const ContactStats& stats);
std::string intervals_csv(const ContactStats& stats);
std::string trace_csv(const std::vector<ContactRecord>& records);

/// Synthetic trace: an always-on chain of `core` nodes (one record per core
/// link spanning the whole trace) plus `periphery` nodes, each with bursty
/// links to `uplinks` distinct core nodes: bursts of `burst` seconds every
/// `period` seconds with random phase per link.
std::vector<ContactRecord> synthetic_trace(int core, int periphery, int uplinks, std::int64_t length,
                                           int burst, int period, std::uint64_t seed);

}  // namespace tempocut
