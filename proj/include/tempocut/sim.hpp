#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempocut/tvg.hpp"

namespace tempocut {

/// Each (edge, slot) starts a failure with probability p; durations are
/// uniform over {0, ..., d_max}.
struct FailureModel {
  double p = 0.0;
  int d_max = 0;
  std::uint64_t seed = 0;
};

struct SimConfig {
  TimeVaryingGraph graph;
  int deadline = 1;
  int n = 1;
  int delta = 1;
  int packet_count = 1;
  double p = 0.0;
  int d_max = 0;
  std::uint64_t seed = 0;
};

struct PacketRecord {
  NodeId source = 0;
  NodeId destination = 0;
  /// Slot of the underlying graph where the packet window begins.
  Slot start = 1;
  int copies = 0;
  bool delivered = false;
  /// Window slot of arrival, or the deadline when lost.
  Slot finish = 0;
};

struct SimReport {
  int n = 1;
  int delta = 1;
  int deadline = 1;
  double p = 0.0;
  int d_max = 0;
  std::uint64_t seed = 0;
  int packets = 0;
  int lost = 0;
  std::vector<PacketRecord> records;

  double loss_rate() const { return packets == 0 ? 0.0 : static_cast<double>(lost) / packets; }
};

/// Throws InputError unless 0 <= p <= 1 and d_max >= 0.
std::vector<DeltaRemoval> sample_failures(const TimeVaryingGraph& g, const FailureModel& fm);

/// First min(n, greedy count) journeys of the greedy MaxFlow_delta on g.
std::vector<Journey> djr_route(const TimeVaryingGraph& g, NodeId s, NodeId d, int n, int delta);

/// `length` slots of g starting at `start`, wrapping around the horizon.
/// Slot start maps to slot 1.
TimeVaryingGraph carve_window(const TimeVaryingGraph& g, Slot start, int length);

/// Earliest arrival slot among journeys with no hop in any footprint.
std::optional<Slot> delivery_slot(const TimeVaryingGraph& g, const std::vector<Journey>& routes,
                                  const std::vector<DeltaRemoval>& failures);

/// Packets run back to back: the next one starts on the slot after the
/// previous delivery, or after its deadline.
SimReport run_simulation(const SimConfig& cfg);

struct SweepSpec {
  std::vector<int> n_values;
  std::vector<int> delta_values;
  std::vector<int> deadlines;
};

/// One report per point of n x delta x deadline (that order, n outermost).
/// Points run concurrently and all use the configuration's master seed.
std::vector<SimReport> sweep(const SimConfig& base, const SweepSpec& spec);

std::string sweep_csv(const std::vector<SimReport>& reports);

/// One JSON object per packet and line.
std::string packet_json_lines(const SimReport& report);

}  // namespace tempocut
