#pragma once

#include <cstdint>
#include <vector>

#include "payflow/amount.hpp"
#include "payflow/network.hpp"
#include "payflow/push_relabel.hpp"

namespace payflow {

struct TopologyConfig {
  std::uint32_t nodes = 200;
  std::uint32_t degree = 10;  // ring-lattice neighbors, must be even and < nodes
  double beta = 0.5;          // rewiring probability
  Amount cap_max = Amount::units(10);
  std::uint64_t seed = 0;
};

struct UndirectedEdge {
  NodeId a = 0;
  NodeId b = 0;
};

struct Skeleton {
  std::uint32_t nodes = 0;
  std::vector<UndirectedEdge> edges;
  bool connected = false;
};

/// Small-world skeleton: ring lattice with `degree` nearest neighbors, each
/// clockwise edge rewired with probability beta, avoiding self-loops and
/// duplicates. Edge count is exactly nodes * degree / 2; connectedness is
/// not guaranteed and is reported in the result.
Skeleton watts_strogatz(const TopologyConfig& cfg);

/// Instantiates each undirected edge as two directed channels with
/// independent capacities sampled uniformly from [0, cap_max], quantized to
/// milli-units.
FlowNetwork assign_capacities(const Skeleton& skeleton, Amount cap_max, std::uint64_t seed,
                              NodeId source = 0, NodeId sink_hint = 0);

struct WorkloadConfig {
  std::uint32_t num_flows = 128;
  Amount vol_max = Amount::units(20);
  std::uint64_t seed = 0;
};

/// Samples commodities: endpoints uniform over distinct node pairs, demand
/// uniform on [0, vol_max] quantized to milli-units.
std::vector<DemandSpec> sample_workload(const FlowNetwork& net, const WorkloadConfig& cfg);

}  // namespace payflow
