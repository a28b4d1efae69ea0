#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "payflow/amount.hpp"

namespace payflow {

using NodeId = std::uint32_t;
using PairId = std::uint32_t;

inline constexpr PairId kNoPair = std::numeric_limits<PairId>::max();

/// A directed payment channel with a fixed capacity.
struct ChannelEdge {
  NodeId from = 0;
  NodeId to = 0;
  Amount capacity;
};

/// Directed capacitated graph with designated source and sink.
///
/// Channels between a node pair are stored once per unordered pair with a
/// capacity for each direction (0 when that direction is not an edge).
/// Flow over the network is likewise kept per unordered pair, which makes
/// skew symmetry structural rather than a maintained invariant.
class FlowNetwork {
 public:
  struct Pair {
    NodeId lo = 0;
    NodeId hi = 0;
    Amount cap_fwd;  // lo -> hi
    Amount cap_rev;  // hi -> lo
  };

  struct AdjEntry {
    NodeId peer = 0;
    PairId pair = kNoPair;
  };

  /// Validates and indexes the edge set. Throws std::invalid_argument on
  /// self-loops, duplicate ordered pairs, negative capacities, out-of-range
  /// endpoints, or source == sink.
  FlowNetwork(std::uint32_t node_count, std::vector<ChannelEdge> edges,
              NodeId source, NodeId sink);

  std::uint32_t node_count() const { return node_count_; }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  const std::vector<ChannelEdge>& edges() const { return edges_; }

  std::size_t pair_count() const { return pairs_.size(); }
  const Pair& pair(PairId p) const { return pairs_[p]; }
  PairId pair_between(NodeId u, NodeId v) const;

  /// c(u,v); 0 for any ordered pair that is not an edge.
  Amount capacity(NodeId u, NodeId v) const;

  /// Capacity of pair `p` read in the direction from `from`.
  Amount pair_capacity_from(PairId p, NodeId from) const {
    return from == pairs_[p].lo ? pairs_[p].cap_fwd : pairs_[p].cap_rev;
  }

  /// Incident pairs of `u`, sorted by peer id.
  std::span<const AdjEntry> neighbors(NodeId u) const {
    return {adjacency_[u].data(), adjacency_[u].size()};
  }

  bool valid_node(NodeId u) const { return u < node_count_; }

  /// Extends the network with a virtual pre-source s' and a single edge
  /// (s', s) of capacity `demand`; s' becomes the new source. Rejects
  /// negative demand. The original network is left untouched.
  FlowNetwork with_pre_source(Amount demand) const;

  /// JSON graph format: {nodes, edges: [{from, to, capacity_milli}], source, sink}.
  static FlowNetwork from_json(const std::string& text);
  std::string to_json() const;
  static FlowNetwork load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  static std::uint64_t pair_key(NodeId lo, NodeId hi) {
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  std::uint32_t node_count_ = 0;
  NodeId source_ = 0;
  NodeId sink_ = 0;
  std::vector<ChannelEdge> edges_;
  std::vector<Pair> pairs_;
  std::unordered_map<std::uint64_t, PairId> pair_index_;
  std::vector<std::vector<AdjEntry>> adjacency_;
};

}  // namespace payflow
