#pragma once

#include <cstdint>
#include <vector>

#include "payflow/amount.hpp"
#include "payflow/network.hpp"

namespace payflow {

/// Edge flow for one network, with per-node excess kept in step.
///
/// Flow lives on the network's unordered pairs, signed positive in the
/// lo->hi direction; both directed reads are derived, so f(u,v) == -f(v,u)
/// by construction.
class FlowAssignment {
 public:
  explicit FlowAssignment(const FlowNetwork& net);

  const FlowNetwork& net() const { return *net_; }

  /// f(u,v); 0 for pairs with no channel in either direction.
  Amount flow(NodeId u, NodeId v) const;

  /// Stored pair flow in the lo->hi direction.
  Amount pair_flow(PairId p) const { return pair_flow_[p]; }

  /// Flow of pair `p` read in the direction from `from`.
  Amount pair_flow_from(PairId p, NodeId from) const {
    return from == net_->pair(p).lo ? pair_flow_[p] : -pair_flow_[p];
  }

  /// Adds `delta` to f(u,v) (and -delta to f(v,u)), updating the excess of
  /// both endpoints. The pair (u,v) must carry a channel in some direction.
  void add(NodeId u, NodeId v, Amount delta);

  /// x_f(u): inflow minus outflow.
  Amount excess(NodeId u) const { return excess_[u]; }

  /// Recomputes excess from the flow map and checks it against the cached
  /// values; true when consistent.
  bool excess_consistent() const;

 private:
  const FlowNetwork* net_;
  std::vector<Amount> pair_flow_;
  std::vector<Amount> excess_;
};

/// c_f(u,v) = c(u,v) - f(u,v). Total over all node pairs.
Amount residual_capacity(const FlowNetwork& net, const FlowAssignment& f,
                         NodeId u, NodeId v);

enum class FlowClass {
  NotPseudo,  // capacity constraint violated somewhere
  Pseudo,     // capacity + skew symmetry, excess unconstrained
  Pre,        // additionally x_f(v) >= 0 off the terminals
  Feasible,   // additionally x_f(v) == 0 off the terminals
};

/// Strongest class the assignment satisfies for this network's terminals.
FlowClass classify_flow(const FlowNetwork& net, const FlowAssignment& f);

const char* to_string(FlowClass c);

}  // namespace payflow
