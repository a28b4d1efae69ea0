#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "payflow/flow.hpp"
#include "payflow/network.hpp"

namespace payflow {

/// One source-sink demand.
struct DemandSpec {
  NodeId source = 0;
  NodeId sink = 0;
  Amount demand;
};

/// Sequential preflow-push max-flow solver.
///
/// Construction performs the standard initialization: h(source) = |V|,
/// every other height 0, and the source's outgoing edges saturated. Active
/// nodes (positive excess, not a terminal) are processed in FIFO order; the
/// node at the front keeps discharging until its excess is gone. Among
/// admissible push targets the lowest node id wins.
class PushRelabelSolver {
 public:
  explicit PushRelabelSolver(const FlowNetwork& net);

  /// Pushes min(x_f(u), c_f(u,v)) over (u,v). Requires positive excess at u,
  /// positive residual capacity, and h(u) == h(v) + 1; returns false (state
  /// untouched) when any precondition fails.
  bool push(NodeId u, NodeId v);

  /// Raises h(u) to 1 + min height over residual out-neighbors. Requires
  /// positive excess and no admissible push from u; returns false (state
  /// untouched) otherwise, or when u has no residual out-edge.
  bool relabel(NodeId u);

  /// Applies one push or relabel at the front active node; false when no
  /// active node remains.
  bool step();

  /// Runs to completion (no active node left).
  void run();

  /// Like run(), but nodes relabeled to height >= node_count() are retired
  /// instead of draining their excess back to the source. The sink's excess
  /// still ends at the max-flow value; the assignment stays a pre-flow.
  void run_to_sink_phase();

  std::uint32_t height(NodeId u) const { return height_[u]; }
  Amount excess(NodeId u) const { return flow_.excess(u); }
  const FlowAssignment& assignment() const { return flow_; }
  const FlowNetwork& net() const { return *net_; }
  std::vector<NodeId> active_nodes() const { return {active_.begin(), active_.end()}; }

  /// Flow delivered so far: x_f(sink).
  Amount value() const { return flow_.excess(net_->sink()); }

 private:
  bool admissible(NodeId u, NodeId v, PairId p) const;
  void apply_push(NodeId u, NodeId v, PairId p);
  void apply_relabel(NodeId u);
  void maybe_activate(NodeId v);
  bool step_limited(std::uint32_t height_limit);

  const FlowNetwork* net_;
  FlowAssignment flow_;
  std::vector<std::uint32_t> height_;
  std::vector<std::uint32_t> arc_cursor_;  // per-node scan position, reset on relabel
  std::deque<NodeId> active_;
  std::vector<char> in_active_;
};

struct MaxFlowResult {
  FlowAssignment flow;
  Amount value;
};

/// Maximum s-t flow; the returned assignment is feasible (all excess
/// returned to the source).
MaxFlowResult max_flow(const FlowNetwork& net);

struct FeasibleResult {
  bool success = false;
  /// Value actually deliverable: min(demand, max flow). Equals the demand
  /// exactly on success.
  Amount delivered;
  /// Present on success: a feasible flow of value `delivered` on the
  /// original network.
  std::optional<FlowAssignment> flow;
};

/// Routes exactly `demand` from net.source() to net.sink() by running the
/// solver on the pre-source extension. Rejects negative demands.
FeasibleResult feasible_flow(const FlowNetwork& net, Amount demand);

struct BatchOutcome {
  bool success = false;
  Amount delivered;
};

/// Processes demands in order on a shared capacity state: each success
/// consumes capacity (the next demand sees c reduced by the committed flow,
/// reverse directions gaining headroom); failures are rolled back entirely.
std::vector<BatchOutcome> sequential_batch(const FlowNetwork& net,
                                           const std::vector<DemandSpec>& demands);

}  // namespace payflow
