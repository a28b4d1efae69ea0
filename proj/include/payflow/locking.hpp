#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "payflow/flow.hpp"
#include "payflow/network.hpp"
#include "payflow/push_relabel.hpp"

namespace payflow {

using CommodityId = std::uint32_t;

enum class OutcomeStatus {
  Success,
  Infeasible,
  BudgetExhausted,
};

const char* to_string(OutcomeStatus s);

struct CommodityOutcome {
  OutcomeStatus status = OutcomeStatus::Infeasible;
  Amount delivered;
  /// Present for successes when flow collection is enabled: a feasible flow
  /// of value `delivered` on the base network.
  std::optional<FlowAssignment> flow;
};

/// Shared state for concurrent multi-commodity route selection with
/// capacity locking.
///
/// Each commodity i runs preflow-push over its own residual graph
///   c_i(u,v) = c(u,v) - L(u,v) + l_i(v,u),
/// where l_i(u,v) = max(0, f_i(u,v)) and L(u,v) is the total locked
/// capacity. The locks reserve every commodity's reverse residual for its
/// own unwinding, so concurrent instances cannot steal each other's
/// capacity; the total capacity constraint sum_i f_i(u,v) <= c(u,v) holds
/// after every operation.
///
/// Every commodity is given a virtual pre-source (node id = base node count
/// + commodity id) whose single edge to its source caps the routable amount
/// at the demand. Heights start at base_node_count + 1 on the own
/// pre-source and 0 elsewhere.
class MultiCommodityState {
 public:
  MultiCommodityState(const FlowNetwork& base, std::vector<DemandSpec> commodities);

  const FlowNetwork& base_net() const { return *base_; }
  std::size_t commodity_count() const { return commodities_.size(); }
  const DemandSpec& commodity(CommodityId i) const { return commodities_[i].spec; }
  NodeId pre_source(CommodityId i) const { return base_->node_count() + i; }

  /// c_i(u,v) over base nodes and the commodity's own pre-source.
  Amount residual_capacity_locked(CommodityId i, NodeId u, NodeId v) const;

  /// f_i(u,v), read skew-symmetrically.
  Amount commodity_flow(CommodityId i, NodeId u, NodeId v) const;

  /// L(u,v): cached total locked capacity.
  Amount total_locked(NodeId u, NodeId v) const;

  Amount commodity_excess(CommodityId i, NodeId u) const;
  std::uint32_t commodity_height(CommodityId i, NodeId u) const;

  /// Pushes min(x_i(u), c_i(u,v)) for commodity i. Requires x_i(u) > 0,
  /// c_i(u,v) > 0 and h_i(u) > h_i(v); returns false (state untouched)
  /// otherwise. Lock totals for the touched pair are maintained as
  /// sum_i max(0, f_i), clamped at zero where the incremental rule of the
  /// push procedure would go negative.
  bool locked_push(CommodityId i, NodeId u, NodeId v);

  /// Raises h_i(u) to 1 + min over residual out-neighbors in E_i. Requires
  /// x_i(u) > 0 and no admissible locked push from u.
  bool relabel_commodity(CommodityId i, NodeId u);

  enum class StepResult { Pushed, Relabeled, Quiescent };

  /// One operation for commodity i at its FIFO-front active node: the
  /// admissible push with the lowest target id, else a relabel. Quiescent
  /// commodities (no active node) stay quiescent forever.
  StepResult step_commodity(CommodityId i);

  bool commodity_quiescent(CommodityId i) const { return commodities_[i].active.empty(); }
  std::vector<CommodityId> live_commodities() const;

  /// x_i(t_i): amount delivered so far.
  Amount delivered(CommodityId i) const;

  /// Removes commodity i's flow entirely and releases its locks.
  void rollback(CommodityId i);

  /// Commodity i's flow restricted to the base network's edges.
  FlowAssignment restricted_flow(CommodityId i) const;

  /// Full recomputation of every maintained invariant: lock totals versus
  /// sum_i max(0, f_i), 0 <= L <= c, the capacity chain
  /// sum_i f_i <= L <= c per edge, per-commodity excess consistency and
  /// non-negativity off the commodity terminals, and height bounds.
  /// Returns false and fills `err` on the first violation.
  bool validate(std::string* err = nullptr) const;

 private:
  struct Commodity {
    DemandSpec spec;
    std::map<PairId, Amount> flow;    // base pairs, signed lo->hi
    Amount pre_flow;                  // pre-source -> source, in [0, demand]
    std::map<NodeId, Amount> excess;  // includes pre-source (negative there)
    std::map<NodeId, std::uint32_t> height;
    std::deque<NodeId> active;
    std::vector<char> in_active;  // indexed by base node id
  };

  Amount lock_from(PairId p, NodeId from) const {
    return from == base_->pair(p).lo ? lock_fwd_[p] : lock_rev_[p];
  }
  void add_commodity_flow(Commodity& c, PairId p, NodeId from, Amount delta);
  void add_excess(Commodity& c, CommodityId i, NodeId u, Amount delta);
  std::uint32_t height_of(const Commodity& c, NodeId u) const;

  const FlowNetwork* base_;
  std::vector<Commodity> commodities_;
  std::vector<Amount> lock_fwd_;  // L in lo->hi direction, per base pair
  std::vector<Amount> lock_rev_;
};

/// Commodity pick order for concurrent_solve. Implementations must be
/// deterministic for a fixed seed.
class Scheduler {
 public:
  virtual ~Scheduler() = default;
  /// Chooses the next commodity from `live` (sorted, non-empty).
  virtual CommodityId pick(const std::vector<CommodityId>& live) = 0;
};

/// Cycles through commodity ids, one operation per turn.
class RoundRobinScheduler : public Scheduler {
 public:
  CommodityId pick(const std::vector<CommodityId>& live) override;

 private:
  CommodityId last_ = static_cast<CommodityId>(-1);
};

/// Uniform choice among live commodities from a seeded generator.
class RandomScheduler : public Scheduler {
 public:
  explicit RandomScheduler(std::uint64_t seed);
  CommodityId pick(const std::vector<CommodityId>& live) override;

 private:
  std::uint64_t state_;
};

struct ConcurrentOptions {
  /// Total operation budget across all commodities; exhausting it aborts
  /// the run and marks still-live commodities BudgetExhausted.
  std::uint64_t op_budget = 100'000'000;
  /// Materialize feasible flows for successful commodities.
  bool collect_flows = true;
  /// Invoked after every single operation (testing hook).
  std::function<void(const MultiCommodityState&, CommodityId)> after_op;
};

/// Runs all commodities to quiescence under the given schedule. Outcome i is
/// Success iff the full demand reached t_i; Infeasible commodities are
/// rolled back (locks released) after global termination, never mid-run.
std::vector<CommodityOutcome> concurrent_solve(const FlowNetwork& net,
                                               const std::vector<DemandSpec>& commodities,
                                               Scheduler& schedule,
                                               const ConcurrentOptions& options = {});

}  // namespace payflow
