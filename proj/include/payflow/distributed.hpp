#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "payflow/locking.hpp"
#include "payflow/network.hpp"
#include "payflow/push_relabel.hpp"
#include "payflow/rng.hpp"

namespace payflow {

enum class MsgKind {
  PushRequest,     // amount = proposed delta, height = sender's own height
  PushAccept,      // amount = committed delta (may be below the proposal)
  PushReject,      // height = receiver's actual height
  HeightUpdate,    // height = new height after a relabel
  DeliveryReport,  // sink -> pre-source, amount = total delivered so far
  Commit,          // outcome broadcast once the pre-source decides
};

const char* to_string(MsgKind k);

struct Message {
  MsgKind kind = MsgKind::PushRequest;
  CommodityId commodity = 0;
  NodeId src = 0;
  NodeId dst = 0;
  Amount amount;
  std::uint32_t height = 0;
  OutcomeStatus outcome = OutcomeStatus::Infeasible;
  std::uint64_t deliver_at = 0;
  std::uint64_t seq = 0;
};

/// Uniform integer message delays in [1, max_delay] ticks. max_delay == 0
/// selects synchronous dispatch: a message is handled the instant it is
/// sent, so every push proposal resolves atomically and local views never
/// go stale. That regime is the bridge to the centralized solver.
struct LatencyModel {
  std::uint32_t max_delay = 10;
};

/// One push or relabel as it committed, in commit order.
struct OpEvent {
  enum class Kind { Push, Relabel };
  Kind kind = Kind::Push;
  CommodityId commodity = 0;
  NodeId u = 0;
  NodeId v = 0;          // push target; unused for relabels
  Amount delta;          // committed push amount
  std::uint32_t new_height = 0;  // relabel result
};

class Simulation;

struct SimOptions {
  std::uint64_t seed = 0;
  LatencyModel latency{};
  std::uint64_t event_budget = 100'000'000;
  /// Called after every handled message (testing hook).
  std::function<void(const Simulation&, const Message&)> on_event;
  /// Line-delimited JSON event trace.
  std::ostream* trace = nullptr;
  /// Check channel agreement and the capacity-locking invariants on the
  /// reconstructed global state at quiescence.
  bool validate_at_end = true;
  /// Record committed operations (push/relabel) for replay tests.
  bool record_ops = false;
};

struct SimResult {
  std::vector<CommodityOutcome> outcomes;
  /// In-protocol decisions made by the pre-source actors; must agree with
  /// `outcomes` on status and delivered amount whenever the run quiesced.
  std::vector<std::optional<CommodityOutcome>> decided;
  std::vector<OpEvent> ops;
  std::uint64_t events_processed = 0;
  std::uint64_t final_time = 0;
  bool budget_exhausted = false;
  bool invariants_ok = true;
  std::string invariant_error;
};

/// A node's copy of one incident channel's state. Both endpoints hold one;
/// they may disagree transiently by exactly the commits whose
/// acknowledgements are still in flight.
struct ChannelState {
  NodeId peer = 0;
  Amount cap_out;  // self -> peer
  Amount cap_in;   // peer -> self
  std::map<CommodityId, Amount> flow_out;  // signed, positive = self -> peer
  Amount lock_out;  // total locked in self -> peer direction
  Amount lock_in;
  std::map<CommodityId, std::uint32_t> peer_height;  // last-known, per commodity

  Amount flow(CommodityId i) const {
    auto it = flow_out.find(i);
    return it == flow_out.end() ? Amount::zero() : it->second;
  }
  /// c_i in the self -> peer direction, from this endpoint's view.
  Amount residual_out(CommodityId i) const;
  /// c_i in the peer -> self direction, from this endpoint's view.
  Amount residual_in(CommodityId i) const;
};

/// A simulated node: local channel copies, local heights, excess, and
/// pending proposals. Actors never read state of non-incident edges or of
/// other actors; all interaction is via messages.
struct NodeActor {
  NodeId id = 0;
  std::vector<ChannelState> channels;  // sorted by peer id
  std::map<NodeId, std::size_t> channel_index;
  std::map<CommodityId, std::uint32_t> own_height;
  std::map<CommodityId, Amount> excess;
  std::map<std::pair<CommodityId, NodeId>, Amount> pending;  // reserved proposals

  // Sink role.
  std::map<CommodityId, Amount> reported_delivered;

  // Pre-source role (one commodity at most).
  std::optional<CommodityId> pre_commodity;
  Amount pre_demand;
  std::optional<CommodityOutcome> decision;

  std::map<CommodityId, char> commit_seen;

  Amount excess_of(CommodityId i) const;
  Amount pending_total(CommodityId i) const;
  std::uint32_t height_of(CommodityId i) const;
  const ChannelState* channel_to(NodeId peer) const;
};

/// Discrete-event, message-passing run of the capacity-locking algorithm:
/// every node holds only its local view and exchanges push/height messages;
/// the pre-source of each commodity detects completion (all excess returned
/// or delivered) and floods the outcome.
class Simulation {
 public:
  Simulation(const FlowNetwork& net, std::vector<DemandSpec> commodities,
             const SimOptions& options);

  SimResult run();

  // Introspection for tests and tracing.
  const NodeActor& actor(NodeId id) const { return actors_[id]; }
  std::size_t actor_count() const { return actors_.size(); }
  std::uint64_t now() const { return now_; }
  std::vector<Message> pending_messages() const;
  std::uint64_t actor_digest(NodeId id) const;
  const FlowNetwork& base_net() const { return *net_; }
  std::size_t commodity_count() const { return commodities_.size(); }
  const DemandSpec& commodity(CommodityId i) const { return commodities_[i]; }
  NodeId pre_source(CommodityId i) const { return net_->node_count() + i; }

 private:
  friend struct NodeActor;
  struct QueueCmp {
    bool operator()(const Message& a, const Message& b) const {
      return a.deliver_at != b.deliver_at ? a.deliver_at > b.deliver_at : a.seq > b.seq;
    }
  };

  void send(NodeId src, NodeId dst, Message msg);
  void dispatch(const Message& msg);
  void handle(NodeActor& self, const Message& msg);
  void handle_push_request(NodeActor& self, const Message& msg);
  void handle_push_reply(NodeActor& self, const Message& msg);
  void handle_height_update(NodeActor& self, const Message& msg);
  void handle_delivery_report(NodeActor& self, const Message& msg);
  void handle_commit(NodeActor& self, const Message& msg);

  /// Drives commodity i at `self` until it blocks: proposals to admissible
  /// targets, a relabel (with height broadcast) when none remain. In
  /// synchronous mode performs at most one operation.
  void act(NodeActor& self, CommodityId i, bool single_op = false);
  bool act_once(NodeActor& self, CommodityId i);
  void propose(NodeActor& self, CommodityId i, ChannelState& ch);
  void relabel_local(NodeActor& self, CommodityId i);
  void check_pre_decision(NodeActor& self);
  void flood_commit(NodeActor& self, CommodityId i, const CommodityOutcome& outcome);
  void commit_receive_side(NodeActor& self, ChannelState& ch, CommodityId i, Amount delta);
  void commit_send_side(NodeActor& self, ChannelState& ch, CommodityId i, Amount delta);
  void write_trace(const Message& msg);
  void run_sync_driver();
  void sync_enqueue_if_active(CommodityId i, NodeId node);
  bool validate_quiescent(std::string* err) const;
  CommodityOutcome outcome_from_state(CommodityId i) const;

  const FlowNetwork* net_;
  std::vector<DemandSpec> commodities_;
  SimOptions options_;
  std::vector<NodeActor> actors_;
  std::priority_queue<Message, std::vector<Message>, QueueCmp> queue_;
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> last_scheduled_;
  Rng latency_rng_;
  std::uint64_t now_ = 0;
  std::uint64_t seq_ = 0;
  std::uint64_t events_ = 0;
  bool sync_mode_ = false;
  std::vector<OpEvent> ops_;
  // Synchronous driver state: per-commodity FIFO of nodes with available excess.
  std::vector<std::deque<NodeId>> sync_active_;
  std::vector<std::map<NodeId, char>> sync_in_active_;
};

SimResult run_simulation(const FlowNetwork& net, const std::vector<DemandSpec>& commodities,
                         const SimOptions& options = {});

}  // namespace payflow
