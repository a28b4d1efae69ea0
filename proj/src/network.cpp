#include "payflow/network.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace payflow {

FlowNetwork::FlowNetwork(std::uint32_t node_count, std::vector<ChannelEdge> edges,
                         NodeId source, NodeId sink)
    : node_count_(node_count), source_(source), sink_(sink), edges_(std::move(edges)) {
  if (node_count_ < 2) throw std::invalid_argument("network needs at least two nodes");
  if (source_ >= node_count_ || sink_ >= node_count_)
    throw std::invalid_argument("source/sink out of range");
  if (source_ == sink_) throw std::invalid_argument("source and sink must differ");

  adjacency_.resize(node_count_);
  pair_index_.reserve(edges_.size());
  for (const ChannelEdge& e : edges_) {
    if (e.from >= node_count_ || e.to >= node_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("self-loops are not allowed");
    if (e.capacity.is_negative()) throw std::invalid_argument("negative capacity");

    const NodeId lo = std::min(e.from, e.to);
    const NodeId hi = std::max(e.from, e.to);
    auto [it, inserted] = pair_index_.try_emplace(pair_key(lo, hi),
                                                  static_cast<PairId>(pairs_.size()));
    if (inserted) {
      pairs_.push_back(Pair{lo, hi, Amount::zero(), Amount::zero()});
      adjacency_[lo].push_back({hi, it->second});
      adjacency_[hi].push_back({lo, it->second});
    }
    Pair& p = pairs_[it->second];
    Amount& slot = e.from == lo ? p.cap_fwd : p.cap_rev;
    if (!slot.is_zero())
      throw std::invalid_argument("duplicate edge between nodes " + std::to_string(e.from) +
                                  " and " + std::to_string(e.to));
    slot = e.capacity;
    if (slot.is_zero())
      throw std::invalid_argument("zero-capacity edges must be omitted");
  }
  for (auto& adj : adjacency_)
    std::sort(adj.begin(), adj.end(),
              [](const AdjEntry& a, const AdjEntry& b) { return a.peer < b.peer; });
}

PairId FlowNetwork::pair_between(NodeId u, NodeId v) const {
  const auto it = pair_index_.find(pair_key(std::min(u, v), std::max(u, v)));
  return it == pair_index_.end() ? kNoPair : it->second;
}

Amount FlowNetwork::capacity(NodeId u, NodeId v) const {
  const PairId p = pair_between(u, v);
  if (p == kNoPair) return Amount::zero();
  return pair_capacity_from(p, u);
}

FlowNetwork FlowNetwork::with_pre_source(Amount demand) const {
  if (demand.is_negative()) throw std::invalid_argument("demand must be non-negative");
  std::vector<ChannelEdge> edges = edges_;
  const NodeId pre = node_count_;
  if (demand.is_positive()) edges.push_back({pre, source_, demand});
  return FlowNetwork(node_count_ + 1, std::move(edges), pre, sink_);
}

FlowNetwork FlowNetwork::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<ChannelEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at("from").get<NodeId>(), e.at("to").get<NodeId>(),
                     Amount::milli(e.at("capacity_milli").get<std::int64_t>())});
  }
  return FlowNetwork(j.at("nodes").get<std::uint32_t>(), std::move(edges),
                     j.at("source").get<NodeId>(), j.at("sink").get<NodeId>());
}

std::string FlowNetwork::to_json() const {
  nlohmann::json j;
  j["nodes"] = node_count_;
  j["source"] = source_;
  j["sink"] = sink_;
  j["edges"] = nlohmann::json::array();
  for (const ChannelEdge& e : edges_) {
    j["edges"].push_back({{"from", e.from}, {"to", e.to},
                          {"capacity_milli", e.capacity.milli_value()}});
  }
  return j.dump(2);
}

FlowNetwork FlowNetwork::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void FlowNetwork::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << to_json() << '\n';
}

}  // namespace payflow
