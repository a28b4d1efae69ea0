#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "payflow/locking.hpp"
#include "payflow/network.hpp"
#include "payflow/push_relabel.hpp"
#include "payflow/topology.hpp"

namespace payflow {

/// Sequential single-path baseline: one widest path per payment, capacity
/// consumed along it, mirroring how payments are routed one at a time today.
class SinglePathRouter {
 public:
  explicit SinglePathRouter(const FlowNetwork& net);

  struct PathResult {
    Amount bottleneck;          // meaningful only when path is non-empty
    std::vector<NodeId> path;   // empty when t is unreachable
  };

  /// Maximum-bottleneck path on the current capacities (Dijkstra variant;
  /// ties prefer fewer hops, then lower node ids).
  PathResult widest_path(NodeId s, NodeId t) const;

  /// Success iff the widest bottleneck covers d; on success d is consumed
  /// along the path. Zero demands always succeed and consume nothing.
  bool route(NodeId s, NodeId t, Amount d);

  Amount capacity(NodeId u, NodeId v) const;

 private:
  const FlowNetwork* net_;
  std::vector<Amount> cap_fwd_;
  std::vector<Amount> cap_rev_;
};

struct RunLevelModes {
  bool sequential = true;
  bool concurrent = true;
  bool single_path = true;
};

struct RunLevelResult {
  std::optional<double> seq_success;
  std::optional<double> conc_success;
  std::optional<double> sp_success;
  std::vector<char> seq_outcomes;
  std::vector<char> conc_outcomes;
  std::vector<char> sp_outcomes;
  std::uint32_t conc_budget_exhausted = 0;
};

/// Runs one workload through the enabled modes on fresh copies of `net`.
/// The success fraction of an empty workload is 1.0.
RunLevelResult run_level(const FlowNetwork& net, const std::vector<DemandSpec>& workload,
                         const RunLevelModes& modes, std::uint64_t op_budget = 100'000'000);

struct SweepSpec {
  enum class Kind { FlowCount, Volume };
  Kind kind = Kind::FlowCount;
  // FlowCount sweep: levels are commodity counts, volumes capped at vol_max.
  std::vector<std::uint32_t> flow_levels;
  Amount vol_max = Amount::units(20);
  // Volume sweep: levels are volume caps at a fixed commodity count.
  std::vector<Amount> volume_levels;
  std::uint32_t flow_count = 128;
  std::string output = "sweep.csv";
};

struct ExperimentConfig {
  TopologyConfig topology;
  std::vector<SweepSpec> sweeps;
  std::uint32_t runs = 10;
  bool run_sequential = true;
  bool run_concurrent = true;
  bool run_single_path = true;
  std::uint64_t master_seed = 0;
  std::uint64_t op_budget = 100'000'000;

  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig load_file(const std::string& path);
  std::string to_json() const;
};

struct SummaryRow {
  double level = 0.0;  // flow count or volume cap in units
  // Means are NaN for disabled modes.
  double seq_mean, conc_mean, sp_mean;
  double ci_seq = 0.0, ci_conc = 0.0, ci_sp = 0.0;
};

/// Mean success per mode plus 95% normal-approximation half-widths
/// (1.96 * sample stddev / sqrt(runs); 0 for a single run).
SummaryRow summarize(double level, const std::vector<RunLevelResult>& runs,
                     const RunLevelModes& modes);

/// Header plus one row per level, 4 decimal places. FlowCount sweeps use the
/// level column `r`, volume sweeps `max_demand`.
void emit_csv(const std::vector<SummaryRow>& rows, SweepSpec::Kind kind, std::ostream& out);
void emit_csv_file(const std::vector<SummaryRow>& rows, SweepSpec::Kind kind,
                   const std::string& path);

/// Schema check for emitted CSVs: expected header and parseable numeric
/// fields. Returns false and fills `err` on the first problem.
bool validate_csv_file(const std::string& path, SweepSpec::Kind kind, std::string* err = nullptr);

struct SweepResult {
  SweepSpec::Kind kind = SweepSpec::Kind::FlowCount;
  std::vector<SummaryRow> rows;
  std::string csv_path;
};

struct ExperimentResult {
  std::vector<SweepResult> sweeps;
};

/// Per-(level, run) observer for harness cross-checks.
using LevelHook = std::function<void(std::size_t sweep_index, double level, std::uint32_t run,
                                     const std::vector<DemandSpec>& workload,
                                     const RunLevelResult& result)>;

/// Full sweep harness: a fresh network and workload per (level, run), all
/// sub-seeds derived from the master seed, CSV per sweep written under
/// `out_dir`. Rerunning with an identical config reproduces the CSVs
/// byte for byte.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                                std::ostream* log = nullptr, const LevelHook& hook = {});

}  // namespace payflow
