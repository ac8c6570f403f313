#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfly/types.hpp"

namespace bfly {

/// Receive-oriented butterfly pattern: in round i, node g pulls the frontier
/// buffers of sources(i, g).
///
/// The exchange radix is 2 for fanout 1 (pairwise, g ^ 2^i) and the fanout
/// itself otherwise. Round i varies digit i of the node id in base radix;
/// partners that do not exist (num_nodes not a power of the radix) are
/// replaced by the lowest existing id of the partner's sub-block, so a single
/// node may serve several receivers in one round.
class ButterflySchedule {
 public:
  using Round = std::vector<std::vector<node_id>>;

  static ButterflySchedule make(std::uint32_t num_nodes, std::uint32_t fanout);

  /// Wraps an explicit round table. Only shape and id ranges are validated,
  /// not information-flow completeness; used for tooling and fault fixtures.
  static ButterflySchedule from_rounds(std::uint32_t num_nodes, std::uint32_t fanout,
                                       std::vector<Round> rounds);

  std::uint32_t num_nodes() const noexcept { return num_nodes_; }
  std::uint32_t fanout() const noexcept { return fanout_; }
  std::uint32_t radix() const noexcept { return fanout_ == 1 ? 2 : fanout_; }
  std::size_t num_rounds() const noexcept { return rounds_.size(); }

  std::span<const node_id> sources(std::size_t round, node_id node) const {
    return rounds_.at(round).at(node);
  }
  const std::vector<Round>& rounds() const noexcept { return rounds_; }

  /// Largest number of sources any node pulls from in a single round.
  std::size_t max_sources_per_round() const noexcept;

 private:
  ButterflySchedule(std::uint32_t num_nodes, std::uint32_t fanout, std::vector<Round> rounds)
      : num_nodes_(num_nodes), fanout_(fanout), rounds_(std::move(rounds)) {}

  std::uint32_t num_nodes_ = 1;
  std::uint32_t fanout_ = 1;
  std::vector<Round> rounds_;
};

inline ButterflySchedule make_schedule(std::uint32_t num_nodes, std::uint32_t fanout) {
  return ButterflySchedule::make(num_nodes, fanout);
}

/// ceil(log_r(num_nodes)) with r = max(fanout, 2); 0 for a single node.
std::size_t num_rounds(std::uint32_t num_nodes, std::uint32_t fanout);

/// Published accounting: every node sends `fanout` messages per round,
/// num_nodes * fanout * num_rounds in total.
std::uint64_t message_count_paper(std::uint32_t num_nodes, std::uint32_t fanout);

/// Number of cross-node buffer transfers the schedule actually prescribes.
std::uint64_t message_count_remote(const ButterflySchedule& s);

/// Incoming-frontier capacity per node, in vertices.
std::uint64_t buffer_bound(std::uint64_t num_vertices, std::uint32_t fanout);

}  // namespace bfly
