#include <algorithm>
#include <string>

#include "bfly/schedule.hpp"

namespace bfly {
namespace {

void validate(std::uint32_t num_nodes, std::uint32_t fanout) {
  if (num_nodes < 1) throw std::invalid_argument("num_nodes must be >= 1");
  if (fanout < 1) throw std::invalid_argument("fanout must be >= 1");
  if (fanout > num_nodes)
    throw std::invalid_argument("fanout (" + std::to_string(fanout) + ") exceeds num_nodes (" +
                                std::to_string(num_nodes) + ")");
}

}  // namespace

std::size_t num_rounds(std::uint32_t num_nodes, std::uint32_t fanout) {
  validate(num_nodes, fanout);
  const std::uint64_t radix = std::max<std::uint32_t>(fanout, 2);
  std::size_t rounds = 0;
  for (std::uint64_t span = 1; span < num_nodes; span *= radix) ++rounds;
  return rounds;
}

ButterflySchedule ButterflySchedule::make(std::uint32_t num_nodes, std::uint32_t fanout) {
  const auto total_rounds = bfly::num_rounds(num_nodes, fanout);
  const std::uint64_t radix = std::max<std::uint32_t>(fanout, 2);

  std::vector<Round> rounds(total_rounds, Round(num_nodes));
  std::uint64_t stride = 1;  // radix^i
  for (std::size_t i = 0; i < total_rounds; ++i, stride *= radix) {
    for (node_id g = 0; g < num_nodes; ++g) {
      const std::uint64_t digit = (g / stride) % radix;
      const std::uint64_t block = g - digit * stride;  // g with digit i cleared
      auto& srcs = rounds[i][g];
      for (std::uint64_t k = 0; k < radix; ++k) {
        if (k == digit) continue;
        std::uint64_t src = block + k * stride;
        if (src >= num_nodes) {
          // Sub-block representative: clear the digits below i.
          src -= src % stride;
          if (src >= num_nodes || src == g) continue;
        }
        srcs.push_back(static_cast<node_id>(src));
      }
    }
  }
  return ButterflySchedule(num_nodes, fanout, std::move(rounds));
}

ButterflySchedule ButterflySchedule::from_rounds(std::uint32_t num_nodes, std::uint32_t fanout,
                                                 std::vector<Round> rounds) {
  validate(num_nodes, fanout);
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    if (rounds[i].size() != num_nodes)
      throw std::invalid_argument("round " + std::to_string(i) + " has " +
                                  std::to_string(rounds[i].size()) + " entries, expected " +
                                  std::to_string(num_nodes));
    for (node_id g = 0; g < num_nodes; ++g)
      for (auto src : rounds[i][g])
        if (src >= num_nodes || src == g)
          throw std::invalid_argument("round " + std::to_string(i) + ": node " +
                                      std::to_string(g) + " has invalid source " +
                                      std::to_string(src));
  }
  return ButterflySchedule(num_nodes, fanout, std::move(rounds));
}

std::size_t ButterflySchedule::max_sources_per_round() const noexcept {
  std::size_t best = 0;
  for (const auto& round : rounds_)
    for (const auto& srcs : round) best = std::max(best, srcs.size());
  return best;
}

std::uint64_t message_count_paper(std::uint32_t num_nodes, std::uint32_t fanout) {
  return std::uint64_t{num_nodes} * fanout * num_rounds(num_nodes, fanout);
}

std::uint64_t message_count_remote(const ButterflySchedule& s) {
  std::uint64_t total = 0;
  for (const auto& round : s.rounds())
    for (const auto& srcs : round) total += srcs.size();
  return total;
}

std::uint64_t buffer_bound(std::uint64_t num_vertices, std::uint32_t fanout) {
  return std::uint64_t{fanout} * num_vertices;
}

}  // namespace bfly
