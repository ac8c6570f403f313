#include <cmath>
#include <random>
#include <string>

#include "bfly/graph.hpp"

namespace bfly {
namespace {

// 53-bit uniform in [0, 1); std::uniform_real_distribution is not specified
// bit-exactly across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

EdgeList generate_rmat(int scale, int edge_factor, std::uint64_t seed,
                       const RmatParams& params) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  if (edge_factor < 1) throw std::invalid_argument("edge_factor must be >= 1");
  if (scale > 31)
    throw std::overflow_error("scale " + std::to_string(scale) +
                              " overflows the 32-bit vertex id range");
  const double total = params.a + params.b + params.c + params.d;
  if (params.a < 0 || params.b < 0 || params.c < 0 || params.d < 0 ||
      std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("RMAT probabilities must be non-negative and sum to 1");

  const std::size_t n = std::size_t{1} << scale;
  const std::size_t m = n * static_cast<std::size_t>(edge_factor);
  const double ab = params.a + params.b;
  const double abc = ab + params.c;

  std::mt19937_64 rng(seed);
  EdgeList el;
  el.num_vertices = n;
  el.edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    vertex_t src = 0, dst = 0;
    for (int bit = scale - 1; bit >= 0; --bit) {
      const double p = unit_uniform(rng);
      const vertex_t mask = vertex_t{1} << bit;
      if (p < params.a) {
      } else if (p < ab) {
        dst |= mask;
      } else if (p < abc) {
        src |= mask;
      } else {
        src |= mask;
        dst |= mask;
      }
    }
    el.edges.push_back({src, dst});
  }
  return el;
}

}  // namespace bfly
