#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bfly {

/// Vertex identifier. 32 bits addresses up to 2^32 - 1 vertices; the top
/// value is reserved for the unreached-distance sentinel.
using vertex_t = std::uint32_t;

/// Hop count from the BFS root. Same width as vertex_t.
using distance_t = std::uint32_t;

/// Edge counts and adjacency offsets.
using edge_t = std::uint64_t;

/// Compute-node (worker) identifier.
using node_id = std::uint32_t;

inline constexpr distance_t kUnreached = std::numeric_limits<distance_t>::max();

/// Largest vertex id that can be stored while keeping num_vertices = id + 1
/// representable.
inline constexpr vertex_t kMaxVertexId = std::numeric_limits<vertex_t>::max() - 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IdOverflowError : public std::overflow_error {
 public:
  IdOverflowError(std::size_t line, const std::string& what)
      : std::overflow_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bfly
