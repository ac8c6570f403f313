#pragma once

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <span>

#include "bfly/types.hpp"

namespace bfly {

[[noreturn]] inline void fatal(const char* msg) {
  std::fprintf(stderr, "fatal: %s\n", msg);
  std::abort();
}

/// Fixed-capacity vertex queue. Storage is allocated once; push never
/// reallocates, so readers of an already-written prefix are unaffected by
/// concurrent appends from the owner.
class FrontierQueue {
 public:
  FrontierQueue() = default;
  explicit FrontierQueue(std::size_t capacity)
      : data_(capacity ? std::make_unique<vertex_t[]>(capacity) : nullptr),
        capacity_(capacity) {}

  void push(vertex_t v) noexcept {
    if (size_ == capacity_) fatal("frontier queue capacity exceeded");
    data_[size_++] = v;
  }

  /// Safe against other push_concurrent calls on the same queue.
  void push_concurrent(vertex_t v) noexcept {
    auto slot = std::atomic_ref<std::size_t>(size_).fetch_add(1, std::memory_order_relaxed);
    if (slot >= capacity_) fatal("frontier queue capacity exceeded");
    data_[slot] = v;
  }

  /// Bulk append of a source buffer.
  void append(std::span<const vertex_t> src) noexcept;

  void clear() noexcept { size_ = 0; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return capacity_; }

  std::span<const vertex_t> view() const noexcept { return {data_.get(), size_}; }
  std::span<const vertex_t> prefix(std::size_t n) const noexcept { return {data_.get(), n}; }

  const vertex_t* begin() const noexcept { return data_.get(); }
  const vertex_t* end() const noexcept { return data_.get() + size_; }

  friend void swap(FrontierQueue& a, FrontierQueue& b) noexcept {
    std::swap(a.data_, b.data_);
    std::swap(a.capacity_, b.capacity_);
    std::swap(a.size_, b.size_);
  }

 private:
  std::unique_ptr<vertex_t[]> data_;
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
};

}  // namespace bfly
