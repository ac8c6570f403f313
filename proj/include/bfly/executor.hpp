#pragma once

#include <barrier>
#include <thread>
#include <type_traits>
#include <vector>

#include "bfly/types.hpp"

namespace bfly {

enum class WorkerMode { lockstep, concurrent };

/// Runs bulk-synchronous supersteps over a fixed set of workers. Each call to
/// superstep() returns only after every worker has finished its step, which
/// is the barrier between phases and between butterfly rounds.
///
/// lockstep executes workers 0..n-1 in order on the calling thread.
/// concurrent keeps one thread per worker alive for the executor's lifetime.
class Executor {
 public:
  Executor(WorkerMode mode, std::size_t workers);
  ~Executor();

  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  WorkerMode mode() const noexcept { return mode_; }
  std::size_t workers() const noexcept { return workers_; }

  template <class F>
  void superstep(F&& step) {
    using Fn = std::remove_reference_t<F>;
    dispatch(+[](void* ctx, node_id g) { (*static_cast<Fn*>(ctx))(g); },
             const_cast<void*>(static_cast<const void*>(&step)));
  }

 private:
  using Task = void (*)(void*, node_id);

  void dispatch(Task task, void* ctx);
  void worker_loop(node_id g);

  WorkerMode mode_;
  std::size_t workers_;
  Task task_ = nullptr;
  void* ctx_ = nullptr;
  bool stop_ = false;
  std::barrier<> start_;
  std::barrier<> done_;
  std::vector<std::jthread> threads_;
};

}  // namespace bfly
