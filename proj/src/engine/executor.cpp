#include "bfly/executor.hpp"

namespace bfly {

Executor::Executor(WorkerMode mode, std::size_t workers)
    : mode_(mode),
      workers_(workers),
      start_(static_cast<std::ptrdiff_t>(workers + 1)),
      done_(static_cast<std::ptrdiff_t>(workers + 1)) {
  if (mode_ != WorkerMode::concurrent) return;
  threads_.reserve(workers_);
  for (std::size_t g = 0; g < workers_; ++g)
    threads_.emplace_back([this, g] { worker_loop(static_cast<node_id>(g)); });
}

Executor::~Executor() {
  if (mode_ != WorkerMode::concurrent) return;
  stop_ = true;
  start_.arrive_and_wait();
  threads_.clear();
}

void Executor::worker_loop(node_id g) {
  for (;;) {
    start_.arrive_and_wait();
    if (stop_) return;
    task_(ctx_, g);
    done_.arrive_and_wait();
  }
}

void Executor::dispatch(Task task, void* ctx) {
  if (mode_ == WorkerMode::lockstep) {
    for (std::size_t g = 0; g < workers_; ++g) task(ctx, static_cast<node_id>(g));
    return;
  }
  task_ = task;
  ctx_ = ctx;
  start_.arrive_and_wait();
  done_.arrive_and_wait();
}

}  // namespace bfly
