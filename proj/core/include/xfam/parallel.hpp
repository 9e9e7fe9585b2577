#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace xfam {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(task_id) for task_id in [0, task_count) over `jobs` workers.
// Callers keep per-task output slots, so results merge deterministically
// regardless of the worker count.
template <typename Fn>
void run_tasks(int jobs, int task_count, Fn&& fn) {
  jobs = std::min(resolve_jobs(jobs), task_count);
  if (jobs <= 1) {
    for (int id = 0; id < task_count; ++id) fn(id);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (int id; (id = next.fetch_add(1)) < task_count;) fn(id);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace xfam
