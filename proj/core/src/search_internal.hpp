#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "ghd/search.hpp"

namespace ghd::search::detail {

constexpr std::size_t kTranscriptLimit = 1000;

class Task {
 public:
  Task(int index, long long node_limit, std::chrono::steady_clock::time_point deadline, const std::atomic<int>& best)
      : index_(index), node_limit_(node_limit), deadline_(deadline), best_(best) {}

  // Counts a node; false means the task must stop.
  template <class Describe>
  bool visit(Describe&& describe) {
    ++nodes_;
    if (log_.size() < kTranscriptLimit) log_.push_back(describe());
    if (nodes_ > node_limit_) {
      stopped_ = true;
      return false;
    }
    if ((nodes_ & 1023) == 0 && (std::chrono::steady_clock::now() > deadline_ || best_.load() < index_)) {
      stopped_ = true;
      return false;
    }
    return !stopped_;
  }
  bool stopped() const { return stopped_; }
  long long nodes() const { return nodes_; }
  std::vector<std::string>& log() { return log_; }

 private:
  int index_;
  long long node_limit_;
  std::chrono::steady_clock::time_point deadline_;
  const std::atomic<int>& best_;
  long long nodes_ = 0;
  bool stopped_ = false;
  std::vector<std::string> log_;
};

// Runs `count` root tasks and keeps the lowest-index witness. Tasks above a
// found index are cancelled; everything below it runs to completion.
template <class T>
SearchResult<T> run_tasks(int count, const SearchBudget& budget,
                          const std::function<std::optional<T>(int, Task&)>& body) {
  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) order[i] = i;
  if (budget.seed_order != 0) {
    std::mt19937 rng(budget.seed_order);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::microseconds(static_cast<long long>(budget.wall_limit * 1e6));
  std::atomic<int> best{count};
  std::atomic<int> next{0};
  std::vector<std::optional<T>> found(count);
  std::vector<char> complete(count), ran(count);
  std::vector<long long> nodes(count);
  std::vector<std::vector<std::string>> logs(count);

  auto worker = [&] {
    for (int slot = next++; slot < count; slot = next++) {
      if (slot > best.load()) continue;
      Task task(slot, budget.node_limit, deadline, best);
      std::optional<T> w = body(order[slot], task);
      ran[slot] = 1;
      nodes[slot] = task.nodes();
      logs[slot] = std::move(task.log());
      if (w) {
        found[slot] = std::move(w);
        int cur = best.load();
        while (slot < cur && !best.compare_exchange_weak(cur, slot)) {
        }
      } else {
        complete[slot] = !task.stopped();
      }
    }
  };
  int threads = budget.threads > 0 ? budget.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchResult<T> res;
  int last = count - 1;
  for (int i = 0; i < count; ++i)
    if (found[i]) {
      res.status = Status::Found;
      res.witness = std::move(found[i]);
      last = i;
      break;
    }
  if (res.status != Status::Found) {
    bool all = std::all_of(complete.begin(), complete.end(), [](char c) { return c != 0; });
    res.status = all ? Status::ProvenEmpty : Status::BudgetExhausted;
  }
  for (int i = 0; i <= last; ++i) {
    res.nodes += nodes[i];
    for (auto& line : logs[i]) {
      if (res.transcript.size() >= kTranscriptLimit) break;
      res.transcript.push_back(std::move(line));
    }
  }
  return res;
}

}  // namespace ghd::search::detail
