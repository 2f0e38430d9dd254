// Copyright 2026 The Sublab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublab/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace sublab {

int DefaultThreadCount() {
  if (const char* env = std::getenv("SUBLAB_THREADS"); env != nullptr) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(size_t num_tasks, int num_threads,
                 const std::function<void(size_t)>& fn) {
  const size_t workers =
      std::min<size_t>(std::max(1, num_threads), num_tasks);
  if (workers <= 1) {
    for (size_t t = 0; t < num_tasks; ++t) fn(t);
    return;
  }
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (size_t t = next++; t < num_tasks; t = next++) fn(t);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (size_t i = 1; i < workers; ++i) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

std::vector<Shard> FixedShards(size_t n, size_t max_shards) {
  std::vector<Shard> shards;
  if (n == 0) return shards;
  const size_t count = std::min(n, std::max<size_t>(1, max_shards));
  const size_t base = n / count;
  const size_t extra = n % count;
  size_t begin = 0;
  for (size_t i = 0; i < count; ++i) {
    const size_t len = base + (i < extra ? 1 : 0);
    shards.push_back({begin, begin + len});
    begin += len;
  }
  return shards;
}

}  // namespace sublab
