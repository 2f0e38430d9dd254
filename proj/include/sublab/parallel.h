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

#ifndef SUBLAB_PARALLEL_H_
#define SUBLAB_PARALLEL_H_

#include <cstddef>
#include <functional>
#include <vector>

namespace sublab {

// Worker count from $SUBLAB_THREADS, else the hardware concurrency (>= 1).
int DefaultThreadCount();

// Runs fn(task) for every task in [0, num_tasks) on up to num_threads
// workers. Task-to-worker assignment is dynamic, so callers that need
// reproducible floating-point results must make each task's output
// independent and reduce the outputs in task order.
void ParallelFor(size_t num_tasks, int num_threads,
                 const std::function<void(size_t)>& fn);

// Fixed partition of n items into contiguous shards. The shard layout depends
// only on n, never on the worker count.
struct Shard {
  size_t begin;
  size_t end;
};
std::vector<Shard> FixedShards(size_t n, size_t max_shards = 16);

}  // namespace sublab

#endif  // SUBLAB_PARALLEL_H_
