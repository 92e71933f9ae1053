#pragma once

#include <cstddef>
#include <functional>

namespace otf {

// Worker count: ORLICZ_TF_THREADS if set and positive, else hardware concurrency.
int worker_count();
void set_worker_count(int n);  // 0 restores the default

// Runs body(i) for i in [0, n). Nested calls run serially on the calling thread.
// Iterations must not share mutable state; results are deterministic when each
// iteration writes only its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace otf
