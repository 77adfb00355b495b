#pragma once

#include <cstddef>
#include <functional>

namespace rangekit {

// Logical core count; RANGEKIT_THREADS overrides when set.
unsigned default_thread_count();

// Runs fn(i) for every i in [0, n). Work items are pulled off a shared atomic
// cursor in chunks, so load balances dynamically; fn must not depend on
// execution order. threads == 0 means default_thread_count().
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

} // namespace rangekit
