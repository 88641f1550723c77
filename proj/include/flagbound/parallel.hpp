#ifndef FLAGBOUND_PARALLEL_HPP
#define FLAGBOUND_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace flagbound {

// 0 means "pick for me": FLAGBOUND_THREADS if set, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Runs body(worker, begin, end) on contiguous chunks of [0, count). Workers are
// numbered 0..k-1 with k <= threads; chunk boundaries depend only on count and k.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace flagbound

#endif  // FLAGBOUND_PARALLEL_HPP
