#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace superroot {

// status codes a sweep checker may return per case
inline constexpr int kSweepOk = 0;
inline constexpr int kSweepSkip = 1;  // case not decidable (e.g. window rejection)
inline constexpr int kSweepFail = 2;

struct SweepResult {
  long total = 0;
  long ok = 0;
  long skipped = 0;
  long failed = 0;
  long first_failure = -1;  // smallest failing index, independent of scheduling
  std::string witness;      // description of that case
};

// Number of worker threads a parallel sweep will use: the SUPERROOT_THREADS
// environment variable when set (clamped to >= 1), otherwise the OpenMP
// default for this machine.
int sweep_thread_count();

// Evaluate `check` on every index in [0, count) and aggregate the outcome.
// The parallel variant splits the index range statically across OpenMP
// threads, writing each verdict into a pre-sized slot array; aggregation then
// scans the array in index order, so counters and the first-failure witness
// are identical to the serial reference no matter the thread count.
SweepResult sweep_serial(long count, const std::function<int(long)>& check,
                         const std::function<std::string(long)>& describe);
SweepResult sweep_parallel(long count, const std::function<int(long)>& check,
                           const std::function<std::string(long)>& describe);

// Convenience dispatcher.
SweepResult run_sweep(long count, const std::function<int(long)>& check,
                      const std::function<std::string(long)>& describe, bool parallel);

// Deterministic 64-bit mixer (splitmix64 finalizer) for sampled sweeps: a
// sample index and seed map to case coordinates through repeated mixing, so
// sampled sweeps are reproducible across runs and thread counts.
std::uint64_t mix64(std::uint64_t x);

}  // namespace superroot
