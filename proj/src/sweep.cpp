#include "superroot/sweep.hpp"

#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superroot {

int sweep_thread_count() {
  if (const char* env = std::getenv("SUPERROOT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

SweepResult aggregate(const std::vector<unsigned char>& status,
                      const std::function<std::string(long)>& describe) {
  SweepResult r;
  r.total = static_cast<long>(status.size());
  for (long i = 0; i < r.total; ++i) {
    switch (status[i]) {
      case kSweepOk:
        ++r.ok;
        break;
      case kSweepSkip:
        ++r.skipped;
        break;
      default:
        ++r.failed;
        if (r.first_failure < 0) r.first_failure = i;
    }
  }
  if (r.first_failure >= 0 && describe) r.witness = describe(r.first_failure);
  return r;
}

}  // namespace

SweepResult sweep_serial(long count, const std::function<int(long)>& check,
                         const std::function<std::string(long)>& describe) {
  std::vector<unsigned char> status(count, kSweepOk);
  for (long i = 0; i < count; ++i) status[i] = static_cast<unsigned char>(check(i));
  return aggregate(status, describe);
}

SweepResult sweep_parallel(long count, const std::function<int(long)>& check,
                           const std::function<std::string(long)>& describe) {
  std::vector<unsigned char> status(count, kSweepOk);
  const int threads = sweep_thread_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (long i = 0; i < count; ++i) status[i] = static_cast<unsigned char>(check(i));
  (void)threads;
  return aggregate(status, describe);
}

SweepResult run_sweep(long count, const std::function<int(long)>& check,
                      const std::function<std::string(long)>& describe, bool parallel) {
  return parallel ? sweep_parallel(count, check, describe)
                  : sweep_serial(count, check, describe);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace superroot
