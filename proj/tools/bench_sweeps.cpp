// Timing harness for the two sweep kernels: the graded super-Jacobi sweep and
// the invariance sweep of the affinization form.  Each kernel runs once
// through the serial reference and once through the OpenMP splitter, and the
// aggregates must agree exactly — the parallel path is only a scheduler.
//
//   bench_sweeps [--samples N] [--exhaustive]
//
// --samples bounds the sampled sweeps (default 500000); --exhaustive runs
// every triple instead, including all dim^3 cases of the dim-202 algebra.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "superroot/eals.hpp"
#include "superroot/sweep.hpp"

using namespace superroot;

namespace {

using Clock = std::chrono::steady_clock;

long ms_of(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void report(const std::string& name, long cases, const SweepResult& ser, long ser_ms,
            const SweepResult& par, long par_ms) {
  bool same = ser.total == par.total && ser.ok == par.ok && ser.skipped == par.skipped &&
              ser.failed == par.failed && ser.first_failure == par.first_failure &&
              ser.witness == par.witness;
  std::cout << name << ": " << cases << " cases\n"
            << "  serial   " << ser_ms << "ms  (ok " << ser.ok << ", skipped " << ser.skipped
            << ", failed " << ser.failed << ")\n"
            << "  parallel " << par_ms << "ms  (ok " << par.ok << ", skipped " << par.skipped
            << ", failed " << par.failed << ")\n"
            << "  speedup  " << (par_ms > 0 ? double(ser_ms) / double(par_ms) : 0.0)
            << "x, aggregates " << (same ? "identical" : "MISMATCH") << "\n";
  if (!same || ser.failed != 0) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  long samples = 500000;
  bool exhaustive = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--samples" && i + 1 < argc)
      samples = std::atol(argv[++i]);
    else if (arg == "--exhaustive")
      exhaustive = true;
    else {
      std::cerr << "usage: bench_sweeps [--samples N] [--exhaustive]\n";
      return 2;
    }
  }

  std::cout << "worker threads: " << sweep_thread_count() << "\n";

  OspContext ctx(2, 2);

  // kernel 1: graded super-Jacobi, plain coordinates, always exhaustive
  {
    GradedAlgebra g = build_graded(ctx, data_trivial());
    long cases = long(g.dim()) * g.dim() * g.dim();
    Clock::time_point t0 = Clock::now();
    JacobiReport ser = verify_super_jacobi(g, true, 0, 0, false);
    long ser_ms = ms_of(t0);
    t0 = Clock::now();
    JacobiReport par = verify_super_jacobi(g, true, 0, 0, true);
    long par_ms = ms_of(t0);
    SweepResult a{cases, ser.checked, ser.skipped, ser.failed, -1, ser.witness};
    SweepResult b{cases, par.checked, par.skipped, par.failed, -1, par.witness};
    report("jacobi dim-40 exhaustive", cases, a, ser_ms, b, par_ms);
  }

  // kernel 2: graded super-Jacobi on the degree-windowed dim-200 loop algebra
  {
    GradedAlgebra g = build_graded(ctx, data_laurent(2));
    long cases = exhaustive ? long(g.dim()) * g.dim() * g.dim() : samples;
    Clock::time_point t0 = Clock::now();
    JacobiReport ser = verify_super_jacobi(g, exhaustive, samples, 0, false);
    long ser_ms = ms_of(t0);
    t0 = Clock::now();
    JacobiReport par = verify_super_jacobi(g, exhaustive, samples, 0, true);
    long par_ms = ms_of(t0);
    SweepResult a{cases, ser.checked, ser.skipped, ser.failed, -1, ser.witness};
    SweepResult b{cases, par.checked, par.skipped, par.failed, -1, par.witness};
    report(std::string("jacobi dim-200 ") + (exhaustive ? "exhaustive" : "sampled"), cases, a,
           ser_ms, b, par_ms);
  }

  // kernel 3: invariance of the form on the dim-202 affinization
  {
    Eals v = affinize(build_graded(ctx, data_laurent(2)));
    const int D = v.dim();
    const std::uint64_t seed = 0;
    long cases = exhaustive ? long(D) * D * D : samples;
    auto decode = [&](long idx, int& i, int& j, int& k) {
      if (exhaustive) {
        i = static_cast<int>(idx / (long(D) * D));
        j = static_cast<int>((idx / D) % D);
        k = static_cast<int>(idx % D);
        return;
      }
      std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(idx)));
      i = static_cast<int>(h % D);
      h = mix64(h);
      j = static_cast<int>(h % D);
      h = mix64(h);
      k = static_cast<int>(h % D);
    };
    auto check_one = [&](long idx) -> int {
      int i, j, k;
      decode(idx, i, j, k);
      auto xy = v.bracket(i, j);
      auto yz = v.bracket(j, k);
      if (!xy || !yz) return kSweepSkip;
      Scalar lhs(0), rhs(0);
      for (const auto& [t, c] : *xy) lhs += c * v.form(t, k);
      for (const auto& [t, c] : *yz) rhs += c * v.form(i, t);
      return lhs == rhs ? kSweepOk : kSweepFail;
    };
    auto describe = [&](long idx) -> std::string {
      int i, j, k;
      decode(idx, i, j, k);
      return "(" + v.labels[i] + ", " + v.labels[j] + ", " + v.labels[k] + ")";
    };
    Clock::time_point t0 = Clock::now();
    SweepResult ser = sweep_serial(cases, check_one, describe);
    long ser_ms = ms_of(t0);
    t0 = Clock::now();
    SweepResult par = sweep_parallel(cases, check_one, describe);
    long par_ms = ms_of(t0);
    report(std::string("form-invariance dim-202 ") + (exhaustive ? "exhaustive" : "sampled"),
           cases, ser, ser_ms, par, par_ms);
  }

  return 0;
}
