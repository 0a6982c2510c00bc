// Wall-clock comparison of the serial reference paths against the OpenMP
// kernels, checking along the way that both produce identical output.

#include <chrono>
#include <cstdio>
#include <string>

#include "icetab/charpoly.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/threads.hpp"
#include "icetab/uasm.hpp"

using namespace icetab;

namespace {

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(),
              serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--heavy") heavy = true;

  const int threads = resolve_threads(0);
  std::printf("threads: %d\n", threads);
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

  {
    std::vector<ShiftedTableau> serial, parallel;
    double s = time_ms([&] { serial = generate_shifted(staircase(4), 4, 1); });
    double p = time_ms([&] { parallel = generate_shifted(staircase(4), 4, 0); });
    report("shifted tableaux, staircase(4)", s, p, serial == parallel);
  }
  {
    std::vector<MuUASM> serial, parallel;
    double s = time_ms([&] { serial = brute_force_uasms(staircase(4), 4, 1); });
    double p = time_ms([&] { parallel = brute_force_uasms(staircase(4), 4, 0); });
    report("U-turn search, staircase(4)", s, p, serial == parallel);
  }
  {
    VerifyReport serial, parallel;
    double s = time_ms([&] { serial = verify_identity(Partition{}, 3, 1); });
    double p = time_ms([&] { parallel = verify_identity(Partition{}, 3, 0); });
    report("identity verification, rank 3", s, p,
           serial.ok() && parallel.ok() && serial.product == parallel.product);
  }
  {
    VerifyReport serial, parallel;
    double s = time_ms([&] { serial = verify_identity(Partition{2, 1}, 2, 1); });
    double p = time_ms([&] { parallel = verify_identity(Partition{2, 1}, 2, 0); });
    report("identity verification, (2,1)", s, p,
           serial.ok() && parallel.ok() && serial.product == parallel.product);
  }
  if (heavy) {
    std::vector<ShiftedTableau> serial, parallel;
    double s = time_ms([&] { serial = generate_shifted(staircase(5), 5, 1); });
    double p = time_ms([&] { parallel = generate_shifted(staircase(5), 5, 0); });
    report("shifted tableaux, staircase(5)", s, p, serial == parallel);
    std::printf("staircase(5) tableau count: %zu\n", serial.size());
  }
  return 0;
}
