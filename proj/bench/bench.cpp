// Serial reference vs OpenMP kernels: topology enumeration and a claim scan.
//
//   softtop_bench [cells] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "softtop/claims.hpp"
#include "softtop/kernels.hpp"

using namespace softtop;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t cells = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (cells < 1 || cells > kernels::kMaxKernelCells) {
    std::cerr << "cells must be in 1.." << kernels::kMaxKernelCells << "\n";
    return 2;
  }
  const int threads = kernels::effective_threads(0);
  const auto base = kernels::close_family(0, cells);

  std::size_t serial_count = 0;
  std::size_t parallel_count = 0;
  const double serial = best_of(repeats, [&] { serial_count = kernels::enumerate_serial(cells, base).size(); });
  const double parallel =
      best_of(repeats, [&] { parallel_count = kernels::enumerate_parallel(cells, base, 0).size(); });
  std::cout << "enumerate cells=" << cells << " topologies=" << serial_count << " serial=" << serial
            << "s parallel=" << parallel << "s threads=" << threads
            << (serial_count == parallel_count ? "" : " MISMATCH") << "\n";

  std::string serial_report;
  std::string parallel_report;
  const double scan_serial =
      best_of(1, [&] { serial_report = format_report(verify_claim("CN3", 4, {1})); });
  const double scan_parallel =
      best_of(1, [&] { parallel_report = format_report(verify_claim("CN3", 4, {0})); });
  std::cout << "verify CN3 bound=4 serial=" << scan_serial << "s parallel=" << scan_parallel
            << "s" << (serial_report == parallel_report ? "" : " MISMATCH") << "\n";
  return serial_count == parallel_count && serial_report == parallel_report ? 0 : 1;
}
