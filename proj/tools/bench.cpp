// Benchmark: serial reference scan_stream vs the OpenMP scan_stream_omp,
// verifying that both produce identical record streams.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "pcr/eigenbound.hpp"

using namespace pcr;
using Clock = std::chrono::steady_clock;

namespace {

double run(void (*fn)(int, int, int, const ScanSink&), int n_max, int d_budget,
           std::vector<std::string>& rows) {
    rows.clear();
    auto t0 = Clock::now();
    fn(2, n_max, d_budget, [&](const ScanRecord& r) { rows.push_back(scan_csv_row(r)); });
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 80;
    int d_budget = argc > 2 ? std::atoi(argv[2]) : 20;
    std::printf("cyclic scan up to n = %d (d budget %d)\n", n_max, d_budget);

    std::vector<std::string> serial_rows, omp_rows;
    double t_serial = run(scan_stream, n_max, d_budget, serial_rows);
    double t_omp = run(scan_stream_omp, n_max, d_budget, omp_rows);

    std::printf("serial reference : %8.3f s  (%zu records)\n", t_serial, serial_rows.size());
    std::printf("openmp           : %8.3f s  (%zu records)\n", t_omp, omp_rows.size());
    std::printf("speedup          : %8.2fx\n", t_serial / t_omp);
    if (serial_rows != omp_rows) {
        std::printf("MISMATCH: record streams differ\n");
        return 1;
    }
    std::printf("record streams identical\n");
    return 0;
}
