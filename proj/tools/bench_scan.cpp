#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wild2/scan.hpp"

namespace {

using namespace wild2;

std::string csv_of(const ScanReport& rep) {
    std::ostringstream os;
    write_csv(rep, os);
    return os.str();
}

template <typename F>
double best_of_ms(int repeat, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark: serial reference scan vs the work-sharing scan"};
    long long from = -2000, to = 2000;
    int repeat = 3;
    std::vector<int> jobs = {0};
    app.add_option("--from", from, "First c (inclusive)");
    app.add_option("--to", to, "Last c (inclusive)");
    app.add_option("--repeat", repeat, "Repetitions; the best time wins")->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "Thread counts to benchmark (0 = runtime default)");
    CLI11_PARSE(app, argc, argv);

    ScanOptions opts;
    opts.from = from;
    opts.to = to;

#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; the parallel path degrades to serial\n";
#endif
    std::cout << "range [" << from << ", " << to << "], " << (to - from + 1)
              << " values, best of " << repeat << "\n\n";

    ScanReport ref = run_scan_serial(opts);  // warm-up and reference output
    const std::string ref_csv = csv_of(ref);

    const double serial_ms = best_of_ms(repeat, [&] { ref = run_scan_serial(opts); });
    std::cout << "serial reference: " << serial_ms << " ms\n";

    bool all_match = true;
    for (int j : jobs) {
        opts.jobs = j;
        ScanReport par = run_scan_parallel(opts);
        const bool same = csv_of(par) == ref_csv;
        all_match = all_match && same;
        const double par_ms = best_of_ms(repeat, [&] { par = run_scan_parallel(opts); });
        std::cout << "parallel jobs=" << j << (j == 0 ? " (auto)" : "") << ": " << par_ms
                  << " ms, speedup " << (serial_ms / par_ms) << "x, output identical: "
                  << (same ? "yes" : "NO") << "\n";
    }
    return all_match ? 0 : 1;
}
