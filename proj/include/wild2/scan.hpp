#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "wild2/rows.hpp"

namespace wild2 {

// A --family request: sweep one classification row's parameters.
struct FamilySpec {
    std::string row_id;
    long long k_max = 6;     // bound on the exponent parameter k
    long long cof_max = 99;  // bound on the free cofactor / step count
};

struct ScanOptions {
    long long from = 0;
    long long to = -1;  // inclusive; from > to leaves the range empty
    std::vector<FamilySpec> families;
    int jobs = 0;            // 0 = runtime default, 1 = serial
    long precision_bits = 0;  // 0 = per-c default
    bool with_filtration = false;
};

// One c, both engines side by side. Errors are carried per record so one bad
// value cannot take down a sweep.
struct ScanRecord {
    long long c = 0;
    std::string galois;
    int e = 0, f = 0, g = 0;  // closed-form classifier
    std::string row_id;
    int oracle_e = 0, oracle_f = 0, oracle_g = 0;
    bool agree = false;
    std::string inertia_class;  // "I=<node>;D=<node>", dihedral case only
    std::string filtration;     // group-size chain when requested and applicable
    long precision_bits = 0;
    std::string error;
};

struct ScanSummary {
    long long total = 0;
    long long agreements = 0;
    long long discrepancies = 0;
    long long errors = 0;
    long max_precision_bits = 0;
    std::map<std::string, long long> by_row;
};

struct ScanReport {
    ScanOptions options;
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

// The c values an option set covers: the range plus any family sweeps,
// sorted and deduplicated.
std::vector<long long> scan_values(const ScanOptions& opts);

ScanRecord scan_one(long long c, const ScanOptions& opts);

// Reference implementation: plain ordered loop.
ScanReport run_scan_serial(const ScanOptions& opts);
// Work-sharing implementation; identical output by construction (records are
// written into their slot by index). Falls back to serial without OpenMP.
ScanReport run_scan_parallel(const ScanOptions& opts);
// Dispatch on opts.jobs.
ScanReport run_scan(const ScanOptions& opts);

extern const char* const kCsvHeader;
void write_csv(const ScanReport& report, std::ostream& os);
std::string report_to_json(const ScanReport& report);

}  // namespace wild2
