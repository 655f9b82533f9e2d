#include "wild2/scan.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wild2/errors.hpp"
#include "wild2/filtration.hpp"
#include "wild2/galois.hpp"
#include "wild2/tower.hpp"

namespace wild2 {

std::vector<long long> scan_values(const ScanOptions& opts) {
    std::set<long long> vals;
    for (long long c = opts.from; c <= opts.to; ++c) {
        vals.insert(c);
        if (c == opts.to) break;  // guards to == LLONG_MAX
    }
    for (const auto& fam : opts.families) {
        const CongruenceRow* row = find_row(fam.row_id);
        check(row != nullptr, "unknown family row id");
        for (long long c : enumerate_family(*row, fam.k_max, fam.cof_max)) vals.insert(c);
    }
    return {vals.begin(), vals.end()};
}

ScanRecord scan_one(long long c, const ScanOptions& opts) {
    ScanRecord rec;
    rec.c = c;
    try {
        ClassifiedEfg cls = classify_efg(c);
        rec.galois = to_string(cls.cls);
        rec.e = cls.efg.e;
        rec.f = cls.efg.f;
        rec.g = cls.efg.g;
        rec.row_id = cls.row_id;

        OracleResult oracle = oracle_efg(c, opts.precision_bits);
        rec.oracle_e = oracle.efg.e;
        rec.oracle_f = oracle.efg.f;
        rec.oracle_g = oracle.efg.g;
        rec.precision_bits = oracle.precision_bits;
        rec.agree = cls.efg == oracle.efg;

        if (cls.cls == GaloisClass::D4) {
            InertiaDecomposition id = inertia_from_oracle(c, oracle);
            rec.inertia_class = "I=" + id.inertia_node + ";D=" + id.decomposition_node;
        }
        if (opts.with_filtration && totally_ramified_case(c))
            rec.filtration = ramification_filtration(c, opts.precision_bits).profile_str();
    } catch (const std::exception& ex) {
        rec.error = ex.what();
        rec.agree = false;
    }
    return rec;
}

namespace {

ScanReport assemble(const ScanOptions& opts, std::vector<ScanRecord> records) {
    ScanReport rep{opts, std::move(records), {}};
    for (const auto& r : rep.records) {
        ++rep.summary.total;
        if (!r.error.empty()) {
            ++rep.summary.errors;
            continue;
        }
        if (r.agree) ++rep.summary.agreements;
        else ++rep.summary.discrepancies;
        if (!r.row_id.empty()) ++rep.summary.by_row[r.row_id];
        rep.summary.max_precision_bits = std::max(rep.summary.max_precision_bits, r.precision_bits);
    }
    return rep;
}

}  // namespace

ScanReport run_scan_serial(const ScanOptions& opts) {
    const std::vector<long long> vals = scan_values(opts);
    std::vector<ScanRecord> records(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) records[i] = scan_one(vals[i], opts);
    return assemble(opts, std::move(records));
}

ScanReport run_scan_parallel(const ScanOptions& opts) {
#ifdef _OPENMP
    const std::vector<long long> vals = scan_values(opts);
    std::vector<ScanRecord> records(vals.size());
    const long long n = static_cast<long long>(vals.size());
    if (opts.jobs > 1) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(opts.jobs)
        for (long long i = 0; i < n; ++i) records[i] = scan_one(vals[i], opts);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < n; ++i) records[i] = scan_one(vals[i], opts);
    }
    return assemble(opts, std::move(records));
#else
    return run_scan_serial(opts);
#endif
}

ScanReport run_scan(const ScanOptions& opts) {
    if (opts.jobs == 1) return run_scan_serial(opts);
    return run_scan_parallel(opts);
}

const char* const kCsvHeader =
    "c,galois,e,f,g,row_id,oracle_e,oracle_f,oracle_g,agree,inertia_class,filtration";

namespace {

std::string int_or_empty(int v) { return v == 0 ? std::string() : std::to_string(v); }

}  // namespace

void write_csv(const ScanReport& report, std::ostream& os) {
    os << kCsvHeader << '\n';
    for (const auto& r : report.records) {
        os << r.c << ',' << r.galois << ',' << int_or_empty(r.e) << ',' << int_or_empty(r.f)
           << ',' << int_or_empty(r.g) << ',' << r.row_id << ',' << int_or_empty(r.oracle_e)
           << ',' << int_or_empty(r.oracle_f) << ',' << int_or_empty(r.oracle_g) << ','
           << (r.error.empty() ? (r.agree ? "yes" : "no") : "error") << ',' << r.inertia_class
           << ',' << r.filtration << '\n';
    }
}

std::string report_to_json(const ScanReport& report) {
    nlohmann::json j;
    // The worker count is execution detail, not report content: reports from
    // runs with different --jobs values must be byte-identical.
    j["options"] = {
        {"from", report.options.from},
        {"to", report.options.to},
        {"precision_bits", report.options.precision_bits},
        {"with_filtration", report.options.with_filtration},
    };
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : report.options.families)
        fams.push_back({{"row_id", f.row_id}, {"k_max", f.k_max}, {"cof_max", f.cof_max}});
    j["options"]["families"] = fams;

    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json e = {
            {"c", r.c},
            {"galois", r.galois},
            {"e", r.e},
            {"f", r.f},
            {"g", r.g},
            {"row_id", r.row_id},
            {"oracle_e", r.oracle_e},
            {"oracle_f", r.oracle_f},
            {"oracle_g", r.oracle_g},
            {"agree", r.agree},
            {"precision_bits", r.precision_bits},
        };
        if (!r.inertia_class.empty()) e["inertia_class"] = r.inertia_class;
        if (!r.filtration.empty()) e["filtration"] = r.filtration;
        if (!r.error.empty()) e["error"] = r.error;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);

    j["summary"] = {
        {"total", report.summary.total},
        {"agreements", report.summary.agreements},
        {"discrepancies", report.summary.discrepancies},
        {"errors", report.summary.errors},
        {"max_precision_bits", report.summary.max_precision_bits},
        {"by_row", report.summary.by_row},
    };
    return j.dump(2);
}

}  // namespace wild2
