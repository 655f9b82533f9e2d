#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "wild2/scan.hpp"

using namespace wild2;

namespace {

std::string csv_of(const ScanReport& report) {
    std::ostringstream os;
    write_csv(report, os);
    return os.str();
}

}  // namespace

TEST_CASE("scan_values: plain ranges") {
    ScanOptions opts;
    opts.from = -3;
    opts.to = 3;
    auto v = scan_values(opts);
    CHECK(v == std::vector<long long>{-3, -2, -1, 0, 1, 2, 3});

    opts.from = 5;
    opts.to = 4;  // empty
    CHECK(scan_values(opts).empty());

    opts.from = 7;
    opts.to = 7;
    CHECK(scan_values(opts) == std::vector<long long>{7});
}

TEST_CASE("scan_values: families merge into the range without duplicates") {
    ScanOptions opts;
    opts.from = -6;
    opts.to = -2;
    opts.families.push_back({"V4-411-c", 2, 10});  // b = 2, 6, 10 -> c = -4, -36, -100
    auto v = scan_values(opts);
    // Sorted, unique, containing both sources; -4 appears once.
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    int count4 = 0;
    bool saw36 = false, saw100 = false;
    for (long long c : v) {
        count4 += (c == -4);
        saw36 |= (c == -36);
        saw100 |= (c == -100);
    }
    CHECK(count4 == 1);
    CHECK(saw36);
    CHECK(saw100);

    ScanOptions fam_only;
    fam_only.from = 0;
    fam_only.to = -1;  // empty range
    fam_only.families.push_back({"D4-811-b", 3, 5});
    auto w = scan_values(fam_only);
    CHECK(!w.empty());
    for (long long c : w) CHECK(classify_efg(c).row_id == "D4-811-b");
}

TEST_CASE("scan_one fills both engines and the lattice columns") {
    ScanOptions opts;
    ScanRecord r = scan_one(7, opts);
    CHECK(r.c == 7);
    CHECK(r.galois == "D4");
    CHECK(r.e == 2);
    CHECK(r.f == 1);
    CHECK(r.g == 4);
    CHECK(r.row_id == "D4-214-a");
    CHECK(r.oracle_e == 2);
    CHECK(r.oracle_f == 1);
    CHECK(r.oracle_g == 4);
    CHECK(r.agree);
    CHECK(r.error.empty());
    CHECK(r.inertia_class == "I=Q(alpha);D=Q(alpha)");
    CHECK(r.filtration.empty());
    CHECK(r.precision_bits >= 64);
}

TEST_CASE("scan_one honors the filtration flag only where it applies") {
    ScanOptions opts;
    opts.with_filtration = true;
    ScanRecord r5 = scan_one(5, opts);
    CHECK(r5.filtration == "8|8|4|4|2|2|1");
    ScanRecord r8 = scan_one(8, opts);
    CHECK(r8.filtration == "8|8|4|4|2|2|2|2|1");
    ScanRecord r7 = scan_one(7, opts);  // not totally ramified
    CHECK(r7.filtration.empty());
    ScanRecord r0 = scan_one(0, opts);  // degenerate
    CHECK(r0.filtration.empty());
    CHECK(r0.galois == "degenerate(c=0)");
    CHECK(r0.inertia_class.empty());
}

TEST_CASE("frozen CSV block for the central range") {
    ScanOptions opts;
    opts.from = -3;
    opts.to = 3;
    opts.with_filtration = true;
    ScanReport rep = run_scan_serial(opts);
    const std::string expected =
        "c,galois,e,f,g,row_id,oracle_e,oracle_f,oracle_g,agree,inertia_class,filtration\n"
        "-3,D4,8,1,1,D4-811-a,8,1,1,yes,I=Q;D=Q,8|8|4|4|2|2|1\n"
        "-2,C4,4,1,1,C4-411,4,1,1,yes,,\n"
        "-1,degenerate(c=-1),2,1,1,DEG-m1,2,1,1,yes,,\n"
        "0,degenerate(c=0),1,1,1,DEG-0,1,1,1,yes,,\n"
        "1,D4,8,1,1,D4-811-a,8,1,1,yes,I=Q;D=Q,8|8|4|4|2|2|1\n"
        "2,D4,4,2,1,D4-421-a,4,2,1,yes,I=Q(sqrt(-(c+1)));D=Q,\n"
        "3,D4,4,2,1,D4-421-b,4,2,1,yes,I=Q(sqrt(-c));D=Q,\n";
    CHECK(csv_of(rep) == expected);
    CHECK(std::string(kCsvHeader) ==
          "c,galois,e,f,g,row_id,oracle_e,oracle_f,oracle_g,agree,inertia_class,filtration");
}

TEST_CASE("summary bookkeeping over the small range") {
    ScanOptions opts;
    opts.from = -10;
    opts.to = 10;
    ScanReport rep = run_scan(opts);
    CHECK(rep.summary.total == 21);
    CHECK(rep.summary.agreements == 21);
    CHECK(rep.summary.discrepancies == 0);
    CHECK(rep.summary.errors == 0);
    CHECK(rep.summary.max_precision_bits >= 64);
    CHECK(rep.summary.by_row.at("D4-811-a") == 5);  // -7, -3, 1, 5, 9
    CHECK(rep.summary.by_row.at("D4-421-a") == 3);  // -6, 2, 10
    CHECK(rep.summary.by_row.at("C4-411") == 2);    // -10, -2
    CHECK(rep.summary.by_row.at("DEG-0") == 1);
}

TEST_CASE("serial and parallel runs emit byte-identical reports") {
    ScanOptions base;
    base.from = -200;
    base.to = 200;
    base.with_filtration = true;

    ScanOptions serial = base;
    serial.jobs = 1;
    ScanOptions par4 = base;
    par4.jobs = 4;
    ScanOptions par3 = base;
    par3.jobs = 3;

    ScanReport rs = run_scan(serial);
    ScanReport r4 = run_scan(par4);
    ScanReport r3 = run_scan(par3);

    CHECK(csv_of(rs) == csv_of(r4));
    CHECK(csv_of(rs) == csv_of(r3));
    CHECK(report_to_json(rs) == report_to_json(r4));
    CHECK(report_to_json(rs) == report_to_json(r3));
}

TEST_CASE("JSON report carries options, records, and summary") {
    ScanOptions opts;
    opts.from = 4;
    opts.to = 8;
    opts.with_filtration = true;
    ScanReport rep = run_scan(opts);
    auto doc = nlohmann::json::parse(report_to_json(rep));

    CHECK(doc["options"]["from"] == 4);
    CHECK(doc["options"]["to"] == 8);
    CHECK(doc["options"]["with_filtration"] == true);
    CHECK(!doc["options"].contains("jobs"));  // execution detail, not content

    REQUIRE(doc["records"].is_array());
    REQUIRE(doc["records"].size() == 5);
    const auto& r5 = doc["records"][1];
    CHECK(r5["c"] == 5);
    CHECK(r5["galois"] == "D4");
    CHECK(r5["e"] == 8);
    CHECK(r5["row_id"] == "D4-811-a");
    CHECK(r5["oracle_e"] == 8);
    CHECK(r5["agree"] == true);
    CHECK(r5["filtration"] == "8|8|4|4|2|2|1");
    CHECK(r5["precision_bits"].get<long>() >= 64);

    CHECK(doc["summary"]["total"] == 5);
    CHECK(doc["summary"]["agreements"] == 5);
    CHECK(doc["summary"]["errors"] == 0);
    CHECK(doc["summary"]["by_row"].is_object());
}

TEST_CASE("family-driven scan classifies every member consistently") {
    ScanOptions opts;
    opts.from = 0;
    opts.to = -1;
    opts.families.push_back({"D4-214-d", 3, 20});
    ScanReport rep = run_scan(opts);
    CHECK(!rep.records.empty());
    CHECK(rep.summary.discrepancies == 0);
    CHECK(rep.summary.errors == 0);
    for (const auto& r : rep.records) {
        CHECK(r.agree);
        CHECK(r.e == 2);
        CHECK(r.f == 1);
        CHECK(r.g == 4);
    }
}
