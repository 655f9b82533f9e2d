#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wild2/errors.hpp"
#include "wild2/galois.hpp"
#include "wild2/rows.hpp"

using namespace wild2;

TEST_CASE("table shape: classes and sub-row counts") {
    const auto& rows = all_rows();
    CHECK(rows.size() == 45);

    std::map<std::string, int> d4_shape_counts;
    for (const auto& r : rows) {
        if (r.cls == GaloisClass::D4) ++d4_shape_counts[r.efg.str()];
    }
    REQUIRE(d4_shape_counts.size() == 5);
    CHECK(d4_shape_counts["(8,1,1)"] == 2);
    CHECK(d4_shape_counts["(4,2,1)"] == 4);
    CHECK(d4_shape_counts["(4,1,2)"] == 6);
    CHECK(d4_shape_counts["(2,2,2)"] == 7);
    CHECK(d4_shape_counts["(2,1,4)"] == 6);

    int v4 = 0, c4 = 0;
    for (const auto& r : rows) {
        if (r.cls == GaloisClass::V4) ++v4;
        if (r.cls == GaloisClass::C4) ++c4;
    }
    CHECK(v4 == 15);
    CHECK(c4 == 3);

    // Ids are unique and find_row sees each of them.
    std::set<std::string> ids;
    for (const auto& r : rows) {
        CHECK(ids.insert(r.id).second);
        CHECK(find_row(r.id) == &r);
    }
    CHECK(find_row("no-such-row") == nullptr);
}

TEST_CASE("every integer matches, and all matches agree on the shape") {
    for (long long c = -20000; c <= 20000; ++c) {
        auto matches = matching_rows(c);
        REQUIRE(!matches.empty());
        for (const auto* m : matches) {
            CHECK(m->efg == matches.front()->efg);
            CHECK(m->cls == matches.front()->cls);
        }
        // classify_efg reports the first match and never throws here.
        ClassifiedEfg cls = classify_efg(c);
        CHECK(cls.efg == matches.front()->efg);
        CHECK(cls.row_id == matches.front()->id);
    }
}

TEST_CASE("frozen classifications across the small range") {
    struct Expect {
        long long c;
        const char* row;
        int e, f, g;
    };
    const Expect table[] = {
        {-10, "C4-411", 4, 1, 1},  {-9, "V4-411-a", 4, 1, 1}, {-8, "D4-811-b", 8, 1, 1},
        {-7, "D4-811-a", 8, 1, 1}, {-6, "D4-421-a", 4, 2, 1}, {-5, "C4-221", 2, 2, 1},
        {-4, "V4-411-c", 4, 1, 1}, {-3, "D4-811-a", 8, 1, 1}, {-2, "C4-411", 4, 1, 1},
        {-1, "DEG-m1", 2, 1, 1},   {0, "DEG-0", 1, 1, 1},     {1, "D4-811-a", 8, 1, 1},
        {2, "D4-421-a", 4, 2, 1},  {3, "D4-421-b", 4, 2, 1},  {4, "D4-421-c", 4, 2, 1},
        {5, "D4-811-a", 8, 1, 1},  {6, "D4-412-a", 4, 1, 2},  {7, "D4-214-a", 2, 1, 4},
        {8, "D4-811-b", 8, 1, 1},  {9, "D4-811-a", 8, 1, 1},  {10, "D4-421-a", 4, 2, 1},
    };
    for (const auto& t : table) {
        ClassifiedEfg got = classify_efg(t.c);
        CHECK(got.row_id == t.row);
        CHECK(got.efg == (EfgTriple{t.e, t.f, t.g}));
    }
}

TEST_CASE("frozen classifications for structured families") {
    CHECK(classify_efg(111).row_id == "D4-214-d");    // -1 + 16*7
    CHECK(classify_efg(47).row_id == "D4-222-e");     // -1 + 16*3
    CHECK(classify_efg(27).row_id == "D4-222-a");     // 11 mod 16
    CHECK(classify_efg(4096 * 3).row_id == "D4-421-d");
    CHECK(classify_efg(2048).efg == (EfgTriple{8, 1, 1}));  // 2^11
    CHECK(classify_efg(-225).efg == (EfgTriple{4, 1, 1}));  // b = 15: overlapping rows
    CHECK(classify_efg(-225).row_id == "V4-411-b");
    CHECK(classify_efg(-81).row_id == "V4-221-b");  // b = 9: the mod-64 clause
}

TEST_CASE("known overlaps resolve cleanly instead of erroring") {
    // b = 15, 49, 79, ... : the mod-64 clause and the structured clause both
    // fire; the shapes agree and the first row in table order is reported.
    for (long long b : {15LL, 49LL, 79LL, 113LL}) {
        long long c = -b * b;
        auto matches = matching_rows(c);
        CHECK(matches.size() >= 2);
        CHECK(classify_efg(c).efg == (EfgTriple{4, 1, 1}));
    }
}

TEST_CASE("V4 and C4 dispatch on the square parameter") {
    // c = -b^2.
    CHECK(classify_efg(-4).row_id == "V4-411-c");     // b = 2 = 4^0(4*0+2)
    CHECK(classify_efg(-9).row_id == "V4-411-a");     // b = 3
    CHECK(classify_efg(-16).row_id == "V4-221-a");    // b = 4
    CHECK(classify_efg(-121).row_id == "V4-212-a");   // b = 11
    CHECK(classify_efg(-144).row_id == "V4-212-a");   // b = 12
    // c = -(b^2+1).
    CHECK(classify_efg(-2).row_id == "C4-411");   // b = 1
    CHECK(classify_efg(-5).row_id == "C4-221");   // b = 2
    CHECK(classify_efg(-10).row_id == "C4-411");  // b = 3
    CHECK(classify_efg(-17).row_id == "C4-212");  // b = 4
    CHECK(classify_efg(-37).row_id == "C4-221");  // b = 6
}

TEST_CASE("efg always multiplies to the field degree") {
    for (long long c = -5000; c <= 5000; ++c) {
        ClassifiedEfg cls = classify_efg(c);
        CHECK(cls.efg.e * cls.efg.f * cls.efg.g == field_degree(cls.cls));
    }
}

TEST_CASE("row_matches is consistent with matching_rows") {
    for (long long c = -300; c <= 300; ++c) {
        GaloisInfo gi = galois_info(c);
        std::set<std::string> via_matching;
        for (const auto* r : matching_rows(c)) via_matching.insert(r->id);
        for (const auto& r : all_rows()) {
            bool applicable = (r.cls == gi.cls);
            bool hit = applicable && row_matches(r, c, gi.b);
            CHECK(hit == (via_matching.count(r.id) != 0));
        }
    }
}

TEST_CASE("family enumeration returns members of the family") {
    for (const auto& row : all_rows()) {
        auto values = enumerate_family(row, 4, 40);
        CHECK(!values.empty());
        // Sorted and unique.
        for (size_t i = 1; i < values.size(); ++i) CHECK(values[i - 1] < values[i]);
        for (long long c : values) {
            GaloisInfo gi = galois_info(c);
            REQUIRE(gi.cls == row.cls);
            CHECK(row_matches(row, c, gi.b));
            // The actual classification carries the family's shape.
            CHECK(classify_efg(c).efg == row.efg);
        }
    }
}

TEST_CASE("family enumeration reaches the expected small members") {
    auto contains = [](const std::vector<long long>& v, long long x) {
        for (long long y : v) {
            if (y == x) return true;
        }
        return false;
    };
    const CongruenceRow* r811a = find_row("D4-811-a");
    REQUIRE(r811a != nullptr);
    auto fam = enumerate_family(*r811a, 4, 40);
    CHECK(contains(fam, 1));
    CHECK(contains(fam, 5));
    CHECK(contains(fam, -3));

    const CongruenceRow* r811b = find_row("D4-811-b");
    REQUIRE(r811b != nullptr);
    fam = enumerate_family(*r811b, 4, 40);
    CHECK(contains(fam, 8));
    CHECK(contains(fam, 24));
    CHECK(contains(fam, -8));
    CHECK(contains(fam, 32));

    const CongruenceRow* v4c = find_row("V4-411-c");
    REQUIRE(v4c != nullptr);
    fam = enumerate_family(*v4c, 2, 20);
    CHECK(contains(fam, -4));    // b = 2
    CHECK(contains(fam, -36));   // b = 6
}
