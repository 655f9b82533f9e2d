#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <vector>

#include "wild2/errors.hpp"
#include "wild2/filtration.hpp"
#include "wild2/rows.hpp"

using namespace wild2;

namespace {

bool same_element(const GaloisElement& a, const GaloisElement& b) {
    return a.swap == b.swap && a.sa == b.sa && a.sb == b.sb;
}

}  // namespace

TEST_CASE("group table: eight distinct elements with the dihedral structure") {
    const auto& G = galois_elements();
    REQUIRE(G.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(G[i].index == i);
        CHECK((G[i].sa == 1 || G[i].sa == -1));
        CHECK((G[i].sb == 1 || G[i].sb == -1));
        for (int j = i + 1; j < 8; ++j) CHECK(!same_element(G[i], G[j]));
    }
    // sigma0 is the identity.
    CHECK(!G[0].swap);
    CHECK(G[0].sa == 1);
    CHECK(G[0].sb == 1);
    for (int i = 0; i < 8; ++i) {
        CHECK(compose(G[0], G[i]).index == i);
        CHECK(compose(G[i], G[0]).index == i);
    }
}

TEST_CASE("composition is closed, associative, and invertible") {
    const auto& G = galois_elements();
    for (int i = 0; i < 8; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < 8; ++j) {
            GaloisElement ij = compose(G[i], G[j]);
            CHECK(same_element(ij, G[ij.index]));  // closure, consistent index
            if (ij.index == 0) has_inverse = true;
            for (int k = 0; k < 8; ++k) {
                CHECK(compose(compose(G[i], G[j]), G[k]).index ==
                      compose(G[i], compose(G[j], G[k])).index);
            }
        }
        CHECK(has_inverse);
    }
}

TEST_CASE("element orders give the dihedral profile") {
    const auto& G = galois_elements();
    const int expected[8] = {1, 2, 2, 2, 2, 4, 4, 2};
    int order4 = 0;
    for (int i = 0; i < 8; ++i) {
        CHECK(element_order(G[i]) == expected[i]);
        order4 += (element_order(G[i]) == 4);
    }
    CHECK(order4 == 2);  // the two rotations of order 4
    // sigma3 (both signs flipped) is central.
    for (int i = 0; i < 8; ++i) {
        CHECK(compose(G[3], G[i]).index == compose(G[i], G[3]).index);
    }
    // The two order-4 elements square to the central involution.
    CHECK(compose(G[5], G[5]).index == 3);
    CHECK(compose(G[6], G[6]).index == 3);
}

TEST_CASE("totally ramified criterion agrees with the classifier") {
    for (long long c = -3000; c <= 3000; ++c) {
        bool expect = (c != 0 && c != -1) && classify_efg(c).efg == EfgTriple{8, 1, 1};
        CHECK(totally_ramified_case(c) == expect);
    }
    CHECK(totally_ramified_case(1));
    CHECK(totally_ramified_case(-3));
    CHECK(totally_ramified_case(8));
    CHECK(totally_ramified_case(2048));
    CHECK(!totally_ramified_case(2));
    CHECK(!totally_ramified_case(4));   // v2 even
    CHECK(!totally_ramified_case(16));  // v2 even
    CHECK(!totally_ramified_case(7));
    CHECK(!totally_ramified_case(0));
    CHECK(!totally_ramified_case(-1));
}

TEST_CASE("filtration profile for c = 1 mod 4") {
    for (long long c : {1LL, 5LL, -3LL, 9LL, 13LL, -7LL, 101LL}) {
        CAPTURE(c);
        FiltrationProfile p = ramification_filtration(c);
        CHECK(p.c == c);
        CHECK(p.displacement[0] == -1);
        const long want[8] = {-1, 4, 4, 6, 2, 2, 2, 2};
        for (int i = 1; i < 8; ++i) CHECK(p.displacement[i] == want[i]);
        CHECK(p.sizes() == std::vector<int>{8, 8, 4, 4, 2, 2, 1});
        CHECK(p.profile_str() == "8|8|4|4|2|2|1");
        REQUIRE(p.groups.size() == 7);
        CHECK(p.groups[2] == std::vector<int>{0, 1, 2, 3});
        CHECK(p.groups[3] == std::vector<int>{0, 1, 2, 3});
        CHECK(p.groups[4] == std::vector<int>{0, 3});
        CHECK(p.groups[5] == std::vector<int>{0, 3});
        CHECK(p.groups[6] == std::vector<int>{0});
        CHECK(p.precision_bits >= 64);
    }
}

TEST_CASE("filtration profile for c = 2^(2k+1) m") {
    // Covers both parities of k (the two uniformizer shapes).
    for (long long c : {8LL, 24LL, -8LL, 96LL, 128LL, 640LL}) {
        CAPTURE(c);
        FiltrationProfile p = ramification_filtration(c);
        const long want[8] = {-1, 2, 2, 8, 2, 4, 4, 2};
        for (int i = 1; i < 8; ++i) CHECK(p.displacement[i] == want[i]);
        CHECK(p.sizes() == std::vector<int>{8, 8, 4, 4, 2, 2, 2, 2, 1});
        CHECK(p.profile_str() == "8|8|4|4|2|2|2|2|1");
        REQUIRE(p.groups.size() == 9);
        CHECK(p.groups[2] == std::vector<int>{0, 3, 5, 6});
        CHECK(p.groups[3] == std::vector<int>{0, 3, 5, 6});
        CHECK(p.groups[4] == std::vector<int>{0, 3});
        CHECK(p.groups[7] == std::vector<int>{0, 3});
        CHECK(p.groups[8] == std::vector<int>{0});
    }
}

TEST_CASE("filtration groups are nested normal subgroups determined by displacement") {
    const auto& G = galois_elements();
    for (long long c : {5LL, 24LL, -3LL, 128LL}) {
        CAPTURE(c);
        FiltrationProfile p = ramification_filtration(c);
        REQUIRE(!p.groups.empty());
        CHECK(p.groups[0].size() == 8);  // G_0 is everything (totally ramified)
        CHECK(p.groups[1].size() == 8);  // wild: no tame quotient at p = 2

        for (size_t i = 0; i < p.groups.size(); ++i) {
            std::set<int> gi(p.groups[i].begin(), p.groups[i].end());
            CHECK(gi.count(0) == 1);
            // Matches the displacement rule sigma in G_i iff v >= i + 1.
            if (i >= 1) {
                for (int s = 1; s < 8; ++s) {
                    CHECK(gi.count(s) == (p.displacement[s] >= (long)i + 1 ? 1u : 0u));
                }
            }
            // Subgroup: closed under composition.
            for (int a : gi)
                for (int b : gi) CHECK(gi.count(compose(G[a], G[b]).index) == 1);
            // Normal in the full group.
            for (int g = 0; g < 8; ++g) {
                int ginv = 0;
                for (int h = 0; h < 8; ++h)
                    if (compose(G[g], G[h]).index == 0) ginv = h;
                for (int a : gi) {
                    int conj = compose(compose(G[g], G[a]), G[ginv]).index;
                    CHECK(gi.count(conj) == 1);
                }
            }
            // Nested chain.
            if (i + 1 < p.groups.size()) {
                for (int s : p.groups[i + 1]) CHECK(gi.count(s) == 1);
            }
        }
        // Chain terminates at the identity subgroup.
        CHECK(p.groups.back() == std::vector<int>{0});
    }
}

TEST_CASE("filtration recovers from a starved starting precision") {
    FiltrationProfile low = ramification_filtration(5, 24);
    FiltrationProfile dflt = ramification_filtration(5);
    CHECK(low.profile_str() == dflt.profile_str());
    for (int i = 1; i < 8; ++i) CHECK(low.displacement[i] == dflt.displacement[i]);
}

TEST_CASE("filtration rejects the split and partially ramified cases") {
    CHECK_THROWS_AS(ramification_filtration(3), NotTotallyRamified);
    CHECK_THROWS_AS(ramification_filtration(7), NotTotallyRamified);
    CHECK_THROWS_AS(ramification_filtration(2), NotTotallyRamified);
    CHECK_THROWS_AS(ramification_filtration(4), NotTotallyRamified);
    CHECK_THROWS_AS(ramification_filtration(-4), NotTotallyRamified);  // V4
    CHECK_THROWS_AS(ramification_filtration(-2), NotTotallyRamified);  // C4
    CHECK_THROWS_AS(ramification_filtration(0), NotTotallyRamified);
    CHECK_THROWS_AS(ramification_filtration(-1), NotTotallyRamified);
}

TEST_CASE("uniformizer minimal polynomial: frozen coefficient vectors") {
    // Independently computed with exact symbolic algebra for the first three
    // parameters (ascending powers).
    const long long m0[9] = {2, 0, -4, 0, 6, 8, 8, 4, 1};
    const long long m1[9] = {6603750, 1665000, 562500, 105000, 20950, 2600, 300, 20, 1};
    const long long m2[9] = {3725663850, 412030800, 69152940, 5248800, 473526, 23976, 1296, 36, 1};

    auto check_vec = [](const std::array<mpz_class, 9>& got, const long long (&want)[9]) {
        for (int i = 0; i < 9; ++i) CHECK(got[i] == mpz_class((long)want[i]));
    };
    check_vec(uniformizer_min_poly(mpz_class(0)), m0);
    check_vec(uniformizer_min_poly(mpz_class(1)), m1);
    check_vec(uniformizer_min_poly(mpz_class(2)), m2);
}

TEST_CASE("uniformizer minimal polynomial is Eisenstein at 2 for many m") {
    for (long long m = -50; m <= 50; ++m) {
        CAPTURE(m);
        auto co = uniformizer_min_poly(mpz_class((long)m));
        CHECK(co[8] == 1);
        CHECK(is_eisenstein_at_2(co));
    }
    // A non-Eisenstein vector is rejected.
    std::array<mpz_class, 9> bad{};
    bad[8] = 1;
    bad[0] = 4;  // constant term with valuation 2
    CHECK(!is_eisenstein_at_2(bad));
    bad[0] = 2;
    bad[3] = 1;  // odd interior coefficient
    CHECK(!is_eisenstein_at_2(bad));
}

TEST_CASE("structure constants for c = 1 mod 4") {
    for (long long c : {1LL, 5LL, 9LL, 13LL, 29LL}) {
        CAPTURE(c);
        StructureConstants sc = verify_structure_constants(c);
        CHECK(sc.c == c);
        CHECK(sc.v_alpha == 2);
        CHECK(sc.v_beta == 2);
        CHECK(sc.v_alpha_plus_beta == 4);
        CHECK(sc.v_beta_minus_alpha == 4);
        for (long v : sc.v_eight_sums) CHECK(v == 6);
        CHECK(sc.v_odd_combination == 7);
        CHECK(sc.min_poly_vanishes);
        CHECK(sc.min_poly_zero_bits >= 64);
        CHECK(sc.min_poly_eisenstein);
        CHECK(sc.precision_bits >= 64);
    }
}

TEST_CASE("structure constants are specific to the odd family") {
    CHECK_THROWS_AS(verify_structure_constants(8), NotTotallyRamified);
    CHECK_THROWS_AS(verify_structure_constants(3), NotTotallyRamified);
    CHECK_THROWS_AS(verify_structure_constants(0), NotTotallyRamified);
}
