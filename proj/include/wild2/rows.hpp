#pragma once

#include <string>
#include <vector>

#include "wild2/galois.hpp"

namespace wild2 {

struct EfgTriple {
    int e = 0, f = 0, g = 0;
    friend bool operator==(const EfgTriple& a, const EfgTriple& b) {
        return a.e == b.e && a.f == b.f && a.g == b.g;
    }
    std::string str() const {
        return "(" + std::to_string(e) + "," + std::to_string(f) + "," + std::to_string(g) + ")";
    }
};

// Which quantity a clause constrains. The V4 table is indexed by b with
// c = -b^2 (b canonicalized to be positive), the C4 table by b with
// c = -(b^2+1); their shifted forms act on b-1 and b+1.
enum class RowParam { C, CPlus1, B, BMinus1, BPlus1 };

struct PlainCongruence {
    long long modulus = 0;
    std::vector<long long> residues;
};

// x = 2^j * u with u odd: j >= j_min, j = j_res (mod j_mod), and
// u = one of cof_residues (mod cof_mod). cof_mod = 1 accepts every odd u.
// The (k_coeff, k_offset, k_min) data recovers the printed family parameter
// via j = k_coeff * k + k_offset; it drives --family enumeration.
struct StructuredForm {
    long j_min = 0;
    int j_mod = 1;
    int j_res = 0;
    long long cof_mod = 1;
    std::vector<long long> cof_residues;
    int k_coeff = 0;
    long long k_offset = 0;
    long long k_min = 0;
};

struct RowClause {
    RowParam param = RowParam::C;
    enum Kind { Plain, Structured, Exact } kind = Plain;
    PlainCongruence plain;
    StructuredForm structured;
    long long exact = 0;
};

struct CongruenceRow {
    std::string id;
    GaloisClass cls;
    EfgTriple efg;
    std::string condition;  // printable defining condition
    std::vector<RowClause> clauses;  // match = any clause matches
};

// The full classification table, grouped as: two rows for e=8, then the
// remaining dihedral rows by (e,f,g), the V4 rows on b, the C4 rows on b,
// and the two degenerate rows.
const std::vector<CongruenceRow>& all_rows();

const CongruenceRow* find_row(const std::string& id);

bool row_matches(const CongruenceRow& row, long long c, long long b);

// Rows of the applicable Galois class that accept c. At least one row matches
// every c; overlapping matches exist but always carry the same (e, f, g).
std::vector<const CongruenceRow*> matching_rows(long long c);

struct ClassifiedEfg {
    GaloisClass cls;
    long long b = 0;  // meaningful for V4 / C4
    EfgTriple efg;
    std::string row_id;
    std::string condition;
};

// Closed-form classification of the shape (e, f, g) of 2 in L_c.
// Raises RowCoverageError if the table fails to match exactly once.
ClassifiedEfg classify_efg(long long c);

// Instances of a row's defining family: all c with the printed parameter k up
// to k_max and the free cofactor (or plain-congruence step count) bounded by
// cof_max in absolute value. Sorted, deduplicated.
std::vector<long long> enumerate_family(const CongruenceRow& row, long long k_max, long long cof_max);

}  // namespace wild2
