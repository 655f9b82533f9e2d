#include "wild2/rows.hpp"

#include <algorithm>
#include <set>

#include "wild2/dyadic.hpp"
#include "wild2/errors.hpp"

namespace wild2 {

namespace {

RowClause plain(RowParam p, long long mod, std::vector<long long> residues) {
    RowClause c;
    c.param = p;
    c.kind = RowClause::Plain;
    c.plain = {mod, std::move(residues)};
    return c;
}

RowClause structured(RowParam p, long j_min, int j_mod, int j_res, long long cof_mod,
                     std::vector<long long> cof_residues, int k_coeff, long long k_offset,
                     long long k_min) {
    RowClause c;
    c.param = p;
    c.kind = RowClause::Structured;
    c.structured = {j_min, j_mod, j_res, cof_mod, std::move(cof_residues), k_coeff, k_offset, k_min};
    return c;
}

RowClause exact(long long v) {
    RowClause c;
    c.param = RowParam::C;
    c.kind = RowClause::Exact;
    c.exact = v;
    return c;
}

CongruenceRow row(std::string id, GaloisClass cls, EfgTriple efg, std::string cond,
                  std::vector<RowClause> clauses) {
    return CongruenceRow{std::move(id), cls, efg, std::move(cond), std::move(clauses)};
}

std::vector<CongruenceRow> build_table() {
    using GC = GaloisClass;
    using RP = RowParam;
    std::vector<CongruenceRow> t;

    // ------------------------------------------------------------------
    // Dihedral case (degree 8). Plain congruences first, then the 2-power
    // families written as c = 2^j * u or c + 1 = 2^j * u.
    // ------------------------------------------------------------------
    t.push_back(row("D4-811-a", GC::D4, {8, 1, 1}, "c = 1 (mod 4)",
                    {plain(RP::C, 4, {1})}));
    t.push_back(row("D4-811-b", GC::D4, {8, 1, 1}, "c = 2^(2k+1) m, k >= 1, m odd",
                    {structured(RP::C, 3, 2, 1, 1, {}, 2, 1, 1)}));

    t.push_back(row("D4-421-a", GC::D4, {4, 2, 1}, "c = 2 (mod 8)",
                    {plain(RP::C, 8, {2})}));
    t.push_back(row("D4-421-b", GC::D4, {4, 2, 1}, "c = 3 (mod 16)",
                    {plain(RP::C, 16, {3})}));
    t.push_back(row("D4-421-c", GC::D4, {4, 2, 1}, "c = 4 or 12 (mod 32)",
                    {plain(RP::C, 32, {4, 12})}));
    t.push_back(row("D4-421-d", GC::D4, {4, 2, 1}, "c = 4^k(8r+-3), k >= 2",
                    {structured(RP::C, 4, 2, 0, 8, {3, 5}, 2, 0, 2)}));

    t.push_back(row("D4-412-a", GC::D4, {4, 1, 2}, "c = 6 (mod 8)",
                    {plain(RP::C, 8, {6})}));
    t.push_back(row("D4-412-b", GC::D4, {4, 1, 2}, "c = 23 or 28 (mod 32)",
                    {plain(RP::C, 32, {23, 28})}));
    t.push_back(row("D4-412-c", GC::D4, {4, 1, 2}, "c = 16 (mod 128)",
                    {plain(RP::C, 128, {16})}));
    t.push_back(row("D4-412-d", GC::D4, {4, 1, 2}, "c = 4^(2k)(8r+1), k >= 2",
                    {structured(RP::C, 8, 4, 0, 8, {1}, 4, 0, 2)}));
    t.push_back(row("D4-412-e", GC::D4, {4, 1, 2}, "c = 4^(2k-1)(8r+7), k >= 2",
                    {structured(RP::C, 6, 4, 2, 8, {7}, 4, -2, 2)}));
    t.push_back(row("D4-412-f", GC::D4, {4, 1, 2}, "c = -1 + 2^k(4r+1), k >= 4",
                    {structured(RP::CPlus1, 4, 1, 0, 4, {1}, 1, 0, 4)}));

    t.push_back(row("D4-222-a", GC::D4, {2, 2, 2}, "c = 11 (mod 16)",
                    {plain(RP::C, 16, {11})}));
    t.push_back(row("D4-222-b", GC::D4, {2, 2, 2}, "c = 39 or 52 (mod 64)",
                    {plain(RP::C, 64, {39, 52})}));
    t.push_back(row("D4-222-c", GC::D4, {2, 2, 2}, "c = 240 (mod 256)",
                    {plain(RP::C, 256, {240})}));
    t.push_back(row("D4-222-d", GC::D4, {2, 2, 2}, "c = -1 + 4^k(64r+24), k >= 1",
                    {structured(RP::CPlus1, 5, 2, 1, 8, {3}, 2, 3, 1)}));
    t.push_back(row("D4-222-e", GC::D4, {2, 2, 2}, "c = -1 + 4^k(8r+3), k >= 2",
                    {structured(RP::CPlus1, 4, 2, 0, 8, {3}, 2, 0, 2)}));
    t.push_back(row("D4-222-f", GC::D4, {2, 2, 2}, "c = 4^(2k-1)(16r+9), k >= 2",
                    {structured(RP::C, 6, 4, 2, 16, {9}, 4, -2, 2)}));
    t.push_back(row("D4-222-g", GC::D4, {2, 2, 2}, "c = 4^(2k)(16r+7), k >= 2",
                    {structured(RP::C, 8, 4, 0, 16, {7}, 4, 0, 2)}));

    t.push_back(row("D4-214-a", GC::D4, {2, 1, 4}, "c = 7 or 20 (mod 64)",
                    {plain(RP::C, 64, {7, 20})}));
    t.push_back(row("D4-214-b", GC::D4, {2, 1, 4}, "c = 112 (mod 256)",
                    {plain(RP::C, 256, {112})}));
    t.push_back(row("D4-214-c", GC::D4, {2, 1, 4}, "c = -1 + 4^k(64r-8), k >= 1",
                    {structured(RP::CPlus1, 5, 2, 1, 8, {7}, 2, 3, 1)}));
    t.push_back(row("D4-214-d", GC::D4, {2, 1, 4}, "c = -1 + 4^k(8r+7), k >= 2",
                    {structured(RP::CPlus1, 4, 2, 0, 8, {7}, 2, 0, 2)}));
    t.push_back(row("D4-214-e", GC::D4, {2, 1, 4}, "c = 4^(2k-1)(16r+1), k >= 2",
                    {structured(RP::C, 6, 4, 2, 16, {1}, 4, -2, 2)}));
    t.push_back(row("D4-214-f", GC::D4, {2, 1, 4}, "c = 4^(2k)(16r+15), k >= 2",
                    {structured(RP::C, 8, 4, 0, 16, {15}, 4, 0, 2)}));

    // ------------------------------------------------------------------
    // Klein case, c = -b^2 with b >= 2. Signed residues are expanded into
    // canonical residues; the +-(1 + ...) families split into one clause on
    // b-1 (the + sign) and one on b+1 (the - sign, cofactor negated).
    // ------------------------------------------------------------------
    t.push_back(row("V4-411-a", GC::V4, {4, 1, 1}, "b = +-3, +-7, +-13 (mod 32)",
                    {plain(RP::B, 32, {3, 29, 7, 25, 13, 19})}));
    t.push_back(row("V4-411-b", GC::V4, {4, 1, 1}, "b = +-15 (mod 64)",
                    {plain(RP::B, 64, {15, 49})}));
    t.push_back(row("V4-411-c", GC::V4, {4, 1, 1}, "b = +-4^k(4r+2), k >= 0",
                    {structured(RP::B, 1, 2, 1, 1, {}, 2, 1, 0)}));
    t.push_back(row("V4-411-d", GC::V4, {4, 1, 1}, "b = +-(1 + 4^k(4r+3)), k >= 2",
                    {structured(RP::BMinus1, 4, 2, 0, 4, {3}, 2, 0, 2),
                     structured(RP::BPlus1, 4, 2, 0, 4, {1}, 2, 0, 2)}));
    t.push_back(row("V4-411-e", GC::V4, {4, 1, 1}, "b = +-(1 + 4^k(8r+6)), k >= 2",
                    {structured(RP::BMinus1, 5, 2, 1, 4, {3}, 2, 1, 2),
                     structured(RP::BPlus1, 5, 2, 1, 4, {1}, 2, 1, 2)}));

    t.push_back(row("V4-221-a", GC::V4, {2, 2, 1}, "b = +-4, +-5 (mod 32)",
                    {plain(RP::B, 32, {4, 28, 5, 27})}));
    t.push_back(row("V4-221-b", GC::V4, {2, 2, 1}, "b = +-9 (mod 64)",
                    {plain(RP::B, 64, {9, 55})}));
    t.push_back(row("V4-221-c", GC::V4, {2, 2, 1}, "b = +-4^k(8r+3), k >= 2",
                    {structured(RP::B, 4, 2, 0, 8, {3, 5}, 2, 0, 2)}));
    t.push_back(row("V4-221-d", GC::V4, {2, 2, 1}, "b = +-(1 + 4^k(8r+5)), k >= 2",
                    {structured(RP::BMinus1, 4, 2, 0, 8, {5}, 2, 0, 2),
                     structured(RP::BPlus1, 4, 2, 0, 8, {3}, 2, 0, 2)}));
    t.push_back(row("V4-221-e", GC::V4, {2, 2, 1}, "b = +-(1 + 4^k(16r+10)), k >= 2",
                    {structured(RP::BMinus1, 5, 2, 1, 8, {5}, 2, 1, 2),
                     structured(RP::BPlus1, 5, 2, 1, 8, {3}, 2, 1, 2)}));

    t.push_back(row("V4-212-a", GC::V4, {2, 1, 2}, "b = +-11, +-12 (mod 32)",
                    {plain(RP::B, 32, {11, 21, 12, 20})}));
    t.push_back(row("V4-212-b", GC::V4, {2, 1, 2}, "b = +-23 (mod 64)",
                    {plain(RP::B, 64, {23, 41})}));
    t.push_back(row("V4-212-c", GC::V4, {2, 1, 2}, "b = +-4^k(8r+1), k >= 2",
                    {structured(RP::B, 4, 2, 0, 8, {1, 7}, 2, 0, 2)}));
    t.push_back(row("V4-212-d", GC::V4, {2, 1, 2}, "b = +-(1 + 4^k(8r+1)), k >= 2",
                    {structured(RP::BMinus1, 4, 2, 0, 8, {1}, 2, 0, 2),
                     structured(RP::BPlus1, 4, 2, 0, 8, {7}, 2, 0, 2)}));
    t.push_back(row("V4-212-e", GC::V4, {2, 1, 2}, "b = +-(1 + 4^k(16r+2)), k >= 2",
                    {structured(RP::BMinus1, 5, 2, 1, 8, {1}, 2, 1, 2),
                     structured(RP::BPlus1, 5, 2, 1, 8, {7}, 2, 1, 2)}));

    // ------------------------------------------------------------------
    // Cyclic case, c = -(b^2+1) with b >= 1.
    // ------------------------------------------------------------------
    t.push_back(row("C4-411", GC::C4, {4, 1, 1}, "b odd", {plain(RP::B, 2, {1})}));
    t.push_back(row("C4-221", GC::C4, {2, 2, 1}, "b = 2 (mod 4)", {plain(RP::B, 4, {2})}));
    t.push_back(row("C4-212", GC::C4, {2, 1, 2}, "b = 0 (mod 4)", {plain(RP::B, 4, {0})}));

    // Degenerate parameters: c = -1 gives L = Q(sqrt 2), c = 0 gives L = Q.
    t.push_back(row("DEG-m1", GC::DegenerateMinusOne, {2, 1, 1}, "c = -1", {exact(-1)}));
    t.push_back(row("DEG-0", GC::DegenerateZero, {1, 1, 1}, "c = 0", {exact(0)}));

    return t;
}

long long select_param(RowParam p, long long c, long long b) {
    switch (p) {
        case RowParam::C: return c;
        case RowParam::CPlus1: return c + 1;
        case RowParam::B: return b;
        case RowParam::BMinus1: return b - 1;
        case RowParam::BPlus1: return b + 1;
    }
    return 0;
}

long long nonneg_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

bool clause_matches(const RowClause& cl, long long x) {
    switch (cl.kind) {
        case RowClause::Exact:
            return x == cl.exact;
        case RowClause::Plain: {
            long long r = nonneg_mod(x, cl.plain.modulus);
            return std::find(cl.plain.residues.begin(), cl.plain.residues.end(), r) !=
                   cl.plain.residues.end();
        }
        case RowClause::Structured: {
            if (x == 0) return false;
            const StructuredForm& s = cl.structured;
            long j = val2(x);
            if (j < s.j_min || (j - s.j_res) % s.j_mod != 0) return false;
            long long u = x >> j;
            if (s.cof_mod == 1) return true;
            long long r = nonneg_mod(u, s.cof_mod);
            return std::find(s.cof_residues.begin(), s.cof_residues.end(), r) !=
                   s.cof_residues.end();
        }
    }
    return false;
}

}  // namespace

const std::vector<CongruenceRow>& all_rows() {
    static const std::vector<CongruenceRow> table = build_table();
    return table;
}

const CongruenceRow* find_row(const std::string& id) {
    for (const auto& r : all_rows())
        if (r.id == id) return &r;
    return nullptr;
}

bool row_matches(const CongruenceRow& row, long long c, long long b) {
    for (const auto& cl : row.clauses)
        if (clause_matches(cl, select_param(cl.param, c, b))) return true;
    return false;
}

std::vector<const CongruenceRow*> matching_rows(long long c) {
    GaloisInfo gi = galois_info(c);
    std::vector<const CongruenceRow*> out;
    for (const auto& r : all_rows())
        if (r.cls == gi.cls && row_matches(r, c, gi.b)) out.push_back(&r);
    return out;
}

ClassifiedEfg classify_efg(long long c) {
    GaloisInfo gi = galois_info(c);
    // Conditions within one (e, f, g) case may overlap (they arise from
    // independent subfield analyses); the first match in table order names
    // the row. Matches landing in different cases would disprove the table
    // and are fatal.
    const CongruenceRow* hit = nullptr;
    for (const auto& r : all_rows()) {
        if (r.cls != gi.cls || !row_matches(r, c, gi.b)) continue;
        if (hit && !(hit->efg == r.efg))
            throw RowCoverageError("classify_efg: rows " + hit->id + " and " + r.id +
                                   " match c = " + std::to_string(c) +
                                   " with conflicting shapes");
        if (!hit) hit = &r;
    }
    if (!hit) throw RowCoverageError("classify_efg: no row matches c = " + std::to_string(c));
    return {gi.cls, gi.b, hit->efg, hit->id, hit->condition};
}

std::vector<long long> enumerate_family(const CongruenceRow& row, long long k_max, long long cof_max) {
    std::set<long long> cs;
    auto param_to_c = [&](RowParam p, long long x, std::set<long long>& sink) {
        switch (p) {
            case RowParam::C: sink.insert(x); return;
            case RowParam::CPlus1: sink.insert(x - 1); return;
            case RowParam::B:
            case RowParam::BMinus1:
            case RowParam::BPlus1: {
                long long b = x;
                if (p == RowParam::BMinus1) b = x + 1;
                if (p == RowParam::BPlus1) b = x - 1;
                long long lo = (row.cls == GaloisClass::V4) ? 2 : 1;
                if (b < lo || b > 3000000) return;  // keep b^2 in range
                sink.insert(row.cls == GaloisClass::V4 ? -b * b : -(b * b + 1));
                return;
            }
        }
    };
    for (const auto& cl : row.clauses) {
        switch (cl.kind) {
            case RowClause::Exact:
                param_to_c(cl.param, cl.exact, cs);
                break;
            case RowClause::Plain:
                for (long long tstep = -cof_max; tstep <= cof_max; ++tstep)
                    for (long long r : cl.plain.residues)
                        param_to_c(cl.param, r + cl.plain.modulus * tstep, cs);
                break;
            case RowClause::Structured: {
                const StructuredForm& s = cl.structured;
                for (long long k = s.k_min; k <= k_max; ++k) {
                    long j = static_cast<long>(s.k_coeff * k + s.k_offset);
                    if (j < s.j_min || j > 61) continue;
                    for (long long u = -cof_max; u <= cof_max; ++u) {
                        if ((u & 1) == 0) continue;
                        if (s.cof_mod != 1 &&
                            std::find(s.cof_residues.begin(), s.cof_residues.end(),
                                      nonneg_mod(u, s.cof_mod)) == s.cof_residues.end())
                            continue;
                        long long hi = (1LL << 62) / (1LL << j);
                        if (u > hi || u < -hi) continue;
                        param_to_c(cl.param, u * (1LL << j), cs);
                    }
                }
                break;
            }
        }
    }
    // The defining congruences can formally hit values excluded by the row's
    // hypothesis (e.g. c = -1 + 16(8r+7) at r = -1 gives c = -17, where
    // -(c+1) is a square and a different classification applies). A family
    // sweep returns instances of this row only.
    std::vector<long long> out;
    for (long long c : cs) {
        GaloisInfo gi = galois_info(c);
        if (gi.cls == row.cls && row_matches(row, c, gi.b)) out.push_back(c);
    }
    return out;
}

}  // namespace wild2
