#include "wild2/filtration.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "wild2/errors.hpp"

namespace wild2 {

const std::array<GaloisElement, 8>& galois_elements() {
    static const std::array<GaloisElement, 8> table = {{
        {0, false, +1, +1},
        {1, false, -1, +1},
        {2, false, +1, -1},
        {3, false, -1, -1},
        {4, true, +1, +1},
        {5, true, -1, +1},
        {6, true, +1, -1},
        {7, true, -1, -1},
    }};
    return table;
}

GaloisElement compose(const GaloisElement& s, const GaloisElement& t) {
    // r(alpha) = s(t(alpha)); pulling t's sign through s keeps track of which
    // of s's signs applies.
    GaloisElement r;
    r.swap = s.swap != t.swap;
    r.sa = t.sa * (t.swap ? s.sb : s.sa);
    r.sb = t.sb * (t.swap ? s.sa : s.sb);
    for (const auto& g : galois_elements()) {
        if (g.swap == r.swap && g.sa == r.sa && g.sb == r.sb) {
            r.index = g.index;
            return r;
        }
    }
    check(false, "composition left the group table");
    return r;
}

int element_order(const GaloisElement& s) {
    GaloisElement acc = s;
    for (int n = 1; n <= 8; ++n) {
        if (acc.index == 0) return n;
        acc = compose(s, acc);
    }
    check(false, "element order exceeds the group size");
    return 0;
}

bool totally_ramified_case(long long c) {
    if (c == 0) return false;
    const long long r = ((c % 4) + 4) % 4;
    if (r == 1) return true;
    if (c % 2 != 0) return false;
    const long v = val2(c);
    return v >= 3 && v % 2 == 1;
}

namespace {

using Elt = TowerField::Elt;

Elt apply_sign(const TowerField& F, const Elt& x, int sign) {
    return sign < 0 ? F.neg(x) : x;
}

// The uniformizer formula as a function of the (possibly permuted) images of
// alpha and beta.
Elt uniformizer_expr(const TowerField& F, long long c, const Elt& a, const Elt& b) {
    const long long r = ((c % 4) + 4) % 4;
    if (r == 1) {
        // (a/2)(a + b + b^2)
        return F.mul(F.scale_pow2(a, -1), F.add(a, F.add(b, F.mul(b, b))));
    }
    const long v = val2(c);
    check(v >= 3 && v % 2 == 1, "even-c uniformizer needs v2(c) odd and >= 3");
    const long k = (v - 1) / 2;
    const Elt two = F.from_integer(2);
    Elt body;
    if (k % 2 == 0) {
        const long j = k / 2;
        body = F.add(F.pow(F.scale_pow2(a, -j), 3), F.scale_pow2(F.add(a, b), -j));
    } else {
        const long j = (k - 1) / 2;
        body = F.add(F.scale_pow2(a, -j), F.pow(F.scale_pow2(F.add(a, b), -(j + 1)), 3));
    }
    return F.scale_pow2(F.add(body, two), -1);
}

std::pair<Elt, Elt> apply_element(const TowerField& F, const GaloisElement& s, const Elt& alpha,
                                  const Elt& beta) {
    Elt ia = apply_sign(F, s.swap ? beta : alpha, s.sa);
    Elt ib = apply_sign(F, s.swap ? alpha : beta, s.sb);
    return {std::move(ia), std::move(ib)};
}

FiltrationProfile filtration_attempt(long long c, long prec) {
    OracleResult r = oracle_efg(c, prec);
    check(r.efg == EfgTriple{8, 1, 1}, "filtration requires a totally ramified octic");
    check(r.has_alpha_beta, "tower did not produce alpha and beta");
    const TowerField& F = r.field;

    Elt pi = uniformizer_expr(F, c, r.alpha, r.beta);
    check(F.pi_valuation(pi) == 1, "constructed element is not a uniformizer");

    FiltrationProfile out;
    out.c = c;
    out.precision_bits = r.precision_bits;
    out.displacement[0] = -1;
    for (int i = 1; i < 8; ++i) {
        const GaloisElement& s = galois_elements()[i];
        auto [ia, ib] = apply_element(F, s, r.alpha, r.beta);
        Elt moved = uniformizer_expr(F, c, ia, ib);
        out.displacement[i] = F.pi_valuation(F.sub(moved, pi));
    }

    out.groups.push_back({0, 1, 2, 3, 4, 5, 6, 7});  // G_0: totally ramified
    for (long i = 1;; ++i) {
        std::vector<int> g{0};
        for (int s = 1; s < 8; ++s)
            if (out.displacement[s] >= i + 1) g.push_back(s);
        const bool last = g.size() == 1;
        out.groups.push_back(std::move(g));
        if (last) break;
    }
    return out;
}

}  // namespace

std::vector<int> FiltrationProfile::sizes() const {
    std::vector<int> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(static_cast<int>(g.size()));
    return out;
}

std::string FiltrationProfile::profile_str() const {
    std::ostringstream os;
    const auto s = sizes();
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << '|';
        os << s[i];
    }
    return os.str();
}

FiltrationProfile ramification_filtration(long long c, long precision_bits) {
    if (!totally_ramified_case(c))
        throw NotTotallyRamified("ramification filtration computed only for totally ramified c");
    long n = precision_bits > 0 ? precision_bits : default_precision_bits(c);
    for (;;) {
        try {
            return filtration_attempt(c, n);
        } catch (const PrecisionExhausted&) {
            if (n >= precision_cap_bits) throw;
            n = std::min(2 * n, precision_cap_bits);
        }
    }
}

namespace {

mpz_class eval_poly(const std::vector<long>& coeffs_desc, const mpz_class& m) {
    mpz_class acc = 0;
    for (long c : coeffs_desc) acc = acc * m + c;
    return acc;
}

}  // namespace

std::array<mpz_class, 9> uniformizer_min_poly(const mpz_class& m) {
    std::array<mpz_class, 9> out;
    out[8] = 1;
    out[7] = eval_poly({16, 4}, m);
    out[6] = eval_poly({64, 160, 68, 8}, m);
    out[5] = eval_poly({768, 1152, 560, 112, 8}, m);
    out[4] = eval_poly({1536, 6784, 7712, 3832, 960, 120, 6}, m);
    out[3] = eval_poly({12288, 34816, 35328, 17408, 4528, 600, 32, 0}, m);
    out[2] = eval_poly({16384, 94208, 180224, 165376, 81984, 21936, 2552, -104, -56, -4}, m);
    out[1] = eval_poly({65536, 278528, 483328, 456704, 261376, 94528, 21696, 3056, 240, 8, 0}, m);
    out[0] = eval_poly(
        {65536, 425984, 1126400, 1671168, 1587968, 1035392, 481232, 162384, 39828, 6968, 828, 60, 2},
        m);
    return out;
}

bool is_eisenstein_at_2(const std::array<mpz_class, 9>& coeffs) {
    if (val2(coeffs[8]) != 0) return false;
    for (int i = 1; i < 8; ++i)
        if (coeffs[i] != 0 && val2(coeffs[i]) < 1) return false;
    return val2(coeffs[0]) == 1;
}

StructureConstants verify_structure_constants(long long c, long precision_bits) {
    if (((c % 4) + 4) % 4 != 1)
        throw NotTotallyRamified("structure constants are specific to c = 1 mod 4");
    long n = precision_bits > 0 ? precision_bits : default_precision_bits(c);
    for (;;) {
        try {
            OracleResult r = oracle_efg(c, n);
            check(r.efg == EfgTriple{8, 1, 1}, "c = 1 mod 4 must be totally ramified");
            const TowerField& F = r.field;
            const Elt &a = r.alpha, &b = r.beta;

            StructureConstants out;
            out.c = c;
            out.precision_bits = r.precision_bits;
            out.v_alpha = F.pi_valuation(a);
            out.v_beta = F.pi_valuation(b);
            out.v_alpha_plus_beta = F.pi_valuation(F.add(a, b));
            out.v_beta_minus_alpha = F.pi_valuation(F.sub(b, a));
            const Elt ab = F.mul(a, b);
            int idx = 0;
            for (int s1 : {+1, -1})
                for (int s2 : {+1, -1})
                    for (int s3 : {+1, -1}) {
                        Elt sum = F.add(apply_sign(F, a, s1),
                                        F.add(apply_sign(F, ab, s2), apply_sign(F, b, s3)));
                        out.v_eight_sums[idx++] = F.pi_valuation(sum);
                    }
            out.v_odd_combination = F.pi_valuation(F.add(a, F.add(b, F.mul(b, b))));

            const mpz_class m = (mpz_class((long)c) - 1) / 4;
            const auto coeffs = uniformizer_min_poly(m);
            out.min_poly_eisenstein = is_eisenstein_at_2(coeffs);
            Elt pi = uniformizer_expr(F, c, a, b);
            Elt acc = F.from_integer(coeffs[8]);
            for (int i = 7; i >= 0; --i) acc = F.add(F.mul(acc, pi), F.from_integer(coeffs[i]));
            // Truncated arithmetic tracks residues exactly, so a coordinate
            // with a visible nonzero bit disproves the identity outright;
            // vanished-to-precision coordinates only bound how flat it is.
            long vanish = LONG_MAX;
            for (const auto& d : acc) {
                if (d.is_exact_zero()) continue;
                check(d.is_zero_to_precision(), "minimal polynomial does not annihilate pi");
                vanish = std::min(vanish, d.precision());
            }
            out.min_poly_zero_bits = vanish;
            out.min_poly_vanishes = vanish >= 64;
            if (!out.min_poly_vanishes)
                throw PrecisionExhausted("minimal polynomial residual not flat enough");
            return out;
        } catch (const PrecisionExhausted&) {
            if (n >= precision_cap_bits) throw;
            n = std::min(2 * n, precision_cap_bits);
        }
    }
}

}  // namespace wild2
