#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "wild2/tower.hpp"

namespace wild2 {

/**
 * The dihedral Galois group on the roots of (x^2+c)^2+c, written through its
 * action on alpha = sqrt(-c + sqrt(-c)) and beta = sqrt(-c - sqrt(-c)):
 * an element optionally swaps alpha and beta and then flips signs. The
 * numbering fixes sigma_0 = identity, sigma_1..3 the sign changes, and
 * sigma_4..7 the swapping elements.
 */
struct GaloisElement {
    int index;  // 0..7
    bool swap;
    int sa, sb;  // signs on the images of alpha and beta

    std::string label() const { return "sigma" + std::to_string(index); }
};

const std::array<GaloisElement, 8>& galois_elements();
// (s after t): apply t, then s.
GaloisElement compose(const GaloisElement& s, const GaloisElement& t);
int element_order(const GaloisElement& s);

// The prime 2 is totally ramified in L_c exactly when c = 1 mod 4 or
// v2(c) is odd and at least 3.
bool totally_ramified_case(long long c);

/**
 * Lower-numbering ramification filtration of the totally ramified degree-8
 * extension: G_i = {sigma : v_pi(sigma(pi) - pi) >= i+1} for i >= 1, with a
 * uniformizer pi built explicitly from alpha and beta:
 *
 *   c = 1 mod 4:            pi = (alpha/2)(alpha + beta + beta^2)
 *   v2(c) = 2k+1, k = 2j:   pi = ((alpha/2^j)^3 + (alpha+beta)/2^j + 2)/2
 *   v2(c) = 2k+1, k = 2j+1: pi = (alpha/2^j + ((alpha+beta)/2^(j+1))^3 + 2)/2
 *
 * Displacements v_pi(sigma(pi) - pi) are computed in the tower oracle's
 * coordinates; the group chain is read off them.
 */
struct FiltrationProfile {
    long long c;
    std::array<long, 8> displacement{};    // [0] = -1 (identity omitted)
    std::vector<std::vector<int>> groups;  // G_0, G_1, ... down to the first {0}
    long precision_bits = 0;

    std::vector<int> sizes() const;
    std::string profile_str() const;  // e.g. "8|8|4|4|2|2|1"
};

FiltrationProfile ramification_filtration(long long c, long precision_bits = 0);

// Minimal polynomial of (alpha/2)(alpha + beta + beta^2) over Q for
// c = 4m + 1, coefficients indexed by power 0..8. Eisenstein at 2 for all m.
std::array<mpz_class, 9> uniformizer_min_poly(const mpz_class& m);

// Leading unit, interior coefficients even, constant term of 2-valuation 1.
bool is_eisenstein_at_2(const std::array<mpz_class, 9>& coeffs);

/**
 * Numeric confirmation of the valuation identities behind the c = 1 mod 4
 * filtration: v_pi(alpha) = v_pi(beta) = 2, v_pi(+-alpha + beta) = 4,
 * v_pi(+-alpha +- alpha beta +- beta) = 6, v_pi(alpha + beta + beta^2) = 7,
 * plus the vanishing of the uniformizer's minimal polynomial at pi.
 */
struct StructureConstants {
    long long c;
    long v_alpha = 0, v_beta = 0;
    long v_alpha_plus_beta = 0, v_beta_minus_alpha = 0;
    std::array<long, 8> v_eight_sums{};  // +-alpha +- alpha*beta +- beta
    long v_odd_combination = 0;          // alpha + beta + beta^2
    bool min_poly_vanishes = false;      // residual flat to >= 64 bits
    long min_poly_zero_bits = 0;
    bool min_poly_eisenstein = false;
    long precision_bits = 0;
};

StructureConstants verify_structure_constants(long long c, long precision_bits = 0);

}  // namespace wild2
