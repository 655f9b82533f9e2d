#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace wild2 {

// Galois group of the splitting field L_c of f_c = (x^2+c)^2 + c over Q.
// Generic c gives the dihedral group of order 8; -(c+1) a square gives the
// cyclic group of order 4; -c a square makes f_c factor and leaves the Klein
// group. c = -1 collapses L_c to Q(sqrt 2) and c = 0 to Q.
enum class GaloisClass { D4, C4, V4, DegenerateMinusOne, DegenerateZero };

const char* to_string(GaloisClass g);
int field_degree(GaloisClass g);

struct GaloisInfo {
    GaloisClass cls;
    // For V4: c = -b^2. For C4: c = -(b^2+1). b >= 1, zero otherwise.
    long long b = 0;
};

GaloisInfo galois_info(long long c);
GaloisClass galois_class(long long c);

// Coefficients of f_c = x^4 + 2c x^2 + (c^2 + c), index = power of x.
std::array<mpz_class, 5> quartic_coefficients(long long c);

// The three quadratic subfield radicands of L_c: -c, -(c+1), c^2+c.
std::array<mpz_class, 3> quadratic_radicands(long long c);

struct QuarticFactorization {
    bool irreducible;
    // When -c = b^2 the quartic factors as (x^2 - p)(x^2 - q) with
    // p = b^2 - b and q = b^2 + b, both certified irreducible over Q
    // (consecutive-integer products are squares only at b in {0, 1}).
    long long b = 0;
    mpz_class p, q;
};

// Requires c not in {0, -1}. Irreducibility for non-square -c is certified by
// the biquadratic criterion: a monic integer quartic in x^2 splits over Q only
// if -c or c^2+c is a perfect square, and c(c+1) is square only at 0 and -1.
QuarticFactorization quartic_factorization(long long c);

struct ResolventCubic {
    std::array<mpz_class, 4> cubic;      // x^3 - 2c x^2 - (4c^2+4c) x + (8c^3+8c^2)
    std::array<mpz_class, 2> linear;     // x - 2c
    std::array<mpz_class, 3> quadratic;  // x^2 - (4c^2+4c)
};

// Factored resolvent of f_c; the product identity is checked on coefficients.
ResolventCubic resolvent_cubic(long long c);

/**
 * Subfield lattice of L_c for the dihedral case, with
 *   alpha = sqrt(-c + sqrt(-c)) and beta = sqrt(-c - sqrt(-c)).
 *
 * Ten nodes: Q, three quadratics Q(sqrt(-c)), Q(sqrt(-(c+1))),
 * Q(sqrt(c^2+c)), five quartics Q(alpha), Q(beta), the biquadratic
 * generated by sqrt(-c) + sqrt(-(c+1)), Q(alpha+beta), Q(alpha-beta),
 * and L_c.
 * Edges are covering relations. Q(alpha)/Q(beta) and
 * Q(alpha+beta)/Q(alpha-beta) are the two conjugate (non-normal) pairs.
 */
struct LatticeNode {
    std::string id;
    std::string label;
    int degree;
    bool has_radicand = false;
    mpz_class radicand;             // quadratic nodes only
    std::string conjugate_with;     // id of the conjugate node, empty if normal
};

struct SubfieldLattice {
    long long c;
    std::vector<LatticeNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // (subfield, extension)
};

// Requires the dihedral case; raises WrongGaloisClass otherwise.
SubfieldLattice subfield_lattice(long long c);

std::string lattice_to_json(const SubfieldLattice& lat);

// Node ids used by the lattice and by the inertia/decomposition report.
namespace lattice_nodes {
inline constexpr const char* base = "Q";
inline constexpr const char* quad_mc = "Q(sqrt(-c))";
inline constexpr const char* quad_mc1 = "Q(sqrt(-(c+1)))";
inline constexpr const char* quad_cc = "Q(sqrt(c^2+c))";
inline constexpr const char* quart_alpha = "Q(alpha)";
inline constexpr const char* quart_beta = "Q(beta)";
inline constexpr const char* quart_biquad = "Q(sqrt(-c)+sqrt(-(c+1)))";
inline constexpr const char* quart_apb = "Q(alpha+beta)";
inline constexpr const char* quart_amb = "Q(alpha-beta)";
inline constexpr const char* full = "L_c";
}  // namespace lattice_nodes

bool is_perfect_square(const mpz_class& x, mpz_class* root = nullptr);

}  // namespace wild2
