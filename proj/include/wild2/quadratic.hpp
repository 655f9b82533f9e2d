#pragma once

#include <gmpxx.h>

#include <string>

#include "wild2/dyadic.hpp"

namespace wild2 {

// Behaviour of the prime 2 in Q(sqrt(-t)).
enum class QuadraticBehavior { Split, Inert, Ramified };

// Isomorphism type of Q_2(sqrt(-t)) over Q_2.
enum class LocalQuadratic { Trivial, Unramified, Ramified };

const char* to_string(QuadraticBehavior b);
const char* to_string(LocalQuadratic k);

// Write t = 4^n * s with 4 not dividing s; the class of s mod 8 decides:
// s = 7 -> Split, s = 3 -> Inert, anything else -> Ramified.
// Requires t != 0 and -t not a perfect square (otherwise Q(sqrt(-t)) = Q).
QuadraticBehavior classify_quadratic(const mpz_class& t);
QuadraticBehavior classify_quadratic(long long t);

// Local counterpart on a 2-adic input; Trivial means -t is a square in Q_2.
// Needs at least 3 known unit bits.
LocalQuadratic local_quadratic(const Dyadic& t);

// The global/local dictionary: Split <-> Trivial, Inert <-> Unramified,
// Ramified <-> Ramified.
LocalQuadratic to_local(QuadraticBehavior b);
QuadraticBehavior to_global(LocalQuadratic k);

// Independent search-based classifier, used as a test oracle. Strips 4^n,
// then decides the square class of -s by table lookup against the set of
// odd squares modulo 2^bits (the set is enumerated by brute force, once per
// bits value). Split when -s is a square; Inert when 3s is (equivalently
// -s and -3 generate the same extension, and sqrt(-3) generates the
// unramified quadratic extension of Q_2 because x^2 + x + 1 is separable
// and irreducible over F_2); Ramified otherwise. Requires |s| < 2^(bits-3).
QuadraticBehavior brute_force_quadratic(const mpz_class& t, int bits);

}  // namespace wild2
