#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "wild2/errors.hpp"

namespace wild2 {

/**
 * Truncated 2-adic number.
 *
 * A nonzero value is stored as 2^val * unit where unit is odd and known
 * modulo 2^(prec - val); prec is the absolute precision (the value is known
 * modulo 2^prec). Three states exist:
 *
 *   - regular:           val < prec, odd unit
 *   - exact zero:        constructed as zero(); valuation() == kInfinity
 *   - zero to precision: the residue vanished mod 2^prec but the value is not
 *                        known to be zero (total cancellation in add/sub)
 *
 * Arithmetic on zero-to-precision values keeps propagating what is still
 * known; asking for a valuation or unit raises PrecisionExhausted so the
 * caller can escalate precision and retry.
 */
class Dyadic {
public:
    static constexpr long kInfinity = std::numeric_limits<long>::max();

    Dyadic() : val_(kInfinity), prec_(kInfinity) {}  // exact zero

    static Dyadic zero() { return Dyadic(); }
    static Dyadic zero_to_precision(long prec);
    static Dyadic from_integer(const mpz_class& x, long prec);
    static Dyadic from_integer(long long x, long prec) { return from_integer(mpz_class((long)x), prec); }
    // unit must be odd; stored reduced mod 2^(prec - val).
    static Dyadic from_parts(long val, const mpz_class& unit, long prec);

    bool is_exact_zero() const { return val_ == kInfinity; }
    bool is_zero_to_precision() const { return !is_exact_zero() && val_ == prec_; }
    bool is_zero_like() const { return is_exact_zero() || is_zero_to_precision(); }

    // kInfinity for exact zero; PrecisionExhausted for zero-to-precision.
    long valuation() const;
    long precision() const { return prec_; }
    long relative_precision() const { return is_exact_zero() ? kInfinity : prec_ - val_; }
    const mpz_class& unit() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator/(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return negated(); }

    Dyadic negated() const;
    Dyadic shifted(long k) const;  // multiply by 2^k

    // Value modulo 2^bits, in [0, 2^bits). Requires val >= 0 and prec >= bits.
    mpz_class residue(long bits) const;

    // True when (a - b) has no nonzero bit below min(prec, bits).
    bool equals_to_precision(const Dyadic& other, long bits) const;

    std::string str() const;

private:
    long val_;
    mpz_class unit_;
    long prec_;
};

// Exponent of 2. kInfinity for zero.
long val2(const mpz_class& x);
long val2(long long x);

// Reduce modulo 2^bits into [0, 2^bits).
mpz_class mod_pow2(const mpz_class& x, long bits);
// Inverse of odd x modulo 2^bits.
mpz_class inv_mod_pow2(const mpz_class& x, long bits);

// Membership in the image of squaring on Q_2: zero, or even valuation with
// unit congruent to 1 mod 8. Needs at least 3 known unit bits.
bool is_square_q2(const Dyadic& x);

// Square root with unit branch congruent to 1 mod 4, computed to at most
// target_prec absolute bits (less when the input pins fewer).
Dyadic sqrt_q2(const Dyadic& x, long target_prec);

// Working precision for a given parameter c. Generous enough that one
// escalation round is rare in practice.
long default_precision_bits(long long c);

}  // namespace wild2
