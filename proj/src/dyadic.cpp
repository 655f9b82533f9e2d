#include "wild2/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wild2 {

long val2(const mpz_class& x) {
    if (x == 0) return Dyadic::kInfinity;
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

long val2(long long x) {
    if (x == 0) return Dyadic::kInfinity;
    unsigned long long u = static_cast<unsigned long long>(x < 0 ? -x : x);
    return __builtin_ctzll(u);
}

mpz_class mod_pow2(const mpz_class& x, long bits) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

mpz_class inv_mod_pow2(const mpz_class& x, long bits) {
    if (mpz_even_p(x.get_mpz_t())) throw std::domain_error("inv_mod_pow2: even argument");
    mpz_class m;
    mpz_setbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod_pow2: not invertible");
    return r;
}

Dyadic Dyadic::zero_to_precision(long prec) {
    Dyadic d;
    d.val_ = prec;
    d.prec_ = prec;
    d.unit_ = 0;
    return d;
}

Dyadic Dyadic::from_integer(const mpz_class& x, long prec) {
    if (prec <= 0) throw std::invalid_argument("from_integer: nonpositive precision");
    if (x == 0) return zero();
    long v = val2(x);
    if (v >= prec) return zero_to_precision(prec);
    Dyadic d;
    d.val_ = v;
    d.prec_ = prec;
    mpz_class t = x >> v;
    d.unit_ = mod_pow2(t, prec - v);
    return d;
}

Dyadic Dyadic::from_parts(long val, const mpz_class& unit, long prec) {
    if (prec <= val) throw std::invalid_argument("from_parts: precision <= valuation");
    if (mpz_even_p(unit.get_mpz_t())) throw std::invalid_argument("from_parts: even unit");
    Dyadic d;
    d.val_ = val;
    d.prec_ = prec;
    d.unit_ = mod_pow2(unit, prec - val);
    return d;
}

long Dyadic::valuation() const {
    if (is_exact_zero()) return kInfinity;
    if (is_zero_to_precision())
        throw PrecisionExhausted("valuation of a value that is zero to precision 2^" + std::to_string(prec_));
    return val_;
}

const mpz_class& Dyadic::unit() const {
    if (is_zero_like()) throw PrecisionExhausted("unit of a zero-like value");
    return unit_;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    long P = std::min(a.prec_, b.prec_);
    long v0 = std::min(a.val_, b.val_);  // alignment point; P > v0 always holds
    mpz_class s = mod_pow2((a.unit_ << (a.val_ - v0)) + (b.unit_ << (b.val_ - v0)), P - v0);
    if (s == 0) return Dyadic::zero_to_precision(P);
    long v = val2(s);
    Dyadic r;
    r.val_ = v0 + v;
    r.prec_ = P;
    r.unit_ = s >> v;
    return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + b.negated(); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Dyadic::zero();
    if (a.is_zero_to_precision() || b.is_zero_to_precision()) {
        // product is still divisible by 2^(prec_a + val_b) etc.
        long pa = a.is_zero_to_precision() ? a.prec_ : a.val_;
        long pb = b.is_zero_to_precision() ? b.prec_ : b.val_;
        return Dyadic::zero_to_precision(pa + pb);
    }
    long R = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
    Dyadic r;
    r.val_ = a.val_ + b.val_;
    r.prec_ = r.val_ + R;
    r.unit_ = mod_pow2(a.unit_ * b.unit_, R);
    return r;
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) {
    if (b.is_exact_zero()) throw std::domain_error("division by exact zero");
    if (b.is_zero_to_precision())
        throw PrecisionExhausted("division by a value that is zero to precision");
    if (a.is_exact_zero()) return Dyadic::zero();
    if (a.is_zero_to_precision()) return Dyadic::zero_to_precision(a.prec_ - b.val_);
    long R = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
    Dyadic r;
    r.val_ = a.val_ - b.val_;
    r.prec_ = r.val_ + R;
    r.unit_ = mod_pow2(a.unit_ * inv_mod_pow2(b.unit_, R), R);
    return r;
}

Dyadic Dyadic::negated() const {
    if (is_zero_like()) return *this;
    Dyadic r;
    r.val_ = val_;
    r.prec_ = prec_;
    r.unit_ = mod_pow2(-unit_, prec_ - val_);
    return r;
}

Dyadic Dyadic::shifted(long k) const {
    if (is_exact_zero()) return *this;
    Dyadic r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
}

mpz_class Dyadic::residue(long bits) const {
    if (is_exact_zero()) return 0;
    if (prec_ < bits) throw PrecisionExhausted("residue: not enough precision");
    if (is_zero_to_precision()) return 0;
    if (val_ < 0) throw std::domain_error("residue: negative valuation");
    if (val_ >= bits) return 0;
    return mod_pow2(unit_ << val_, bits);
}

bool Dyadic::equals_to_precision(const Dyadic& other, long bits) const {
    Dyadic d = *this - other;
    if (d.is_exact_zero()) return true;
    if (d.is_zero_to_precision()) return d.prec_ >= bits;
    return d.val_ >= std::min(bits, d.prec_);
}

std::string Dyadic::str() const {
    if (is_exact_zero()) return "0";
    if (is_zero_to_precision()) return "0 (mod 2^" + std::to_string(prec_) + ")";
    return "2^" + std::to_string(val_) + " * " + unit_.get_str() + " (mod 2^" + std::to_string(prec_) + ")";
}

bool is_square_q2(const Dyadic& x) {
    if (x.is_exact_zero()) return true;
    if (x.is_zero_to_precision())
        throw PrecisionExhausted("is_square_q2: zero to precision");
    if (x.relative_precision() < 3)
        throw PrecisionExhausted("is_square_q2: fewer than 3 unit bits");
    if (x.valuation() % 2 != 0) return false;
    return mod_pow2(x.unit(), 3) == 1;
}

Dyadic sqrt_q2(const Dyadic& x, long target_prec) {
    if (x.is_exact_zero()) return Dyadic::zero();
    if (!is_square_q2(x)) throw NonSquareInput("sqrt_q2: not a square in Q_2");
    long n = x.valuation() / 2;
    long R = std::min(target_prec - n, x.relative_precision() - 1);
    if (R < 2) throw PrecisionExhausted("sqrt_q2: result would have fewer than 2 unit bits");

    // Lift the root of the odd part bit by bit, keeping w^2 = u (mod 2^k).
    // w stays 1 mod 4, which picks one of the two 2-adic roots.
    const mpz_class u = x.unit();
    mpz_class w = 1;
    for (long k = 3; k < R + 1; ++k) {
        mpz_class d = mod_pow2(u - w * w, k + 1);
        if (d != 0) {
            // d is exactly 2^k here; flipping bit k-1 of w fixes bit k.
            w += mpz_class(1) << (k - 1);
        }
    }
    return Dyadic::from_parts(n, mod_pow2(w, R), n + R);
}

long default_precision_bits(long long c) {
    if (c == 0 || c == -1) return 64;
    long k = val2(c) + val2(c + 1);
    return std::max(64L, 8 * k + 48);
}

}  // namespace wild2
