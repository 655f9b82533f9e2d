#include "wild2/quadratic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "wild2/errors.hpp"

namespace wild2 {

const char* to_string(QuadraticBehavior b) {
    switch (b) {
        case QuadraticBehavior::Split: return "split";
        case QuadraticBehavior::Inert: return "inert";
        case QuadraticBehavior::Ramified: return "ramified";
    }
    return "?";
}

const char* to_string(LocalQuadratic k) {
    switch (k) {
        case LocalQuadratic::Trivial: return "trivial";
        case LocalQuadratic::Unramified: return "unramified";
        case LocalQuadratic::Ramified: return "ramified";
    }
    return "?";
}

QuadraticBehavior classify_quadratic(const mpz_class& t) {
    if (t == 0) throw NotAQuadraticField("classify_quadratic: t = 0");
    mpz_class minus_t = -t;
    if (minus_t >= 0 && mpz_perfect_square_p(minus_t.get_mpz_t()))
        throw NotAQuadraticField("classify_quadratic: -t is a perfect square");
    long v = val2(t);
    mpz_class s = t >> (v - (v % 2));  // keep one factor of 2 when v is odd
    unsigned long r = mpz_fdiv_ui(s.get_mpz_t(), 8);
    if (r == 7) return QuadraticBehavior::Split;
    if (r == 3) return QuadraticBehavior::Inert;
    return QuadraticBehavior::Ramified;
}

QuadraticBehavior classify_quadratic(long long t) { return classify_quadratic(mpz_class((long)t)); }

LocalQuadratic local_quadratic(const Dyadic& t) {
    if (t.is_exact_zero()) throw NotAQuadraticField("local_quadratic: t = 0");
    if (t.is_zero_to_precision())
        throw PrecisionExhausted("local_quadratic: t is zero to working precision");
    if (t.relative_precision() < 3)
        throw PrecisionExhausted("local_quadratic: fewer than 3 unit bits");
    long v = t.valuation();
    if (v % 2 != 0) return LocalQuadratic::Ramified;  // s is even, neither 3 nor 7 mod 8
    unsigned long r = mpz_fdiv_ui(t.unit().get_mpz_t(), 8);
    if (r == 7) return LocalQuadratic::Trivial;
    if (r == 3) return LocalQuadratic::Unramified;
    return LocalQuadratic::Ramified;
}

LocalQuadratic to_local(QuadraticBehavior b) {
    switch (b) {
        case QuadraticBehavior::Split: return LocalQuadratic::Trivial;
        case QuadraticBehavior::Inert: return LocalQuadratic::Unramified;
        case QuadraticBehavior::Ramified: return LocalQuadratic::Ramified;
    }
    throw std::logic_error("unreachable");
}

QuadraticBehavior to_global(LocalQuadratic k) {
    switch (k) {
        case LocalQuadratic::Trivial: return QuadraticBehavior::Split;
        case LocalQuadratic::Unramified: return QuadraticBehavior::Inert;
        case LocalQuadratic::Ramified: return QuadraticBehavior::Ramified;
    }
    throw std::logic_error("unreachable");
}

namespace {

const std::vector<bool>& odd_square_table(int bits) {
    static std::map<int, std::vector<bool>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    std::vector<bool> table(size_t(1) << bits, false);
    unsigned long long mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
    for (unsigned long long w = 1; w < (1ULL << bits); w += 2)
        table[size_t((w * w) & mask)] = true;
    return cache.emplace(bits, std::move(table)).first->second;
}

}  // namespace

QuadraticBehavior brute_force_quadratic(const mpz_class& t, int bits) {
    if (bits < 6 || bits > 26) throw std::invalid_argument("brute_force_quadratic: bits out of range");
    if (t == 0) throw NotAQuadraticField("brute_force_quadratic: t = 0");
    mpz_class minus_t = -t;
    if (minus_t >= 0 && mpz_perfect_square_p(minus_t.get_mpz_t()))
        throw NotAQuadraticField("brute_force_quadratic: -t is a perfect square");
    long v = val2(t);
    mpz_class s = t >> (v - (v % 2));
    mpz_class bound = mpz_class(1) << (bits - 3);
    if (s >= bound || -s >= bound)
        throw std::invalid_argument("brute_force_quadratic: |s| too large for bits");
    const std::vector<bool>& sq = odd_square_table(bits);
    mpz_class ms = mod_pow2(-s, bits);
    if (sq[ms.get_ui()]) return QuadraticBehavior::Split;
    mpz_class s3 = mod_pow2(3 * s, bits);
    if (sq[s3.get_ui()]) return QuadraticBehavior::Inert;
    return QuadraticBehavior::Ramified;
}

}  // namespace wild2
