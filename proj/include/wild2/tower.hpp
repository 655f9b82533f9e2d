#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wild2/dyadic.hpp"
#include "wild2/frac.hpp"
#include "wild2/galois.hpp"
#include "wild2/quadratic.hpp"
#include "wild2/rows.hpp"

namespace wild2 {

enum class StepKind { Trivial, Unramified, Ramified };
const char* to_string(StepKind k);

/**
 * A tower of at most a few quadratic extensions of Q_2, built by repeatedly
 * adjoining square roots. Elements are coordinate vectors of length 2^depth
 * over the basis of products of adjoined generators; all coordinate
 * arithmetic is truncated 2-adic at the field's working precision.
 *
 * Every extension step is classified constructively. For a unit u the
 * quadratic defect D = max_w v_pi(u - w^2), maximized over representatives
 * w modulo pi^(e+1) (at most 4^(e+1) candidates; w^2 mod pi^(2e+1) only
 * depends on w mod pi^(e+1)), decides the step:
 *
 *   D >= 2e+1  ->  u is a square (Newton-lift the best w to full precision)
 *   D == 2e    ->  F(sqrt u)/F is unramified
 *   D odd < 2e ->  F(sqrt u)/F is ramified
 *
 * An even defect below 2e cannot survive the maximization when the residue
 * field is perfect of characteristic 2, so it is rejected as an internal
 * error. A uniformizer with v = 1/e is maintained through every step and
 * rechecked after each extension.
 */
class TowerField {
public:
    using Elt = std::vector<Dyadic>;

    explicit TowerField(long precision_bits);

    long precision_bits() const { return prec_; }
    int depth() const { return static_cast<int>(levels_.size()); }
    int e() const { return e_; }
    int f() const { return f_; }
    int degree() const { return e_ * f_; }
    const std::vector<StepKind>& step_log() const { return steps_; }
    const Elt& uniformizer() const { return uniformizer_; }

    Elt zero() const;
    Elt one() const;
    Elt from_dyadic(const Dyadic& d) const;
    Elt from_integer(const mpz_class& x) const;
    Elt from_integer(long long x) const;
    Elt generator(int level) const;
    // Re-express an element created when the tower was shallower.
    Elt lift(const Elt& lower) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt div(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, long n) const;  // n may be negative
    Elt scale_pow2(const Elt& a, long k) const;  // multiply by 2^k, exact
    bool is_zero_like(const Elt& a) const;
    // All coordinates vanish to at least `bits` bits.
    bool is_zero_to_bits(const Elt& a, long bits) const;

    Dyadic norm_to_q2(const Elt& a) const;

    // Valuation normalized by v(2) = 1; for field elements it lies in (1/e)Z.
    Frac valuation(const Elt& a) const;
    // e * valuation: the uniformizer-power grading.
    long pi_valuation(const Elt& a) const;
    // min(pi_valuation, cap); zero-like values with enough precision count as
    // cap, otherwise PrecisionExhausted.
    long pi_valuation_capped(const Elt& a, long cap) const;

    std::optional<Elt> square_root(const Elt& u);

    struct ExtendResult {
        StepKind kind;
        Elt root;  // concrete sqrt for Trivial; the new generator otherwise
    };
    ExtendResult extend_by_sqrt(const Elt& u);

    std::string describe(const Elt& a) const;

private:
    struct Level {
        Elt def;          // element of the subtower below whose sqrt was adjoined
        StepKind kind;    // Unramified or Ramified
    };

    struct DefectResult {
        long defect;  // capped at 2e+1
        Elt best_w;
    };

    // Arithmetic on raw coordinate slices of length 2^depth.
    Elt mul_at(int depth, const Elt& a, const Elt& b) const;
    Elt inv_at(int depth, const Elt& a) const;
    Dyadic norm_at(int depth, const Elt& a) const;

    DefectResult unit_defect(const Elt& u_unit) const;
    std::vector<Elt> unit_digit_set() const;   // digits with nonzero residue
    std::vector<Elt> digit_set() const;        // representatives of the residue field
    Elt newton_sqrt(const Elt& u, const Elt& w0) const;

    long prec_;
    int e_ = 1;
    int f_ = 1;
    std::vector<Level> levels_;
    std::vector<StepKind> steps_;
    Elt uniformizer_;
    Elt digit_gen_;        // residue generator when f = 2
    bool has_digit_gen_ = false;
};

struct OracleResult {
    EfgTriple efg;
    std::vector<StepKind> steps;
    long precision_bits = 0;
    TowerField field;
    TowerField::Elt alpha, beta;  // populated for the generic 3-step tower
    bool has_alpha_beta = false;
};

// Constructive determination of (e, f, g) for the prime 2 in L_c: builds the
// local splitting field as a tower (sqrt(-c), then alpha = sqrt(-c+sqrt(-c)),
// then sqrt(-(c+1))), reads e and f off the step kinds, and recovers g from
// the global degree. beta enters as sqrt(-c)*sqrt(-(c+1))/alpha. Precision
// escalates by doubling on PrecisionExhausted, up to precision_cap_bits.
OracleResult oracle_efg(long long c, long precision_bits = 0);

struct InertiaDecomposition {
    std::string inertia_node;        // fixed field of inertia, as a lattice node id
    std::string decomposition_node;  // fixed field of decomposition
};

// Locates the fixed fields of the inertia and decomposition subgroups in the
// subfield lattice, from the oracle's (e, f, g) and the local trichotomies of
// the three quadratic radicands. Dihedral case only.
InertiaDecomposition inertia_fixed_class(long long c, long precision_bits = 0);
// Same, reusing an already computed oracle result for c.
InertiaDecomposition inertia_from_oracle(long long c, const OracleResult& oracle);

}  // namespace wild2
