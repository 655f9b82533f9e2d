#include "wild2/tower.hpp"

#include <sstream>
#include <stdexcept>

#include "wild2/errors.hpp"

namespace wild2 {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::Trivial: return "trivial";
        case StepKind::Unramified: return "unramified";
        case StepKind::Ramified: return "ramified";
    }
    return "?";
}

namespace {

using Elt = TowerField::Elt;

Elt lower_half(const Elt& a) { return Elt(a.begin(), a.begin() + a.size() / 2); }
Elt upper_half(const Elt& a) { return Elt(a.begin() + a.size() / 2, a.end()); }

Elt join(Elt lo, const Elt& hi) {
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

}  // namespace

TowerField::TowerField(long precision_bits) : prec_(precision_bits) {
    check(precision_bits > 8, "unusably small working precision");
    uniformizer_ = {Dyadic::from_integer(2, prec_ + 1)};
}

Elt TowerField::zero() const { return Elt(size_t(1) << depth(), Dyadic::zero()); }

Elt TowerField::one() const { return from_integer(1); }

Elt TowerField::from_dyadic(const Dyadic& d) const {
    Elt out = zero();
    out[0] = d;
    return out;
}

Elt TowerField::from_integer(const mpz_class& x) const {
    return from_dyadic(Dyadic::from_integer(x, prec_));
}

Elt TowerField::from_integer(long long x) const { return from_integer(mpz_class((long)x)); }

Elt TowerField::generator(int level) const {
    check(level >= 0 && level < depth(), "generator level out of range");
    Elt out = zero();
    out[size_t(1) << level] = Dyadic::from_integer(1, prec_);
    return out;
}

Elt TowerField::lift(const Elt& lower) const {
    size_t n = size_t(1) << depth();
    check(lower.size() <= n && (lower.size() & (lower.size() - 1)) == 0,
          "lift source is not a subtower element");
    Elt out = zero();
    std::copy(lower.begin(), lower.end(), out.begin());
    return out;
}

Elt TowerField::add(const Elt& a, const Elt& b) const {
    check(a.size() == b.size(), "mixed coordinate sizes");
    Elt out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Elt TowerField::sub(const Elt& a, const Elt& b) const {
    check(a.size() == b.size(), "mixed coordinate sizes");
    Elt out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Elt TowerField::neg(const Elt& a) const {
    Elt out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].negated();
    return out;
}

Elt TowerField::mul_at(int d, const Elt& a, const Elt& b) const {
    if (d == 0) return {a[0] * b[0]};
    const Elt a0 = lower_half(a), a1 = upper_half(a);
    const Elt b0 = lower_half(b), b1 = upper_half(b);
    const Elt& u = levels_[d - 1].def;  // square of the top generator
    Elt lo = mul_at(d - 1, a0, b0);
    Elt cross = mul_at(d - 1, mul_at(d - 1, a1, b1), u);
    for (size_t i = 0; i < lo.size(); ++i) lo[i] = lo[i] + cross[i];
    Elt hi = mul_at(d - 1, a0, b1);
    Elt hi2 = mul_at(d - 1, a1, b0);
    for (size_t i = 0; i < hi.size(); ++i) hi[i] = hi[i] + hi2[i];
    return join(std::move(lo), hi);
}

Elt TowerField::mul(const Elt& a, const Elt& b) const {
    check(a.size() == b.size() && a.size() == (size_t(1) << depth()), "mixed coordinate sizes");
    return mul_at(depth(), a, b);
}

Elt TowerField::inv_at(int d, const Elt& a) const {
    if (d == 0) {
        return {Dyadic::from_integer(1, a[0].precision()) / a[0]};
    }
    // 1/(a0 + a1 g) = (a0 - a1 g) / (a0^2 - u a1^2), the denominator living
    // one level down.
    const Elt a0 = lower_half(a), a1 = upper_half(a);
    const Elt& u = levels_[d - 1].def;
    Elt n = mul_at(d - 1, a0, a0);
    Elt m = mul_at(d - 1, mul_at(d - 1, a1, a1), u);
    for (size_t i = 0; i < n.size(); ++i) n[i] = n[i] - m[i];
    Elt ninv = inv_at(d - 1, n);
    Elt lo = mul_at(d - 1, a0, ninv);
    Elt hi = mul_at(d - 1, a1, ninv);
    for (auto& x : hi) x = x.negated();
    return join(std::move(lo), hi);
}

Elt TowerField::inv(const Elt& a) const {
    check(a.size() == (size_t(1) << depth()), "mixed coordinate sizes");
    return inv_at(depth(), a);
}

Elt TowerField::div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

Elt TowerField::pow(const Elt& a, long n) const {
    if (n < 0) return inv(pow(a, -n));
    Elt acc = one();
    Elt base = a;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

Elt TowerField::scale_pow2(const Elt& a, long k) const {
    Elt out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].shifted(k);
    return out;
}

bool TowerField::is_zero_like(const Elt& a) const {
    for (const auto& d : a)
        if (!d.is_zero_like()) return false;
    return true;
}

bool TowerField::is_zero_to_bits(const Elt& a, long bits) const {
    for (const auto& d : a) {
        if (d.is_exact_zero()) continue;
        if (d.is_zero_to_precision()) {
            if (d.precision() < bits) return false;
        } else if (d.valuation() < bits) {
            return false;
        }
    }
    return true;
}

Dyadic TowerField::norm_at(int d, const Elt& a) const {
    if (d == 0) return a[0];
    // N(a0 + a1 g) = a0^2 - u a1^2 relative to the level below; compose down.
    const Elt a0 = lower_half(a), a1 = upper_half(a);
    const Elt& u = levels_[d - 1].def;
    Elt n = mul_at(d - 1, a0, a0);
    Elt m = mul_at(d - 1, mul_at(d - 1, a1, a1), u);
    for (size_t i = 0; i < n.size(); ++i) n[i] = n[i] - m[i];
    return norm_at(d - 1, n);
}

Dyadic TowerField::norm_to_q2(const Elt& a) const {
    check(a.size() == (size_t(1) << depth()), "mixed coordinate sizes");
    return norm_at(depth(), a);
}

Frac TowerField::valuation(const Elt& a) const {
    Dyadic n = norm_to_q2(a);
    if (n.is_exact_zero()) throw std::domain_error("valuation of zero");
    long vn = n.valuation();  // PrecisionExhausted when cancelled out
    Frac v(vn, int64_t(1) << depth());
    check(e_ % v.den == 0, "element valuation outside (1/e)Z");
    return v;
}

long TowerField::pi_valuation(const Elt& a) const {
    Frac v = valuation(a);
    return v.num * (e_ / v.den);
}

long TowerField::pi_valuation_capped(const Elt& a, long cap) const {
    Dyadic n = norm_to_q2(a);
    if (n.is_exact_zero()) return cap;
    if (n.is_zero_to_precision()) {
        // v(norm) >= precision, so v_pi(a) >= e * precision / [F:Q_2].
        long bound = (e_ * n.precision()) / (long(1) << depth());
        if (bound >= cap) return cap;
        throw PrecisionExhausted("valuation cancelled below requested cap");
    }
    Frac v(n.valuation(), int64_t(1) << depth());
    check(e_ % v.den == 0, "element valuation outside (1/e)Z");
    return std::min(v.num * (e_ / v.den), cap);
}

std::vector<Elt> TowerField::unit_digit_set() const {
    std::vector<Elt> out;
    out.push_back(one());
    if (has_digit_gen_) {
        out.push_back(digit_gen_);
        out.push_back(add(one(), digit_gen_));
    }
    return out;
}

std::vector<Elt> TowerField::digit_set() const {
    std::vector<Elt> out;
    out.push_back(zero());
    for (auto& d : unit_digit_set()) out.push_back(std::move(d));
    return out;
}

TowerField::DefectResult TowerField::unit_defect(const Elt& u_unit) const {
    const long cap = 2 * e_ + 1;
    // w^2 mod pi^(2e+1) only depends on w mod pi^(e+1), so digits at the
    // pi-powers 0..e (leading digit a unit) exhaust the residue classes that
    // matter; the capped maximum over them is the capped quadratic defect.
    std::vector<Elt> pipow(e_ + 1);
    pipow[0] = one();
    for (int i = 1; i <= e_; ++i) pipow[i] = mul(pipow[i - 1], uniformizer_);
    const std::vector<Elt> lead = unit_digit_set();
    const std::vector<Elt> rest = digit_set();

    DefectResult best{-1, {}};
    std::vector<size_t> idx(size_t(e_) + 1, 0);
    for (;;) {
        Elt w = mul(lead[idx[0]], pipow[0]);
        for (int p = 1; p <= e_; ++p) {
            if (idx[p] == 0) continue;  // zero digit
            w = add(w, mul(rest[idx[p]], pipow[p]));
        }
        long d = pi_valuation_capped(sub(mul(w, w), u_unit), cap);
        if (d > best.defect) {
            best.defect = d;
            best.best_w = w;
            if (d >= cap) break;
        }
        // odometer over digit choices
        int p = 0;
        for (; p <= e_; ++p) {
            size_t radix = (p == 0) ? lead.size() : rest.size();
            if (++idx[p] < radix) break;
            idx[p] = 0;
        }
        if (p > e_) break;
    }
    check(best.defect >= 1, "quadratic defect of a unit is at least 1");
    return best;
}

Elt TowerField::newton_sqrt(const Elt& u, const Elt& w0) const {
    const long huge = e_ * prec_;
    Elt x = w0;
    long prev = -1;
    for (int it = 0; it < 200; ++it) {
        Elt r = sub(mul(x, x), u);
        if (is_zero_like(r)) return x;
        long d = pi_valuation_capped(r, huge);
        if (d <= prev) break;  // precision ceiling reached
        prev = d;
        x = scale_pow2(add(x, div(u, x)), -1);
    }
    Elt r = sub(mul(x, x), u);
    if (!is_zero_like(r) && pi_valuation_capped(r, huge) <= 2 * e_)
        throw PrecisionExhausted("square root refinement stalled");
    return x;
}

std::optional<Elt> TowerField::square_root(const Elt& u) {
    if (is_zero_like(u)) {
        for (const auto& d : u)
            if (!d.is_exact_zero()) throw PrecisionExhausted("square root of vanished value");
        return zero();
    }
    long t = pi_valuation(u);
    if (t % 2 != 0) return std::nullopt;
    Elt u_unit = div(u, pow(uniformizer_, t));
    DefectResult dr = unit_defect(u_unit);
    if (dr.defect <= 2 * e_) return std::nullopt;
    return mul(newton_sqrt(u_unit, dr.best_w), pow(uniformizer_, t / 2));
}

TowerField::ExtendResult TowerField::extend_by_sqrt(const Elt& u) {
    check(u.size() == (size_t(1) << depth()), "mixed coordinate sizes");
    check(depth() < 8, "tower too deep");
    if (is_zero_like(u)) {
        for (const auto& d : u)
            if (!d.is_exact_zero()) throw PrecisionExhausted("extension radicand vanished");
        throw std::domain_error("cannot adjoin a square root of zero");
    }

    const long t = pi_valuation(u);
    const long twoe = 2 * e_;

    if (t % 2 == 0) {
        Elt u_unit = div(u, pow(uniformizer_, t));
        DefectResult dr = unit_defect(u_unit);

        if (dr.defect > twoe) {
            Elt root = mul(newton_sqrt(u_unit, dr.best_w), pow(uniformizer_, t / 2));
            steps_.push_back(StepKind::Trivial);
            return {StepKind::Trivial, std::move(root)};
        }

        if (dr.defect == twoe) {
            if (f_ == 2)
                throw ResidueDegreeOverflow(
                    "second unramified step: residue field would leave F_4");
            const int e_old = e_;
            levels_.push_back({u, StepKind::Unramified});
            f_ *= 2;
            steps_.push_back(StepKind::Unramified);
            uniformizer_ = lift(uniformizer_);
            Elt s = generator(depth() - 1);
            // Residue generator: sqrt(u)/pi^(t/2) = w (1 + pi^e h) with h a
            // unit whose class generates the quartic residue field.
            Elt s_unit = div(s, pow(uniformizer_, t / 2));
            Elt h = div(sub(div(s_unit, lift(dr.best_w)), one()), pow(uniformizer_, e_old));
            check(pi_valuation(h) == 0, "residue generator must be a unit");
            digit_gen_ = h;
            has_digit_gen_ = true;
            check(pi_valuation(uniformizer_) == 1, "uniformizer drifted");
            return {StepKind::Unramified, generator(depth() - 1)};
        }

        check(dr.defect % 2 == 1, "maximal quadratic defect below 2e must be odd");
        // Wild ramified step: sqrt(u_unit) - w has odd pi-valuation d, so
        // dividing by pi^((d-1)/2) leaves a uniformizer of the extension.
        const long d = dr.defect;
        Elt w = dr.best_w;
        levels_.push_back({u, StepKind::Ramified});
        e_ *= 2;
        steps_.push_back(StepKind::Ramified);
        uniformizer_ = lift(uniformizer_);
        if (has_digit_gen_) digit_gen_ = lift(digit_gen_);
        Elt s = generator(depth() - 1);
        Elt s_unit = div(s, pow(uniformizer_, t / 2));
        Elt pi_new = div(sub(s_unit, lift(w)), pow(uniformizer_, (d - 1) / 2));
        uniformizer_ = pi_new;
        check(pi_valuation(uniformizer_) == 1, "uniformizer drifted");
        return {StepKind::Ramified, generator(depth() - 1)};
    }

    // Odd valuation: ramified outright, and sqrt(u)/pi^((t-1)/2) is already a
    // uniformizer of the extension.
    levels_.push_back({u, StepKind::Ramified});
    e_ *= 2;
    steps_.push_back(StepKind::Ramified);
    uniformizer_ = lift(uniformizer_);
    if (has_digit_gen_) digit_gen_ = lift(digit_gen_);
    Elt s = generator(depth() - 1);
    Elt pi_new = div(s, pow(uniformizer_, (t - 1) / 2));
    uniformizer_ = pi_new;
    check(pi_valuation(uniformizer_) == 1, "uniformizer drifted");
    return {StepKind::Ramified, generator(depth() - 1)};
}

std::string TowerField::describe(const Elt& a) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i].str();
    }
    os << "]";
    return os.str();
}

namespace {

OracleResult oracle_attempt(long long c, long prec) {
    GaloisInfo gi = galois_info(c);
    OracleResult out{{1, 1, 1}, {}, prec, TowerField(prec), {}, {}, false};
    TowerField& F = out.field;

    switch (gi.cls) {
        case GaloisClass::DegenerateZero:
            break;
        case GaloisClass::DegenerateMinusOne:
            F.extend_by_sqrt(F.from_integer(2));
            break;
        case GaloisClass::V4: {
            // f_c = (x^2 - (b^2-b))(x^2 - (b^2+b)); adjoin both roots.
            const mpz_class b((long)gi.b);
            F.extend_by_sqrt(F.from_integer(b * b - b));
            F.extend_by_sqrt(F.from_integer(b * b + b));
            break;
        }
        default: {  // D4 and C4 share the generic tower
            auto r1 = F.extend_by_sqrt(F.from_integer(-c));
            TowerField::Elt s1 = F.lift(r1.root);
            auto r2 = F.extend_by_sqrt(F.add(F.from_integer(-c), s1));
            TowerField::Elt alpha = r2.root;
            s1 = F.lift(s1);
            auto r3 = F.extend_by_sqrt(F.from_integer(-(c + 1)));
            TowerField::Elt t3 = r3.root;
            s1 = F.lift(s1);
            alpha = F.lift(alpha);
            // (alpha beta)^2 = (-c+s1)(-c-s1) = c^2 + c = (s1 t3)^2, so
            // beta = s1 t3 / alpha picks the branch with beta^2 = -c - s1.
            out.alpha = alpha;
            out.beta = F.div(F.mul(s1, t3), alpha);
            out.has_alpha_beta = true;
            break;
        }
    }

    const int e = F.e(), f = F.f();
    const int deg = field_degree(gi.cls);
    check(deg % (e * f) == 0, "local degree does not divide the global one");
    out.efg = {e, f, deg / (e * f)};
    out.steps = F.step_log();
    out.precision_bits = prec;
    return out;
}

}  // namespace

OracleResult oracle_efg(long long c, long precision_bits) {
    long n = precision_bits > 0 ? precision_bits : default_precision_bits(c);
    for (;;) {
        try {
            return oracle_attempt(c, n);
        } catch (const PrecisionExhausted&) {
            if (n >= precision_cap_bits) throw;
            n = std::min(2 * n, precision_cap_bits);
        }
    }
}

InertiaDecomposition inertia_fixed_class(long long c, long precision_bits) {
    if (galois_class(c) != GaloisClass::D4)
        throw WrongGaloisClass("inertia/decomposition report requires the dihedral case");
    return inertia_from_oracle(c, oracle_efg(c, precision_bits));
}

InertiaDecomposition inertia_from_oracle(long long c, const OracleResult& r) {
    if (galois_class(c) != GaloisClass::D4)
        throw WrongGaloisClass("inertia/decomposition report requires the dihedral case");
    const int e = r.efg.e, f = r.efg.f, g = r.efg.g;
    check(e * f * g == 8, "dihedral case must have efg = 8");

    // Local trichotomy of the three quadratic subfields Q(sqrt(-c)),
    // Q(sqrt(-(c+1))), Q(sqrt(c^2+c)); classify_quadratic takes the negated
    // radicand.
    const mpz_class cz((long)c);
    const std::array<mpz_class, 3> neg_rad = {cz, cz + 1, -(cz * cz + cz)};
    std::array<LocalQuadratic, 3> kind;
    for (int i = 0; i < 3; ++i) kind[i] = to_local(classify_quadratic(neg_rad[i]));

    std::vector<int> split, unram;
    for (int i = 0; i < 3; ++i) {
        if (kind[i] == LocalQuadratic::Trivial) split.push_back(i);
        if (kind[i] != LocalQuadratic::Ramified) unram.push_back(i);
    }
    const std::array<const char*, 3> quad = {lattice_nodes::quad_mc, lattice_nodes::quad_mc1,
                                             lattice_nodes::quad_cc};

    InertiaDecomposition out;
    namespace ln = lattice_nodes;

    // Fixed field of decomposition: degree g; its quadratic subfields are
    // exactly the split ones.
    switch (g) {
        case 1:
            out.decomposition_node = ln::base;
            break;
        case 2:
            check(split.size() == 1, "degree-2 decomposition field needs one split quadratic");
            out.decomposition_node = quad[split[0]];
            break;
        case 4:
            if (split.size() == 3) {
                out.decomposition_node = ln::quart_biquad;
            } else {
                check(split.size() == 1, "quartic decomposition field pattern");
                if (split[0] == 0) out.decomposition_node = ln::quart_alpha;
                else if (split[0] == 2) out.decomposition_node = ln::quart_apb;
                else check(false, "no quartic subfield has Q(sqrt(-(c+1))) alone");
            }
            break;
        default:
            check(false, "decomposition degree outside {1,2,4}");
    }

    // Fixed field of inertia: degree f*g; its quadratic subfields are the
    // non-ramified ones.
    switch (f * g) {
        case 1:
            out.inertia_node = ln::base;
            break;
        case 2:
            check(unram.size() == 1, "degree-2 inertia field needs one unramified quadratic");
            out.inertia_node = quad[unram[0]];
            break;
        case 4:
            if (unram.size() == 3) {
                out.inertia_node = ln::quart_biquad;
            } else {
                check(unram.size() == 1, "quartic inertia field pattern");
                if (unram[0] == 0) out.inertia_node = ln::quart_alpha;
                else if (unram[0] == 2) out.inertia_node = ln::quart_apb;
                else check(false, "no quartic subfield has Q(sqrt(-(c+1))) alone");
            }
            break;
        case 8:
            out.inertia_node = ln::full;
            break;
        default:
            check(false, "inertia fixed-field degree outside {1,2,4,8}");
    }
    return out;
}

}  // namespace wild2
