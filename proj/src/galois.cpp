#include "wild2/galois.hpp"

#include <json.hpp>

#include <stdexcept>

#include "wild2/errors.hpp"

namespace wild2 {

const char* to_string(GaloisClass g) {
    switch (g) {
        case GaloisClass::D4: return "D4";
        case GaloisClass::C4: return "C4";
        case GaloisClass::V4: return "V4";
        case GaloisClass::DegenerateMinusOne: return "degenerate(c=-1)";
        case GaloisClass::DegenerateZero: return "degenerate(c=0)";
    }
    return "?";
}

int field_degree(GaloisClass g) {
    switch (g) {
        case GaloisClass::D4: return 8;
        case GaloisClass::C4: return 4;
        case GaloisClass::V4: return 4;
        case GaloisClass::DegenerateMinusOne: return 2;
        case GaloisClass::DegenerateZero: return 1;
    }
    return 0;
}

bool is_perfect_square(const mpz_class& x, mpz_class* root) {
    if (x < 0) return false;
    if (!mpz_perfect_square_p(x.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), x.get_mpz_t());
    return true;
}

GaloisInfo galois_info(long long c) {
    if (c == 0) return {GaloisClass::DegenerateZero, 0};
    if (c == -1) return {GaloisClass::DegenerateMinusOne, 0};
    mpz_class mc = -mpz_class((long)c);
    mpz_class root;
    if (is_perfect_square(mc, &root)) return {GaloisClass::V4, root.get_si()};
    if (is_perfect_square(mc - 1, &root)) return {GaloisClass::C4, root.get_si()};
    return {GaloisClass::D4, 0};
}

GaloisClass galois_class(long long c) { return galois_info(c).cls; }

std::array<mpz_class, 5> quartic_coefficients(long long c) {
    mpz_class C((long)c);
    return {C * C + C, 0, 2 * C, 0, 1};
}

std::array<mpz_class, 3> quadratic_radicands(long long c) {
    mpz_class C((long)c);
    return {-C, -(C + 1), C * C + C};
}

QuarticFactorization quartic_factorization(long long c) {
    if (c == 0 || c == -1) throw std::invalid_argument("quartic_factorization: degenerate c");
    mpz_class C((long)c);
    mpz_class root;
    QuarticFactorization out;
    if (!is_perfect_square(-C, &root)) {
        out.irreducible = true;
        return out;
    }
    out.irreducible = false;
    out.b = root.get_si();
    out.p = root * root - root;
    out.q = root * root + root;
    // (x^2-p)(x^2-q) = x^4 - (p+q)x^2 + pq must reproduce f_c.
    check(out.p + out.q == -2 * C, "factorization: x^2 coefficient mismatch");
    check(out.p * out.q == C * C + C, "factorization: constant term mismatch");
    check(out.b >= 2, "factorization: b = 1 would be the degenerate c = -1");
    return out;
}

ResolventCubic resolvent_cubic(long long c) {
    mpz_class C((long)c);
    ResolventCubic r;
    r.cubic = {8 * C * C * C + 8 * C * C, -(4 * C * C + 4 * C), -2 * C, 1};
    r.linear = {-2 * C, 1};
    r.quadratic = {-(4 * C * C + 4 * C), 0, 1};
    // Check (x - 2c)(x^2 - (4c^2+4c)) against the stored cubic.
    check(r.linear[0] * r.quadratic[0] == r.cubic[0], "resolvent: constant term mismatch");
    check(r.linear[1] * r.quadratic[0] + r.linear[0] * r.quadratic[1] == r.cubic[1],
          "resolvent: x coefficient mismatch");
    check(r.linear[1] * r.quadratic[1] + r.linear[0] * r.quadratic[2] == r.cubic[2],
          "resolvent: x^2 coefficient mismatch");
    return r;
}

SubfieldLattice subfield_lattice(long long c) {
    if (galois_class(c) != GaloisClass::D4)
        throw WrongGaloisClass("subfield_lattice: requires the dihedral case");
    namespace ln = lattice_nodes;
    auto rad = quadratic_radicands(c);
    SubfieldLattice lat;
    lat.c = c;

    auto node = [&](const char* id, const char* label, int deg) {
        LatticeNode n;
        n.id = id;
        n.label = label;
        n.degree = deg;
        return n;
    };
    auto quad = [&](const char* id, const mpz_class& radicand) {
        LatticeNode n;
        n.id = id;
        n.label = "Q(sqrt(" + radicand.get_str() + "))";
        n.degree = 2;
        n.has_radicand = true;
        n.radicand = radicand;
        return n;
    };

    lat.nodes.push_back(node(ln::base, "Q", 1));
    lat.nodes.push_back(quad(ln::quad_mc, rad[0]));
    lat.nodes.push_back(quad(ln::quad_mc1, rad[1]));
    lat.nodes.push_back(quad(ln::quad_cc, rad[2]));
    LatticeNode qa = node(ln::quart_alpha, "Q(alpha)", 4);
    LatticeNode qb = node(ln::quart_beta, "Q(beta)", 4);
    qa.conjugate_with = ln::quart_beta;
    qb.conjugate_with = ln::quart_alpha;
    lat.nodes.push_back(qa);
    lat.nodes.push_back(qb);
    lat.nodes.push_back(node(ln::quart_biquad, "Q(sqrt(-c), sqrt(-(c+1)))", 4));
    LatticeNode qs = node(ln::quart_apb, "Q(alpha+beta)", 4);
    LatticeNode qd = node(ln::quart_amb, "Q(alpha-beta)", 4);
    qs.conjugate_with = ln::quart_amb;
    qd.conjugate_with = ln::quart_apb;
    lat.nodes.push_back(qs);
    lat.nodes.push_back(qd);
    lat.nodes.push_back(node(ln::full, "L_c", 8));

    lat.edges = {
        {ln::base, ln::quad_mc},
        {ln::base, ln::quad_mc1},
        {ln::base, ln::quad_cc},
        {ln::quad_mc, ln::quart_alpha},
        {ln::quad_mc, ln::quart_beta},
        {ln::quad_mc, ln::quart_biquad},
        {ln::quad_mc1, ln::quart_biquad},
        {ln::quad_cc, ln::quart_biquad},
        {ln::quad_cc, ln::quart_apb},
        {ln::quad_cc, ln::quart_amb},
        {ln::quart_alpha, ln::full},
        {ln::quart_beta, ln::full},
        {ln::quart_biquad, ln::full},
        {ln::quart_apb, ln::full},
        {ln::quart_amb, ln::full},
    };
    return lat;
}

std::string lattice_to_json(const SubfieldLattice& lat) {
    nlohmann::json j;
    j["c"] = lat.c;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : lat.nodes) {
        nlohmann::json jn;
        jn["id"] = n.id;
        jn["label"] = n.label;
        jn["degree"] = n.degree;
        if (n.has_radicand) jn["radicand"] = n.radicand.get_str();
        if (!n.conjugate_with.empty()) jn["conjugate_with"] = n.conjugate_with;
        j["nodes"].push_back(jn);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : lat.edges) j["edges"].push_back({e.first, e.second});
    return j.dump(2);
}

}  // namespace wild2
