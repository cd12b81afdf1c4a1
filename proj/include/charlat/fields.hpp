#pragma once

// Abelian number fields presented as Galois stabilizer subgroups inside a
// cyclotomic field, with Leopoldt trace bases and trace-form discriminants.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "charlat/cyclo.hpp"
#include "charlat/zlat.hpp"

namespace charlat {

// Fixed field of the subgroup stab <= (Z/nZ)^x acting on Q_n.
// conductor is minimal for the field; stab is sorted and contains 1
// (represented as 0 when conductor = 1).
struct AbelianField {
    long conductor = 1;
    std::vector<long> stab{0};

    long degree() const {
        return euler_phi_l(conductor) / static_cast<long>(stab.size());
    }
    bool operator==(const AbelianField& o) const {
        return conductor == o.conductor && stab == o.stab;
    }
};

namespace detail {

// minimal d | n with the reduction kernel contained in H, plus H's image
inline AbelianField minimize_conductor(long n, const std::set<long>& h) {
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (long d : divisors) {
        bool ok = true;
        for (long k = 1; k < n && ok; ++k)
            if (gcd_l(k, n) == 1 && mod_l(k, d) == mod_l(1, d) && !h.count(k))
                ok = false;
        if (n == 1) ok = true;
        if (!ok) continue;
        std::set<long> img;
        for (long k : h) img.insert(mod_l(k, d));
        if (d == 1) img = {0};
        return AbelianField{d, std::vector<long>(img.begin(), img.end())};
    }
    throw std::logic_error("minimize_conductor: no divisor qualifies");
}

}  // namespace detail

// Smallest field containing every value: stabilizer inside the lcm conductor,
// then conductor minimization.
inline AbelianField field_of_values(const std::vector<Cyclotomic>& values) {
    if (values.empty()) throw std::invalid_argument("field_of_values: empty input");
    long n = 1;
    for (const auto& v : values) n = std::lcm(n, v.conductor());
    if (n == 1) return AbelianField{};
    std::set<long> h;
    for (long k = 1; k < n; ++k) {
        if (gcd_l(k, n) != 1) continue;
        bool fixes = true;
        for (const auto& v : values)
            if (v.galois(mod_l(k, v.conductor())) != v) { fixes = false; break; }
        if (fixes) h.insert(k);
    }
    return detail::minimize_conductor(n, h);
}

struct IntegralBasis {
    AbelianField field;
    std::vector<Cyclotomic> elements;
    IntMat coordinates;  // rows in the Zumbroich coordinates of Q_conductor
};

// Z_K is spanned over Z by the traces of the roots of unity of Q_n to K;
// reduce the orbit-sum coordinate rows to a Hermite basis.
inline IntegralBasis leopoldt_basis(const AbelianField& k) {
    long n = k.conductor;
    auto exps = zumbroich_exponents(n);
    std::vector<std::vector<Int>> rows;
    std::set<long> seen;
    for (long j = 0; j < n; ++j) {
        if (seen.count(j)) continue;
        for (long h : k.stab) seen.insert(mulmod_l(j, n == 1 ? 1 : h, n));
        Cyclotomic t = orbit_sum(n, j, k.stab);
        if (t.is_zero()) continue;
        rows.push_back(zumbroich_coords(t, n, exps));
    }
    detail::hnf_rows(rows, exps.size());
    if (static_cast<long>(rows.size()) != k.degree())
        throw std::logic_error("leopoldt_basis: trace span rank != degree");
    IntMat coords(rows.size(), exps.size());
    std::vector<Cyclotomic> elems;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::map<long, Rat> m;
        for (std::size_t j = 0; j < exps.size(); ++j) {
            coords.at(i, j) = rows[i][j];
            if (rows[i][j] != 0) m[exps[j]] = Rat(rows[i][j]);
        }
        elems.push_back(Cyclotomic::canonical(n, std::move(m)));
    }
    return IntegralBasis{k, std::move(elems), std::move(coords)};
}

inline AbelianField compositum(const AbelianField& a, const AbelianField& b) {
    long n = std::lcm(a.conductor, b.conductor);
    if (n == 1) return AbelianField{};
    std::set<long> sa(a.stab.begin(), a.stab.end());
    std::set<long> sb(b.stab.begin(), b.stab.end());
    std::set<long> h;
    for (long k = 1; k < n; ++k) {
        if (gcd_l(k, n) != 1) continue;
        bool ina = a.conductor == 1 || sa.count(mod_l(k, a.conductor));
        bool inb = b.conductor == 1 || sb.count(mod_l(k, b.conductor));
        if (ina && inb) h.insert(k);
    }
    return detail::minimize_conductor(n, h);
}

namespace detail {

// sum of zeta_n^{ek} over k coprime to n; mu(n/g) phi(n) / phi(n/g), g = gcd
inline Int ramanujan_sum(long n, long e) {
    if (n == 1) return 1;
    long g = gcd_l(mod_l(e, n), n);
    if (g == 0) g = n;
    long q = n / g;
    long mu = 1;
    for (auto [p, a] : factorize_l(q)) {
        if (a > 1) return 0;
        mu = -mu;
    }
    return Int(mu) * euler_phi_l(n) / euler_phi_l(q);
}

}  // namespace detail

// Trace of x in K down to Q: averaged full Galois sum, evaluated through
// Ramanujan sums on the monomials.
inline Rat field_trace(const AbelianField& k, const Cyclotomic& x) {
    long n = k.conductor;
    if (n % x.conductor() != 0)
        throw std::invalid_argument("field_trace: x not in Q_conductor");
    long s = n / x.conductor();
    Rat acc(0);
    for (const auto& [e, q] : x.coeffs())
        acc += q * Rat(detail::ramanujan_sum(n, e * s));
    acc /= Rat(static_cast<long>(k.stab.size()));
    acc.canonicalize();
    return acc;
}

// Signed determinant of the trace-form Gram matrix of the Leopoldt basis.
inline Int discriminant(const AbelianField& k) {
    IntegralBasis b = leopoldt_basis(k);
    std::size_t d = b.elements.size();
    IntMat gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rat t = field_trace(k, b.elements[i] * b.elements[j]);
            if (t.get_den() != 1)
                throw std::logic_error("discriminant: non-integral trace pairing");
            gram.at(i, j) = t.get_num();
            gram.at(j, i) = t.get_num();
        }
    return determinant(gram);
}

enum class SubfieldTag { cyclotomic, plus, minus };

struct TwoPowerClassification {
    SubfieldTag tag;
    std::vector<Cyclotomic> generators;
};

// Fields of 2-power conductor 2^m sit on one of three chains: the full
// cyclotomic tower, the real tower Q(zeta + conj) and the tower
// Q(zeta - conj); the latter two are generated over Z by 1 and the
// elements zeta^k + (s * conj)^k with s = 1 or -1.
inline TwoPowerClassification classify_2power_subfield(const AbelianField& k) {
    long n = k.conductor;
    long m = 0;
    for (long t = n; t > 1; t /= 2, ++m)
        if (t % 2 != 0)
            throw std::invalid_argument("classify_2power_subfield: conductor not a 2-power");
    auto power_basis = [&]() {
        std::vector<Cyclotomic> g;
        for (long i = 0; i < euler_phi_l(n); ++i)
            g.push_back(Cyclotomic::root_of_unity(n, i));
        if (g.empty()) g.push_back(Cyclotomic(1));
        return g;
    };
    if (k.stab.size() == 1) return {SubfieldTag::cyclotomic, power_basis()};
    if (m < 3 || k.stab.size() != 2)
        throw std::logic_error("classify_2power_subfield: stabilizer shape impossible at minimal conductor");
    long h = k.stab[0] == 1 ? k.stab[1] : k.stab[0];
    SubfieldTag tag;
    if (h == n - 1)
        tag = SubfieldTag::plus;
    else if (h == n / 2 - 1)
        tag = SubfieldTag::minus;
    else
        throw std::logic_error("classify_2power_subfield: stabilizer shape impossible at minimal conductor");
    std::vector<Cyclotomic> gens{Cyclotomic(1)};
    long half = n / 4;  // 2^{m-2}
    for (long j = 1; j < half; ++j) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, j);
        Cyclotomic zb = Cyclotomic::root_of_unity(n, mod_l(-j, n));
        if (tag == SubfieldTag::minus && j % 2 == 1)
            gens.push_back(z - zb);
        else
            gens.push_back(z + zb);
    }
    return {tag, std::move(gens)};
}

}  // namespace charlat
