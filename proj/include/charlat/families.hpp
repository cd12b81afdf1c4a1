#pragma once

// Closed-form character tables and explicit permutation constructions for
// abelian, dihedral and product groups, the two semidirect products of
// orders 48 and 240, PSL families, and the alternating-group partition data.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "charlat/fields.hpp"
#include "charlat/perm.hpp"
#include "charlat/table.hpp"

namespace charlat {

// ---------------------------------------------------------------------------
// abelian groups

inline CharacterTable abelian_table(const std::vector<long>& factors) {
    for (long m : factors)
        if (m < 1) throw std::invalid_argument("abelian_table: factors must be >= 1");
    long n = 1, exp = 1;
    for (long m : factors) {
        n *= m;
        exp = std::lcm(exp, m);
    }
    auto unrank = [&](long idx) {
        std::vector<long> t(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            t[i] = idx % factors[i];
            idx /= factors[i];
        }
        return t;
    };
    auto rank = [&](const std::vector<long>& t) {
        long idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            idx = idx * factors[i] + mod_l(t[i], factors[i]);
        return idx;
    };
    CharacterTable t;
    t.group_order = n;
    ClassData& d = t.classes;
    for (long b = 0; b < n; ++b) {
        auto tup = unrank(b);
        long o = 1;
        for (std::size_t i = 0; i < factors.size(); ++i)
            o = std::lcm(o, factors[i] / gcd_l(factors[i], tup[i]));
        d.sizes.push_back(1);
        d.element_orders.push_back(o);
    }
    d.exponent = exp;
    d.power_maps.resize(exp);
    for (long e = 0; e < exp; ++e) {
        d.power_maps[e].resize(n);
        for (long b = 0; b < n; ++b) {
            auto tup = unrank(b);
            for (auto& v : tup) v *= e;
            d.power_maps[e][b] = rank(tup);
        }
    }
    for (long a = 0; a < n; ++a) {
        auto at = unrank(a);
        std::vector<Cyclotomic> row;
        for (long b = 0; b < n; ++b) {
            auto bt = unrank(b);
            long s = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                s = mod_l(s + (exp / factors[i]) * mod_l(at[i] * bt[i], factors[i]), exp);
            row.push_back(Cyclotomic::root_of_unity(exp, s));
        }
        t.values.push_back(std::move(row));
    }
    return canonical_table(t);
}

inline CharacterTable direct_product_table(const CharacterTable& t1,
                                           const CharacterTable& t2) {
    std::size_t k1 = t1.cols(), k2 = t2.cols();
    CharacterTable t;
    t.group_order = t1.group_order * t2.group_order;
    ClassData& d = t.classes;
    d.exponent = std::lcm(t1.classes.exponent, t2.classes.exponent);
    bool with_reps = !t1.classes.reps.empty() && !t2.classes.reps.empty();
    long deg1 = with_reps ? t1.classes.reps[0].degree() : 0;
    long deg2 = with_reps ? t2.classes.reps[0].degree() : 0;
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k2; ++j) {
            d.sizes.push_back(t1.classes.sizes[i] * t2.classes.sizes[j]);
            d.element_orders.push_back(
                std::lcm(t1.classes.element_orders[i], t2.classes.element_orders[j]));
            if (with_reps) {
                std::vector<long> img(deg1 + deg2);
                for (long x = 0; x < deg1; ++x) img[x] = t1.classes.reps[i](x);
                for (long x = 0; x < deg2; ++x) img[deg1 + x] = deg1 + t2.classes.reps[j](x);
                d.reps.push_back(Perm(std::move(img)));
            }
        }
    d.power_maps.resize(d.exponent);
    for (long e = 0; e < d.exponent; ++e) {
        d.power_maps[e].resize(k1 * k2);
        for (std::size_t i = 0; i < k1; ++i)
            for (std::size_t j = 0; j < k2; ++j)
                d.power_maps[e][i * k2 + j] =
                    t1.classes.power_maps[e % t1.classes.exponent][i] * static_cast<long>(k2) +
                    t2.classes.power_maps[e % t2.classes.exponent][j];
    }
    for (std::size_t a = 0; a < k1; ++a)
        for (std::size_t b = 0; b < k2; ++b) {
            std::vector<Cyclotomic> row;
            for (std::size_t i = 0; i < k1; ++i)
                for (std::size_t j = 0; j < k2; ++j)
                    row.push_back(t1.values[a][i] * t2.values[b][j]);
            t.values.push_back(std::move(row));
        }
    return canonical_table(t);
}

// ---------------------------------------------------------------------------
// dihedral groups of order 2m

inline PermGroup dihedral_group(long m) {
    if (m < 3) throw std::invalid_argument("dihedral_group: m >= 3");
    std::vector<long> r(m), s(m);
    for (long i = 0; i < m; ++i) {
        r[i] = (i + 1) % m;
        s[i] = mod_l(-i, m);
    }
    return PermGroup{m, {Perm(std::move(r)), Perm(std::move(s))}};
}

inline CharacterTable dihedral_table(long m) {
    if (m < 3) throw std::invalid_argument("dihedral_table: m >= 3");
    PermGroup g = dihedral_group(m);
    Perm r = g.generators[0], s = g.generators[1];

    CharacterTable t;
    t.group_order = 2 * m;
    ClassData& d = t.classes;
    std::vector<long> rot;  // rotation class exponents, ascending
    for (long j = 0; j <= m / 2; ++j) rot.push_back(j);
    long l = m / 2;
    bool even = m % 2 == 0;
    // classes: rotations r^j (0 <= j <= m/2), then one or two reflection classes
    for (long j : rot) {
        d.reps.push_back(r.power(j));
        d.sizes.push_back(j == 0 || (even && j == l) ? 1 : 2);
        d.element_orders.push_back(j == 0 ? 1 : m / gcd_l(m, j));
    }
    long refl0 = static_cast<long>(rot.size());
    d.reps.push_back(s);
    d.sizes.push_back(even ? l : m);
    d.element_orders.push_back(2);
    if (even) {
        d.reps.push_back(s * r);
        d.sizes.push_back(l);
        d.element_orders.push_back(2);
    }
    d.exponent = std::lcm(m, 2L);
    long k = static_cast<long>(d.count());
    d.power_maps.resize(d.exponent);
    auto rot_class = [&](long e) {
        e = mod_l(e, m);
        return std::min(e, m - e);
    };
    for (long e = 0; e < d.exponent; ++e) {
        d.power_maps[e].resize(k);
        for (long j : rot) d.power_maps[e][j] = rot_class(j * e);
        for (long c = refl0; c < k; ++c)
            d.power_maps[e][c] = e % 2 == 0 ? 0 : c;
    }

    auto zz = [&](long a) {
        return Cyclotomic::root_of_unity(m, a) + Cyclotomic::root_of_unity(m, mod_l(-a, m));
    };
    std::vector<std::vector<Cyclotomic>> rows;
    {
        std::vector<Cyclotomic> triv(k, Cyclotomic(1)), sgn(k, Cyclotomic(1));
        for (long c = refl0; c < k; ++c) sgn[c] = Cyclotomic(-1);
        rows.push_back(triv);
        rows.push_back(sgn);
    }
    if (even) {
        // the two characters factoring through r -> -1
        for (long ssign : {1L, -1L}) {
            std::vector<Cyclotomic> row;
            for (long j : rot) row.push_back(Cyclotomic(j % 2 == 0 ? 1 : -1));
            row.push_back(Cyclotomic(ssign));
            row.push_back(Cyclotomic(-ssign));
            rows.push_back(std::move(row));
        }
    }
    long hmax = even ? l - 1 : l;
    for (long h = 1; h <= hmax; ++h) {
        std::vector<Cyclotomic> row;
        for (long j : rot) row.push_back(zz(h * j));
        row.push_back(Cyclotomic());
        if (even) row.push_back(Cyclotomic());
        rows.push_back(std::move(row));
    }
    t.values = std::move(rows);
    return canonical_table(t);
}

// ---------------------------------------------------------------------------
// extraspecial central products (order-generator data, no group needed)

struct ExtraspecialData {
    AbelianField field;        // Q_{p^2}
    std::vector<Cyclotomic> generators;
    Int group_order;           // p^{2n+2}
};

inline ExtraspecialData extraspecial_central_order(long p, long n) {
    if (p == 2 || !is_prime_l(p))
        throw std::invalid_argument("extraspecial_central_order: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("extraspecial_central_order: n >= 1");
    long q = p * p;
    Int pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    std::vector<Cyclotomic> gens{Cyclotomic::root_of_unity(q, p)};
    for (long i = 1; i < q; ++i)
        if (i % p != 0)
            gens.push_back(Cyclotomic(Rat(pn)) * Cyclotomic::root_of_unity(q, i));
    Int order = pn * pn * p * p;
    return ExtraspecialData{AbelianField{q, {1}}, std::move(gens), order};
}

// ---------------------------------------------------------------------------
// the two named semidirect products

// C_4 x C_4 with a C_3 automorphism [[0,-1],[1,-1]], regular on 16 points
inline PermGroup c4c4_c3_group() {
    auto idx = [](long x, long y) { return mod_l(x, 4) * 4 + mod_l(y, 4); };
    std::vector<long> t1(16), t2(16), m(16);
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y) {
            t1[idx(x, y)] = idx(x + 1, y);
            t2[idx(x, y)] = idx(x, y + 1);
            m[idx(x, y)] = idx(-y, x - y);
        }
    return PermGroup{16, {Perm(std::move(t1)), Perm(std::move(t2)), Perm(std::move(m))}};
}

// C_15 x| D_16 on 15 + 8 points, D_16 acting through its Klein quotient
// {1,4,11,14} <= (Z/15)^x; rotation -> 4, reflection -> res
// C_15 : D_16 on 15 + 8 points; the D_16 action factors through its Klein
// quotient {1,4,11,14} <= (Z/15)^x with the rotation acting by inversion
// (residue 14) and the reflection by `res`
inline PermGroup c15_d16_group_wired(long res) {
    std::vector<long> t(23), r(23), s(23);
    for (long i = 0; i < 15; ++i) {
        t[i] = (i + 1) % 15;
        r[i] = mulmod_l(14, i, 15);
        s[i] = mulmod_l(res, i, 15);
    }
    for (long j = 0; j < 8; ++j) {
        t[15 + j] = 15 + j;
        r[15 + j] = 15 + (j + 1) % 8;
        s[15 + j] = 15 + mod_l(-j, 8);
    }
    return PermGroup{23, {Perm(std::move(t)), Perm(std::move(r)), Perm(std::move(s))}};
}

inline PermGroup c15_d16_group() { return c15_d16_group_wired(11); }
inline PermGroup c15_d16_group_alt() { return c15_d16_group_wired(4); }

// ---------------------------------------------------------------------------
// PSL families

namespace detail {

// small finite field with explicit tables; elements 0..q-1 as base-p digits
struct SmallField {
    long p, deg, q;
    std::vector<long> modulus;  // monic reduction polynomial, low to high, length deg

    long add(long a, long b) const {
        long r = 0, mul = 1;
        for (long i = 0; i < deg; ++i, mul *= p, a /= p, b /= p)
            r += ((a + b) % p) * mul;
        return r;
    }
    long neg(long a) const {
        long r = 0, mul = 1;
        for (long i = 0; i < deg; ++i, mul *= p, a /= p)
            r += mod_l(-(a % p), p) * mul;
        return r;
    }
    long mul(long a, long b) const {
        std::vector<long> prod(2 * deg - 1, 0);
        std::vector<long> da(deg), db(deg);
        for (long i = 0; i < deg; ++i, a /= p) da[i] = a % p;
        for (long i = 0; i < deg; ++i, b /= p) db[i] = b % p;
        for (long i = 0; i < deg; ++i)
            for (long j = 0; j < deg; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (long i = 2 * deg - 2; i >= deg; --i) {
            long c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (long j = 0; j < deg; ++j)
                prod[i - deg + j] = mod_l(prod[i - deg + j] - c * modulus[j], p);
        }
        long r = 0, m2 = 1;
        for (long i = 0; i < deg; ++i, m2 *= p) r += prod[i] * m2;
        return r;
    }
    long inv(long a) const {
        for (long b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::logic_error("SmallField: not invertible");
    }
};

inline SmallField make_field(long q) {
    switch (q) {
        case 4: return SmallField{2, 2, 4, {1, 1}};        // x^2 + x + 1
        case 8: return SmallField{2, 3, 8, {1, 1, 0}};     // x^3 + x + 1
        case 9: return SmallField{3, 2, 9, {1, 0}};        // x^2 + 1
        case 5: return SmallField{5, 1, 5, {0}};
        case 7: return SmallField{7, 1, 7, {0}};
        case 11: return SmallField{11, 1, 11, {0}};
        case 13: return SmallField{13, 1, 13, {0}};
        default: throw std::invalid_argument("unsupported field size");
    }
}

}  // namespace detail

// PSL(2,q) on the projective line, q+1 points, point q = infinity
inline PermGroup psl2_group(long q) {
    detail::SmallField f = detail::make_field(q);
    std::vector<Perm> gens;
    long basis = 1;
    for (long i = 0; i < f.deg; ++i, basis *= f.p) {
        std::vector<long> u(q + 1);
        for (long x = 0; x < q; ++x) u[x] = f.add(x, basis);
        u[q] = q;
        gens.push_back(Perm(std::move(u)));
    }
    std::vector<long> w(q + 1);
    w[0] = q;
    w[q] = 0;
    for (long x = 1; x < q; ++x) w[x] = f.neg(f.inv(x));
    gens.push_back(Perm(std::move(w)));
    return PermGroup{q + 1, std::move(gens)};
}

// PSL(3,3) on the 13 points of the projective plane over F_3
inline PermGroup psl33_group() {
    std::vector<std::array<long, 3>> pts;
    auto normalize = [](std::array<long, 3> v) {
        long lead = 0;
        for (long i = 0; i < 3; ++i)
            if (v[i] != 0) { lead = v[i]; break; }
        if (lead == 2)
            for (auto& x : v) x = (2 * x) % 3;
        return v;
    };
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c) {
                std::array<long, 3> v{a, b, c};
                if (v == std::array<long, 3>{0, 0, 0}) continue;
                v = normalize(v);
                if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
            }
    auto index_of = [&](const std::array<long, 3>& v) {
        return static_cast<long>(std::find(pts.begin(), pts.end(), v) - pts.begin());
    };
    std::vector<Perm> gens;
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::vector<long> img(13);
            for (std::size_t t = 0; t < pts.size(); ++t) {
                std::array<long, 3> v = pts[t];
                v[i] = (v[i] + v[j]) % 3;
                img[t] = index_of(normalize(v));
            }
            gens.push_back(Perm(std::move(img)));
        }
    return PermGroup{13, std::move(gens)};
}

// quaternion group Q_8, regular action on its 8 elements
inline PermGroup quaternion_group() {
    // elements encoded as axis*2 + (sign < 0), axis in {1, i, j, k}
    auto mul = [](long a, long b) {
        long ax = a / 2, bx = b / 2;
        long sign = ((a % 2) + (b % 2)) % 2;
        static const long axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const long flip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        return axis[ax][bx] * 2 + (sign + flip[ax][bx]) % 2;
    };
    std::vector<long> gi(8), gj(8);
    for (long x = 0; x < 8; ++x) {
        gi[x] = mul(2, x);  // left multiplication by i
        gj[x] = mul(4, x);  // left multiplication by j
    }
    return PermGroup{8, {Perm(std::move(gi)), Perm(std::move(gj))}};
}

// ---------------------------------------------------------------------------
// alternating group data: partitions into distinct odd parts

struct PartitionDatum {
    std::vector<long> parts;  // decreasing, distinct, odd
    long k = 0;
    long d = 0;         // (-1)^{(n-k)/2} * product of parts
    long d_kernel = 0;  // squarefree kernel d' with d = e^2 d'
    long e = 1;
};

inline std::vector<PartitionDatum> an_partition_data(long n) {
    if (n < 2) throw std::invalid_argument("an_partition_data: n >= 2");
    std::vector<PartitionDatum> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            PartitionDatum pd;
            pd.parts = cur;
            pd.k = static_cast<long>(cur.size());
            long prod = 1;
            for (long x : cur) prod *= x;
            long sign = ((n - pd.k) / 2) % 2 == 0 ? 1 : -1;
            pd.d = sign * prod;
            long kernel = 1, sq = 1;
            for (auto [p, a] : factorize_l(prod)) {
                if (a % 2 == 1) kernel *= p;
                for (long t = 0; t < a / 2; ++t) sq *= p;
            }
            pd.d_kernel = sign * kernel;
            pd.e = sq;
            out.push_back(std::move(pd));
            return;
        }
        for (long part = std::min(rest, maxpart); part >= 1; part -= 2) {
            if (part % 2 == 0) --part;
            if (part < 1) break;
            cur.push_back(part);
            if (rest - part == 0 || rest - part >= 1) self(self, rest - part, part - 2);
            cur.pop_back();
        }
    };
    rec(rec, n, n % 2 == 1 ? n : n - 1);
    return out;
}

// F_2 square-class space of the character field of A_n over the signed
// primes p* = (-1)^{(p-1)/2} p
struct SquareClassSpace {
    std::vector<long> prime_stars;
    std::vector<std::vector<int>> basis;  // F_2 rows over prime_stars, reduced
};

namespace detail {

inline long star_of(long p) { return p % 4 == 1 ? p : -p; }

inline void f2_reduce(std::vector<std::vector<int>>& rows) {
    std::size_t r = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
        ++r;
    }
    rows.resize(r);
}

}  // namespace detail

inline SquareClassSpace an_field_basis(long n) {
    SquareClassSpace v;
    if (n >= 25) {
        for (long p = 3; p <= n; ++p)
            if (is_prime_l(p) && p != n - 2) v.prime_stars.push_back(detail::star_of(p));
        for (std::size_t i = 0; i < v.prime_stars.size(); ++i) {
            std::vector<int> row(v.prime_stars.size(), 0);
            row[i] = 1;
            v.basis.push_back(std::move(row));
        }
        return v;
    }
    std::vector<long> kernels;
    std::set<long> primes;
    for (const auto& pd : an_partition_data(n)) {
        if (pd.d_kernel == 1) continue;
        kernels.push_back(pd.d_kernel);
        for (auto [p, a] : factorize_l(std::abs(pd.d_kernel))) primes.insert(p);
    }
    v.prime_stars.assign(primes.begin(), primes.end());
    for (auto& p : v.prime_stars) p = detail::star_of(p);
    std::vector<std::vector<int>> rows;
    for (long kern : kernels) {
        std::vector<int> row(v.prime_stars.size(), 0);
        long a = std::abs(kern);
        for (std::size_t i = 0; i < v.prime_stars.size(); ++i)
            if (a % std::abs(v.prime_stars[i]) == 0) row[i] = 1;
        rows.push_back(std::move(row));
    }
    detail::f2_reduce(rows);
    v.basis = std::move(rows);
    return v;
}

}  // namespace charlat
