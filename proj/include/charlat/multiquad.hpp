#pragma once

// Exact arithmetic in multiquadratic fields Q(sqrt(p*_1), ..., sqrt(p*_r))
// with subset-indexed coordinates, maximal orders with a conductor-
// discriminant certificate, and the alternating-group quotient pipeline.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "charlat/families.hpp"
#include "charlat/zlat.hpp"

namespace charlat {

// value = sum over subset masks S of coeffs[S] * sqrt(prod_{i in S} stars[i]);
// sqrt of a product means the product of the fixed square roots of the stars
struct MultiQuad {
    std::vector<long> stars;
    std::map<unsigned, Rat> coeffs;

    void prune() {
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            it->second.canonicalize();
            it = it->second == 0 ? coeffs.erase(it) : std::next(it);
        }
    }
};

inline MultiQuad mq_make(const std::vector<long>& stars, std::map<unsigned, Rat> coeffs) {
    MultiQuad x{stars, std::move(coeffs)};
    x.prune();
    return x;
}

inline MultiQuad mq_rational(const std::vector<long>& stars, const Rat& q) {
    return mq_make(stars, {{0u, q}});
}

inline void mq_check_ambient(const MultiQuad& a, const MultiQuad& b) {
    if (a.stars != b.stars)
        throw std::invalid_argument("MultiQuad: ambient prime stars differ");
}

inline MultiQuad mq_add(const MultiQuad& a, const MultiQuad& b) {
    mq_check_ambient(a, b);
    MultiQuad r = a;
    for (const auto& [m, q] : b.coeffs) r.coeffs[m] += q;
    r.prune();
    return r;
}

inline MultiQuad mq_mul(const MultiQuad& a, const MultiQuad& b) {
    mq_check_ambient(a, b);
    MultiQuad r{a.stars, {}};
    for (const auto& [ma, qa] : a.coeffs)
        for (const auto& [mb, qb] : b.coeffs) {
            Rat c = qa * qb;
            unsigned common = ma & mb;
            for (std::size_t i = 0; i < a.stars.size(); ++i)
                if (common >> i & 1u) c *= a.stars[i];
            r.coeffs[ma ^ mb] += c;
        }
    r.prune();
    return r;
}

inline bool mq_equal(const MultiQuad& a, const MultiQuad& b) {
    mq_check_ambient(a, b);
    return a.coeffs == b.coeffs;
}

// embedding into a cyclotomic field via the fixed square roots
inline Cyclotomic mq_to_cyclo(const MultiQuad& x) {
    Cyclotomic acc;
    for (const auto& [m, q] : x.coeffs) {
        Cyclotomic term{q};
        for (std::size_t i = 0; i < x.stars.size(); ++i)
            if (m >> i & 1u) term = term * Cyclotomic::sqrt_int(Int(x.stars[i]));
        acc = acc + term;
    }
    return acc;
}

// lattices inside the Q-span of {sqrt(D_v) : v in masks}; integer rows are
// coefficient vectors scaled by 2^m
struct MqSpace {
    std::vector<long> stars;
    std::vector<unsigned> masks;  // sorted element masks of the F_2 space V
    long dim = 0;                 // log2(masks.size())
    Int scale = 1;                // 2^dim

    std::size_t index_of(unsigned mask) const {
        auto it = std::lower_bound(masks.begin(), masks.end(), mask);
        if (it == masks.end() || *it != mask)
            throw std::invalid_argument("MqSpace: mask outside the space");
        return static_cast<std::size_t>(it - masks.begin());
    }
    Int star_product(unsigned mask) const {
        Int d = 1;
        for (std::size_t i = 0; i < stars.size(); ++i)
            if (mask >> i & 1u) d *= stars[i];
        return d;
    }
    std::vector<Int> row_of(const MultiQuad& x) const {
        std::vector<Int> row(masks.size(), 0);
        for (const auto& [m, q] : x.coeffs) {
            Rat s = q * Rat(scale);
            s.canonicalize();
            if (s.get_den() != 1)
                throw std::invalid_argument("MqSpace: coefficient denominator exceeds 2^dim");
            row[index_of(m)] = s.get_num();
        }
        return row;
    }
    MultiQuad value_of(const std::vector<Int>& row) const {
        std::map<unsigned, Rat> coeffs;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (row[i] != 0) coeffs[masks[i]] = Rat(row[i]) / Rat(scale);
        return mq_make(stars, std::move(coeffs));
    }
};

inline MqSpace mq_space(const std::vector<long>& stars,
                        const std::vector<unsigned>& basis_masks) {
    std::set<unsigned> v{0u};
    for (unsigned b : basis_masks) {
        std::set<unsigned> next = v;
        for (unsigned m : v) next.insert(m ^ b);
        v = std::move(next);
    }
    MqSpace sp;
    sp.stars = stars;
    sp.masks.assign(v.begin(), v.end());
    while ((1u << sp.dim) < sp.masks.size()) ++sp.dim;
    if ((1u << sp.dim) != sp.masks.size())
        throw std::logic_error("mq_space: element count not a power of two");
    for (long i = 0; i < sp.dim; ++i) sp.scale *= 2;
    return sp;
}

namespace detail {

inline long legendre_symbol(long a, long p) {
    a = mod_l(a, p);
    if (a == 0) return 0;
    long r = powmod_l(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// integral generators of the maximal order: for each closed support set S0
// (the union of supports of V0 = V cap F_2^{S0}) and each character psi of
// V0, the element 2^{-dim V0} sum_{v in V0} c_v psi(v) sqrt(D_v), where c_v
// corrects by the Moebius function and the quadratic character of the
// complementary conductor
inline std::vector<MultiQuad> mq_trace_generators(const MqSpace& sp) {
    std::size_t r = sp.stars.size();
    std::vector<MultiQuad> gens;
    for (unsigned s0 = 0; s0 < (1u << r); ++s0) {
        std::vector<unsigned> v0;
        unsigned support = 0;
        for (unsigned m : sp.masks)
            if ((m & ~s0) == 0) {
                v0.push_back(m);
                support |= m;
            }
        if (support != s0) continue;
        // F_2 echelon basis of V0 (pivot = highest set bit) so character
        // values come from true coordinates
        std::vector<unsigned> piv(r, 0);
        for (unsigned m : v0) {
            unsigned cur = m;
            for (std::size_t bit = r; bit-- > 0;) {
                if (!(cur >> bit & 1u)) continue;
                if (piv[bit]) cur ^= piv[bit];
                else { piv[bit] = cur; break; }
            }
        }
        std::vector<std::size_t> pivot_bits;
        for (std::size_t bit = 0; bit < r; ++bit)
            if (piv[bit]) pivot_bits.push_back(bit);
        long m0 = static_cast<long>(pivot_bits.size());
        Int denom = 1;
        for (long i = 0; i < m0; ++i) denom *= 2;
        // coordinates of each v in the echelon basis
        std::map<unsigned, unsigned> coords;
        for (unsigned v : v0) {
            unsigned cur = v, used = 0;
            for (std::size_t bit = r; bit-- > 0;) {
                if (!(cur >> bit & 1u)) continue;
                if (!piv[bit]) throw std::logic_error("mq trace: vector outside V0 span");
                cur ^= piv[bit];
                for (long b = 0; b < m0; ++b)
                    if (pivot_bits[static_cast<std::size_t>(b)] == bit) used |= 1u << b;
            }
            if (cur) throw std::logic_error("mq trace: coordinate residue");
            coords[v] = used;
        }
        // c_v: Moebius and quadratic-character twist of the complementary
        // conductor, times the Gauss sum cross sign for composite D_v
        std::map<unsigned, long> cv;
        for (unsigned v : v0) {
            unsigned rest = s0 & ~v;
            long mu = 1, chi = 1, t = 1;
            for (std::size_t i = 0; i < r; ++i)
                if (rest >> i & 1u) {
                    mu = -mu;
                    t *= std::abs(sp.stars[i]);
                }
            long t3 = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (v >> i & 1u) {
                    chi *= legendre_symbol(t, std::abs(sp.stars[i]));
                    if (std::abs(sp.stars[i]) % 4 == 3) ++t3;
                }
            long eps = (t3 * (t3 - 1) / 2) % 2 == 0 ? 1 : -1;
            cv[v] = mu * chi * eps;
        }
        for (unsigned psi = 0; psi < (1u << m0); ++psi) {
            std::map<unsigned, Rat> coeffs;
            for (unsigned v : v0) {
                long sign = __builtin_popcount(psi & coords[v]) % 2 == 0 ? 1 : -1;
                coeffs[v] = Rat(cv[v] * sign) / Rat(denom);
            }
            gens.push_back(mq_make(sp.stars, std::move(coeffs)));
        }
    }
    return gens;
}

}  // namespace detail

struct MqOrder {
    MqSpace space;
    Lattice lattice;  // rows scaled by space.scale
};

// conductor-discriminant certificate: the trace-form determinant of the
// lattice must equal the product of D_v over nonzero v
inline void mq_certify_maximal(const MqOrder& ord) {
    const MqSpace& sp = ord.space;
    std::size_t n = sp.masks.size();
    if (ord.lattice.rank() != n)
        throw std::logic_error("mq maximal order: rank deficient");
    // Gram of the sqrt basis is diagonal with entries 2^m D_v, so
    // disc = (det B)^2 prod_v 2^m D_v with B the rational coefficient matrix
    Rat detb = Rat(hnf_determinant(ord.lattice));
    for (std::size_t i = 0; i < n; ++i) detb /= Rat(sp.scale);
    Rat disc = detb * detb;
    for (unsigned m : sp.masks) disc *= Rat(sp.scale) * Rat(sp.star_product(m));
    disc.canonicalize();
    Int want = 1;
    for (unsigned m : sp.masks)
        if (m != 0) want *= sp.star_product(m);
    if (disc.get_den() != 1 || disc.get_num() != want)
        throw std::logic_error("mq maximal order: discriminant certificate failed");
}

inline MqOrder mq_maximal_order_space(const MqSpace& sp) {
    std::vector<std::vector<Int>> rows;
    for (const auto& g : detail::mq_trace_generators(sp)) rows.push_back(sp.row_of(g));
    detail::hnf_rows(rows, sp.masks.size());
    IntMat m(rows.size(), sp.masks.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < sp.masks.size(); ++j) m.at(i, j) = rows[i][j];
    MqOrder ord{sp, make_lattice(sp.masks.size(), m)};
    mq_certify_maximal(ord);
    return ord;
}

// full multiquadratic field over the given stars: the 2^r subset products
// of (1 + sqrt(p*))/2 span the maximal order
inline MqOrder mq_maximal_order(const std::vector<long>& prime_stars) {
    std::set<long> seen;
    std::vector<unsigned> basis_masks;
    for (std::size_t i = 0; i < prime_stars.size(); ++i) {
        long s = prime_stars[i];
        if (!is_prime_l(std::abs(s)) || std::abs(s) == 2 || !seen.insert(std::abs(s)).second)
            throw std::invalid_argument("mq_maximal_order: stars must be distinct odd primes");
        if (mod_l(s, 4) != 1)
            throw std::invalid_argument("mq_maximal_order: star not 1 mod 4");
        basis_masks.push_back(1u << i);
    }
    MqSpace sp = mq_space(prime_stars, basis_masks);
    std::vector<std::vector<Int>> rows;
    for (unsigned s = 0; s < (1u << prime_stars.size()); ++s) {
        MultiQuad prod = mq_rational(prime_stars, 1);
        for (std::size_t i = 0; i < prime_stars.size(); ++i)
            if (s >> i & 1u)
                prod = mq_mul(prod, mq_make(prime_stars,
                                            {{0u, Rat(1, 2)}, {1u << i, Rat(1, 2)}}));
        rows.push_back(sp.row_of(prod));
    }
    detail::hnf_rows(rows, sp.masks.size());
    IntMat m(rows.size(), sp.masks.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < sp.masks.size(); ++j) m.at(i, j) = rows[i][j];
    MqOrder ord{sp, make_lattice(sp.masks.size(), m)};
    mq_certify_maximal(ord);
    return ord;
}

// ring closure of generators (with 1) inside a certified maximal order
inline Lattice mq_ring_closure(const MqOrder& ord, const std::vector<MultiQuad>& gens,
                               long* rounds_out = nullptr) {
    const MqSpace& sp = ord.space;
    std::size_t n = sp.masks.size();
    std::vector<std::vector<Int>> rows{sp.row_of(mq_rational(sp.stars, 1))};
    for (const auto& g : gens) rows.push_back(sp.row_of(g));
    detail::hnf_rows(rows, n);
    long rounds = 0;
    while (true) {
        ++rounds;
        std::vector<std::vector<Int>> next = rows;
        for (const auto& row : rows) {
            MultiQuad x = sp.value_of(row);
            for (const auto& g : gens) next.push_back(sp.row_of(mq_mul(x, g)));
        }
        detail::hnf_rows(next, n);
        if (next == rows) break;
        rows = std::move(next);
    }
    if (rounds_out) *rounds_out = rounds;
    IntMat m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return make_lattice(n, m);
}

// elementary divisors of Z_K / Z[A_n] for the character field K of the
// alternating group, through the partition d-values
inline std::vector<Int> an_quotient(long n) {
    SquareClassSpace scs = an_field_basis(n);
    std::vector<unsigned> basis_masks;
    for (const auto& row : scs.basis) {
        unsigned m = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i]) m |= 1u << i;
        basis_masks.push_back(m);
    }
    MqSpace sp = mq_space(scs.prime_stars, basis_masks);
    MqOrder zk = mq_maximal_order_space(sp);

    std::vector<MultiQuad> gens;
    for (const auto& pd : an_partition_data(n)) {
        if (pd.d_kernel == 1) continue;
        unsigned mask = 0;
        for (std::size_t i = 0; i < sp.stars.size(); ++i)
            if (std::abs(pd.d_kernel) % std::abs(sp.stars[i]) == 0) mask |= 1u << i;
        // (1 + sqrt(d))/2 = (1 + e sqrt(d'))/2
        gens.push_back(mq_make(sp.stars, {{0u, Rat(1, 2)}, {mask, Rat(pd.e, 2)}}));
    }
    Lattice zg = mq_ring_closure(zk, gens);
    return quotient_invariants(zg, zk.lattice);
}

}  // namespace charlat
