#pragma once

// Character tables of permutation groups: diagonalize the class algebra
// over a prime field and lift eigenvector data to exact cyclotomic values.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "charlat/perm.hpp"
#include "charlat/table.hpp"

namespace charlat {

struct DixonError : std::runtime_error {
    explicit DixonError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// smallest prime p = 1 mod e with p > 2 sqrt(order) and p not dividing order
inline long dixon_prime(long e, long order, long skip = 0) {
    long floor_2rt = 1;
    while (floor_2rt * floor_2rt <= 4 * order) ++floor_2rt;
    long skipped = 0;
    for (long p = e + 1;; p += e) {
        if (p <= floor_2rt - 1) continue;
        if (!is_prime_l(p) || order % p == 0) continue;
        if (skipped++ < skip) continue;
        return p;
    }
}

// fixed primitive e-th root of unity in F_p, from the smallest suitable base
inline long primitive_root_mod(long e, long p) {
    if (e == 1) return 1;
    auto primes = factorize_l(e);
    for (long h = 2; h < p; ++h) {
        long w = powmod_l(h, (p - 1) / e, p);
        bool primitive = true;
        for (const auto& [q, a] : primes)
            if (powmod_l(w, e / q, p) == 1) { primitive = false; break; }
        if (primitive) return w;
    }
    throw DixonError("no primitive root found");
}

using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;

// reduced row echelon form in place; returns pivot columns
inline std::vector<long> rref_mod(FpMat& m, long p) {
    std::vector<long> pivots;
    std::size_t r = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        long inv = invmod_l(m[r][c], p);
        for (auto& v : m[r]) v = mulmod_l(v, inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            long f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = mod_l(m[i][j] - mulmod_l(f, m[r][j], p), p);
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

inline long det_mod(FpMat m, long p) {
    long det = 1;
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = mod_l(-det, p);
        }
        det = mulmod_l(det, m[c][c], p);
        long inv = invmod_l(m[c][c], p);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            long f = mulmod_l(m[i][c], inv, p);
            for (std::size_t j = c; j < n; ++j)
                m[i][j] = mod_l(m[i][j] - mulmod_l(f, m[c][j], p), p);
        }
    }
    return det;
}

// monic characteristic polynomial coefficients (low to high) by evaluating
// det(xI - B) at d+1 points and interpolating
inline FpVec charpoly_mod(const FpMat& b, long p) {
    std::size_t d = b.size();
    FpVec xs(d + 1), ys(d + 1);
    for (std::size_t t = 0; t <= d; ++t) {
        xs[t] = static_cast<long>(t % p);
        FpMat m(d, FpVec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m[i][j] = mod_l((i == j ? xs[t] : 0) - b[i][j], p);
        ys[t] = det_mod(std::move(m), p);
    }
    // Lagrange interpolation, accumulated coefficient-wise
    FpVec coef(d + 1, 0);
    for (std::size_t t = 0; t <= d; ++t) {
        FpVec num{1};
        long den = 1;
        for (std::size_t s = 0; s <= d; ++s) {
            if (s == t) continue;
            FpVec nxt(num.size() + 1, 0);
            for (std::size_t i = 0; i < num.size(); ++i) {
                nxt[i + 1] = mod_l(nxt[i + 1] + num[i], p);
                nxt[i] = mod_l(nxt[i] - mulmod_l(num[i], xs[s], p), p);
            }
            num = std::move(nxt);
            den = mulmod_l(den, mod_l(xs[t] - xs[s], p), p);
        }
        long f = mulmod_l(ys[t], invmod_l(den, p), p);
        for (std::size_t i = 0; i < num.size(); ++i)
            coef[i] = mod_l(coef[i] + mulmod_l(f, num[i], p), p);
    }
    return coef;
}

inline long poly_eval_mod(const FpVec& coef, long x, long p) {
    long acc = 0;
    for (std::size_t i = coef.size(); i-- > 0;)
        acc = mod_l(mulmod_l(acc, x, p) + coef[i], p);
    return acc;
}

}  // namespace detail

inline CharacterTable dixon_table(const PermGroup& g) {
    ClassPartition part = conjugacy_class_partition(g);
    const ClassData& cd = part.data;
    std::size_t k = cd.count();
    Int order_big = cd.group_order();
    long n = order_big.get_si();
    long e = cd.exponent;

    // class algebra constants: a[i][j][c] = #{x in C_i : x^{-1} z_c in C_j}
    std::vector<detail::FpMat> a(k, detail::FpMat(k, detail::FpVec(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c)
            for (const auto& x : part.members[i])
                ++a[i][part.class_of.at(x.inverse() * cd.reps[c])][c];

    for (long attempt = 0; attempt < 5; ++attempt) {
        long p = detail::dixon_prime(e, n, attempt);
        long w = detail::primitive_root_mod(e, p);

        try {
        // simultaneous eigenspaces of the class matrices A_i u = u_i u
        std::vector<detail::FpMat> spaces;
        {
            detail::FpMat full(k, detail::FpVec(k, 0));
            for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
            spaces.push_back(std::move(full));
        }
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<detail::FpMat> next;
            for (auto& s : spaces) {
                std::size_t d = s.size();
                if (d == 1) { next.push_back(std::move(s)); continue; }
                std::vector<long> pivots;
                {
                    detail::FpMat copy = s;
                    pivots = detail::rref_mod(copy, p);
                    s = std::move(copy);
                }
                // restricted operator in RREF coordinates
                detail::FpMat imgs(d, detail::FpVec(k, 0));
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t row = 0; row < k; ++row) {
                        long acc = 0;
                        for (std::size_t col = 0; col < k; ++col)
                            acc = mod_l(acc + mulmod_l(a[i][row][col] % p, s[r][col], p), p);
                        imgs[r][row] = acc;
                    }
                detail::FpMat b(d, detail::FpVec(d));
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c2 = 0; c2 < d; ++c2)
                        b[r][c2] = imgs[r][pivots[c2]];
                auto coef = detail::charpoly_mod([&] {
                    // transpose: b maps coordinates of s_r to coordinates of A s_r
                    detail::FpMat bt(d, detail::FpVec(d));
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t c2 = 0; c2 < d; ++c2) bt[r][c2] = b[c2][r];
                    return bt;
                }(), p);
                std::size_t covered = 0;
                for (long lam = 0; lam < p; ++lam) {
                    if (detail::poly_eval_mod(coef, lam, p) != 0) continue;
                    // kernel of (B - lam I) in subspace coordinates
                    detail::FpMat m(d, detail::FpVec(d));
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t c2 = 0; c2 < d; ++c2)
                            m[r][c2] = mod_l(b[c2][r] - (r == c2 ? lam : 0), p);
                    detail::FpMat mm = m;
                    auto piv = detail::rref_mod(mm, p);
                    std::vector<bool> is_piv(d, false);
                    for (long pc : piv) is_piv[pc] = true;
                    detail::FpMat eig;
                    for (std::size_t free = 0; free < d; ++free) {
                        if (is_piv[free]) continue;
                        detail::FpVec coord(d, 0);
                        coord[free] = 1;
                        for (std::size_t r = 0; r < piv.size(); ++r)
                            coord[piv[r]] = mod_l(-mm[r][free], p);
                        detail::FpVec vec(k, 0);
                        for (std::size_t c2 = 0; c2 < d; ++c2)
                            for (std::size_t col = 0; col < k; ++col)
                                vec[col] = mod_l(vec[col] + mulmod_l(coord[c2], s[c2][col], p), p);
                        eig.push_back(std::move(vec));
                    }
                    if (!eig.empty()) {
                        detail::rref_mod(eig, p);
                        covered += eig.size();
                        next.push_back(std::move(eig));
                    }
                }
                // all eigenvalues lie in F_p when p = 1 mod exp(G)
                if (covered != d) throw DixonError("class matrix failed to split over F_p");
            }
            spaces = std::move(next);
        }
        if (spaces.size() != k) continue;

        {
            std::vector<std::vector<Cyclotomic>> rows;
            for (const auto& s : spaces) {
                detail::FpVec u = s[0];
                if (u[0] == 0) throw DixonError("eigenvector with zero identity coordinate");
                long norm = invmod_l(u[0], p);
                for (auto& v : u) v = mulmod_l(v, norm, p);
                // degree from self-orthogonality
                long ssum = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    long ci = invmod_l(cd.sizes[c].get_si() % p, p);
                    ssum = mod_l(ssum + mulmod_l(mulmod_l(u[c], u[cd.inverse_class(c)], p), ci, p), p);
                }
                long chi1sq = mulmod_l(n % p, invmod_l(ssum, p), p);
                long deg = 0;
                for (long d2 = 1; d2 * d2 <= n; ++d2)
                    if (mod_l(d2 * d2, p) == chi1sq) { deg = d2; break; }
                if (deg == 0) throw DixonError("no degree matches the orthogonality residue");
                detail::FpVec chi(k);
                for (std::size_t c = 0; c < k; ++c)
                    chi[c] = mulmod_l(mulmod_l(deg, u[c], p),
                                      invmod_l(cd.sizes[c].get_si() % p, p), p);
                // lift each column through root-of-unity multiplicities
                std::vector<Cyclotomic> row(k);
                for (std::size_t c = 0; c < k; ++c) {
                    long o = cd.element_orders[c];
                    long wc = powmod_l(w, e / o, p);
                    long oinv = invmod_l(o % p, p);
                    std::map<long, Rat> coeffs;
                    for (long j = 0; j < o; ++j) {
                        long acc = 0;
                        for (long t = 0; t < o; ++t) {
                            long cls = cd.power_maps[t % e][c];
                            acc = mod_l(acc + mulmod_l(chi[cls],
                                          powmod_l(invmod_l(wc, p), mod_l(j * t, o), p), p), p);
                        }
                        long m = mulmod_l(acc, oinv, p);
                        if (m != 0) coeffs[j] += Rat(m);
                    }
                    row[c] = Cyclotomic::canonical(o, std::move(coeffs));
                }
                rows.push_back(std::move(row));
            }
            CharacterTable t;
            t.group_order = order_big;
            t.classes = cd;
            t.values = std::move(rows);
            CharacterTable canon = canonical_table(t);
            validate_table(canon);
            return canon;
        }
        } catch (const DixonError&) {
            continue;
        } catch (const TableValidationError&) {
            continue;
        }
    }
    throw DixonError("no prime produced a valid table");
}

}  // namespace charlat
