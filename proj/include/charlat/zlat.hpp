#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms over
// arbitrary-precision integers, lattices in Z^r, membership, index and
// quotient invariants.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charlat {

using Int = mpz_class;
using Rat = mpq_class;

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        IntMat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("IntMat: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const {
        return std::vector<Int>(e_.begin() + static_cast<long>(i * cols_),
                                e_.begin() + static_cast<long>((i + 1) * cols_));
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dim mismatch");
        IntMat m(rows_, o.cols_);
        Int t;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    t = a * o.at(k, j);
                    m.at(i, j) += t;
                }
            }
        return m;
    }

    IntMat transpose() const {
        IntMat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    void append_row(const std::vector<Int>& r) {
        if (cols_ == 0 && rows_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("IntMat: row width");
        e_.insert(e_.end(), r.begin(), r.end());
        ++rows_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

namespace detail {

// In-place row HNF of `rows` (each width `cols`). Canonical: upper
// triangular via pivot columns, positive pivots, entries above a pivot
// reduced into [0, pivot). Zero rows dropped.
inline void hnf_rows(std::vector<std::vector<Int>>& rows, std::size_t cols) {
    std::size_t top = 0;
    Int q, t;
    for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
        // Euclid on all rows with a nonzero entry in this column.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
                    best = i;
            }
            if (best == rows.size()) break;  // column is zero below top
            std::swap(rows[top], rows[best]);
            bool cleared = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                // round-to-nearest quotient keeps entries small
                q = rows[i][col] / rows[top][col];
                t = rows[i][col] - q * rows[top][col];
                if (cmp(abs(t) * 2, abs(rows[top][col])) > 0)
                    q += (t > 0) == (rows[top][col] > 0) ? 1 : -1;
                if (q != 0)
                    for (std::size_t j = col; j < cols; ++j)
                        rows[i][j] -= q * rows[top][j];
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0)
            for (std::size_t j = col; j < cols; ++j) rows[top][j] = -rows[top][j];
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < top; ++i) {
            q = rows[i][col];
            mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), rows[top][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = col; j < cols; ++j)
                    rows[i][j] -= q * rows[top][j];
        }
        ++top;
    }
    rows.resize(top);
}

}  // namespace detail

inline IntMat hnf(const IntMat& a) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    detail::hnf_rows(rows, a.cols());
    IntMat m(rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

struct SnfResult {
    IntMat d;                  // diagonal, d = u * a * v
    IntMat u, v;               // unimodular
    std::vector<Int> divisors; // diagonal entries, d_1 | d_2 | ...
};

// Smith normal form with transforms. Divisor chain d_1 | d_2 | ...,
// nonnegative, zeros last.
inline SnfResult snf(const IntMat& a) {
    std::size_t r = a.rows(), c = a.cols();
    IntMat d = a;
    IntMat u = IntMat::identity(r);
    IntMat v = IntMat::identity(c);
    Int q;

    auto row_op = [&](std::size_t i, std::size_t k, const Int& m) {
        // row_i -= m * row_k
        for (std::size_t j = 0; j < c; ++j) d.at(i, j) -= m * d.at(k, j);
        for (std::size_t j = 0; j < r; ++j) u.at(i, j) -= m * u.at(k, j);
    };
    auto col_op = [&](std::size_t i, std::size_t k, const Int& m) {
        // col_i -= m * col_k
        for (std::size_t j = 0; j < r; ++j) d.at(j, i) -= m * d.at(j, k);
        for (std::size_t j = 0; j < c; ++j) v.at(j, i) -= m * v.at(j, k);
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < c; ++j) std::swap(d.at(i, j), d.at(k, j));
        for (std::size_t j = 0; j < r; ++j) std::swap(u.at(i, j), u.at(k, j));
    };
    auto col_swap = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < r; ++j) std::swap(d.at(j, i), d.at(j, k));
        for (std::size_t j = 0; j < c; ++j) std::swap(v.at(j, i), v.at(j, k));
    };

    std::size_t t = 0;
    while (t < r && t < c) {
        // find a smallest nonzero entry in the trailing submatrix
        std::size_t pi = r, pj = c;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (d.at(i, j) != 0 &&
                    (pi == r || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == r) break;  // all zero
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (d.at(i, t) == 0) continue;
            q = d.at(i, t) / d.at(t, t);
            if (q != 0) row_op(i, t, q);
            if (d.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
            if (d.at(t, j) == 0) continue;
            q = d.at(t, j) / d.at(t, t);
            if (q != 0) col_op(j, t, q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // entries shrank; repeat with new pivot

        // pivot must divide every entry of the remaining submatrix
        bool divides = true;
        for (std::size_t i = t + 1; i < r && divides; ++i)
            for (std::size_t j = t + 1; j < c && divides; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_op(t, i, Int(-1));  // fold offending row into pivot row
                    divides = false;
                }
        if (!divides) continue;

        if (d.at(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) d.at(t, j) = -d.at(t, j);
            for (std::size_t j = 0; j < r; ++j) u.at(t, j) = -u.at(t, j);
        }
        ++t;
    }

    SnfResult res;
    res.divisors.reserve(std::min(r, c));
    for (std::size_t i = 0; i < std::min(r, c); ++i) res.divisors.push_back(d.at(i, i));
    res.d = std::move(d);
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

// A finite-rank subgroup of Z^r, basis rows kept in canonical HNF.
struct Lattice {
    std::size_t ambient = 0;
    IntMat basis;  // HNF, zero rows dropped

    std::size_t rank() const { return basis.rows(); }
};

inline Lattice make_lattice(std::size_t ambient, const IntMat& rows) {
    if (rows.cols() != ambient && rows.rows() > 0)
        throw std::invalid_argument("make_lattice: ambient mismatch");
    Lattice l;
    l.ambient = ambient;
    l.basis = hnf(rows);
    return l;
}

inline Lattice lattice_join(const Lattice& a, const Lattice& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("lattice_join: ambient mismatch");
    IntMat stacked(0, a.ambient);
    for (std::size_t i = 0; i < a.basis.rows(); ++i) stacked.append_row(a.basis.row(i));
    for (std::size_t i = 0; i < b.basis.rows(); ++i) stacked.append_row(b.basis.row(i));
    return make_lattice(a.ambient, stacked);
}

// Integer coordinates of v against an HNF row basis, or nullopt if v is
// not in the Z-span.
inline std::optional<std::vector<Int>> hnf_coordinates(const IntMat& basis,
                                                       std::vector<Int> v) {
    std::size_t rk = basis.rows(), n = basis.cols();
    if (v.size() != n) throw std::invalid_argument("hnf_coordinates: width");
    std::vector<Int> coords(rk, 0);
    std::size_t col = 0;
    for (std::size_t i = 0; i < rk; ++i) {
        while (col < n && basis.at(i, col) == 0) ++col;
        if (col == n) break;
        if (v[col] != 0) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[col].get_mpz_t(),
                        basis.at(i, col).get_mpz_t());
            if (rem != 0) return std::nullopt;
            coords[i] = q;
            for (std::size_t j = col; j < n; ++j) v[j] -= q * basis.at(i, j);
        }
    }
    for (const Int& x : v)
        if (x != 0) return std::nullopt;
    return coords;
}

inline bool contains(const Lattice& l, const std::vector<Int>& v) {
    return hnf_coordinates(l.basis, v).has_value();
}

struct ContainmentError : std::runtime_error {
    std::vector<Int> witness;
    explicit ContainmentError(std::vector<Int> w)
        : std::runtime_error("lattice containment violated"), witness(std::move(w)) {}
};

struct InfiniteQuotientError : std::runtime_error {
    InfiniteQuotientError() : std::runtime_error("quotient has an infinite part") {}
};

// All elementary divisors (including trivial ones) of sup/sub.
inline std::vector<Int> quotient_divisors_full(const Lattice& sub, const Lattice& sup) {
    if (sub.ambient != sup.ambient)
        throw std::invalid_argument("quotient: ambient mismatch");
    IntMat x(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = hnf_coordinates(sup.basis, sub.basis.row(i));
        if (!c) throw ContainmentError(sub.basis.row(i));
        for (std::size_t j = 0; j < sup.rank(); ++j) x.at(i, j) = (*c)[j];
    }
    if (sub.rank() != sup.rank()) throw InfiniteQuotientError();
    return snf(x).divisors;
}

// Nontrivial elementary divisors (each > 1) of sup/sub.
inline std::vector<Int> quotient_invariants(const Lattice& sub, const Lattice& sup) {
    std::vector<Int> out;
    for (const Int& d : quotient_divisors_full(sub, sup))
        if (d > 1) out.push_back(d);
    return out;
}

inline Int lattice_index(const Lattice& sub, const Lattice& sup) {
    Int idx = 1;
    for (const Int& d : quotient_divisors_full(sub, sup)) {
        if (d == 0) throw InfiniteQuotientError();
        idx *= d;
    }
    return idx;
}

// Determinant of the HNF basis (product of pivots); the index of the
// lattice in its rational span's integer saturation when square.
inline Int hnf_determinant(const Lattice& l) {
    if (l.rank() != l.ambient) throw InfiniteQuotientError();
    Int det = 1;
    for (std::size_t i = 0; i < l.rank(); ++i) det *= l.basis.at(i, i);
    return det;
}

// Signed determinant of a square matrix, Bareiss fraction-free elimination.
inline Int determinant(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) m.push_back(a.row(i));
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace charlat
