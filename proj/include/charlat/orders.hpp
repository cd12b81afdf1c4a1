#pragma once

// Orders generated by character values: ring closures in Leopoldt
// coordinates, their quotients against the maximal order, and the
// divisibility checkers built on them.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "charlat/fields.hpp"
#include "charlat/table.hpp"
#include "charlat/zlat.hpp"

namespace charlat {

// coordinates of an algebraic integer of K against the Leopoldt basis
inline std::vector<Int> order_coordinates(const IntegralBasis& zk, const Cyclotomic& x) {
    if (!x.is_integral())
        throw std::invalid_argument("order_coordinates: element not integral");
    if (zk.field.conductor % x.conductor() != 0)
        throw std::invalid_argument("order_coordinates: element outside the field");
    auto exps = zumbroich_exponents(zk.field.conductor);
    auto row = zumbroich_coords(x, zk.field.conductor, exps);
    auto c = hnf_coordinates(zk.coordinates, row);
    if (!c) throw std::invalid_argument("order_coordinates: element outside Z_K");
    return *c;
}

inline Cyclotomic order_element(const IntegralBasis& zk, const std::vector<Int>& coords) {
    Cyclotomic acc;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) acc = acc + Cyclotomic(Rat(coords[i])) * zk.elements[i];
    return acc;
}

// smallest ring containing 1 and the generators, as a sublattice of Z_K;
// multiplies the current basis by every generator until the HNF stabilizes
inline Lattice ring_closure(const IntegralBasis& zk, const std::vector<Cyclotomic>& gens,
                            long* rounds_out = nullptr) {
    std::size_t d = zk.elements.size();
    std::vector<Cyclotomic> uniq;
    {
        std::set<std::string> seen;
        for (const auto& g : gens)
            if (seen.insert(g.to_string()).second && !g.is_rational()) uniq.push_back(g);
    }
    std::vector<std::vector<Int>> rows;
    rows.push_back(order_coordinates(zk, Cyclotomic(Rat(1))));
    for (const auto& g : uniq) rows.push_back(order_coordinates(zk, g));
    detail::hnf_rows(rows, d);
    long rounds = 0;
    while (true) {
        ++rounds;
        std::vector<std::vector<Int>> next = rows;
        for (const auto& row : rows) {
            Cyclotomic x = order_element(zk, row);
            for (const auto& g : uniq) next.push_back(order_coordinates(zk, x * g));
        }
        detail::hnf_rows(next, d);
        if (next == rows) break;
        rows = std::move(next);
    }
    if (rounds_out) *rounds_out = rounds;
    IntMat m(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    return make_lattice(d, m);
}

// additive Z-span of the values (always contains 1 through the trivial row)
inline Lattice additive_span(const IntegralBasis& zk, const std::vector<Cyclotomic>& values) {
    std::size_t d = zk.elements.size();
    std::vector<std::vector<Int>> rows;
    rows.push_back(order_coordinates(zk, Cyclotomic(Rat(1))));
    for (const auto& v : values) rows.push_back(order_coordinates(zk, v));
    detail::hnf_rows(rows, d);
    IntMat m(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    return make_lattice(d, m);
}

inline Lattice full_order_lattice(const IntegralBasis& zk) {
    std::size_t d = zk.elements.size();
    IntMat id(d, d);
    for (std::size_t i = 0; i < d; ++i) id.at(i, i) = 1;
    return make_lattice(d, id);
}

struct OrderReport {
    AbelianField field;
    long zk_rank = 0;
    Int order_index = 1;              // [Z_K : Z[G]]
    std::vector<Int> divisors;        // nontrivial elementary divisors
    Int exponent = 1;                 // largest divisor, 1 when trivial
    long closure_rounds = 0;
    bool closure_beyond_span = false; // ring closure strictly above additive span
};

inline OrderReport order_report_for_values(const std::vector<Cyclotomic>& values) {
    AbelianField k = field_of_values(values);
    IntegralBasis zk = leopoldt_basis(k);
    OrderReport r;
    r.field = k;
    r.zk_rank = k.degree();
    Lattice zg = ring_closure(zk, values, &r.closure_rounds);
    Lattice span = additive_span(zk, values);
    r.closure_beyond_span = !(zg.basis == span.basis);
    Lattice full = full_order_lattice(zk);
    auto divs = quotient_divisors_full(zg, full);
    for (const Int& d : divs) {
        r.order_index *= d;
        if (d > 1) r.divisors.push_back(d);
    }
    if (!r.divisors.empty()) r.exponent = r.divisors.back();
    return r;
}

// Z[G]: the ring generated by every character value of the table
inline OrderReport group_order_report(const CharacterTable& t) {
    std::vector<Cyclotomic> values;
    for (const auto& row : t.values)
        for (const auto& v : row) values.push_back(v);
    return order_report_for_values(values);
}

// Z[chi]: the ring generated by one row
inline OrderReport row_order_report(const CharacterTable& t, std::size_t i) {
    return order_report_for_values(t.values.at(i));
}

// Z[g]: the additive span of the column of g (a ring because it is spanned
// by restrictions of characters of the cyclic group <g>)
struct ColumnOrder {
    AbelianField field;
    IntegralBasis zk;
    Lattice lattice;
    std::vector<Int> divisors;
};

inline ColumnOrder column_order(const CharacterTable& t, std::size_t j) {
    std::vector<Cyclotomic> col;
    for (const auto& row : t.values) col.push_back(row.at(j));
    ColumnOrder c;
    c.field = field_of_values(col);
    c.zk = leopoldt_basis(c.field);
    c.lattice = additive_span(c.zk, col);
    c.divisors = quotient_invariants(c.lattice, full_order_lattice(c.zk));
    return c;
}

// Z_{Q(x)} / Z[x] for a single algebraic integer
inline std::vector<Int> element_order_quotient(const Cyclotomic& x) {
    OrderReport r = order_report_for_values({x});
    return r.divisors;
}

// every prime of [Z_K : Z[G]] divides |G|; returns a violating prime if any
inline std::optional<Int> check_theorem_A(const OrderReport& r, const Int& group_order) {
    Int idx = r.order_index;
    if (idx == 1) return std::nullopt;
    for (Int p = 2; p * p <= idx; ++p) {
        if (idx % p != 0) continue;
        while (idx % p == 0) idx /= p;
        if (group_order % p != 0) return p;
    }
    if (idx > 1 && group_order % idx != 0) return idx;
    return std::nullopt;
}

// the quotient exponent divides |G| and is strictly smaller
inline bool check_conjecture_C(const OrderReport& r, const Int& group_order) {
    return group_order % r.exponent == 0 && r.exponent != group_order;
}

// [N_G(<g>) : C_G(g)] * Z_{Q(g)} is contained in Z[g]
inline bool check_qg_bound(const ColumnOrder& c, const Int& norm_cent_index) {
    std::size_t d = c.zk.elements.size();
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> v(d, 0);
        v[i] = norm_cent_index;
        if (!contains(c.lattice, v)) return false;
    }
    return true;
}

// smallest e >= 0 with |G|^e * Z_K inside Z[G]
inline long check_cor_exponent(const OrderReport& r, const Int& group_order) {
    if (group_order < 2) return r.exponent == 1 ? 0 : -1;
    long e = 0;
    Int pw = 1;
    // |G|^e Z_K in Z[G] iff every divisor, hence the exponent, divides |G|^e
    while (pw % r.exponent != 0) {
        ++e;
        pw *= group_order;
        if (e > 64) return -1;
    }
    return e;
}

}  // namespace charlat
