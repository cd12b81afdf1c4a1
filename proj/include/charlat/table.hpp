#pragma once

// Character tables with exact cyclotomic values and their defining
// invariants: degree sum, row and column orthogonality, integrality.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "charlat/cyclo.hpp"
#include "charlat/perm.hpp"

namespace charlat {

struct CharacterTable {
    Int group_order;
    ClassData classes;
    std::vector<std::vector<Cyclotomic>> values;  // rows = characters

    std::size_t rows() const { return values.size(); }
    std::size_t cols() const { return classes.count(); }

    std::vector<Int> degrees() const {
        std::vector<Int> d;
        for (const auto& row : values) {
            if (!row[0].is_rational() || row[0].rational_value().get_den() != 1)
                throw std::logic_error("CharacterTable: non-integer degree");
            d.push_back(row[0].rational_value().get_num());
        }
        return d;
    }
};

struct TableValidationError : std::runtime_error {
    explicit TableValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline Cyclotomic complex_conjugate(const Cyclotomic& x) {
    return x.conjugate();
}

// throws TableValidationError naming the first violated invariant
inline void validate_table(const CharacterTable& t) {
    std::size_t k = t.cols();
    if (t.rows() != k)
        throw TableValidationError("table is not square");
    Int size_sum = 0;
    for (const auto& s : t.classes.sizes) size_sum += s;
    if (size_sum != t.group_order)
        throw TableValidationError("class sizes do not sum to the group order");
    Int sq = 0;
    for (const auto& d : t.degrees()) sq += d * d;
    if (sq != t.group_order)
        throw TableValidationError("degree squares do not sum to the group order");
    for (const auto& row : t.values)
        for (const auto& v : row) {
            if (!v.is_integral())
                throw TableValidationError("non-integral character value");
            if (t.classes.exponent % v.conductor() != 0)
                throw TableValidationError("value conductor does not divide the exponent");
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyclotomic acc;
            for (std::size_t j = 0; j < k; ++j)
                acc = acc + Cyclotomic(Rat(t.classes.sizes[j])) * t.values[a][j] *
                          complex_conjugate(t.values[b][j]);
            Cyclotomic want = a == b ? Cyclotomic(Rat(t.group_order)) : Cyclotomic();
            if (!(acc == want))
                throw TableValidationError("row orthogonality fails");
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyclotomic acc;
            for (std::size_t i = 0; i < k; ++i)
                acc = acc + t.values[i][a] * complex_conjugate(t.values[i][b]);
            Cyclotomic want = a == b
                ? Cyclotomic(Rat(t.group_order) / Rat(t.classes.sizes[a]))
                : Cyclotomic();
            if (!(acc == want))
                throw TableValidationError("column orthogonality fails");
        }
}

inline bool table_valid(const CharacterTable& t) {
    try {
        validate_table(t);
        return true;
    } catch (const TableValidationError&) {
        return false;
    } catch (const std::logic_error&) {
        return false;
    }
}

// classes sorted by (element order, class size, original index); rows by
// (degree, lexicographic value strings under the new class order)
inline CharacterTable canonical_table(const CharacterTable& t) {
    std::size_t k = t.cols();
    std::vector<std::size_t> cperm(k);
    for (std::size_t i = 0; i < k; ++i) cperm[i] = i;
    std::sort(cperm.begin(), cperm.end(), [&](std::size_t a, std::size_t b) {
        if (t.classes.element_orders[a] != t.classes.element_orders[b])
            return t.classes.element_orders[a] < t.classes.element_orders[b];
        if (t.classes.sizes[a] != t.classes.sizes[b])
            return t.classes.sizes[a] < t.classes.sizes[b];
        return a < b;
    });
    std::vector<std::size_t> cinv(k);
    for (std::size_t i = 0; i < k; ++i) cinv[cperm[i]] = i;

    CharacterTable out;
    out.group_order = t.group_order;
    ClassData& d = out.classes;
    d.exponent = t.classes.exponent;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t s = cperm[i];
        if (!t.classes.reps.empty()) d.reps.push_back(t.classes.reps[s]);
        d.sizes.push_back(t.classes.sizes[s]);
        d.element_orders.push_back(t.classes.element_orders[s]);
    }
    d.power_maps.resize(t.classes.power_maps.size());
    for (std::size_t e = 0; e < d.power_maps.size(); ++e) {
        d.power_maps[e].resize(k);
        for (std::size_t i = 0; i < k; ++i)
            d.power_maps[e][i] = static_cast<long>(cinv[t.classes.power_maps[e][cperm[i]]]);
    }

    struct Row {
        std::vector<Cyclotomic> vals;
        std::vector<std::string> key;
    };
    std::vector<Row> rows;
    for (const auto& row : t.values) {
        Row r;
        for (std::size_t i = 0; i < k; ++i) r.vals.push_back(row[cperm[i]]);
        for (const auto& v : r.vals) r.key.push_back(v.to_string());
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.key < b.key;
    });
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        // degree column is class 0 after sorting (identity has order 1)
        Rat da = a.vals[0].rational_value(), db = b.vals[0].rational_value();
        return da < db;
    });
    for (auto& r : rows) out.values.push_back(std::move(r.vals));
    return out;
}

// True when some class relabeling identifies the tables: the bijection must
// respect element orders, class sizes, and power maps, and make the row
// multisets coincide. Canonical ordering cannot settle ties between Galois
// conjugate classes across different constructions, so this searches.
inline bool tables_equivalent(const CharacterTable& a, const CharacterTable& b) {
    std::size_t k = a.cols();
    if (a.group_order != b.group_order || b.cols() != k || a.rows() != b.rows())
        return false;
    if (a.classes.exponent != b.classes.exponent) return false;
    auto colkey = [](const CharacterTable& t, std::size_t c) {
        std::vector<std::string> vals;
        for (const auto& row : t.values) vals.push_back(row[c].to_string());
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    std::vector<std::vector<std::string>> akey(k), bkey(k);
    for (std::size_t c = 0; c < k; ++c) {
        akey[c] = colkey(a, c);
        bkey[c] = colkey(b, c);
    }
    std::vector<long> img(k, -1);
    std::vector<bool> used(k, false);
    long nodes = 0;
    auto rows_match = [&]() {
        std::vector<std::vector<std::string>> ra, rb;
        for (const auto& row : a.values) {
            std::vector<std::string> s(k);
            for (std::size_t c = 0; c < k; ++c)
                s[static_cast<std::size_t>(img[c])] = row[c].to_string();
            ra.push_back(std::move(s));
        }
        for (const auto& row : b.values) {
            std::vector<std::string> s;
            for (std::size_t c = 0; c < k; ++c) s.push_back(row[c].to_string());
            rb.push_back(std::move(s));
        }
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        return ra == rb;
    };
    auto dfs = [&](auto&& self, std::size_t pos) -> bool {
        if (++nodes > 200000)
            throw std::runtime_error("tables_equivalent: search budget exceeded");
        if (pos == k) return rows_match();
        for (std::size_t cand = 0; cand < k; ++cand) {
            if (used[cand]) continue;
            if (a.classes.element_orders[pos] != b.classes.element_orders[cand]) continue;
            if (a.classes.sizes[pos] != b.classes.sizes[cand]) continue;
            if (akey[pos] != bkey[cand]) continue;
            img[pos] = static_cast<long>(cand);
            bool ok = true;
            for (std::size_t t = 0; t < a.classes.power_maps.size() && ok; ++t)
                for (std::size_t c = 0; c <= pos && ok; ++c) {
                    long q = a.classes.power_maps[t][c];
                    if (img[static_cast<std::size_t>(q)] < 0) continue;
                    if (b.classes.power_maps[t][static_cast<std::size_t>(img[c])] !=
                        img[static_cast<std::size_t>(q)])
                        ok = false;
                }
            if (!ok) {
                img[pos] = -1;
                continue;
            }
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            used[cand] = false;
            img[pos] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace charlat
