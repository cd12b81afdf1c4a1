#pragma once

// Permutations, permutation groups with a stabilizer chain for exact orders,
// bounded element enumeration and conjugacy class data.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "charlat/cyclo.hpp"
#include "charlat/zlat.hpp"

namespace charlat {

class Perm {
public:
    Perm() = default;
    explicit Perm(long degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), 0L);
    }
    explicit Perm(std::vector<long> images) : img_(std::move(images)) {
        std::vector<bool> hit(img_.size(), false);
        for (long v : img_) {
            if (v < 0 || v >= static_cast<long>(img_.size()) || hit[v])
                throw std::invalid_argument("Perm: images not a bijection");
            hit[v] = true;
        }
    }

    long degree() const { return static_cast<long>(img_.size()); }
    long operator()(long i) const { return img_[i]; }
    const std::vector<long>& images() const { return img_; }

    bool is_identity() const {
        for (long i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // apply o first, then this
    Perm operator*(const Perm& o) const {
        if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
        std::vector<long> r(img_.size());
        for (long i = 0; i < degree(); ++i) r[i] = img_[o.img_[i]];
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm inverse() const {
        std::vector<long> r(img_.size());
        for (long i = 0; i < degree(); ++i) r[img_[i]] = i;
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    long order() const {
        long ord = 1;
        std::vector<bool> seen(img_.size(), false);
        for (long i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            long len = 0, j = i;
            do {
                seen[j] = true;
                j = img_[j];
                ++len;
            } while (j != i);
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    Perm power(long e) const {
        long m = order();
        e = mod_l(e, m);
        Perm acc(degree()), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // "(0,1)(2,5)" with fixed points omitted
    std::string to_cycles() const {
        std::ostringstream out;
        std::vector<bool> seen(img_.size(), false);
        bool any = false;
        for (long i = 0; i < degree(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            any = true;
            out << '(' << i;
            seen[i] = true;
            for (long j = img_[i]; j != i; j = img_[j]) {
                seen[j] = true;
                out << ',' << j;
            }
            out << ')';
        }
        return any ? out.str() : "()";
    }

    static Perm from_cycles(const std::string& text, long degree) {
        std::vector<long> img(degree);
        std::iota(img.begin(), img.end(), 0L);
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip_ws();
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("Perm: expected '('");
            ++i;
            std::vector<long> cyc;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                long v = 0;
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("Perm: expected point");
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                if (v >= degree) throw std::invalid_argument("Perm: point out of range");
                cyc.push_back(v);
                skip_ws();
                if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
            }
            if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle");
            ++i;
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                long from = cyc[t], to = cyc[(t + 1) % cyc.size()];
                if (img[from] != from && cyc.size() > 1)
                    throw std::invalid_argument("Perm: repeated point");
                if (cyc.size() > 1) img[from] = to;
            }
            skip_ws();
        }
        return Perm(std::move(img));
    }

private:
    std::vector<long> img_;
};

struct PermGroup {
    long degree = 1;
    std::vector<Perm> generators;
};

struct EnumBoundExceeded : std::runtime_error {
    EnumBoundExceeded() : std::runtime_error("element enumeration bound exceeded") {}
};

inline long enumeration_bound() {
    if (const char* s = std::getenv("CHARLAT_ENUM_BOUND")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 100000;
}

namespace detail {

// one level of a stabilizer chain: orbit of the base point with coset
// representatives, plus the stabilizer generators below
struct StabChain {
    long base = -1;
    std::map<long, Perm> transversal;  // point -> u with u(base) = point
    std::vector<Perm> gens;
    std::unique_ptr<StabChain> next;
};

inline void extend_orbit(StabChain& node) {
    node.transversal.clear();
    node.transversal.emplace(node.base, Perm(node.gens.empty() ? node.base + 1 : node.gens[0].degree()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<long, Perm>> cur(node.transversal.begin(), node.transversal.end());
        for (const auto& [pt, u] : cur)
            for (const auto& g : node.gens) {
                long q = g(pt);
                if (!node.transversal.count(q)) {
                    node.transversal.emplace(q, g * u);
                    grew = true;
                }
            }
    }
}

// returns the residue of g after sifting; identity iff g in the chain group
inline Perm sift(const StabChain* node, Perm g) {
    while (node && !g.is_identity()) {
        long pt = g(node->base);
        auto it = node->transversal.find(pt);
        if (it == node->transversal.end()) return g;
        g = it->second.inverse() * g;
        node = node->next.get();
    }
    return g;
}

inline void chain_insert(StabChain& node, const Perm& g, long degree);

inline void close_schreier(StabChain& node, long degree) {
    extend_orbit(node);
    bool added = true;
    while (added) {
        added = false;
        for (const auto& [pt, u] : node.transversal)
            for (const auto& g : node.gens) {
                auto it = node.transversal.find(g(pt));
                Perm schreier = it->second.inverse() * (g * u);
                if (schreier.is_identity()) continue;
                if (!node.next) {
                    long b = 0;
                    while (schreier(b) == b) ++b;
                    node.next = std::make_unique<StabChain>();
                    node.next->base = b;
                }
                Perm residue = sift(node.next.get(), schreier);
                if (!residue.is_identity()) {
                    chain_insert(*node.next, residue, degree);
                    added = true;
                }
            }
    }
}

inline void chain_insert(StabChain& node, const Perm& g, long degree) {
    node.gens.push_back(g);
    close_schreier(node, degree);
}

inline std::unique_ptr<StabChain> build_chain(const PermGroup& g) {
    std::unique_ptr<StabChain> root;
    for (const auto& gen : g.generators) {
        if (gen.degree() != g.degree)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
        if (gen.is_identity()) continue;
        if (!root) {
            long b = 0;
            while (gen(b) == b) ++b;
            root = std::make_unique<StabChain>();
            root->base = b;
        }
        Perm residue = sift(root.get(), gen);
        if (!residue.is_identity()) chain_insert(*root, residue, g.degree);
    }
    return root;
}

}  // namespace detail

inline Int order(const PermGroup& g) {
    auto chain = detail::build_chain(g);
    Int n = 1;
    for (const detail::StabChain* c = chain.get(); c; c = c->next.get())
        n *= static_cast<long>(c->transversal.size());
    return n;
}

inline std::vector<Perm> enumerate_elements(const PermGroup& g) {
    long bound = enumeration_bound();
    std::set<Perm> seen{Perm(g.degree)};
    std::vector<Perm> queue{Perm(g.degree)};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Perm cur = queue[h];
        for (const auto& gen : g.generators) {
            Perm nxt = gen * cur;
            if (seen.insert(nxt).second) {
                if (static_cast<long>(seen.size()) > bound) throw EnumBoundExceeded();
                queue.push_back(std::move(nxt));
            }
        }
    }
    return queue;
}

struct ClassData {
    std::vector<Perm> reps;  // empty for abstractly constructed tables
    std::vector<Int> sizes;
    std::vector<long> element_orders;
    long exponent = 1;
    // power_maps[t][c] = class of rep_c^t, for 0 <= t < exponent
    std::vector<std::vector<long>> power_maps;

    Int group_order() const {
        Int n = 0;
        for (const auto& s : sizes) n += s;
        return n;
    }
    std::size_t count() const { return sizes.size(); }
    long inverse_class(long c) const {
        return power_maps[mod_l(element_orders[c] - 1, exponent)][c];
    }
};

// full class partition with membership lookup, for class algebra constants
struct ClassPartition {
    ClassData data;
    std::vector<std::vector<Perm>> members;
    std::map<Perm, long> class_of;
};

inline ClassPartition conjugacy_class_partition(const PermGroup& g) {
    std::vector<Perm> elems = enumerate_elements(g);
    std::sort(elems.begin(), elems.end());
    ClassPartition out;
    std::map<Perm, long>& cls = out.class_of;
    // identity sorts first, so class 0 is the identity class
    for (const auto& x : elems) {
        if (cls.count(x)) continue;
        long id = static_cast<long>(out.members.size());
        std::vector<Perm> orbit{x};
        cls[x] = id;
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& gen : g.generators) {
                Perm c = gen * orbit[h] * gen.inverse();
                if (!cls.count(c)) {
                    cls[c] = id;
                    orbit.push_back(std::move(c));
                }
            }
        out.members.push_back(std::move(orbit));
    }
    ClassData& d = out.data;
    for (const auto& orbit : out.members) {
        d.reps.push_back(orbit.front());
        d.sizes.push_back(static_cast<long>(orbit.size()));
        d.element_orders.push_back(orbit.front().order());
        d.exponent = std::lcm(d.exponent, d.element_orders.back());
    }
    d.power_maps.resize(d.exponent);
    for (long t = 0; t < d.exponent; ++t) {
        d.power_maps[t].resize(d.count());
        for (std::size_t c = 0; c < d.count(); ++c)
            d.power_maps[t][c] = cls.at(d.reps[c].power(t));
    }
    return out;
}

inline ClassData conjugacy_classes(const PermGroup& g) {
    return conjugacy_class_partition(g).data;
}

struct NormalizerData {
    Int normalizer_order;
    Int centralizer_order;
    long cyclic_order;
};

inline NormalizerData cyclic_normalizer_data(const PermGroup& g, const Perm& x) {
    std::vector<Perm> elems = enumerate_elements(g);
    long m = x.order();
    std::set<Perm> cyc;
    for (long t = 0; t < m; ++t) cyc.insert(x.power(t));
    Int nn = 0, cc = 0;
    for (const auto& y : elems) {
        Perm conj = y * x * y.inverse();
        if (conj == x) ++cc;
        if (cyc.count(conj)) ++nn;
    }
    return NormalizerData{nn, cc, m};
}

}  // namespace charlat
