#pragma once

// Exact arithmetic in cyclotomic fields Q_n. Elements are kept in the
// Zumbroich basis at their minimal conductor, so mathematical equality is
// structural equality and integrality is a coefficient check.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charlat/zlat.hpp"

namespace charlat {

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

inline long mod_l(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long mulmod_l(long a, long b, long n) {
    return static_cast<long>((static_cast<__int128>(a) * b) % n);
}

inline long powmod_l(long a, long e, long n) {
    long r = 1 % n;
    a = mod_l(a, n);
    while (e > 0) {
        if (e & 1) r = mulmod_l(r, a, n);
        a = mulmod_l(a, a, n);
        e >>= 1;
    }
    return r;
}

// inverse of a mod n, gcd(a, n) = 1
inline long invmod_l(long a, long n) {
    long t = 0, nt = 1, r = n, nr = mod_l(a, n);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("invmod: not invertible");
    return mod_l(t, n);
}

inline std::vector<std::pair<long, long>> factorize_l(long n) {
    std::vector<std::pair<long, long>> f;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_prime_l(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long euler_phi_l(long n) {
    long r = n;
    for (auto [p, e] : factorize_l(n)) r -= r / p;
    return r;
}

struct CycloParseError : std::runtime_error {
    std::size_t position;
    CycloParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": " + msg),
          position(pos) {}
};

class Cyclotomic {
public:
    Cyclotomic() : n_(1) {}
    Cyclotomic(long v) : n_(1) { if (v != 0) c_[0] = Rat(v); }  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Int& v) : n_(1) { if (v != 0) c_[0] = Rat(v); }  // NOLINT
    Cyclotomic(const Rat& v) : n_(1) { if (v != 0) { Rat r = v; r.canonicalize(); c_[0] = r; } }  // NOLINT

    // E(n)^k
    static Cyclotomic root_of_unity(long n, long k = 1) {
        if (n <= 0) throw std::invalid_argument("E(n): n must be positive");
        std::map<long, Rat> m;
        m[mod_l(k, n)] = Rat(1);
        return canonical(n, std::move(m));
    }

    // sqrt of an integer, via quadratic Gauss sums; sqrt(-x) = E(4)*sqrt(x)
    static Cyclotomic sqrt_int(const Int& d);

    long conductor() const { return n_; }
    const std::map<long, Rat>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return n_ == 1; }
    Rat rational_value() const {
        if (n_ != 1) throw std::domain_error("not rational");
        auto it = c_.find(0);
        return it == c_.end() ? Rat(0) : it->second;
    }

    bool is_integral() const {
        for (const auto& [e, q] : c_)
            if (q.get_den() != 1) return false;
        return true;
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& [e, q] : r.c_) q = -q;
        return r;
    }

    Cyclotomic operator+(const Cyclotomic& o) const {
        long n = std::lcm(n_, o.n_);
        std::map<long, Rat> m;
        long s = n / n_, t = n / o.n_;
        for (const auto& [e, q] : c_) m[e * s] += q;
        for (const auto& [e, q] : o.c_) m[e * t] += q;
        return canonical(n, std::move(m));
    }
    Cyclotomic operator-(const Cyclotomic& o) const { return *this + (-o); }

    Cyclotomic operator*(const Cyclotomic& o) const {
        if (is_zero() || o.is_zero()) return Cyclotomic();
        if (n_ == 1) return o.scaled(c_.at(0));
        if (o.n_ == 1) return scaled(o.c_.at(0));
        long n = std::lcm(n_, o.n_);
        long s = n / n_, t = n / o.n_;
        std::map<long, Rat> m;
        for (const auto& [e1, q1] : c_)
            for (const auto& [e2, q2] : o.c_) m[mod_l(e1 * s + e2 * t, n)] += q1 * q2;
        return canonical(n, std::move(m));
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic scaled(const Rat& q) const {
        if (q == 0) return Cyclotomic();
        Cyclotomic r(*this);
        for (auto& [e, c] : r.c_) { c *= q; c.canonicalize(); }
        return r;
    }

    // nonnegative integer power; negative powers only for monomials
    // (rational multiples of a root of unity)
    Cyclotomic pow(long e) const {
        if (e < 0) {
            Cyclotomic inv = monomial_inverse();
            return inv.pow(-e);
        }
        Cyclotomic r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // image under zeta_n -> zeta_n^k, gcd(k, n) = 1
    Cyclotomic galois(long k) const {
        k = mod_l(k, n_);
        if (n_ == 1) return *this;
        if (gcd_l(k, n_) != 1)
            throw std::invalid_argument("galois: exponent not coprime to conductor");
        std::map<long, Rat> m;
        for (const auto& [e, q] : c_) m[mulmod_l(e, k, n_)] += q;
        return canonical(n_, std::move(m));
    }

    Cyclotomic conjugate() const { return galois(n_ - 1); }

    std::complex<double> approx() const {
        std::complex<double> z(0.0, 0.0);
        constexpr double two_pi = 6.283185307179586476925286766559;
        for (const auto& [e, q] : c_) {
            double a = two_pi * static_cast<double>(e) / static_cast<double>(n_);
            z += q.get_d() * std::complex<double>(std::cos(a), std::sin(a));
        }
        return z;
    }

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // total order for deterministic sorting (not a numeric order)
    bool operator<(const Cyclotomic& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        auto i = c_.begin();
        auto j = o.c_.begin();
        for (; i != c_.end() && j != o.c_.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
            int c = cmp(i->second, j->second);
            if (c != 0) return c < 0;
        }
        return i == c_.end() && j != o.c_.end();
    }

    std::string to_string() const;

    // canonicalize an exponent->coefficient map over conductor n
    static Cyclotomic canonical(long n, std::map<long, Rat> m);

private:
    long n_;                  // minimal conductor
    std::map<long, Rat> c_;   // Zumbroich support only

    Cyclotomic monomial_inverse() const {
        if (n_ == 1) {
            Rat v = rational_value();
            if (v == 0) throw std::domain_error("division by zero");
            Rat inv = 1 / v;
            inv.canonicalize();
            return Cyclotomic(inv);
        }
        // invert q * zeta^e by conjugate product over the Galois group
        Cyclotomic prod(1);
        for (long k = 2; k < n_; ++k)
            if (gcd_l(k, n_) == 1) prod *= galois(k);
        Cyclotomic norm = *this * prod;
        if (!norm.is_rational() || norm.rational_value() == 0)
            throw std::domain_error("inverse: not invertible");
        Rat inv = 1 / norm.rational_value();
        inv.canonicalize();
        return prod.scaled(inv);
    }
};

namespace detail {

struct ConductorData {
    long n;
    struct PrimePart {
        long p, nu, q;     // q = p^nu
        long qdiv;         // p^(nu-1)
        long u;            // inverse of n/q mod q
    };
    std::vector<PrimePart> parts;
};

inline const ConductorData& conductor_data(long n) {
    static thread_local std::map<long, ConductorData> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ConductorData d;
    d.n = n;
    for (auto [p, e] : factorize_l(n)) {
        ConductorData::PrimePart part;
        part.p = p;
        part.nu = e;
        part.q = 1;
        for (long i = 0; i < e; ++i) part.q *= p;
        part.qdiv = part.q / p;
        part.u = invmod_l(n / part.q, part.q);
        d.parts.push_back(part);
    }
    return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace detail

inline Cyclotomic Cyclotomic::canonical(long n, std::map<long, Rat> m) {
    for (auto& [e, q] : m) q.canonicalize();

    // rewrite into the Zumbroich basis of conductor n
    const auto* cd = &detail::conductor_data(n);
    for (const auto& part : cd->parts) {
        std::map<long, Rat> next;
        for (auto& [e, q] : m) {
            if (q == 0) continue;
            long c = mulmod_l(mod_l(e, n), part.u, part.q);
            if (part.p == 2) {
                if (c >= part.qdiv)
                    next[mod_l(e + n / 2, n)] -= q;
                else
                    next[e] += q;
            } else {
                if (c / part.qdiv == 0) {
                    for (long r = 1; r < part.p; ++r)
                        next[mod_l(e + r * (n / part.p), n)] -= q;
                } else {
                    next[e] += q;
                }
            }
        }
        m = std::move(next);
    }
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);

    // descend to the minimal conductor
    bool reduced = true;
    while (reduced && n > 1) {
        reduced = false;
        cd = &detail::conductor_data(n);
        for (const auto& part : cd->parts) {
            long nn = n / part.p;
            if (part.nu >= 2) {
                // element of Q_{n/p} iff every local exponent's lower part
                // is divisible by p
                bool ok = true;
                for (const auto& [e, q] : m) {
                    long c = mulmod_l(e, part.u, part.q);
                    if ((c % part.qdiv) % part.p != 0) { ok = false; break; }
                }
                if (!ok) continue;
                std::map<long, Rat> next;
                const auto& ncd = detail::conductor_data(nn);
                for (const auto& [e, q] : m) {
                    long cnew = mulmod_l(e, part.u, part.q) / part.p;
                    // CRT over nn: local digit cnew at p, the old local
                    // digits (computed with the old conductor's inverses)
                    // at every other prime
                    long ep = 0;
                    for (const auto& np : ncd.parts) {
                        long digit;
                        if (np.p == part.p) {
                            digit = mod_l(cnew, np.q);
                        } else {
                            const auto* old = &cd->parts[0];
                            for (const auto& op : cd->parts)
                                if (op.p == np.p) old = &op;
                            digit = mulmod_l(e, old->u, old->q);
                        }
                        ep = mod_l(ep + mulmod_l(nn / np.q, digit, nn), nn);
                    }
                    next[ep] += q;
                }
                m = std::move(next);
                n = nn;
                reduced = true;
                break;
            }
            if (part.p == 2) {
                // 2 || n: every basis exponent is even, Q_n = Q_{n/2}
                std::map<long, Rat> next;
                for (const auto& [e, q] : m) next[e / 2] += q;
                m = std::move(next);
                n = nn;
                reduced = true;
                break;
            }
            // p odd, p || n: exponents sharing all non-p local digits form
            // groups of size p-1; each group must carry one coefficient and
            // descends to its negative
            std::map<long, std::pair<long, Rat>> groups;  // repr -> (count, value)
            bool ok = true;
            for (const auto& [e, q] : m) {
                long key = mod_l(e, nn);
                auto [it2, fresh] = groups.emplace(key, std::make_pair(1L, q));
                if (!fresh) {
                    if (it2->second.second != q) { ok = false; break; }
                    ++it2->second.first;
                }
            }
            if (ok)
                for (const auto& [key, cv] : groups)
                    if (cv.first != part.p - 1) { ok = false; break; }
            if (!ok) continue;
            std::map<long, Rat> next;
            for (const auto& [key, cv] : groups) {
                // CRT over nn from the old local digits at primes other
                // than p
                long ep = 0;
                for (const auto& op : cd->parts) {
                    if (op.p == part.p) continue;
                    long digit = mulmod_l(key, op.u, op.q);
                    ep = mod_l(ep + mulmod_l(nn / op.q, digit, nn), nn);
                }
                next[ep] -= cv.second;
            }
            // exponents are valid basis exponents mod nn but the map may
            // need a rewrite pass when nn has further structure; recurse
            Cyclotomic sub = canonical(nn, std::move(next));
            return sub;
        }
    }

    Cyclotomic r;
    r.n_ = n;
    r.c_ = std::move(m);
    return r;
}

inline Cyclotomic Cyclotomic::sqrt_int(const Int& d) {
    if (d == 0) return Cyclotomic();
    Int a = abs(d);
    // split off the square part
    Int e = 1, rest = 1;
    for (Int p = 2; p * p <= a; p += (p == 2 ? 1 : 2)) {
        long cnt = 0;
        while (a % p == 0) { a /= p; ++cnt; }
        for (long i = 0; i < cnt / 2; ++i) e *= p;
        if (cnt % 2) rest *= p;
    }
    rest *= a;  // leftover prime
    // now |d| = e^2 * rest with rest squarefree
    Cyclotomic val(Int(1));
    long t = 0;  // count of p = 3 mod 4 factors (imaginary Gauss sums)
    Int rcopy = rest;
    if (rcopy % 2 == 0) {
        rcopy /= 2;
        val *= root_of_unity(8) + root_of_unity(8, 7);  // sqrt(2)
    }
    for (Int p = 3; p * p <= rcopy; p += 2) {
        if (rcopy % p == 0) {
            rcopy /= p;
            long pl = static_cast<long>(p.get_si());
            Cyclotomic g;
            for (long x = 1; x < pl; ++x)
                g += Cyclotomic(Int(powmod_l(x, (pl - 1) / 2, pl) == 1 ? 1 : -1)) *
                     root_of_unity(pl, x);
            val *= g;  // = sqrt(p*) with p* = (-1)^((p-1)/2) p
            if (pl % 4 == 3) ++t;
        }
    }
    if (rcopy > 1) {
        long pl = static_cast<long>(rcopy.get_si());
        Cyclotomic g;
        for (long x = 1; x < pl; ++x)
            g += Cyclotomic(Int(powmod_l(x, (pl - 1) / 2, pl) == 1 ? 1 : -1)) *
                 root_of_unity(pl, x);
        val *= g;
        if (pl % 4 == 3) ++t;
    }
    // val = i^t * sqrt(odd part); fix up to i^s * sqrt(|d|) with s = [d < 0]
    long s = d < 0 ? 1 : 0;
    long shift = mod_l(s - t, 4);
    val *= root_of_unity(4).pow(shift);
    return val.scaled(Rat(e));
}

struct GaloisElement {
    long conductor;
    long residue;  // gcd(residue, conductor) = 1, reduced mod conductor

    GaloisElement(long n, long k) : conductor(n), residue(mod_l(k, n)) {
        if (n <= 0 || gcd_l(residue, n) != 1)
            throw std::invalid_argument("GaloisElement: residue not coprime");
    }
    GaloisElement compose(const GaloisElement& o) const {
        if (conductor != o.conductor)
            throw std::invalid_argument("GaloisElement: conductor mismatch");
        return GaloisElement(conductor, mulmod_l(residue, o.residue, conductor));
    }
};

inline Cyclotomic galois_apply(const GaloisElement& g, const Cyclotomic& x) {
    if (g.conductor % x.conductor() != 0)
        throw std::invalid_argument("galois_apply: conductor not a multiple");
    return x.galois(mod_l(g.residue, x.conductor()));
}

// Sum over the distinct elements of the orbit {zeta_n^(j h) : h in H};
// the trace of zeta_n^j to the fixed field of H.
inline Cyclotomic orbit_sum(long n, long j, const std::vector<long>& h) {
    std::set<long> hs;
    for (long k : h) {
        long r = mod_l(k, n);
        if (gcd_l(r, n) != 1)
            throw std::invalid_argument("orbit_sum: residue not coprime to n");
        hs.insert(r);
    }
    if (!hs.count(1 % n)) throw std::invalid_argument("orbit_sum: H must contain 1");
    for (long a : hs)
        for (long b : hs)
            if (!hs.count(mulmod_l(a, b, n)))
                throw std::invalid_argument("orbit_sum: H not multiplicatively closed");
    std::set<long> orbit;
    for (long k : hs) orbit.insert(mulmod_l(mod_l(j, n), k, n));
    std::map<long, Rat> m;
    for (long e : orbit) m[e] += 1;
    return Cyclotomic::canonical(n, std::move(m));
}

// ---------------------------------------------------------------------------
// printing

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    if (n_ == 1) return rat_to_string(rational_value());
    std::string out;
    bool first = true;
    for (const auto& [e, q] : c_) {
        Rat a = q;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        if (e == 0) {
            out += rat_to_string(a);
            continue;
        }
        std::string root = "E(" + std::to_string(n_) + ")";
        if (e != 1) root += "^" + std::to_string(e);
        if (a == 1) {
            out += root;
        } else {
            out += rat_to_string(a) + "*" + root;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser for GAP-style expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)*
//   atom   := int | 'E' '(' int ')' | 'Sqrt' '(' int ')' | '(' expr ')' | '-' factor

namespace detail {

class CycloParser {
public:
    explicit CycloParser(const std::string& s) : s_(s), pos_(0) {}

    Cyclotomic parse() {
        Cyclotomic v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw CycloParseError(pos_, msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        Int v(s_.substr(start, pos_ - start));
        return neg ? Int(-v) : v;
    }

    Cyclotomic expr() {
        Cyclotomic v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    Cyclotomic term() {
        Cyclotomic v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Cyclotomic d = factor();
                if (!d.is_rational()) {
                    pos_ = at;
                    fail("division by a non-rational value");
                }
                if (d.rational_value() == 0) {
                    pos_ = at;
                    fail("division by zero");
                }
                Rat inv = 1 / d.rational_value();
                inv.canonicalize();
                v = v.scaled(inv);
            } else {
                return v;
            }
        }
    }

    Cyclotomic factor() {
        Cyclotomic v = atom();
        while (eat('^')) {
            Int e = integer();
            if (!e.fits_slong_p()) fail("exponent too large");
            v = v.pow(e.get_si());
        }
        return v;
    }

    Cyclotomic atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '-') { ++pos_; return -factor(); }
        if (c == '+') { ++pos_; return factor(); }
        if (c == '(') {
            ++pos_;
            Cyclotomic v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(integer());
        if (s_.compare(pos_, 4, "Sqrt") == 0) {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after Sqrt");
            Int d = integer();
            if (!eat(')')) fail("expected ')'");
            return Cyclotomic::sqrt_int(d);
        }
        if (c == 'E') {
            ++pos_;
            if (!eat('(')) fail("expected '(' after E");
            std::size_t at = pos_;
            Int n = integer();
            if (!eat(')')) fail("expected ')'");
            if (n <= 0 || !n.fits_slong_p()) {
                pos_ = at;
                fail("E(n) requires a positive integer order");
            }
            return Cyclotomic::root_of_unity(n.get_si());
        }
        fail("unexpected character");
    }
};

}  // namespace detail

inline Cyclotomic parse_cyclo(const std::string& text) {
    return detail::CycloParser(text).parse();
}

// sorted Zumbroich basis exponents of Q_n
inline std::vector<long> zumbroich_exponents(long n) {
    const auto& cd = detail::conductor_data(n);
    std::vector<long> out;
    for (long j = 0; j < n; ++j) {
        bool good = true;
        for (const auto& part : cd.parts) {
            long c = mulmod_l(j, part.u, part.q);
            if (part.p == 2) {
                if (c >= part.qdiv) { good = false; break; }
            } else if (c / part.qdiv == 0) {
                good = false;
                break;
            }
        }
        if (good) out.push_back(j);
    }
    return out;
}

// integer Zumbroich coordinate row of x lifted to conductor n
// (x must be integral and its conductor must divide n)
inline std::vector<Int> zumbroich_coords(const Cyclotomic& x, long n,
                                         const std::vector<long>& exps) {
    if (n % x.conductor() != 0)
        throw std::invalid_argument("zumbroich_coords: conductor does not divide n");
    // lift to conductor n and rewrite into its basis, without descending back
    std::map<long, Rat> m;
    long s = n / x.conductor();
    for (const auto& [e, q] : x.coeffs()) m[e * s] = q;
    const auto& cd = detail::conductor_data(n);
    for (const auto& part : cd.parts) {
        std::map<long, Rat> next;
        for (auto& [e, q] : m) {
            if (q == 0) continue;
            long c = mulmod_l(mod_l(e, n), part.u, part.q);
            if (part.p == 2) {
                if (c >= part.qdiv)
                    next[mod_l(e + n / 2, n)] -= q;
                else
                    next[e] += q;
            } else if (c / part.qdiv == 0) {
                for (long r = 1; r < part.p; ++r)
                    next[mod_l(e + r * (n / part.p), n)] -= q;
            } else {
                next[e] += q;
            }
        }
        m = std::move(next);
    }
    std::vector<Int> row(exps.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        auto it = m.find(exps[i]);
        if (it != m.end() && it->second != 0) {
            if (it->second.get_den() != 1)
                throw std::domain_error("zumbroich_coords: non-integral element");
            row[i] = it->second.get_num();
            m.erase(it);
        }
    }
    for (const auto& [e, q] : m)
        if (q != 0) throw std::logic_error("zumbroich_coords: support escaped basis");
    return row;
}

}  // namespace charlat
