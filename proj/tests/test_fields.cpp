#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charlat/fields.hpp>

#include <random>
#include <set>

using namespace charlat;

namespace {

AbelianField quad_field(long d) {
    return field_of_values({Cyclotomic::sqrt_int(Int(d))});
}

Lattice coord_lattice(long n, const std::vector<Cyclotomic>& elems) {
    auto exps = zumbroich_exponents(n);
    IntMat m(0, exps.size());
    for (const auto& e : elems) {
        auto row = zumbroich_coords(e, n, exps);
        IntMat r(1, exps.size());
        for (std::size_t j = 0; j < exps.size(); ++j) r.at(0, j) = row[j];
        m.append_row(r.row(0));
    }
    return make_lattice(exps.size(), m);
}

bool same_lattice(const Lattice& a, const Lattice& b) {
    if (a.basis.rows() != b.basis.rows()) return false;
    for (std::size_t i = 0; i < a.basis.rows(); ++i)
        for (std::size_t j = 0; j < a.basis.cols(); ++j)
            if (a.basis.at(i, j) != b.basis.at(i, j)) return false;
    return true;
}

std::vector<long> close_subgroup(long n, std::vector<long> gens) {
    std::set<long> h{1 % n};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(h.begin(), h.end());
        for (long a : cur)
            for (long g : gens)
                if (h.insert(mulmod_l(a, g, n)).second) grew = true;
    }
    if (n == 1) return {0};
    return {h.begin(), h.end()};
}

}  // namespace

TEST_CASE("field_of_values basics") {
    AbelianField k = field_of_values({parse_cyclo("E(12)")});
    CHECK(k.conductor == 12);
    CHECK(k.stab == std::vector<long>{1});

    AbelianField r2 = field_of_values({parse_cyclo("E(8)+E(8)^7")});
    CHECK(r2.conductor == 8);
    CHECK(r2.stab == std::vector<long>{1, 7});
    // sigma_3 and sigma_5 both move sqrt(2)
    Cyclotomic s2 = parse_cyclo("E(8)+E(8)^7");
    CHECK(s2.galois(3).approx().real() == doctest::Approx(-std::sqrt(2.0)));
    CHECK(s2.galois(5).approx().real() == doctest::Approx(-std::sqrt(2.0)));

    AbelianField q = field_of_values({Cyclotomic(1), Cyclotomic(-1), Cyclotomic(5)});
    CHECK(q.conductor == 1);
    CHECK(q.degree() == 1);

    CHECK(quad_field(5).conductor == 5);
    CHECK(quad_field(5).stab == std::vector<long>{1, 4});
    CHECK(quad_field(-1).conductor == 4);
    CHECK(quad_field(2).conductor == 8);
    CHECK(quad_field(-3).conductor == 3);
    // conductor minimization from a redundant ambient
    AbelianField m = field_of_values({parse_cyclo("E(12)^4")});
    CHECK(m.conductor == 3);
}

TEST_CASE("leopoldt basis examples") {
    // Q(sqrt 5): ring of integers Z[(1+sqrt 5)/2]
    AbelianField k = quad_field(5);
    IntegralBasis b = leopoldt_basis(k);
    REQUIRE(b.elements.size() == 2);
    Cyclotomic golden = (Cyclotomic(1) + Cyclotomic::sqrt_int(5)) * Rat(1, 2);
    Lattice want = coord_lattice(5, {Cyclotomic(1), golden});
    Lattice got = make_lattice(b.coordinates.cols(), b.coordinates);
    CHECK(same_lattice(want, got));

    // full cyclotomic field: power basis up to unimodular change
    for (long n : {5L, 8L, 9L, 12L}) {
        AbelianField full{n, {1}};
        IntegralBasis fb = leopoldt_basis(full);
        std::vector<Cyclotomic> pow;
        for (long i = 0; i < euler_phi_l(n); ++i)
            pow.push_back(Cyclotomic::root_of_unity(n, i));
        CHECK(same_lattice(coord_lattice(n, pow),
                           make_lattice(fb.coordinates.cols(), fb.coordinates)));
    }

    IntegralBasis unit = leopoldt_basis(AbelianField{});
    REQUIRE(unit.elements.size() == 1);
    CHECK(unit.elements[0] == Cyclotomic(1));
}

TEST_CASE("quadratic integral bases") {
    for (long d : {-1L, 2L, -2L, 3L, -3L, 5L, -5L, 6L, 7L, -7L, 10L, 13L,
                   -11L, 17L, 21L, -15L, 33L}) {
        AbelianField k = quad_field(d);
        REQUIRE(k.degree() == 2);
        IntegralBasis b = leopoldt_basis(k);
        Cyclotomic root = Cyclotomic::sqrt_int(Int(d));
        Cyclotomic gen = mod_l(d, 4) == 1 ? (Cyclotomic(1) + root) * Rat(1, 2) : root;
        Lattice want = coord_lattice(k.conductor, {Cyclotomic(1), gen});
        CHECK(same_lattice(want, make_lattice(b.coordinates.cols(), b.coordinates)));
    }
}

TEST_CASE("compositum") {
    AbelianField a = compositum(quad_field(2), quad_field(-1));
    CHECK(a.conductor == 8);
    CHECK(a.stab == std::vector<long>{1});

    AbelianField k = quad_field(-7);
    AbelianField same = compositum(k, AbelianField{});
    CHECK(same == k);

    AbelianField c = compositum(quad_field(-3), quad_field(5));
    CHECK(c.conductor == 15);
    CHECK(c.degree() == 4);
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(quad_field(5)) == 5);
    CHECK(discriminant(quad_field(-1)) == -4);
    CHECK(discriminant(quad_field(2)) == 8);
    CHECK(discriminant(quad_field(-3)) == -3);
    CHECK(discriminant(quad_field(-5)) == -20);
    CHECK(discriminant(AbelianField{5, {1}}) == 125);
    CHECK(discriminant(AbelianField{7, {1}}) == -16807);
    CHECK(discriminant(AbelianField{8, {1}}) == 256);
    CHECK(discriminant(AbelianField{12, {1}}) == 144);
    CHECK(discriminant(AbelianField{}) == 1);
}

TEST_CASE("discriminant divides n^phi(n)") {
    std::mt19937 rng(77);
    int accepted = 0;
    while (accepted < 25) {
        long n = std::uniform_int_distribution<long>(3, 200)(rng);
        if (n % 4 == 2) continue;
        std::vector<long> gens;
        for (int i = 0; i < 2; ++i) {
            long g = std::uniform_int_distribution<long>(1, n - 1)(rng);
            if (gcd_l(g, n) == 1) gens.push_back(g);
        }
        if (gens.empty()) continue;
        AbelianField k = detail::minimize_conductor(
            n, [&] {
                auto v = close_subgroup(n, gens);
                return std::set<long>(v.begin(), v.end());
            }());
        if (k.degree() > 16) continue;
        ++accepted;
        Int d = discriminant(k);
        Int bound = 1;
        long m = k.conductor;
        for (long i = 0; i < euler_phi_l(m); ++i) bound *= m;
        if (m == 1) {
            CHECK(d == 1);
        } else {
            CHECK(d != 0);
            CHECK(bound % d == 0);
        }
    }
}

TEST_CASE("compositum of coprime discriminants multiplies bases") {
    std::vector<std::pair<AbelianField, AbelianField>> pairs = {
        {quad_field(2), quad_field(5)},
        {quad_field(-3), quad_field(5)},
        {AbelianField{5, {1}}, quad_field(-1)},
        {AbelianField{7, {1}}, AbelianField{9, {1}}},
        {quad_field(13), quad_field(-7)},
    };
    for (const auto& [a, b] : pairs) {
        Int da = discriminant(a), db = discriminant(b);
        REQUIRE(gcd(da, db) == 1);
        AbelianField c = compositum(a, b);
        IntegralBasis ba = leopoldt_basis(a);
        IntegralBasis bb = leopoldt_basis(b);
        std::vector<Cyclotomic> prods;
        for (const auto& x : ba.elements)
            for (const auto& y : bb.elements) prods.push_back(x * y);
        IntegralBasis bc = leopoldt_basis(c);
        CHECK(same_lattice(coord_lattice(c.conductor, prods),
                           make_lattice(bc.coordinates.cols(), bc.coordinates)));
    }
}

TEST_CASE("2-power subfield classification") {
    auto r2 = classify_2power_subfield(quad_field(2));
    CHECK(r2.tag == SubfieldTag::plus);
    REQUIRE(r2.generators.size() == 2);
    CHECK(r2.generators[1] == parse_cyclo("E(8)+E(8)^7"));

    CHECK(classify_2power_subfield(quad_field(-2)).tag == SubfieldTag::minus);
    CHECK(classify_2power_subfield(AbelianField{4, {1}}).tag == SubfieldTag::cyclotomic);
    CHECK(classify_2power_subfield(AbelianField{}).tag == SubfieldTag::cyclotomic);
    CHECK_THROWS_AS(classify_2power_subfield(quad_field(5)), std::invalid_argument);

    // the generator sets span the maximal order on both towers
    for (long m : {8L, 16L, 32L}) {
        for (long h : {m - 1, m / 2 - 1}) {
            AbelianField k{m, {1, h}};
            auto cls = classify_2power_subfield(k);
            CHECK(cls.tag == (h == m - 1 ? SubfieldTag::plus : SubfieldTag::minus));
            IntegralBasis b = leopoldt_basis(k);
            CHECK(same_lattice(coord_lattice(m, cls.generators),
                               make_lattice(b.coordinates.cols(), b.coordinates)));
        }
    }
}

TEST_CASE("stabilizer fixes the basis") {
    std::vector<AbelianField> fields = {
        quad_field(5), quad_field(-6), AbelianField{15, close_subgroup(15, {2})},
        AbelianField{16, {1, 15}}, AbelianField{21, close_subgroup(21, {4})}};
    for (const auto& k : fields) {
        IntegralBasis b = leopoldt_basis(k);
        for (long h : k.stab)
            for (const auto& e : b.elements)
                CHECK(e.galois(mod_l(h, k.conductor)) == e);
    }
}
