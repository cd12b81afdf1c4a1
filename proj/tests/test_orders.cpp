#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charlat/dixon.hpp"
#include "charlat/families.hpp"
#include "charlat/orders.hpp"

using namespace charlat;

namespace {

std::vector<Int> chain(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

Cyclotomic root(long n, long j = 1) { return Cyclotomic::root_of_unity(n, j); }

}  // namespace

TEST_CASE("element order quotients") {
    Cyclotomic sqrt5 = Cyclotomic::sqrt_int(5);
    Cyclotomic golden = (Cyclotomic(Rat(1)) + sqrt5) * Cyclotomic(Rat(1, 2));
    CHECK(element_order_quotient(golden).empty());
    CHECK(element_order_quotient(sqrt5) == chain({2}));
    CHECK(element_order_quotient(Cyclotomic(Rat(2)) * root(4)) == chain({2}));
    CHECK(element_order_quotient(root(3)).empty());
    CHECK(element_order_quotient(Cyclotomic(Rat(3)) * root(3)) == chain({3}));
    CHECK(element_order_quotient(Cyclotomic(Rat(7))).empty());
    CHECK_THROWS_AS(element_order_quotient(Cyclotomic(Rat(1, 2))), std::invalid_argument);
}

TEST_CASE("ring closure generators in Q_12") {
    std::vector<Cyclotomic> gens{Cyclotomic(Rat(2)) * root(4), root(3)};
    OrderReport r = order_report_for_values(gens);
    CHECK(r.field.conductor == 12);
    CHECK(r.zk_rank == 4);
    CHECK(r.divisors == chain({2, 2}));
    CHECK(r.order_index == 4);
    CHECK(r.exponent == 2);

    // power basis generator closes to the full ring of integers
    OrderReport full = order_report_for_values({root(5)});
    CHECK(full.divisors.empty());
    CHECK(full.order_index == 1);
}

TEST_CASE("ring closure is multiplicatively closed and monotone") {
    AbelianField q12 = field_of_values({root(12)});
    IntegralBasis zk = leopoldt_basis(q12);
    std::vector<Cyclotomic> gens{Cyclotomic(Rat(2)) * root(4), root(3)};
    Lattice l = ring_closure(zk, gens);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = i; j < l.rank(); ++j) {
            Cyclotomic prod = order_element(zk, l.basis.row(i)) *
                              order_element(zk, l.basis.row(j));
            CHECK(contains(l, order_coordinates(zk, prod)));
        }
}

TEST_CASE("extraspecial central order quotients") {
    ExtraspecialData e31 = extraspecial_central_order(3, 1);
    OrderReport r31 = order_report_for_values(e31.generators);
    CHECK(r31.field.conductor == 9);
    CHECK(r31.divisors == chain({3, 3, 3, 3}));
    CHECK(check_conjecture_C(r31, e31.group_order));

    ExtraspecialData e51 = extraspecial_central_order(5, 1);
    OrderReport r51 = order_report_for_values(e51.generators);
    CHECK(r51.divisors == std::vector<Int>(16, Int(5)));
    CHECK(check_conjecture_C(r51, e51.group_order));
}

TEST_CASE("group order reports") {
    // abelian tables give the full ring of integers
    for (auto factors : std::vector<std::vector<long>>{{5}, {2, 4}, {3, 9}, {12}}) {
        OrderReport r = group_order_report(abelian_table(factors));
        CHECK(r.divisors.empty());
        CHECK(r.order_index == 1);
    }

    OrderReport c = group_order_report(dixon_table(c4c4_c3_group()));
    CHECK(c.field.conductor == 12);
    CHECK(c.divisors == chain({2, 2}));
    CHECK(!check_theorem_A(c, Int(48)).has_value());
    CHECK(check_conjecture_C(c, Int(48)));
    CHECK(check_cor_exponent(c, Int(48)) == 1);

    // Z[G] equals the ring generated by 2 sqrt(-1) and a third root of unity
    AbelianField q12 = field_of_values({root(12)});
    IntegralBasis zk = leopoldt_basis(q12);
    Lattice direct = ring_closure(zk, {Cyclotomic(Rat(2)) * root(4), root(3)});
    std::vector<Cyclotomic> all;
    CharacterTable t = dixon_table(c4c4_c3_group());
    for (const auto& row : t.values)
        for (const auto& v : row) all.push_back(v);
    CHECK(ring_closure(zk, all).basis == direct.basis);
}

TEST_CASE("row and column orders") {
    CharacterTable d16 = dihedral_table(8);
    bool found_sqrt2 = false;
    for (std::size_t i = 0; i < d16.rows(); ++i) {
        OrderReport r = row_order_report(d16, i);
        if (r.field.conductor == 8) {
            found_sqrt2 = true;
            // values include sqrt 2 itself, which generates the full Z_K
            CHECK(r.divisors.empty());
        } else {
            CHECK(r.field.conductor == 1);
            CHECK(r.divisors.empty());
        }
    }
    CHECK(found_sqrt2);

    // identity column spans Z over the rationals
    CharacterTable s3 = dixon_table(dihedral_group(3));
    ColumnOrder idc = column_order(s3, 0);
    CHECK(idc.field.conductor == 1);
    CHECK(idc.divisors.empty());
}

TEST_CASE("qg bound on small groups") {
    for (PermGroup g : {dihedral_group(3), dihedral_group(8), c4c4_c3_group(),
                        quaternion_group()}) {
        CharacterTable t = dixon_table(g);
        for (std::size_t j = 0; j < t.cols(); ++j) {
            ColumnOrder c = column_order(t, j);
            NormalizerData nd = cyclic_normalizer_data(g, t.classes.reps.at(j));
            Int m = nd.normalizer_order / Int(nd.cyclic_order);
            CHECK(check_qg_bound(c, m));
        }
    }
}

TEST_CASE("c15 d16 group order report") {
    CharacterTable t = dixon_table(c15_d16_group());
    OrderReport r = group_order_report(t);
    CHECK(r.field.conductor == 120);
    CHECK(r.zk_rank == 32);
    std::vector<Int> expect(14, Int(2));
    expect.insert(expect.end(), 4, Int(4));
    expect.insert(expect.end(), 4, Int(12));
    expect.insert(expect.end(), 2, Int(60));
    expect.insert(expect.end(), 2, Int(120));
    CHECK(r.divisors == expect);
    CHECK(!check_theorem_A(r, Int(240)).has_value());
    CHECK(check_conjecture_C(r, Int(240)));
    CHECK(check_cor_exponent(r, Int(240)) == 1);

    // the two reflection assignments give isomorphic groups
    OrderReport alt = group_order_report(dixon_table(c15_d16_group_alt()));
    CHECK(alt.divisors == expect);

    // qg containment for every class
    PermGroup g = c15_d16_group();
    for (std::size_t j = 0; j < t.cols(); ++j) {
        ColumnOrder c = column_order(t, j);
        NormalizerData nd = cyclic_normalizer_data(g, t.classes.reps.at(j));
        CHECK(check_qg_bound(c, nd.normalizer_order / Int(nd.cyclic_order)));
    }
}

TEST_CASE("theorem A witness on synthetic data") {
    OrderReport fake;
    fake.order_index = 7;
    fake.divisors = {Int(7)};
    fake.exponent = 7;
    auto w = check_theorem_A(fake, Int(240));
    REQUIRE(w.has_value());
    CHECK(*w == 7);
    CHECK(!check_conjecture_C(fake, Int(240)));
}

TEST_CASE("direct product merge for coprime orders") {
    CharacterTable t1 = dihedral_table(3);         // S3, order 6
    CharacterTable t2 = abelian_table({5});        // C5
    OrderReport r1 = group_order_report(t1);
    OrderReport r2 = group_order_report(t2);
    OrderReport r12 = group_order_report(direct_product_table(t1, t2));
    CHECK(r1.divisors.empty());
    CHECK(r2.divisors.empty());
    CHECK(r12.divisors.empty());

    // a nontrivial factor's divisors repeat once per Z_K-rank of the
    // coprime partner: C_2^2 tensored with a rank-4 ring gives C_2^8
    CharacterTable c = dixon_table(c4c4_c3_group());
    OrderReport rc5 = group_order_report(direct_product_table(c, t2));
    CHECK(rc5.divisors == std::vector<Int>(8, Int(2)));
}

TEST_CASE("a character value of D26 x C3 with a huge element quotient") {
    CharacterTable t = direct_product_table(dihedral_table(13), abelian_table({3}));
    Int target = Int(5) * 5 * 157 * 547;
    bool found = false;
    for (const auto& row : t.values)
        for (const auto& v : row) {
            if (v.conductor() != 39) continue;
            auto d = element_order_quotient(v);
            if (d == std::vector<Int>{target}) found = true;
        }
    CHECK(found);
}
