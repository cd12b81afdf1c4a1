#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "charlat/families.hpp"
#include "charlat/table.hpp"

using namespace charlat;

TEST_CASE("abelian tables") {
    for (auto factors : std::vector<std::vector<long>>{{2}, {3}, {5}, {2, 2}, {2, 4}, {3, 9}, {12}}) {
        CharacterTable t = abelian_table(factors);
        long n = 1;
        for (long f : factors) n *= f;
        CHECK(t.group_order == n);
        CHECK(t.rows() == static_cast<std::size_t>(n));
        for (const Int& d : t.degrees()) CHECK(d == 1);
        CHECK(table_valid(t));
    }

    // coprime factor lists produce the same canonical table
    CHECK(tables_equivalent(abelian_table({6}), abelian_table({2, 3})));
    CHECK(tables_equivalent(abelian_table({12}), abelian_table({3, 4})));
    CHECK_FALSE(tables_equivalent(abelian_table({4}), abelian_table({2, 2})));
}

TEST_CASE("dihedral closed forms") {
    for (long m = 3; m <= 15; ++m) {
        CharacterTable t = dihedral_table(m);
        std::size_t expect = m % 2 == 1 ? static_cast<std::size_t>((m + 3) / 2)
                                        : static_cast<std::size_t>(m / 2 + 3);
        CHECK(t.rows() == expect);
        CHECK(t.group_order == 2 * m);
        CHECK(table_valid(t));
    }
    // D_26 values live in the real subfield of Q_13 and the rationals
    CharacterTable d26 = dihedral_table(13);
    CHECK(d26.rows() == 8);
    for (const auto& row : d26.values)
        for (const auto& v : row) CHECK(13 % v.conductor() == 0);
}

TEST_CASE("direct products") {
    CharacterTable t = direct_product_table(dihedral_table(3), abelian_table({5}));
    CHECK(t.group_order == 30);
    CHECK(t.rows() == 15);
    CHECK(table_valid(t));

    CHECK(tables_equivalent(direct_product_table(abelian_table({2}), abelian_table({3})),
                       abelian_table({6})));
}

TEST_CASE("extraspecial central order data") {
    ExtraspecialData e = extraspecial_central_order(3, 1);
    CHECK(e.group_order == 81);
    CHECK(e.field.conductor == 9);
    for (const auto& g : e.generators) CHECK(9 % g.conductor() == 0);

    CHECK(extraspecial_central_order(7, 1).group_order == 2401);
    CHECK(extraspecial_central_order(3, 2).group_order == 729);
    CHECK_THROWS_AS(extraspecial_central_order(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(extraspecial_central_order(4, 1), std::invalid_argument);
}

TEST_CASE("alternating partition data") {
    auto pd12 = an_partition_data(12);
    REQUIRE(pd12.size() == 3);
    std::set<long> dvals;
    for (const auto& p : pd12) {
        CHECK(std::accumulate(p.parts.begin(), p.parts.end(), 0L) == 12);
        dvals.insert(p.d);
    }
    CHECK(dvals == std::set<long>{-11, -27, -35});
    for (const auto& p : pd12)
        if (p.d == -27) {
            CHECK(p.d_kernel == -3);
            CHECK(p.e == 3);
        }

    for (long n : {5, 8, 11, 15, 20}) {
        for (const auto& p : an_partition_data(n)) {
            long prev = 1L << 30;
            for (long part : p.parts) {
                CHECK(part % 2 == 1);
                CHECK(part < prev);
                prev = part;
            }
            CHECK(std::accumulate(p.parts.begin(), p.parts.end(), 0L) == n);
            CHECK(mod_l(p.d, 4) == 1);
            CHECK(p.d == p.e * p.e * p.d_kernel);
        }
    }
    // partitions into distinct odd parts: 4 of them for n = 15
    CHECK(an_partition_data(15).size() == 4);
}

TEST_CASE("alternating field basis") {
    SquareClassSpace v4 = an_field_basis(4);
    CHECK(v4.prime_stars == std::vector<long>{-3});
    CHECK(v4.basis.size() == 1);

    SquareClassSpace v12 = an_field_basis(12);
    CHECK(v12.prime_stars == std::vector<long>{-3, 5, -7, -11});
    CHECK(v12.basis.size() == 3);

    // degree 25 uses all odd primes up to n except n - 2
    SquareClassSpace v25 = an_field_basis(25);
    CHECK(v25.prime_stars == std::vector<long>{-3, 5, -7, -11, 13, 17, -19});
    CHECK(v25.basis.size() == 7);
}
