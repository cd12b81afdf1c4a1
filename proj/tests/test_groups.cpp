#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charlat/dixon.hpp>
#include <charlat/families.hpp>
#include <charlat/fields.hpp>

using namespace charlat;

namespace {

PermGroup s3() {
    return PermGroup{3, {Perm::from_cycles("(0,1)", 3), Perm::from_cycles("(0,1,2)", 3)}};
}

PermGroup a5() {
    return PermGroup{5, {Perm::from_cycles("(0,1,2)", 5), Perm::from_cycles("(2,3,4)", 5)}};
}

bool tables_equal(const CharacterTable& a, const CharacterTable& b) {
    if (a.group_order != b.group_order || a.cols() != b.cols()) return false;
    if (a.classes.sizes != b.classes.sizes) return false;
    if (a.classes.element_orders != b.classes.element_orders) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a.values[i][j] == b.values[i][j])) return false;
    return true;
}

}  // namespace

TEST_CASE("permutation basics") {
    Perm p = Perm::from_cycles("(0,1)(2,5)", 6);
    CHECK(p(0) == 1);
    CHECK(p(2) == 5);
    CHECK(p(3) == 3);
    CHECK(p.to_cycles() == "(0,1)(2,5)");
    CHECK(p.order() == 2);
    CHECK((p * p).is_identity());
    Perm c = Perm::from_cycles("(0,1,2,3)", 4);
    CHECK(c.order() == 4);
    CHECK(c.power(3) == c.inverse());
    CHECK(Perm(4).to_cycles() == "()");
    CHECK_THROWS_AS(Perm::from_cycles("(0,4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Perm(std::vector<long>{0, 0}), std::invalid_argument);
}

TEST_CASE("group orders") {
    CHECK(order(s3()) == 6);
    CHECK(order(a5()) == 60);
    CHECK(order(c4c4_c3_group()) == 48);
    CHECK(order(c15_d16_group()) == 240);
    CHECK(order(c15_d16_group_alt()) == 240);
    CHECK(order(quaternion_group()) == 8);
    CHECK(order(psl2_group(4)) == 60);
    CHECK(order(psl2_group(5)) == 60);
    CHECK(order(psl2_group(7)) == 168);
    CHECK(order(psl2_group(8)) == 504);
    CHECK(order(psl2_group(9)) == 360);
    CHECK(order(psl2_group(11)) == 660);
    CHECK(order(psl2_group(13)) == 1092);
    CHECK(order(psl33_group()) == 5616);
    CHECK(order(dihedral_group(8)) == 16);
}

TEST_CASE("element enumeration") {
    CHECK(enumerate_elements(s3()).size() == 6);
    CHECK(enumerate_elements(c4c4_c3_group()).size() == 48);
}

TEST_CASE("conjugacy classes") {
    ClassData d = conjugacy_classes(s3());
    REQUIRE(d.count() == 3);
    CHECK(d.sizes[0] == 1);
    std::multiset<long> sizes;
    for (const auto& s : d.sizes) sizes.insert(s.get_si());
    CHECK(sizes == std::multiset<long>{1, 2, 3});
    CHECK(d.exponent == 6);

    CHECK(conjugacy_classes(dihedral_group(8)).count() == 7);

    // power map composition: rep^(a+b) lands in the class of (rep^a)^b
    for (const auto& g : {s3(), dihedral_group(6), quaternion_group()}) {
        ClassData c = conjugacy_classes(g);
        for (std::size_t j = 0; j < c.count(); ++j)
            for (long a = 0; a < c.exponent; ++a) {
                long via = c.power_maps[a][j];
                for (long b : {2L, 3L})
                    CHECK(c.power_maps[mod_l(a * b, c.exponent)][j] ==
                          c.power_maps[mod_l(b, c.exponent)][via]);
            }
    }
}

TEST_CASE("dixon small groups") {
    CharacterTable t = dixon_table(s3());
    validate_table(t);
    std::vector<Int> want{1, 1, 2};
    CHECK(t.degrees() == want);
    for (const auto& row : t.values)
        for (const auto& v : row) CHECK(v.is_rational());

    CharacterTable q8 = dixon_table(quaternion_group());
    validate_table(q8);
    std::vector<Int> wq{1, 1, 1, 1, 2};
    CHECK(q8.degrees() == wq);
}

TEST_CASE("dixon c4c4_c3 value") {
    CharacterTable t = dixon_table(c4c4_c3_group());
    validate_table(t);
    // the degree-3 characters take the value -1 + 2i on order-4 classes,
    // so 2i = (value + 1) generates together with E(3); ring equality with
    // Z[2i, E(3)] is the quotient test in the orders suite
    Cyclotomic twoi = Cyclotomic(2) * Cyclotomic::root_of_unity(4);
    bool found = false;
    for (const auto& row : t.values)
        for (const auto& v : row)
            if (v + Cyclotomic(1) == twoi || v + Cyclotomic(1) == twoi.conjugate())
                found = true;
    CHECK(found);
}

TEST_CASE("dixon matches closed forms") {
    for (long n : {2L, 3L, 4L, 5L, 6L, 8L}) {
        PermGroup c;
        c.degree = n;
        std::vector<long> img(n);
        for (long i = 0; i < n; ++i) img[i] = (i + 1) % n;
        c.generators = {Perm(std::move(img))};
        CHECK(tables_equal(dixon_table(c), abelian_table({n})));
    }
    for (long m : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L})
        CHECK(tables_equal(dixon_table(dihedral_group(m)), dihedral_table(m)));
}

TEST_CASE("dixon class count consistency") {
    PermGroup g = c15_d16_group();
    ClassData d = conjugacy_classes(g);
    CharacterTable t = dixon_table(g);
    CHECK(t.rows() == d.count());
    validate_table(t);
}

TEST_CASE("normalizer data") {
    NormalizerData nd = cyclic_normalizer_data(s3(), Perm::from_cycles("(0,1,2)", 3));
    CHECK(nd.normalizer_order == 6);
    CHECK(nd.centralizer_order == 3);
    CHECK(nd.cyclic_order == 3);

    NormalizerData ni = cyclic_normalizer_data(s3(), Perm(3));
    CHECK(ni.normalizer_order == 6);
    CHECK(ni.centralizer_order == 6);
    CHECK(ni.cyclic_order == 1);

    // abelian group: normalizer = centralizer = everything
    PermGroup c6{6, {Perm::from_cycles("(0,1,2,3,4,5)", 6)}};
    for (const auto& x : enumerate_elements(c6)) {
        NormalizerData na = cyclic_normalizer_data(c6, x);
        CHECK(na.normalizer_order == 6);
        CHECK(na.centralizer_order == 6);
    }
}

TEST_CASE("navarro degree identity") {
    for (const auto& g : {s3(), dihedral_group(8), c4c4_c3_group(), quaternion_group(),
                          psl2_group(5)}) {
        CharacterTable t = dixon_table(g);
        for (std::size_t j = 0; j < t.cols(); ++j) {
            std::vector<Cyclotomic> col;
            for (std::size_t i = 0; i < t.rows(); ++i) col.push_back(t.values[i][j]);
            AbelianField qg = field_of_values(col);
            long o = t.classes.element_orders[j];
            long gal_degree = euler_phi_l(o) / qg.degree();
            NormalizerData nd = cyclic_normalizer_data(g, t.classes.reps[j]);
            CHECK(nd.normalizer_order / nd.centralizer_order == gal_degree);
        }
    }
}

TEST_CASE("enumeration bound") {
    // PSL(3,3) has 5616 elements, fine; a tightened env bound must trip
    setenv("CHARLAT_ENUM_BOUND", "100", 1);
    CHECK_THROWS_AS(enumerate_elements(psl2_group(7)), EnumBoundExceeded);
    unsetenv("CHARLAT_ENUM_BOUND");
    CHECK(enumerate_elements(psl2_group(7)).size() == 168);
}
