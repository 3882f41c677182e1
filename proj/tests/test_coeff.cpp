#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubhom/coeff.hpp"

using namespace cubhom;

namespace {

CubicalMap interval_to_point() {
    CubicalSetFin h1 = standard_cube(1);
    CubicalSetFin pt = standard_cube(0);
    std::map<std::string, CubeRef> assign{{"0", pt.nondeg_ref("*")},
                                          {"1", pt.nondeg_ref("*")},
                                          {"x1", CubeRef{1, {1}, "*"}}};
    return CubicalMap::create(h1, pt, assign);
}

}  // namespace

TEST_CASE("constant systems validate on several bases") {
    CHECK_NOTHROW(constant_system(standard_cube(0), FpAbGroup::free_group(1), 4));
    CHECK_NOTHROW(constant_system(standard_cube(1), FpAbGroup::cyclic(2), 3));
    CHECK_NOTHROW(constant_system(standard_cube(2), FpAbGroup::free_group(2), 3));
    ContraSystem f =
        constant_system(product(standard_cube(1), standard_cube(1)), FpAbGroup::free_group(1), 3);
    CHECK_FALSE(validate_functoriality(f).has_value());
}

TEST_CASE("split identity holds in valid systems") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem f = constant_system(h1, FpAbGroup::cyclic(6), 3);
    for (int n = 0; n + 1 <= f.cap(); ++n)
        for (const auto& c : h1.cubes(n))
            for (int i = 1; i <= n + 1; ++i) {
                GroupHom comp =
                    compose(f.face_map(h1.ez_degeneracy(c, i), i, 0), f.degeneracy_map(c, i));
                CHECK(comp.equal_as_homs(GroupHom::identity(f.value(c))));
            }
}

TEST_CASE("a deliberately broken system is rejected with a (3) witness") {
    CubicalSetFin h2 = standard_cube(2);
    ContraSystem good = constant_system(h2, FpAbGroup::free_group(1), 2);
    auto fmaps = good.face_maps();
    auto key = std::make_tuple(h2.nondeg_ref("x1,x2"), 1, 0);
    GroupHom h = fmaps.at(key);
    h.matrix.at(0, 0) = -1;
    fmaps.at(key) = h;
    try {
        table_system(h2, 2, good.values(), fmaps, good.degeneracy_maps());
        FAIL("expected a functoriality violation");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("(3)") != std::string::npos);
        CHECK(std::string(e.what()).find("x1,x2") != std::string::npos);
    }
}

TEST_CASE("missing entries are reported") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem good = constant_system(h1, FpAbGroup::free_group(1), 2);
    auto values = good.values();
    values.erase(CubeRef{2, {1, 2}, "0"});
    CHECK_THROWS_WITH_AS(table_system(h1, 2, values, good.face_maps(), good.degeneracy_maps()),
                         doctest::Contains("missing value"), ValidationError);
    auto dmaps = good.degeneracy_maps();
    dmaps.erase(std::make_pair(h1.nondeg_ref("x1"), 1));
    CHECK_THROWS_WITH_AS(table_system(h1, 2, good.values(), good.face_maps(), dmaps),
                         doctest::Contains("missing degeneracy"), ValidationError);
}

TEST_CASE("twist by units: identity, sign, involution") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem f = constant_system(h1, FpAbGroup::free_group(1), 2);

    ContraSystem same = twist(f, {});
    for (const auto& [key, h] : same.face_maps()) CHECK(h.matrix == f.face_map(std::get<0>(key), std::get<1>(key), std::get<2>(key)).matrix);

    // flip the sign over one vertex: a valid local system with some -1 maps
    UnitTwist u;
    IntMatrix minus(1, 1);
    minus.at(0, 0) = -1;
    u[h1.nondeg_ref("0")] = minus;
    ContraSystem tw = twist(f, u);
    CHECK_FALSE(validate_functoriality(tw).has_value());
    bool some_negative = false;
    for (const auto& [key, h] : tw.face_maps())
        if (h.matrix.at(0, 0) == -1) some_negative = true;
    CHECK(some_negative);

    // twisting back with the same involutive unit restores the tables
    ContraSystem back = twist(tw, u);
    for (const auto& [key, h] : back.face_maps())
        CHECK(h.matrix == f.face_map(std::get<0>(key), std::get<1>(key), std::get<2>(key)).matrix);

    IntMatrix bad(1, 1);
    bad.at(0, 0) = 2;
    UnitTwist ub{{h1.nondeg_ref("0"), bad}};
    CHECK_THROWS_AS(twist(f, ub), ValidationError);
}

TEST_CASE("pullback along the identity and to a point") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem f = constant_system(h1, FpAbGroup::cyclic(4), 2);
    ContraSystem same = pullback(CubicalMap::identity(h1), f);
    CHECK(same.values().size() == f.values().size());
    for (const auto& [c, g] : same.values()) CHECK(g.same_presentation(f.value(c)));

    // pulling back any system on the point gives the value at the matching
    // degenerate cube of the point
    ContraSystem rep = representable_point_system(1, 3);
    CubicalMap collapse = interval_to_point();
    ContraSystem pulled = pullback(collapse, rep);
    CubicalSetFin pt = standard_cube(0);
    for (int n = 0; n <= 3; ++n)
        for (const auto& c : h1.cubes(n))
            CHECK(pulled.value(c).same_presentation(rep.value(pt.cubes(n).at(0))));
    CHECK_FALSE(validate_functoriality(pulled).has_value());
}

TEST_CASE("representable point system has non-isomorphism maps") {
    ContraSystem rep = representable_point_system(1, 3);
    CubicalSetFin pt = standard_cube(0);
    // values are free of rank |hom(I^k, I^1)| = k + 2
    for (int k = 0; k <= 3; ++k)
        CHECK(rep.value(pt.cubes(k).at(0)).gens() == k + 2);
    GroupHom d = rep.face_map(pt.cubes(1).at(0), 1, 0);
    CHECK_FALSE(d.isomorphism_presented());
}

TEST_CASE("direct sums of systems validate") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem a = constant_system(h1, FpAbGroup::free_group(1), 2);
    ContraSystem b = constant_system(h1, FpAbGroup::cyclic(2), 2);
    ContraSystem s = direct_sum_systems(a, b);
    CHECK(s.value(h1.nondeg_ref("x1")).gens() == 2);
    CHECK_FALSE(validate_functoriality(s).has_value());
}
