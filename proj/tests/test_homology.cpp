#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubhom/homology.hpp"

using namespace cubhom;

namespace {

std::set<std::string> arc1() { return {"0,x1", "x1,1", "0,0", "0,1", "1,1"}; }
std::set<std::string> arc2() { return {"1,x1", "x1,0", "0,0", "1,0", "1,1"}; }

InvariantFactors z_factors(int rank) {
    InvariantFactors f;
    f.free_rank = rank;
    return f;
}

CubicalMap interval_to_point() {
    CubicalSetFin h1 = standard_cube(1);
    CubicalSetFin pt = standard_cube(0);
    std::map<std::string, CubeRef> assign{{"0", pt.nondeg_ref("*")},
                                          {"1", pt.nondeg_ref("*")},
                                          {"x1", CubeRef{1, {1}, "*"}}};
    return CubicalMap::create(h1, pt, assign);
}

}  // namespace

TEST_CASE("chain group sizes") {
    ContraSystem on_point = constant_system(standard_cube(0), FpAbGroup::free_group(1), 2);
    auto [g0, idx0] = chain_group(on_point, 0);
    CHECK(g0.gens() == 1);
    CHECK(g0.invariant_factors() == z_factors(1));

    CubicalSetFin p = product(standard_cube(1), standard_cube(1));
    ContraSystem on_p = constant_system(p, FpAbGroup::free_group(1), 2);
    auto [g1, idx1] = chain_group(on_p, 1);
    CHECK(g1.gens() == 9);
    CHECK(g1.invariant_factors() == z_factors(9));

    ContraSystem z2_on_h1 = constant_system(standard_cube(1), FpAbGroup::cyclic(2), 2);
    auto [gz, idxz] = chain_group(z2_on_h1, 1);
    CHECK(gz.gens() == 3);
    auto fz = gz.invariant_factors();
    CHECK(fz.free_rank == 0);
    CHECK(fz.torsion == std::vector<Int>{Int(2), Int(2), Int(2)});
}

TEST_CASE("normalized terms of a constant system are free on nondegenerate cubes") {
    CubicalSetFin p = product(standard_cube(1), standard_cube(1));
    ContraSystem f = constant_system(p, FpAbGroup::free_group(1), 4);
    NormalizedComplexBundle b = normalized_complex(f, 3);
    int expected[] = {4, 5, 2, 0};
    for (int n = 0; n <= 3; ++n) {
        auto inv = b.normalized.term(n).invariant_factors();
        CHECK(inv.free_rank == expected[n]);
        CHECK(inv.torsion.empty());
    }
}

TEST_CASE("splitting of the chain group into normalized and degenerate parts") {
    CubicalSetFin h1 = standard_cube(1);
    for (const FpAbGroup& g :
         {FpAbGroup::free_group(1), FpAbGroup::cyclic(4),
          FpAbGroup::direct_sum({FpAbGroup::free_group(1), FpAbGroup::cyclic(2)})}) {
        ContraSystem f = constant_system(h1, g, 3);
        NormalizedComplexBundle b = normalized_complex(f, 2);
        for (int n = 0; n <= 2; ++n) {
            FpAbGroup degen_part = subgroup_presentation(b.raw.term(n), b.degen[n]);
            auto split = FpAbGroup::direct_sum({b.normalized.term(n), degen_part});
            CHECK(split.invariant_factors() == b.raw.term(n).invariant_factors());
        }
    }
}

TEST_CASE("degenerate chains map into degenerate chains") {
    CubicalSetFin p = product(standard_cube(1), standard_cube(1));
    ContraSystem f = constant_system(p, FpAbGroup::cyclic(6), 3);
    NormalizedComplexBundle b = normalized_complex(f, 2);
    for (int n = 1; n <= b.top; ++n) {
        IntMatrix target = b.raw.term(n - 1).relations().hcat(b.degen[n - 1]);
        for (int c = 0; c < b.degen[n].cols(); ++c)
            CHECK(solve(target, b.raw.diff(n).matrix.apply(b.degen[n].column(c))).has_value());
    }
}

TEST_CASE("homology of the square product: Z, Z, Z, 0") {
    CubicalSetFin p = product(standard_cube(1), standard_cube(1));
    ContraSystem f = constant_system(p, FpAbGroup::free_group(1), 4);
    auto hs = homology_upto(f, 3);
    CHECK(hs[0].group == z_factors(1));
    CHECK(hs[1].group == z_factors(1));
    CHECK(hs[2].group == z_factors(1));
    CHECK(hs[3].group.is_trivial());
}

TEST_CASE("homology of a point with coefficients Z + Z/4") {
    FpAbGroup g = FpAbGroup::direct_sum({FpAbGroup::free_group(1), FpAbGroup::cyclic(4)});
    ContraSystem f = constant_system(standard_cube(0), g, 2);
    auto h0 = homology(f, 0);
    CHECK(h0.group == g.invariant_factors());
    CHECK(homology(f, 1).group.is_trivial());
}

TEST_CASE("standard cubes are acyclic for constant and twisted systems") {
    std::mt19937_64 rng(1145);
    for (int k = 0; k <= 2; ++k) {
        CubicalSetFin h = standard_cube(k);
        int cap = k + 2;
        ContraSystem fz = constant_system(h, FpAbGroup::free_group(1), cap);
        auto hs = homology_upto(fz, k + 1);
        CHECK(hs[0].group == z_factors(1));
        for (int n = 1; n <= k + 1; ++n) CHECK(hs[n].group.is_trivial());

        // one random sign twist per cube
        UnitTwist u;
        for (int n = 0; n <= cap; ++n)
            for (const auto& c : h.cubes(n)) {
                IntMatrix m(1, 1);
                m.at(0, 0) = rng() % 2 == 0 ? 1 : -1;
                u[c] = m;
            }
        ContraSystem tw = twist(fz, u);
        auto ht = homology_upto(tw, k + 1);
        CHECK(ht[0].group == z_factors(1));
        for (int n = 1; n <= k + 1; ++n) CHECK(ht[n].group.is_trivial());
    }
}

TEST_CASE("twist leaves homology invariant on the square product") {
    CubicalSetFin p = product(standard_cube(1), standard_cube(1));
    ContraSystem f = constant_system(p, FpAbGroup::free_group(1), 3);
    std::mt19937_64 rng(77);
    UnitTwist u;
    for (int n = 0; n <= 3; ++n)
        for (const auto& c : p.cubes(n)) {
            IntMatrix m(1, 1);
            m.at(0, 0) = rng() % 2 == 0 ? 1 : -1;
            u[c] = m;
        }
    ContraSystem tw = twist(f, u);
    for (int n = 0; n <= 2; ++n) CHECK(homology(tw, n).group == homology(f, n).group);
}

TEST_CASE("the representable system on the point matches the injective complex") {
    // the normalized complex of the point with these coefficients is the
    // complex of injective morphisms into I^r
    for (int r = 0; r <= 2; ++r) {
        ContraSystem rep = representable_point_system(r, r + 2);
        auto hs = homology_upto(rep, r + 1);
        CHECK(hs[0].group == z_factors(1));
        for (int n = 1; n <= r + 1; ++n) CHECK(hs[n].group.is_trivial());
    }
}

TEST_CASE("canonical map along the identity is the identity") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem f = constant_system(h1, FpAbGroup::free_group(1), 2);
    GroupHom h = canonical_map(CubicalMap::identity(h1), f, 0);
    CHECK(h.isomorphism_presented());
    CHECK(h.equal_as_homs(GroupHom::identity(h.source)));
}

TEST_CASE("canonical map of a vertex inclusion is an isomorphism on H0") {
    CubicalSetFin h1 = standard_cube(1);
    Subobject v = subobject(h1, {"0"});
    ContraSystem f = constant_system(h1, FpAbGroup::free_group(1), 2);
    GroupHom h = canonical_map(v.inclusion, f, 0);
    CHECK(h.source.invariant_factors() == z_factors(1));
    CHECK(h.target.invariant_factors() == z_factors(1));
    CHECK(h.isomorphism_presented());
}

TEST_CASE("canonical map respects composition of cubical maps") {
    CubicalSetFin h2 = standard_cube(2);
    auto bd = subobject(h2, {"0,x1", "0,0", "0,1"});
    auto mid = subobject(h2, {"0,x1", "x1,1", "0,0", "0,1", "1,1"});
    std::map<std::string, CubeRef> up1, up2;
    for (int m = 0; m <= bd.set.dim_cap(); ++m)
        for (const auto& id : bd.set.nondeg(m)) up1[id] = mid.set.nondeg_ref(id);
    CubicalMap f = CubicalMap::create(bd.set, mid.set, up1);
    ContraSystem sys_mid = constant_system(mid.set, FpAbGroup::free_group(1), 2);
    ContraSystem sys_h2 = constant_system(h2, FpAbGroup::free_group(1), 2);

    GroupHom via_f = canonical_map(f, sys_mid, 0);
    GroupHom via_g = canonical_map(mid.inclusion, sys_h2, 0);
    GroupHom direct = canonical_map(compose(mid.inclusion, f), sys_h2, 0);
    CHECK(compose(via_g, via_f).equal_as_homs(direct));
}

TEST_CASE("the interval-to-point map fails the acyclic-fibers criterion") {
    CubicalMap f = interval_to_point();
    InverseImage inv = inverse_image(f, CubeRef{1, {1}, "*"});
    ContraSystem fz = constant_system(inv.set, FpAbGroup::free_group(1), 3);
    auto h2 = homology(fz, 2);
    CHECK(h2.group == z_factors(1));  // nonzero, so the criterion fails
}

TEST_CASE("mayer-vietoris with both subobjects equal") {
    CubicalSetFin h1 = standard_cube(1);
    std::set<std::string> all{"0", "1", "x1"};
    auto uni = sub_union(h1, all, all);
    ContraSystem f = constant_system(uni.set, FpAbGroup::free_group(1), 3);
    MVResult mv = mayer_vietoris(h1, all, all, f, 1);
    CHECK(mv.snake.all_exact);
    for (int q = 1; q <= mv.snake.n_max + 1; ++q) CHECK(mv.snake.connecting[q].is_zero_map());
    // the intersection maps diagonally into the two pieces
    CHECK(mv.snake.h_sub[0].group == z_factors(1));
    CHECK(mv.snake.h_total[0].group == z_factors(2));
}

TEST_CASE("mayer-vietoris reconstructs the circle from two arcs") {
    CubicalSetFin h2 = standard_cube(2);
    auto uni = sub_union(h2, arc1(), arc2());

    for (bool torsion : {false, true}) {
        FpAbGroup g = torsion ? FpAbGroup::cyclic(2) : FpAbGroup::free_group(1);
        ContraSystem f = constant_system(uni.set, g, 4);
        MVResult mv = mayer_vietoris(h2, arc1(), arc2(), f, 2);
        CHECK(mv.snake.all_exact);

        auto gi = g.invariant_factors();
        // circle homology with these coefficients
        CHECK(mv.snake.h_quot[0].group == gi);
        CHECK(mv.snake.h_quot[1].group == gi);
        CHECK(mv.snake.h_quot[2].group.is_trivial());
        // two contractible arcs and a two-point intersection
        CHECK(mv.snake.h_sub[0].group == FpAbGroup::direct_sum({g, g}).invariant_factors());
        CHECK(mv.snake.h_sub[1].group.is_trivial());
        CHECK(mv.snake.h_total[0].group == FpAbGroup::direct_sum({g, g}).invariant_factors());
        CHECK(mv.snake.h_total[1].group.is_trivial());
        // the connecting map H1(union) -> H0(intersection) is nonzero
        CHECK_FALSE(mv.snake.connecting[1].is_zero_map());
    }
}

TEST_CASE("degree window: homology needs the cap it asks for") {
    CubicalSetFin h1 = standard_cube(1);
    ContraSystem f = constant_system(h1, FpAbGroup::free_group(1), 2);
    CHECK_NOTHROW(homology(f, 1));
    CHECK_THROWS_AS(homology(f, 2), std::invalid_argument);
}
