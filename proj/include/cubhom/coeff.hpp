#pragma once

#include <map>
#include <optional>

#include "cubhom/abelian.hpp"
#include "cubhom/cubical_set.hpp"

namespace cubhom {

/// First functoriality violation found: which relation of the cube
/// category it instantiates, where, and the two generator paths compared.
struct Violation {
    std::string relation;  // "(3)", "(4)", "(5)"
    CubeRef cube;          // the cube the paths start from
    int i = 0, j = 0, alpha = 0, beta = 0;
    std::string detail;

    std::string to_string() const;
};

/// Contravariant system of finitely presented abelian groups on a cubical
/// set: one value group per cube through dimension `cap`, one map per
/// generating morphism of the category of cubes over the set.  Face maps
/// run F(y) -> F(face of y); degeneracy maps run F(x) -> F(degeneracy of x).
class ContraSystem {
public:
    using FaceKey = std::tuple<CubeRef, int, int>;  // (y, i, tau), dim y in 1..cap
    using DegKey = std::pair<CubeRef, int>;         // (x, i), dim x in 0..cap-1

    ContraSystem() = default;

    const CubicalSetFin& base() const { return base_; }
    int cap() const { return cap_; }
    const FpAbGroup& value(const CubeRef& c) const;
    const GroupHom& face_map(const CubeRef& y, int i, int tau) const;
    const GroupHom& degeneracy_map(const CubeRef& x, int i) const;

    const std::map<CubeRef, FpAbGroup>& values() const { return values_; }
    const std::map<FaceKey, GroupHom>& face_maps() const { return face_maps_; }
    const std::map<DegKey, GroupHom>& degeneracy_maps() const { return degeneracy_maps_; }

    friend ContraSystem table_system(const CubicalSetFin& x, int cap,
                                     std::map<CubeRef, FpAbGroup> values,
                                     std::map<FaceKey, GroupHom> face_maps,
                                     std::map<DegKey, GroupHom> degeneracy_maps);

private:
    CubicalSetFin base_;
    int cap_ = 0;
    std::map<CubeRef, FpAbGroup> values_;
    std::map<FaceKey, GroupHom> face_maps_;
    std::map<DegKey, GroupHom> degeneracy_maps_;
};

/// Every value G, every generator map the identity.
ContraSystem constant_system(const CubicalSetFin& x, const FpAbGroup& g, int cap);

/// Fully general system from explicit tables.  Checks coverage, that every
/// map is well defined, and functoriality over all relation instances
/// realizable through the cap; throws ValidationError carrying the first
/// violation.
ContraSystem table_system(const CubicalSetFin& x, int cap, std::map<CubeRef, FpAbGroup> values,
                          std::map<ContraSystem::FaceKey, GroupHom> face_maps,
                          std::map<ContraSystem::DegKey, GroupHom> degeneracy_maps);

/// Exhaustive functoriality check; nullopt when the system is a functor.
std::optional<Violation> validate_functoriality(const ContraSystem& f);

/// Per-cube automorphisms of the value groups; missing entries mean the
/// identity.
using UnitTwist = std::map<CubeRef, IntMatrix>;

/// Conjugates every generator map by the unit: h becomes u_b h u_a^{-1}.
/// The result is naturally isomorphic to the input.
ContraSystem twist(const ContraSystem& f, const UnitTwist& u);

/// System on the source of a cubical map with value F(f(x)) at x.
ContraSystem pullback(const CubicalMap& f, const ContraSystem& sys);

/// Cubewise direct sum of two systems on the same base and cap.
ContraSystem direct_sum_systems(const ContraSystem& a, const ContraSystem& b);

/// The system on the one-point cubical set whose value at the k-fold
/// degenerate cube is the free group on the cube-category morphisms
/// I^k -> I^r, with generator maps acting by precomposition.  A compact
/// source of systems whose maps are not isomorphisms.
ContraSystem representable_point_system(int r, int cap);

}  // namespace cubhom
