#pragma once

#include "cubhom/chain_complex.hpp"
#include "cubhom/coeff.hpp"

namespace cubhom {

/// Placement of each cube's value group inside a direct-sum chain group.
struct ComponentIndex {
    std::vector<CubeRef> order;       // canonical cube order of X_n
    std::map<CubeRef, int> offset;    // first generator index per cube
    int total = 0;

    int gens_of(const ContraSystem& f, const CubeRef& c) const { return f.value(c).gens(); }
};

/// C_n(X, F): the direct sum of the value groups over all cubes of X_n,
/// relations block-diagonal, components in canonical cube order.
std::pair<FpAbGroup, ComponentIndex> chain_group(const ContraSystem& f, int n);

/// Blockwise face operator C_n -> C_{n-1} at one index and sign.
IntMatrix face_operator_matrix(const ContraSystem& f, const ComponentIndex& from,
                               const ComponentIndex& to, int n, int i, int tau);
/// Blockwise degeneracy operator C_{n-1} -> C_n at one index.
IntMatrix degeneracy_operator_matrix(const ContraSystem& f, const ComponentIndex& from,
                                     const ComponentIndex& to, int n, int i);

/// The raw complex with its alternating-sum differentials, the degenerate
/// sublattices generated by the degeneracy-operator images, and the
/// normalized quotient complex.
struct NormalizedComplexBundle {
    ChainComplexFP raw;
    std::vector<IntMatrix> degen;  // canonical generators of D_n per degree
    ChainComplexFP normalized;
    std::vector<ComponentIndex> index;
    int top = 0;  // raw degrees run 0..top
};

/// Builds the bundle through raw degree n_max + 1.  Requires
/// f.cap() >= n_max + 1.  Aborts with a witness if some degenerate
/// generator's boundary leaves the degenerate subgroup, which signals an
/// invalid system.
NormalizedComplexBundle normalized_complex(const ContraSystem& f, int n_max);

/// Homology of the cubical set with coefficients in the system, through
/// the normalized complex.
HomologyResult homology(const ContraSystem& f, int n);
std::vector<HomologyResult> homology_upto(const ContraSystem& f, int n_max);

/// Chain map of normalized complexes sending the pulled-back component at
/// x identically onto the component at f(x).
ChainMap canonical_chain_map(const CubicalMap& f, const ContraSystem& sys_on_target,
                             const NormalizedComplexBundle& src,
                             const NormalizedComplexBundle& dst);

/// H_n(X, f*F) -> H_n(Y, F) induced by a cubical map.
GroupHom canonical_map(const CubicalMap& f, const ContraSystem& sys_on_target, int n);

struct MVResult {
    Subobject x1, x2, inter, uni;
    SnakeResult snake;
};

/// Mayer-Vietoris: split the union of the two face-closed subobjects,
/// build the levelwise sequence of normalized complexes
/// 0 -> C(inter) -> C(X1) + C(X2) -> C(union) -> 0 with maps (incl, -incl)
/// and incl + incl, check levelwise exactness, and run the snake lemma.
/// The system must live on the union subobject's set and have
/// cap >= n_max + 2.
MVResult mayer_vietoris(const CubicalSetFin& x, const std::set<std::string>& gens1,
                        const std::set<std::string>& gens2, const ContraSystem& f_on_union,
                        int n_max);

}  // namespace cubhom
