#pragma once

#include <string>
#include <vector>

#include "cubhom/int_linalg.hpp"

namespace cubhom {

/// Canonical description of a finitely generated abelian group:
/// Z^free_rank + Z/d1 + ... + Z/dt with d1 | d2 | ... and each di >= 2.
struct InvariantFactors {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const InvariantFactors& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const InvariantFactors& o) const { return !(*this == o); }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Compact rendering: "0", "Z", "Z^2+Z/2", ...
    std::string to_string() const;
};

/// Finitely presented abelian group: Z^gens modulo the lattice spanned by
/// the columns of the relation matrix (gens rows).
class FpAbGroup {
public:
    FpAbGroup() : gens_(0), relations_(0, 0), lattice_(0, 0) {}
    FpAbGroup(int gens, IntMatrix relations);

    static FpAbGroup free_group(int gens) { return FpAbGroup(gens, IntMatrix(gens, 0)); }
    static FpAbGroup trivial() { return free_group(0); }
    static FpAbGroup cyclic(const Int& n);
    static FpAbGroup direct_sum(const std::vector<FpAbGroup>& parts);

    int gens() const { return gens_; }
    const IntMatrix& relations() const { return relations_; }
    /// Canonical Hermite form of the relation lattice.
    const IntMatrix& relation_lattice() const { return lattice_; }

    InvariantFactors invariant_factors() const;
    bool contains_in_relations(const std::vector<Int>& v) const {
        return lattice_member(lattice_, v);
    }
    /// Same generator count and same relation lattice.
    bool same_presentation(const FpAbGroup& o) const {
        return gens_ == o.gens_ && lattice_ == o.lattice_;
    }

private:
    int gens_;
    IntMatrix relations_;
    IntMatrix lattice_;
};

/// Homomorphism between presented groups, given on generators.
struct GroupHom {
    FpAbGroup source, target;
    IntMatrix matrix;  // target.gens x source.gens

    GroupHom() = default;
    GroupHom(FpAbGroup src, FpAbGroup tgt, IntMatrix m);

    static GroupHom identity(const FpAbGroup& g);
    static GroupHom zero(const FpAbGroup& src, const FpAbGroup& tgt);

    /// True iff the matrix carries the source relation lattice into the
    /// target relation lattice, so the map descends to the groups.
    bool well_defined() const;
    /// Generators of { x in Z^src.gens : matrix*x lies in the target
    /// relation lattice }, canonical form.  Contains the source relations.
    IntMatrix kernel_lattice() const;
    /// Generators of the image subgroup pulled back to Z^tgt.gens: the
    /// matrix columns together with the target relations, canonical form.
    IntMatrix image_lattice() const;

    bool is_zero_map() const;
    /// Equality as maps of presented groups (columns agree modulo the
    /// target relation lattice).
    bool equal_as_homs(const GroupHom& o) const;

    bool injective_presented() const;
    bool surjective_presented() const;
    bool isomorphism_presented() const { return injective_presented() && surjective_presented(); }
};

GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Quotient of G by the subgroup generated by the given columns.
FpAbGroup quotient(const FpAbGroup& g, const IntMatrix& sub_columns);

/// The subgroup of G generated by the given columns, presented abstractly
/// on those columns as generators.
FpAbGroup subgroup_presentation(const FpAbGroup& g, const IntMatrix& columns);

}  // namespace cubhom
