#include "cubhom/abelian.hpp"

#include <sstream>

namespace cubhom {

std::string InvariantFactors::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << "+";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FpAbGroup::FpAbGroup(int gens, IntMatrix relations)
    : gens_(gens), relations_(std::move(relations)) {
    if (relations_.rows() != gens_)
        throw std::invalid_argument("FpAbGroup: relation matrix must have one row per generator");
    lattice_ = lattice_canonical(relations_);
}

FpAbGroup FpAbGroup::cyclic(const Int& n) {
    IntMatrix rel(1, 1);
    rel.at(0, 0) = n;
    return FpAbGroup(1, rel);
}

FpAbGroup FpAbGroup::direct_sum(const std::vector<FpAbGroup>& parts) {
    int gens = 0;
    std::vector<IntMatrix> rels;
    for (const auto& p : parts) {
        gens += p.gens();
        rels.push_back(p.relations());
    }
    return FpAbGroup(gens, block_diagonal(rels));
}

InvariantFactors FpAbGroup::invariant_factors() const {
    std::vector<Int> d = smith_diagonal(relations_);
    InvariantFactors f;
    int rank = 0;
    for (const auto& x : d) {
        if (x == 0) continue;
        ++rank;
        if (x >= 2) f.torsion.push_back(x);
    }
    f.free_rank = gens_ - rank;
    return f;
}

GroupHom::GroupHom(FpAbGroup src, FpAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.gens() || matrix.cols() != source.gens())
        throw std::invalid_argument("GroupHom: matrix shape must be target.gens x source.gens");
}

GroupHom GroupHom::identity(const FpAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.gens()));
}

GroupHom GroupHom::zero(const FpAbGroup& src, const FpAbGroup& tgt) {
    return GroupHom(src, tgt, IntMatrix(tgt.gens(), src.gens()));
}

bool GroupHom::well_defined() const {
    IntMatrix mapped = matrix * source.relations();
    return solve_columns(target.relation_lattice(), mapped).has_value();
}

IntMatrix GroupHom::kernel_lattice() const {
    // x with matrix*x in the target lattice: project the kernel of
    // [matrix | target relations] onto the first block.
    IntMatrix stacked = matrix.hcat(target.relations());
    IntMatrix k = integer_kernel(stacked);
    return lattice_canonical(k.block(0, 0, source.gens(), k.cols()));
}

IntMatrix GroupHom::image_lattice() const {
    return lattice_sum(matrix, target.relations());
}

bool GroupHom::is_zero_map() const {
    return solve_columns(target.relation_lattice(), matrix).has_value();
}

bool GroupHom::equal_as_homs(const GroupHom& o) const {
    if (!source.same_presentation(o.source) || !target.same_presentation(o.target)) return false;
    IntMatrix diff = matrix - o.matrix;
    return solve_columns(target.relation_lattice(), diff).has_value();
}

bool GroupHom::injective_presented() const {
    return kernel_lattice() == source.relation_lattice();
}

bool GroupHom::surjective_presented() const {
    return image_lattice() == IntMatrix::identity(target.gens());
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!f.target.same_presentation(g.source))
        throw std::invalid_argument("compose: middle groups differ");
    return GroupHom(f.source, g.target, g.matrix * f.matrix);
}

FpAbGroup quotient(const FpAbGroup& g, const IntMatrix& sub_columns) {
    if (sub_columns.rows() != g.gens())
        throw std::invalid_argument("quotient: subgroup columns have wrong ambient rank");
    return FpAbGroup(g.gens(), g.relations().hcat(sub_columns));
}

FpAbGroup subgroup_presentation(const FpAbGroup& g, const IntMatrix& columns) {
    GroupHom span(FpAbGroup::free_group(columns.cols()), g, columns);
    return FpAbGroup(columns.cols(), span.kernel_lattice());
}

}  // namespace cubhom
