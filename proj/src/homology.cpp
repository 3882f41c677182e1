#include "cubhom/homology.hpp"

namespace cubhom {

std::pair<FpAbGroup, ComponentIndex> chain_group(const ContraSystem& f, int n) {
    if (n > f.cap()) throw std::invalid_argument("chain_group: degree exceeds the system cap");
    ComponentIndex idx;
    idx.order = f.base().cubes(n);
    std::vector<IntMatrix> rels;
    for (const auto& c : idx.order) {
        idx.offset[c] = idx.total;
        idx.total += f.value(c).gens();
        rels.push_back(f.value(c).relations());
    }
    return {FpAbGroup(idx.total, block_diagonal(rels)), idx};
}

IntMatrix face_operator_matrix(const ContraSystem& f, const ComponentIndex& from,
                               const ComponentIndex& to, int n, int i, int tau) {
    IntMatrix m(to.total, from.total);
    for (const auto& c : from.order) {
        const GroupHom& h = f.face_map(c, i, tau);
        int col0 = from.offset.at(c);
        int row0 = to.offset.at(f.base().ez_face(c, i, tau));
        for (int r = 0; r < h.matrix.rows(); ++r)
            for (int cc = 0; cc < h.matrix.cols(); ++cc)
                m.at(row0 + r, col0 + cc) = h.matrix.at(r, cc);
    }
    (void)n;
    return m;
}

IntMatrix degeneracy_operator_matrix(const ContraSystem& f, const ComponentIndex& from,
                                     const ComponentIndex& to, int n, int i) {
    IntMatrix m(to.total, from.total);
    for (const auto& c : from.order) {
        const GroupHom& h = f.degeneracy_map(c, i);
        int col0 = from.offset.at(c);
        int row0 = to.offset.at(f.base().ez_degeneracy(c, i));
        for (int r = 0; r < h.matrix.rows(); ++r)
            for (int cc = 0; cc < h.matrix.cols(); ++cc)
                m.at(row0 + r, col0 + cc) = h.matrix.at(r, cc);
    }
    (void)n;
    return m;
}

NormalizedComplexBundle normalized_complex(const ContraSystem& f, int n_max) {
    const int top = n_max + 1;
    if (f.cap() < top)
        throw std::invalid_argument("normalized_complex: system cap " + std::to_string(f.cap()) +
                                    " too small for degree " + std::to_string(n_max));
    NormalizedComplexBundle b;
    b.top = top;

    std::vector<FpAbGroup> raw_terms;
    b.index.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        auto [grp, idx] = chain_group(f, n);
        raw_terms.push_back(std::move(grp));
        b.index[n] = std::move(idx);
    }

    std::vector<IntMatrix> diffs(top + 1);
    for (int n = 1; n <= top; ++n) {
        IntMatrix d(b.index[n - 1].total, b.index[n].total);
        int sign = 1;
        for (int i = 1; i <= n; ++i) {
            sign = -sign;  // (-1)^i
            IntMatrix d0 = face_operator_matrix(f, b.index[n], b.index[n - 1], n, i, 0);
            IntMatrix d1 = face_operator_matrix(f, b.index[n], b.index[n - 1], n, i, 1);
            IntMatrix term = d0 - d1;
            for (int r = 0; r < d.rows(); ++r)
                for (int c = 0; c < d.cols(); ++c)
                    d.at(r, c) += sign > 0 ? term.at(r, c) : -term.at(r, c);
        }
        diffs[n] = std::move(d);
    }

    // degenerate sublattices: all columns of every degeneracy operator
    b.degen.resize(top + 1);
    b.degen[0] = IntMatrix(b.index[0].total, 0);
    for (int n = 1; n <= top; ++n) {
        IntMatrix gens(b.index[n].total, 0);
        for (int i = 1; i <= n; ++i)
            gens = gens.hcat(degeneracy_operator_matrix(f, b.index[n - 1], b.index[n], n, i));
        b.degen[n] = lattice_canonical(gens);
    }

    // degenerate chains stay degenerate under the differential; a failure
    // here means the supplied system was not a functor
    for (int n = 1; n <= top; ++n) {
        IntMatrix target = raw_terms[n - 1].relations().hcat(b.degen[n - 1]);
        for (int c = 0; c < b.degen[n].cols(); ++c) {
            std::vector<Int> img = diffs[n].apply(b.degen[n].column(c));
            if (!solve(target, img))
                throw ValidationError(
                    "normalized_complex: boundary of a degenerate chain leaves the degenerate "
                    "subgroup at degree " +
                    std::to_string(n) + ", generator " + std::to_string(c));
        }
    }

    std::vector<GroupHom> raw_homs(1);
    for (int n = 1; n <= top; ++n) raw_homs.emplace_back(raw_terms[n], raw_terms[n - 1], diffs[n]);
    b.raw = ChainComplexFP::create(raw_terms, std::move(raw_homs));

    std::vector<FpAbGroup> norm_terms;
    for (int n = 0; n <= top; ++n)
        norm_terms.emplace_back(raw_terms[n].gens(), raw_terms[n].relations().hcat(b.degen[n]));
    std::vector<GroupHom> norm_homs(1);
    for (int n = 1; n <= top; ++n)
        norm_homs.emplace_back(norm_terms[n], norm_terms[n - 1], diffs[n]);
    b.normalized = ChainComplexFP::create(std::move(norm_terms), std::move(norm_homs));
    return b;
}

HomologyResult homology(const ContraSystem& f, int n) {
    return homology_at(normalized_complex(f, n).normalized, n);
}

std::vector<HomologyResult> homology_upto(const ContraSystem& f, int n_max) {
    NormalizedComplexBundle b = normalized_complex(f, n_max);
    std::vector<HomologyResult> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(homology_at(b.normalized, n));
    return out;
}

ChainMap canonical_chain_map(const CubicalMap& f, const ContraSystem& sys_on_target,
                             const NormalizedComplexBundle& src,
                             const NormalizedComplexBundle& dst) {
    int top = std::min(src.top, dst.top);
    std::vector<GroupHom> comps;
    for (int n = 0; n <= top; ++n) {
        IntMatrix m(dst.index[n].total, src.index[n].total);
        for (const auto& c : src.index[n].order) {
            int col0 = src.index[n].offset.at(c);
            CubeRef img = f.apply(c);
            int row0 = dst.index[n].offset.at(img);
            int g = sys_on_target.value(img).gens();
            for (int q = 0; q < g; ++q) m.at(row0 + q, col0 + q) = 1;
        }
        comps.emplace_back(src.normalized.term(n), dst.normalized.term(n), m);
    }
    return ChainMap::create(src.normalized, dst.normalized, std::move(comps));
}

GroupHom canonical_map(const CubicalMap& f, const ContraSystem& sys_on_target, int n) {
    ContraSystem pulled = pullback(f, sys_on_target);
    NormalizedComplexBundle src = normalized_complex(pulled, n);
    NormalizedComplexBundle dst = normalized_complex(sys_on_target, n);
    return induced_on_homology(canonical_chain_map(f, sys_on_target, src, dst), n);
}

MVResult mayer_vietoris(const CubicalSetFin& x, const std::set<std::string>& gens1,
                        const std::set<std::string>& gens2, const ContraSystem& f_on_union,
                        int n_max) {
    MVResult r;
    r.x1 = subobject(x, gens1);
    r.x2 = subobject(x, gens2);
    r.uni = sub_union(x, gens1, gens2);
    r.inter = sub_intersection(x, gens1, gens2);
    if (!(f_on_union.base() == r.uni.set))
        throw std::invalid_argument("mayer_vietoris: the system must live on the union subobject");
    if (f_on_union.cap() < n_max + 2)
        throw std::invalid_argument("mayer_vietoris: system cap must be at least n_max + 2");

    // inclusions into the union and the pulled-back systems
    auto incl_into_union = [&](const Subobject& s) {
        std::map<std::string, CubeRef> assign;
        for (int m = 0; m <= s.set.dim_cap(); ++m)
            for (const auto& id : s.set.nondeg(m)) assign[id] = r.uni.set.nondeg_ref(id);
        return CubicalMap::create(s.set, r.uni.set, std::move(assign));
    };
    CubicalMap l1 = incl_into_union(r.x1);
    CubicalMap l2 = incl_into_union(r.x2);
    CubicalMap l0 = incl_into_union(r.inter);

    ContraSystem f1 = pullback(l1, f_on_union);
    ContraSystem f2 = pullback(l2, f_on_union);
    ContraSystem f0 = pullback(l0, f_on_union);

    // one degree above n_max so the top connecting homomorphism exists
    const int top = n_max + 2;
    NormalizedComplexBundle b0 = normalized_complex(f0, n_max + 1);
    NormalizedComplexBundle b1 = normalized_complex(f1, n_max + 1);
    NormalizedComplexBundle b2 = normalized_complex(f2, n_max + 1);
    NormalizedComplexBundle bu = normalized_complex(f_on_union, n_max + 1);

    // middle complex: degreewise direct sum of the two pieces
    std::vector<FpAbGroup> mid_terms;
    for (int n = 0; n <= top; ++n)
        mid_terms.push_back(
            FpAbGroup::direct_sum({b1.normalized.term(n), b2.normalized.term(n)}));
    std::vector<GroupHom> mid_diffs(1);
    for (int n = 1; n <= top; ++n)
        mid_diffs.emplace_back(mid_terms[n], mid_terms[n - 1],
                               block_diagonal({b1.normalized.diff(n).matrix,
                                               b2.normalized.diff(n).matrix}));
    ChainComplexFP mid = ChainComplexFP::create(mid_terms, std::move(mid_diffs));

    // (incl, -incl) and incl + incl, all blocks identities on value groups
    std::vector<GroupHom> incl_comps, proj_comps;
    for (int n = 0; n <= top; ++n) {
        int g1 = b1.index[n].total;
        IntMatrix im(mid_terms[n].gens(), b0.index[n].total);
        for (const auto& c : b0.index[n].order) {
            int col0 = b0.index[n].offset.at(c);
            int g = f0.value(c).gens();
            int row1 = b1.index[n].offset.at(c);
            int row2 = g1 + b2.index[n].offset.at(c);
            for (int q = 0; q < g; ++q) {
                im.at(row1 + q, col0 + q) = 1;
                im.at(row2 + q, col0 + q) = -1;
            }
        }
        incl_comps.emplace_back(b0.normalized.term(n), mid_terms[n], im);

        IntMatrix pm(bu.index[n].total, mid_terms[n].gens());
        for (const auto& c : b1.index[n].order) {
            int col0 = b1.index[n].offset.at(c);
            int row0 = bu.index[n].offset.at(c);
            int g = f1.value(c).gens();
            for (int q = 0; q < g; ++q) pm.at(row0 + q, col0 + q) = 1;
        }
        for (const auto& c : b2.index[n].order) {
            int col0 = g1 + b2.index[n].offset.at(c);
            int row0 = bu.index[n].offset.at(c);
            int g = f2.value(c).gens();
            for (int q = 0; q < g; ++q) pm.at(row0 + q, col0 + q) = 1;
        }
        proj_comps.emplace_back(mid_terms[n], bu.normalized.term(n), pm);
    }
    ChainMap incl = ChainMap::create(b0.normalized, mid, std::move(incl_comps));
    ChainMap proj = ChainMap::create(mid, bu.normalized, std::move(proj_comps));

    r.snake = snake_sequence(incl, proj, n_max);
    return r;
}

}  // namespace cubhom
