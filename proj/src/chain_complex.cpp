#include "cubhom/chain_complex.hpp"

#include <map>

namespace cubhom {

ChainComplexFP ChainComplexFP::create(std::vector<FpAbGroup> terms, std::vector<GroupHom> diffs) {
    if (terms.empty()) throw std::invalid_argument("ChainComplexFP: need at least degree 0");
    if (diffs.size() != terms.size())
        throw std::invalid_argument("ChainComplexFP: need one differential slot per degree");
    ChainComplexFP c;
    c.terms_ = std::move(terms);
    c.diffs_ = std::move(diffs);
    for (int n = 1; n <= c.cap(); ++n) {
        const GroupHom& d = c.diffs_[n];
        if (!d.source.same_presentation(c.terms_[n]) || !d.target.same_presentation(c.terms_[n - 1]))
            throw ValidationError("chain complex: differential " + std::to_string(n) +
                                  " does not match adjacent terms");
        if (!d.well_defined())
            throw ValidationError("chain complex: differential " + std::to_string(n) +
                                  " is not well defined");
        if (n >= 2 && !compose(c.diffs_[n - 1], d).is_zero_map())
            throw ValidationError("chain complex: d o d != 0 at degree " + std::to_string(n));
    }
    return c;
}

ChainMap ChainMap::create(ChainComplexFP source, ChainComplexFP target,
                          std::vector<GroupHom> components) {
    int top = static_cast<int>(components.size()) - 1;
    if (top < 0 || top > source.cap() || top > target.cap())
        throw std::invalid_argument("ChainMap: component count exceeds complex caps");
    ChainMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.components_ = std::move(components);
    for (int n = 0; n <= top; ++n) {
        const GroupHom& c = f.components_[n];
        if (!c.source.same_presentation(f.source_.term(n)) ||
            !c.target.same_presentation(f.target_.term(n)))
            throw ValidationError("chain map: component " + std::to_string(n) +
                                  " does not match the terms");
        if (!c.well_defined())
            throw ValidationError("chain map: component " + std::to_string(n) +
                                  " is not well defined");
        if (n >= 1) {
            GroupHom left = compose(f.components_[n - 1], f.source_.diff(n));
            GroupHom right = compose(f.target_.diff(n), c);
            if (!left.equal_as_homs(right))
                throw ValidationError("chain map: square at degree " + std::to_string(n) +
                                      " does not commute");
        }
    }
    return f;
}

ChainMap ChainMap::identity(const ChainComplexFP& c) {
    std::vector<GroupHom> comps;
    for (int n = 0; n <= c.cap(); ++n) comps.push_back(GroupHom::identity(c.term(n)));
    return ChainMap::create(c, c, std::move(comps));
}

HomologyResult homology_at(const ChainComplexFP& c, int n) {
    if (n < 0 || n + 1 > c.cap())
        throw std::invalid_argument("homology_at: degree out of the held range");
    const FpAbGroup& term = c.term(n);
    // cycles: everything at degree 0, else the kernel of d_n as a map of
    // presented groups
    IntMatrix cycles = n == 0 ? IntMatrix::identity(term.gens()) : c.diff(n).kernel_lattice();
    // boundaries and relations, expressed in cycle coordinates
    IntMatrix bnd = c.diff(n + 1).matrix.hcat(term.relations());
    auto in_cycles = solve_columns(cycles, bnd);
    if (!in_cycles)
        throw std::logic_error("homology_at: boundaries do not lie in the cycle lattice");
    HomologyResult h;
    h.degree = n;
    h.cycle_basis = cycles;
    h.presentation = FpAbGroup(cycles.cols(), *in_cycles);
    h.group = h.presentation.invariant_factors();
    return h;
}

GroupHom induced_on_homology(const ChainMap& f, const HomologyResult& source_h,
                             const HomologyResult& target_h) {
    int n = source_h.degree;
    IntMatrix mapped = f.component(n).matrix * source_h.cycle_basis;
    auto coords = solve_columns(target_h.cycle_basis, mapped);
    if (!coords)
        throw std::logic_error("induced_on_homology: image of a cycle is not a cycle");
    GroupHom h(source_h.presentation, target_h.presentation, *coords);
    if (!h.well_defined())
        throw std::logic_error("induced_on_homology: map does not descend to classes");
    return h;
}

GroupHom induced_on_homology(const ChainMap& f, int n) {
    if (n > f.top_degree())
        throw std::invalid_argument("induced_on_homology: degree exceeds the chain map");
    return induced_on_homology(f, homology_at(f.source(), n), homology_at(f.target(), n));
}

ChainComplexFP plus_complex(int n) {
    if (n < 0) throw std::invalid_argument("plus_complex: negative dimension");
    std::vector<std::vector<CubeMorphism>> basis(n + 1);
    std::vector<std::map<CubeMorphism, int>> index(n + 1);
    for (int q = 0; q <= n; ++q) {
        for (const auto& f : enumerate_hom(q, n))
            if (is_injective(f)) {
                index[q][f] = static_cast<int>(basis[q].size());
                basis[q].push_back(f);
            }
    }
    std::vector<FpAbGroup> terms;
    for (int q = 0; q <= n; ++q) terms.push_back(FpAbGroup::free_group(static_cast<int>(basis[q].size())));
    terms.push_back(FpAbGroup::trivial());

    std::vector<GroupHom> diffs(1);
    for (int q = 1; q <= n; ++q) {
        IntMatrix d(static_cast<int>(basis[q - 1].size()), static_cast<int>(basis[q].size()));
        for (size_t col = 0; col < basis[q].size(); ++col) {
            const CubeMorphism& f = basis[q][col];
            int sign = 1;
            for (int i = 1; i <= q; ++i) {
                sign = -sign;  // (-1)^i
                for (int tau = 0; tau <= 1; ++tau) {
                    CubeMorphism g = compose(f, face(q, i, tau));
                    d.at(index[q - 1].at(g), static_cast<int>(col)) += tau == 0 ? sign : -sign;
                }
            }
        }
        diffs.emplace_back(terms[q], terms[q - 1], d);
    }
    diffs.emplace_back(terms[n + 1], terms[n], IntMatrix(terms[n].gens(), 0));
    return ChainComplexFP::create(std::move(terms), std::move(diffs));
}

namespace {

// connecting homomorphism at degree q: lift a quotient cycle, run the
// differential, pull back through the inclusion, read off in cycle
// coordinates of the subcomplex
GroupHom connecting_hom(const ChainMap& incl, const ChainMap& proj, int q,
                        const HomologyResult& hq_quot, const HomologyResult& hq1_sub) {
    const ChainComplexFP& b = incl.target();
    const FpAbGroup& quot_term = proj.target().term(q);
    const FpAbGroup& sub_low = incl.source().term(q - 1);

    IntMatrix lift_sys = proj.component(q).matrix.hcat(quot_term.relations());
    IntMatrix pull_sys = incl.component(q - 1).matrix.hcat(b.term(q - 1).relations());

    IntMatrix result(hq1_sub.presentation.gens(), hq_quot.presentation.gens());
    for (int col = 0; col < hq_quot.cycle_basis.cols(); ++col) {
        auto lifted = solve(lift_sys, hq_quot.cycle_basis.column(col));
        if (!lifted) throw std::logic_error("snake: cycle fails to lift through the projection");
        std::vector<Int> bchain(lifted->begin(), lifted->begin() + b.term(q).gens());
        std::vector<Int> dchain = b.diff(q).matrix.apply(bchain);
        auto pulled = solve(pull_sys, dchain);
        if (!pulled) throw std::logic_error("snake: boundary fails to pull back through the inclusion");
        std::vector<Int> achain(pulled->begin(), pulled->begin() + sub_low.gens());
        auto coords = solve(hq1_sub.cycle_basis, achain);
        if (!coords) throw std::logic_error("snake: pulled-back chain is not a cycle");
        result.set_column(col, *coords);
    }
    GroupHom h(hq_quot.presentation, hq1_sub.presentation, result);
    if (!h.well_defined()) throw std::logic_error("snake: connecting map does not descend to classes");
    return h;
}

}  // namespace

SnakeResult snake_sequence(const ChainMap& incl, const ChainMap& proj, int n_max) {
    if (!incl.target().term(0).same_presentation(proj.source().term(0)))
        throw std::invalid_argument("snake_sequence: chain maps are not composable");
    int need = n_max + 1;
    if (incl.top_degree() < need || proj.top_degree() < need)
        throw std::invalid_argument("snake_sequence: chain maps too short for requested degree");

    // levelwise short exactness as presented groups
    for (int q = 0; q <= need; ++q) {
        const GroupHom& i = incl.component(q);
        const GroupHom& p = proj.component(q);
        if (!i.injective_presented())
            throw ValidationError("snake_sequence: inclusion not injective at degree " + std::to_string(q));
        if (!p.surjective_presented())
            throw ValidationError("snake_sequence: projection not surjective at degree " + std::to_string(q));
        if (i.image_lattice() != p.kernel_lattice())
            throw ValidationError("snake_sequence: image != kernel at degree " + std::to_string(q));
    }

    SnakeResult r;
    r.n_max = n_max;
    for (int q = 0; q <= n_max; ++q) {
        r.h_sub.push_back(homology_at(incl.source(), q));
        r.h_total.push_back(homology_at(incl.target(), q));
        r.h_quot.push_back(homology_at(proj.target(), q));
    }
    r.h_quot.push_back(homology_at(proj.target(), n_max + 1));

    for (int q = 0; q <= n_max; ++q) {
        r.incl_star.push_back(induced_on_homology(incl, r.h_sub[q], r.h_total[q]));
        r.proj_star.push_back(induced_on_homology(proj, r.h_total[q], r.h_quot[q]));
    }
    r.connecting.push_back(GroupHom());  // degree-0 slot unused
    for (int q = 1; q <= n_max + 1; ++q)
        r.connecting.push_back(connecting_hom(incl, proj, q, r.h_quot[q], r.h_sub[q - 1]));

    auto check = [&r](const std::string& pos, const IntMatrix& image, const IntMatrix& kernel) {
        r.checks.push_back({pos, lattice_canonical(image) == lattice_canonical(kernel)});
    };
    for (int q = 0; q <= n_max; ++q) {
        std::string d = std::to_string(q);
        check("H" + d + "(sub)", r.connecting[q + 1].image_lattice(), r.incl_star[q].kernel_lattice());
        check("H" + d + "(total)", r.incl_star[q].image_lattice(), r.proj_star[q].kernel_lattice());
        if (q == 0)
            check("H0(quot)", r.proj_star[0].image_lattice(),
                  IntMatrix::identity(r.h_quot[0].presentation.gens()));
        else
            check("H" + d + "(quot)", r.proj_star[q].image_lattice(), r.connecting[q].kernel_lattice());
    }
    r.all_exact = true;
    for (const auto& c : r.checks)
        if (!c.exact) r.all_exact = false;
    return r;
}

}  // namespace cubhom
