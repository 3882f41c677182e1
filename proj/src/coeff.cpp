#include "cubhom/coeff.hpp"

#include <sstream>

namespace cubhom {

std::string Violation::to_string() const {
    std::ostringstream os;
    os << "relation " << relation << " fails at cube '" << cube.to_string() << "' with (i,j,alpha,beta)=("
       << i << "," << j << "," << alpha << "," << beta << "): " << detail;
    return os.str();
}

const FpAbGroup& ContraSystem::value(const CubeRef& c) const {
    auto it = values_.find(c);
    if (it == values_.end())
        throw std::invalid_argument("system: no value at cube '" + c.to_string() + "'");
    return it->second;
}

const GroupHom& ContraSystem::face_map(const CubeRef& y, int i, int tau) const {
    auto it = face_maps_.find({y, i, tau});
    if (it == face_maps_.end())
        throw std::invalid_argument("system: no face map at cube '" + y.to_string() + "'");
    return it->second;
}

const GroupHom& ContraSystem::degeneracy_map(const CubeRef& x, int i) const {
    auto it = degeneracy_maps_.find({x, i});
    if (it == degeneracy_maps_.end())
        throw std::invalid_argument("system: no degeneracy map at cube '" + x.to_string() + "'");
    return it->second;
}

std::optional<Violation> validate_functoriality(const ContraSystem& f) {
    const CubicalSetFin& x = f.base();
    const int cap = f.cap();

    // double faces against relation (3)
    for (int n = 2; n <= cap; ++n)
        for (const auto& y : x.cubes(n))
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int a = 0; a <= 1; ++a)
                        for (int b = 0; b <= 1; ++b) {
                            GroupHom p1 = compose(f.face_map(x.ez_face(y, j, b), i, a),
                                                  f.face_map(y, j, b));
                            GroupHom p2 = compose(f.face_map(x.ez_face(y, i, a), j - 1, b),
                                                  f.face_map(y, i, a));
                            if (!p1.equal_as_homs(p2))
                                return Violation{"(3)", y, i, j, a, b,
                                                 "face-then-face paths disagree"};
                        }

    // double degeneracies against relation (4)
    for (int n = 2; n <= cap; ++n)
        for (const auto& c : x.cubes(n - 2))
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i; j <= n - 1; ++j) {
                    GroupHom p1 = compose(f.degeneracy_map(x.ez_degeneracy(c, j), i),
                                          f.degeneracy_map(c, j));
                    GroupHom p2 = compose(f.degeneracy_map(x.ez_degeneracy(c, i), j + 1),
                                          f.degeneracy_map(c, i));
                    if (!p1.equal_as_homs(p2))
                        return Violation{"(4)", c, i, j, 0, 0,
                                         "degeneracy-then-degeneracy paths disagree"};
                }

    // mixed instances against relation (5), including the split identity
    for (int n = 0; n + 1 <= cap; ++n)
        for (const auto& c : x.cubes(n))
            for (int j = 1; j <= n + 1; ++j)
                for (int i = 1; i <= n + 1; ++i)
                    for (int a = 0; a <= 1; ++a) {
                        GroupHom p1 = compose(f.face_map(x.ez_degeneracy(c, j), i, a),
                                              f.degeneracy_map(c, j));
                        if (i == j) {
                            if (!p1.equal_as_homs(GroupHom::identity(f.value(c))))
                                return Violation{"(5)", c, i, j, a, 0,
                                                 "degeneracy-then-face at equal index is not the identity"};
                        } else if (i < j) {
                            GroupHom p2 = compose(f.degeneracy_map(x.ez_face(c, i, a), j - 1),
                                                  f.face_map(c, i, a));
                            if (!p1.equal_as_homs(p2))
                                return Violation{"(5)", c, i, j, a, 0, "mixed paths disagree"};
                        } else {
                            GroupHom p2 = compose(f.degeneracy_map(x.ez_face(c, i - 1, a), j),
                                                  f.face_map(c, i - 1, a));
                            if (!p1.equal_as_homs(p2))
                                return Violation{"(5)", c, i, j, a, 0, "mixed paths disagree"};
                        }
                    }
    return std::nullopt;
}

ContraSystem table_system(const CubicalSetFin& x, int cap, std::map<CubeRef, FpAbGroup> values,
                          std::map<ContraSystem::FaceKey, GroupHom> face_maps,
                          std::map<ContraSystem::DegKey, GroupHom> degeneracy_maps) {
    if (cap < 0) throw ValidationError("system: negative cap");
    ContraSystem f;
    f.base_ = x;
    f.cap_ = cap;
    f.values_ = std::move(values);
    f.face_maps_ = std::move(face_maps);
    f.degeneracy_maps_ = std::move(degeneracy_maps);

    for (int n = 0; n <= cap; ++n)
        for (const auto& c : x.cubes(n))
            if (!f.values_.count(c))
                throw ValidationError("system: missing value at cube '" + c.to_string() + "'");
    for (int n = 0; n <= cap; ++n)
        for (const auto& c : x.cubes(n)) {
            if (n >= 1)
                for (int i = 1; i <= n; ++i)
                    for (int tau = 0; tau <= 1; ++tau) {
                        auto it = f.face_maps_.find({c, i, tau});
                        if (it == f.face_maps_.end())
                            throw ValidationError("system: missing face map at cube '" +
                                                  c.to_string() + "' index (" + std::to_string(i) +
                                                  "," + std::to_string(tau) + ")");
                        const GroupHom& h = it->second;
                        if (!h.source.same_presentation(f.values_.at(c)) ||
                            !h.target.same_presentation(f.values_.at(x.ez_face(c, i, tau))))
                            throw ValidationError("system: face map at '" + c.to_string() +
                                                  "' does not match the value groups");
                        if (!h.well_defined())
                            throw ValidationError("system: face map at '" + c.to_string() +
                                                  "' is not well defined");
                    }
            if (n + 1 <= cap)
                for (int i = 1; i <= n + 1; ++i) {
                    auto it = f.degeneracy_maps_.find({c, i});
                    if (it == f.degeneracy_maps_.end())
                        throw ValidationError("system: missing degeneracy map at cube '" +
                                              c.to_string() + "' index " + std::to_string(i));
                    const GroupHom& h = it->second;
                    if (!h.source.same_presentation(f.values_.at(c)) ||
                        !h.target.same_presentation(f.values_.at(x.ez_degeneracy(c, i))))
                        throw ValidationError("system: degeneracy map at '" + c.to_string() +
                                              "' does not match the value groups");
                    if (!h.well_defined())
                        throw ValidationError("system: degeneracy map at '" + c.to_string() +
                                              "' is not well defined");
                }
        }

    if (auto v = validate_functoriality(f))
        throw ValidationError("system: functoriality violation: " + v->to_string());
    return f;
}

ContraSystem constant_system(const CubicalSetFin& x, const FpAbGroup& g, int cap) {
    std::map<CubeRef, FpAbGroup> values;
    std::map<ContraSystem::FaceKey, GroupHom> fmaps;
    std::map<ContraSystem::DegKey, GroupHom> dmaps;
    GroupHom id = GroupHom::identity(g);
    for (int n = 0; n <= cap; ++n)
        for (const auto& c : x.cubes(n)) {
            values.emplace(c, g);
            if (n >= 1)
                for (int i = 1; i <= n; ++i)
                    for (int tau = 0; tau <= 1; ++tau) fmaps.emplace(std::make_tuple(c, i, tau), id);
            if (n + 1 <= cap)
                for (int i = 1; i <= n + 1; ++i) dmaps.emplace(std::make_pair(c, i), id);
        }
    return table_system(x, cap, std::move(values), std::move(fmaps), std::move(dmaps));
}

ContraSystem twist(const ContraSystem& f, const UnitTwist& u) {
    const CubicalSetFin& x = f.base();
    std::map<CubeRef, IntMatrix> units, inverses;
    auto unit_at = [&](const CubeRef& c) -> const IntMatrix& {
        auto it = units.find(c);
        if (it != units.end()) return it->second;
        const FpAbGroup& g = f.value(c);
        IntMatrix m = IntMatrix::identity(g.gens());
        if (auto given = u.find(c); given != u.end()) m = given->second;
        if (m.rows() != g.gens() || m.cols() != g.gens())
            throw ValidationError("twist: unit at '" + c.to_string() + "' has wrong shape");
        IntMatrix inv;
        try {
            inv = unimodular_inverse(m);
        } catch (const std::invalid_argument&) {
            throw ValidationError("twist: unit at '" + c.to_string() + "' is not unimodular");
        }
        if (!GroupHom(g, g, m).well_defined() || !GroupHom(g, g, inv).well_defined())
            throw ValidationError("twist: unit at '" + c.to_string() +
                                  "' is not an automorphism of the value group");
        inverses.emplace(c, std::move(inv));
        return units.emplace(c, std::move(m)).first->second;
    };

    std::map<ContraSystem::FaceKey, GroupHom> fmaps;
    std::map<ContraSystem::DegKey, GroupHom> dmaps;
    for (const auto& [key, h] : f.face_maps()) {
        const auto& [y, i, tau] = key;
        const IntMatrix& ub = unit_at(x.ez_face(y, i, tau));
        unit_at(y);
        fmaps.emplace(key, GroupHom(h.source, h.target, ub * h.matrix * inverses.at(y)));
    }
    for (const auto& [key, h] : f.degeneracy_maps()) {
        const auto& [c, i] = key;
        const IntMatrix& ub = unit_at(x.ez_degeneracy(c, i));
        unit_at(c);
        dmaps.emplace(key, GroupHom(h.source, h.target, ub * h.matrix * inverses.at(c)));
    }
    return table_system(x, f.cap(), f.values(), std::move(fmaps), std::move(dmaps));
}

ContraSystem pullback(const CubicalMap& f, const ContraSystem& sys) {
    if (!(f.target() == sys.base()))
        throw std::invalid_argument("pullback: system does not live on the map's target");
    const CubicalSetFin& x = f.source();
    const int cap = sys.cap();
    std::map<CubeRef, FpAbGroup> values;
    std::map<ContraSystem::FaceKey, GroupHom> fmaps;
    std::map<ContraSystem::DegKey, GroupHom> dmaps;
    for (int n = 0; n <= cap; ++n)
        for (const auto& c : x.cubes(n)) {
            values.emplace(c, sys.value(f.apply(c)));
            if (n >= 1)
                for (int i = 1; i <= n; ++i)
                    for (int tau = 0; tau <= 1; ++tau)
                        fmaps.emplace(std::make_tuple(c, i, tau),
                                      sys.face_map(f.apply(c), i, tau));
            if (n + 1 <= cap)
                for (int i = 1; i <= n + 1; ++i)
                    dmaps.emplace(std::make_pair(c, i), sys.degeneracy_map(f.apply(c), i));
        }
    return table_system(x, cap, std::move(values), std::move(fmaps), std::move(dmaps));
}

ContraSystem direct_sum_systems(const ContraSystem& a, const ContraSystem& b) {
    if (!(a.base() == b.base()) || a.cap() != b.cap())
        throw std::invalid_argument("direct_sum_systems: bases or caps differ");
    const CubicalSetFin& x = a.base();
    std::map<CubeRef, FpAbGroup> values;
    std::map<ContraSystem::FaceKey, GroupHom> fmaps;
    std::map<ContraSystem::DegKey, GroupHom> dmaps;
    auto sum_value = [&](const CubeRef& c) {
        return FpAbGroup::direct_sum({a.value(c), b.value(c)});
    };
    for (int n = 0; n <= a.cap(); ++n)
        for (const auto& c : x.cubes(n)) {
            values.emplace(c, sum_value(c));
            if (n >= 1)
                for (int i = 1; i <= n; ++i)
                    for (int tau = 0; tau <= 1; ++tau) {
                        const GroupHom& ha = a.face_map(c, i, tau);
                        const GroupHom& hb = b.face_map(c, i, tau);
                        fmaps.emplace(std::make_tuple(c, i, tau),
                                      GroupHom(sum_value(c), sum_value(x.ez_face(c, i, tau)),
                                               block_diagonal({ha.matrix, hb.matrix})));
                    }
            if (n + 1 <= a.cap())
                for (int i = 1; i <= n + 1; ++i) {
                    const GroupHom& ha = a.degeneracy_map(c, i);
                    const GroupHom& hb = b.degeneracy_map(c, i);
                    dmaps.emplace(std::make_pair(c, i),
                                  GroupHom(sum_value(c), sum_value(x.ez_degeneracy(c, i)),
                                           block_diagonal({ha.matrix, hb.matrix})));
                }
        }
    return table_system(x, a.cap(), std::move(values), std::move(fmaps), std::move(dmaps));
}

ContraSystem representable_point_system(int r, int cap) {
    CubicalSetFin pt = standard_cube(0);
    std::vector<std::vector<CubeMorphism>> basis(cap + 1);
    std::vector<std::map<CubeMorphism, int>> index(cap + 1);
    for (int k = 0; k <= cap; ++k) {
        basis[k] = enumerate_hom(k, r);
        for (size_t q = 0; q < basis[k].size(); ++q) index[k][basis[k][q]] = static_cast<int>(q);
    }
    std::map<CubeRef, FpAbGroup> values;
    std::map<ContraSystem::FaceKey, GroupHom> fmaps;
    std::map<ContraSystem::DegKey, GroupHom> dmaps;
    for (int k = 0; k <= cap; ++k) {
        CubeRef c = pt.cubes(k).at(0);
        values.emplace(c, FpAbGroup::free_group(static_cast<int>(basis[k].size())));
    }
    for (int k = 0; k <= cap; ++k) {
        CubeRef c = pt.cubes(k).at(0);
        if (k >= 1)
            for (int i = 1; i <= k; ++i)
                for (int tau = 0; tau <= 1; ++tau) {
                    IntMatrix m(static_cast<int>(basis[k - 1].size()),
                                static_cast<int>(basis[k].size()));
                    for (size_t col = 0; col < basis[k].size(); ++col)
                        m.at(index[k - 1].at(compose(basis[k][col], face(k, i, tau))),
                             static_cast<int>(col)) = 1;
                    fmaps.emplace(std::make_tuple(c, i, tau),
                                  GroupHom(values.at(c), values.at(pt.ez_face(c, i, tau)), m));
                }
        if (k + 1 <= cap)
            for (int i = 1; i <= k + 1; ++i) {
                IntMatrix m(static_cast<int>(basis[k + 1].size()),
                            static_cast<int>(basis[k].size()));
                for (size_t col = 0; col < basis[k].size(); ++col)
                    m.at(index[k + 1].at(compose(basis[k][col], degeneracy(k + 1, i))),
                         static_cast<int>(col)) = 1;
                dmaps.emplace(std::make_pair(c, i),
                              GroupHom(values.at(c), values.at(pt.ez_degeneracy(c, i)), m));
            }
    }
    return table_system(pt, cap, std::move(values), std::move(fmaps), std::move(dmaps));
}

}  // namespace cubhom
