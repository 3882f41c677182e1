#include "cubhom/cubical_set.hpp"

#include <algorithm>
#include <sstream>

namespace cubhom {

namespace {

std::string deletion_word(const std::vector<int>& deleted) {
    std::ostringstream os;
    os << "e[";
    for (size_t q = 0; q < deleted.size(); ++q) os << (q ? "," : "") << deleted[q];
    os << "]";
    return os.str();
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Relabel a deletion set after the coordinates in d (a subset of the same
// ambient cube) have been removed first.
std::vector<int> relabel_after(const std::vector<int>& deleted, const std::vector<int>& d) {
    std::vector<int> out;
    for (int x : deleted) {
        if (std::binary_search(d.begin(), d.end(), x)) continue;
        int shift = static_cast<int>(std::lower_bound(d.begin(), d.end(), x) - d.begin());
        out.push_back(x - shift);
    }
    return out;
}

CubeRef strip_common(const CubeRef& r, const std::vector<int>& d) {
    return CubeRef{r.dim - static_cast<int>(d.size()), relabel_after(r.deleted, d), r.base};
}

// Remove unused input coordinates from a morphism by composing with the
// section inserting zeros at the removed slots.
CubeMorphism strip_deleted_inputs(const CubeMorphism& f, const std::vector<int>& d) {
    NormalFormWord w;
    w.source_dim = f.source_dim() - static_cast<int>(d.size());
    w.target_dim = f.source_dim();
    for (auto it = d.rbegin(); it != d.rend(); ++it) w.delta.emplace_back(*it, 0);
    return compose(f, from_normal_form(w));
}

}  // namespace

std::string CubeRef::to_string() const {
    if (deleted.empty()) return base;
    return base + "@" + deletion_word(deleted);
}

bool is_degenerate(const CubeRef& c) { return !c.deleted.empty(); }

CubicalSetFin CubicalSetFin::from_parts(int dim_cap, const std::vector<CubeDecl>& cubes,
                                        const std::vector<FaceDecl>& faces) {
    if (dim_cap < 0) throw ValidationError("cubical set: negative dimension cap");
    CubicalSetFin x;
    x.dim_cap_ = dim_cap;
    x.nondeg_.resize(dim_cap + 1);
    for (const auto& c : cubes) {
        if (c.id.empty()) throw ValidationError("cubical set: empty cube identifier");
        if (c.dim < 0 || c.dim > dim_cap)
            throw ValidationError("cubical set: cube '" + c.id + "' has dimension outside 0.." +
                                  std::to_string(dim_cap));
        if (!x.dim_of_.emplace(c.id, c.dim).second)
            throw ValidationError("cubical set: duplicate cube identifier '" + c.id + "'");
        x.nondeg_[c.dim].push_back(c.id);
    }
    for (auto& level : x.nondeg_) std::sort(level.begin(), level.end());

    for (const auto& [id, dim] : x.dim_of_)
        if (dim >= 1) x.faces_[id].assign(dim, {CubeRef{}, CubeRef{}});
    std::set<std::tuple<std::string, int, int>> seen;
    for (const auto& f : faces) {
        auto it = x.dim_of_.find(f.cube);
        if (it == x.dim_of_.end())
            throw ValidationError("cubical set: face entry for unknown cube '" + f.cube + "'");
        int m = it->second;
        if (m < 1 || f.i < 1 || f.i > m || (f.tau != 0 && f.tau != 1))
            throw ValidationError("cubical set: face index out of range for cube '" + f.cube + "'");
        if (!seen.insert({f.cube, f.i, f.tau}).second)
            throw ValidationError("cubical set: duplicate face entry for cube '" + f.cube + "'");
        auto tgt = x.dim_of_.find(f.target);
        if (tgt == x.dim_of_.end())
            throw ValidationError("cubical set: face of '" + f.cube + "' targets unknown cube '" +
                                  f.target + "'");
        int last = 0;
        for (int d : f.eta) {
            if (d <= last || d > m - 1)
                throw ValidationError("cubical set: face of '" + f.cube +
                                      "' has a bad deletion list");
            last = d;
        }
        int p = m - 1 - static_cast<int>(f.eta.size());
        if (tgt->second != p)
            throw ValidationError("cubical set: face of '" + f.cube + "' at (" +
                                  std::to_string(f.i) + "," + std::to_string(f.tau) +
                                  ") has inconsistent dimensions");
        x.faces_[f.cube][f.i - 1][f.tau] = CubeRef{m - 1, f.eta, f.target};
    }
    for (const auto& [id, dim] : x.dim_of_)
        for (int i = 1; i <= dim; ++i)
            for (int tau = 0; tau <= 1; ++tau)
                if (x.faces_.at(id)[i - 1][tau].base.empty())
                    throw ValidationError("cubical set: cube '" + id + "' is missing face (" +
                                          std::to_string(i) + "," + std::to_string(tau) + ")");

    // the double-face identity, dual to the face-face relation of the cube
    // category, for every pair of indices
    for (const auto& [id, dim] : x.dim_of_) {
        if (dim < 2) continue;
        CubeRef ref = x.nondeg_ref(id);
        for (int i = 1; i < dim; ++i)
            for (int j = i + 1; j <= dim; ++j)
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 1; ++b) {
                        CubeRef left = x.ez_face(x.ez_face(ref, j, b), i, a);
                        CubeRef right = x.ez_face(x.ez_face(ref, i, a), j - 1, b);
                        if (!(left == right))
                            throw ValidationError(
                                "cubical set: face identity fails on '" + id + "' with (i,j,a,b)=(" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(a) + "," + std::to_string(b) + "): paths give '" +
                                left.to_string() + "' vs '" + right.to_string() + "'");
                    }
    }
    return x;
}

const std::vector<std::string>& CubicalSetFin::nondeg(int m) const {
    static const std::vector<std::string> empty;
    if (m < 0 || m > dim_cap_) return empty;
    return nondeg_[m];
}

int CubicalSetFin::dim_of(const std::string& id) const {
    auto it = dim_of_.find(id);
    if (it == dim_of_.end()) throw std::invalid_argument("cubical set: unknown cube '" + id + "'");
    return it->second;
}

const CubeRef& CubicalSetFin::stored_face(const std::string& id, int i, int tau) const {
    return faces_.at(id).at(i - 1).at(tau);
}

std::vector<CubeRef> CubicalSetFin::cubes(int k) const {
    std::vector<CubeRef> out;
    for (int m = 0; m <= std::min(k, dim_cap_); ++m) {
        const int r = k - m;
        for (const auto& base : nondeg_[m]) {
            // r-subsets of {1..k} in lexicographic order
            std::vector<int> subset(r);
            for (int q = 0; q < r; ++q) subset[q] = q + 1;
            while (true) {
                out.push_back(CubeRef{k, subset, base});
                if (r == 0) break;
                int q = r - 1;
                while (q >= 0 && subset[q] == k - r + q + 1) --q;
                if (q < 0) break;
                ++subset[q];
                for (int t = q + 1; t < r; ++t) subset[t] = subset[t - 1] + 1;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CubeRef CubicalSetFin::ez_face(const CubeRef& c, int i, int tau) const {
    const int k = c.dim;
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("ez_face: index out of range");
    CubeMorphism eta = surjection_deleting(k, c.deleted);
    CubeMorphism g = compose(eta, face(k, i, tau));
    if (g.is_surjection()) return CubeRef{k - 1, g.deleted_inputs(), c.base};
    // exactly one constant entry: the face generator pushed into the base
    int pos = -1, sign = -1;
    for (int p = 0; p < g.target_dim(); ++p)
        if (!g.is_proj(p)) {
            pos = p + 1;
            sign = g.const_value(p);
        }
    const CubeRef& stored = stored_face(c.base, pos, sign);
    CubeMorphism comp = compose(surjection_deleting(g.target_dim() - 1, stored.deleted),
                                surjection_deleting(k - 1, g.deleted_inputs()));
    return CubeRef{k - 1, comp.deleted_inputs(), stored.base};
}

CubeRef CubicalSetFin::ez_degeneracy(const CubeRef& c, int i) const {
    const int k = c.dim + 1;
    if (i < 1 || i > k) throw std::invalid_argument("ez_degeneracy: index out of range");
    CubeMorphism comp = compose(surjection_deleting(c.dim, c.deleted), degeneracy(k, i));
    return CubeRef{k, comp.deleted_inputs(), c.base};
}

CubeRef CubicalSetFin::apply_surjection(int k, const std::vector<int>& deleted,
                                        const CubeRef& c) const {
    if (c.dim != k - static_cast<int>(deleted.size()))
        throw std::invalid_argument("apply_surjection: dimension mismatch");
    CubeMorphism comp =
        compose(surjection_deleting(c.dim, c.deleted), surjection_deleting(k, deleted));
    return CubeRef{k, comp.deleted_inputs(), c.base};
}

CubeRef CubicalSetFin::apply_morphism(const CubeMorphism& f, const CubeRef& c) const {
    if (f.target_dim() != c.dim) throw std::invalid_argument("apply_morphism: dimension mismatch");
    NormalFormWord w = normal_form(f);
    CubeRef cur = c;
    for (const auto& [j, tau] : w.delta) cur = ez_face(cur, j, tau);
    return apply_surjection(f.source_dim(), w.epsilon, cur);
}

CubeRef CubicalSetFin::parse_ref(const std::string& text) const {
    std::string base = text;
    std::vector<int> deleted;
    auto at = text.rfind("@e[");
    if (at != std::string::npos && text.back() == ']') {
        base = text.substr(0, at);
        std::string list = text.substr(at + 3, text.size() - at - 4);
        size_t pos = 0;
        while (pos < list.size()) {
            size_t next = list.find(',', pos);
            if (next == std::string::npos) next = list.size();
            try {
                deleted.push_back(std::stoi(list.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw ValidationError("cube ref: bad deletion list in '" + text + "'");
            }
            pos = next + 1;
        }
    }
    if (!has_cube(base)) throw ValidationError("cube ref: unknown cube '" + base + "'");
    int dim = dim_of(base) + static_cast<int>(deleted.size());
    int last = 0;
    for (int d : deleted) {
        if (d <= last || d > dim) throw ValidationError("cube ref: bad deletion list in '" + text + "'");
        last = d;
    }
    return CubeRef{dim, deleted, base};
}

CubicalSetFin standard_cube(int n) {
    if (n < 0) throw std::invalid_argument("standard_cube: negative dimension");
    std::vector<CubicalSetFin::CubeDecl> cubes;
    std::vector<CubicalSetFin::FaceDecl> faces;
    for (int m = 0; m <= n; ++m)
        for (const auto& f : enumerate_hom(m, n)) {
            if (!is_injective(f)) continue;
            cubes.push_back({f.entries_string(), m});
            for (int i = 1; i <= m; ++i)
                for (int tau = 0; tau <= 1; ++tau) {
                    CubeMorphism nu = compose(f, face(m, i, tau));
                    faces.push_back({f.entries_string(), i, tau, {}, nu.entries_string()});
                }
        }
    return CubicalSetFin::from_parts(n, cubes, faces);
}

CubeMorphism standard_cube_morphism(int n, const std::string& id) {
    for (int m = 0; m <= n; ++m)
        for (const auto& f : enumerate_hom(m, n))
            if (is_injective(f) && f.entries_string() == id) return f;
    throw std::invalid_argument("standard_cube_morphism: unknown identifier '" + id + "'");
}

namespace {

std::string pair_id(const CubeRef& a, const std::string& b) {
    return "(" + a.to_string() + ";" + b + ")";
}

std::pair<std::string, std::string> split_pair_id(const std::string& id) {
    if (id.size() < 3 || id.front() != '(' || id.back() != ')')
        throw std::invalid_argument("bad pair identifier '" + id + "'");
    int depth = 0;
    for (size_t p = 1; p + 1 < id.size(); ++p) {
        if (id[p] == '(') ++depth;
        if (id[p] == ')') --depth;
        if (id[p] == ';' && depth == 0)
            return {id.substr(1, p - 1), id.substr(p + 1, id.size() - p - 2)};
    }
    throw std::invalid_argument("bad pair identifier '" + id + "'");
}

}  // namespace

CubicalSetFin product(const CubicalSetFin& x, const CubicalSetFin& y) {
    const int cap = x.dim_cap() + y.dim_cap();
    std::vector<CubicalSetFin::CubeDecl> cubes;
    std::vector<CubicalSetFin::FaceDecl> faces;
    std::vector<std::pair<CubeRef, CubeRef>> pairs;
    for (int n = 0; n <= cap; ++n) {
        for (const auto& cx : x.cubes(n))
            for (const auto& cy : y.cubes(n)) {
                if (!intersect_sorted(cx.deleted, cy.deleted).empty()) continue;
                cubes.push_back({pair_id(cx, cy.to_string()), n});
                pairs.emplace_back(cx, cy);
            }
    }
    for (const auto& [cx, cy] : pairs) {
        const int n = cx.dim;
        for (int i = 1; i <= n; ++i)
            for (int tau = 0; tau <= 1; ++tau) {
                CubeRef fx = x.ez_face(cx, i, tau);
                CubeRef fy = y.ez_face(cy, i, tau);
                std::vector<int> d = intersect_sorted(fx.deleted, fy.deleted);
                CubeRef bx = strip_common(fx, d);
                CubeRef by = strip_common(fy, d);
                faces.push_back({pair_id(cx, cy.to_string()), i, tau, d, pair_id(bx, by.to_string())});
            }
    }
    return CubicalSetFin::from_parts(cap, cubes, faces);
}

std::pair<CubeRef, CubeRef> product_components(const CubicalSetFin& x, const CubicalSetFin& y,
                                               const std::string& id) {
    auto [l, r] = split_pair_id(id);
    return {x.parse_ref(l), y.parse_ref(r)};
}

CubicalMap CubicalMap::create(CubicalSetFin source, CubicalSetFin target,
                              std::map<std::string, CubeRef> assignment) {
    CubicalMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.assignment_ = std::move(assignment);
    for (int m = 0; m <= f.source_.dim_cap(); ++m)
        for (const auto& id : f.source_.nondeg(m)) {
            auto it = f.assignment_.find(id);
            if (it == f.assignment_.end())
                throw ValidationError("cubical map: no image for cube '" + id + "'");
            const CubeRef& img = it->second;
            if (img.dim != m)
                throw ValidationError("cubical map: image of '" + id + "' has wrong dimension");
            if (!f.target_.has_cube(img.base) || f.target_.dim_of(img.base) != img.base_dim())
                throw ValidationError("cubical map: image of '" + id + "' is not a cube of the target");
        }
    for (const auto& [id, img] : f.assignment_)
        if (!f.source_.has_cube(id))
            throw ValidationError("cubical map: assignment for unknown cube '" + id + "'");
    // commutation with every stored face
    for (int m = 1; m <= f.source_.dim_cap(); ++m)
        for (const auto& id : f.source_.nondeg(m))
            for (int i = 1; i <= m; ++i)
                for (int tau = 0; tau <= 1; ++tau) {
                    const CubeRef& st = f.source_.stored_face(id, i, tau);
                    CubeRef lhs = f.target_.apply_surjection(m - 1, st.deleted,
                                                             f.assignment_.at(st.base));
                    CubeRef rhs = f.target_.ez_face(f.assignment_.at(id), i, tau);
                    if (!(lhs == rhs))
                        throw ValidationError("cubical map: face square fails on '" + id + "' at (" +
                                              std::to_string(i) + "," + std::to_string(tau) + ")");
                }
    return f;
}

CubicalMap CubicalMap::identity(const CubicalSetFin& x) {
    std::map<std::string, CubeRef> assign;
    for (int m = 0; m <= x.dim_cap(); ++m)
        for (const auto& id : x.nondeg(m)) assign[id] = x.nondeg_ref(id);
    return CubicalMap::create(x, x, std::move(assign));
}

CubeRef CubicalMap::apply(const CubeRef& c) const {
    return target_.apply_surjection(c.dim, c.deleted, assignment_.at(c.base));
}

CubicalMap compose(const CubicalMap& g, const CubicalMap& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: cubical maps are not composable");
    std::map<std::string, CubeRef> assign;
    for (int m = 0; m <= f.source().dim_cap(); ++m)
        for (const auto& id : f.source().nondeg(m))
            assign[id] = g.apply(f.assignment().at(id));
    return CubicalMap::create(f.source(), g.target(), std::move(assign));
}

Subobject subobject(const CubicalSetFin& x, const std::set<std::string>& gens) {
    int cap = 0;
    for (const auto& id : gens) {
        if (!x.has_cube(id)) throw ValidationError("subobject: unknown cube '" + id + "'");
        cap = std::max(cap, x.dim_of(id));
    }
    std::vector<CubicalSetFin::CubeDecl> cubes;
    std::vector<CubicalSetFin::FaceDecl> faces;
    for (const auto& id : gens) {
        int m = x.dim_of(id);
        cubes.push_back({id, m});
        for (int i = 1; i <= m; ++i)
            for (int tau = 0; tau <= 1; ++tau) {
                const CubeRef& st = x.stored_face(id, i, tau);
                if (!gens.count(st.base))
                    throw ValidationError("subobject: generating set is not face-closed: cube '" +
                                          id + "' has face '" + st.base + "' outside the set");
                faces.push_back({id, i, tau, st.deleted, st.base});
            }
    }
    Subobject s;
    s.set = CubicalSetFin::from_parts(cap, cubes, faces);
    std::map<std::string, CubeRef> assign;
    for (const auto& id : gens) assign[id] = x.nondeg_ref(id);
    s.inclusion = CubicalMap::create(s.set, x, std::move(assign));
    return s;
}

Subobject sub_union(const CubicalSetFin& x, const std::set<std::string>& gens1,
                    const std::set<std::string>& gens2) {
    std::set<std::string> u = gens1;
    u.insert(gens2.begin(), gens2.end());
    return subobject(x, u);
}

Subobject sub_intersection(const CubicalSetFin& x, const std::set<std::string>& gens1,
                           const std::set<std::string>& gens2) {
    std::set<std::string> inter;
    for (const auto& id : gens1)
        if (gens2.count(id)) inter.insert(id);
    return subobject(x, inter);
}

InverseImage inverse_image(const CubicalMap& f, const CubeRef& y) {
    const CubicalSetFin& x = f.source();
    const CubicalSetFin& ty = f.target();
    if (!ty.has_cube(y.base) || ty.dim_of(y.base) != y.base_dim())
        throw std::invalid_argument("inverse_image: the cube is not in the target");
    const int n = y.dim;
    const int cap = x.dim_cap() + n;

    std::vector<CubicalSetFin::CubeDecl> cubes;
    std::vector<CubicalSetFin::FaceDecl> faces;
    std::vector<std::pair<CubeRef, CubeMorphism>> pairs;
    std::map<std::string, CubeRef> cone;
    for (int k = 0; k <= cap; ++k)
        for (const auto& cx : x.cubes(k)) {
            CubeRef fx = f.apply(cx);
            for (const auto& g : enumerate_hom(k, n)) {
                if (!(ty.apply_morphism(g, y) == fx)) continue;
                if (!intersect_sorted(cx.deleted, g.deleted_inputs()).empty()) continue;
                std::string id = pair_id(cx, g.entries_string());
                cubes.push_back({id, k});
                pairs.emplace_back(cx, g);
                cone[id] = cx;
            }
        }
    for (const auto& [cx, g] : pairs) {
        const int k = cx.dim;
        for (int i = 1; i <= k; ++i)
            for (int tau = 0; tau <= 1; ++tau) {
                CubeRef cxf = x.ez_face(cx, i, tau);
                CubeMorphism gf = compose(g, face(k, i, tau));
                std::vector<int> d = intersect_sorted(cxf.deleted, gf.deleted_inputs());
                CubeRef bx = strip_common(cxf, d);
                CubeMorphism gb = strip_deleted_inputs(gf, d);
                faces.push_back(
                    {pair_id(cx, g.entries_string()), i, tau, d, pair_id(bx, gb.entries_string())});
            }
    }
    InverseImage res;
    res.set = CubicalSetFin::from_parts(cap, cubes, faces);
    res.cone = CubicalMap::create(res.set, x, std::move(cone));
    return res;
}

}  // namespace cubhom
