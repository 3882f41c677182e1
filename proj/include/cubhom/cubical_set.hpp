#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubhom/cube_cat.hpp"

namespace cubhom {

/// A cube of X_k in canonical Eilenberg-Zilber form: the surjection of the
/// cube category deleting the listed coordinates (ascending, within 1..k)
/// applied to a nondegenerate base cube of dimension k - |deleted|.  Two
/// distinct refs never denote the same cube.
struct CubeRef {
    int dim = 0;
    std::vector<int> deleted;
    std::string base;

    int base_dim() const { return dim - static_cast<int>(deleted.size()); }
    bool operator==(const CubeRef& o) const = default;
    /// Canonical order: base dimension, then base identifier, then the
    /// deletion word.
    auto operator<=>(const CubeRef& o) const {
        if (auto c = dim <=> o.dim; c != 0) return c;
        if (auto c = base_dim() <=> o.base_dim(); c != 0) return c;
        if (auto c = base <=> o.base; c != 0) return c;
        return deleted <=> o.deleted;
    }

    std::string to_string() const;  // "base" or "base@e[1,3]"
};

/// Finite cubical set presented by nondegenerate cubes and a face table in
/// Eilenberg-Zilber form.  Construction validates dimensions, identifier
/// uniqueness, and every instance of the double-face identity dual to the
/// face-face relation of the cube category.
class CubicalSetFin {
public:
    struct CubeDecl {
        std::string id;
        int dim = 0;
    };
    struct FaceDecl {
        std::string cube;
        int i = 0;
        int tau = 0;
        std::vector<int> eta;  // ascending deleted coordinates of I^{dim-1}
        std::string target;
    };

    static CubicalSetFin from_parts(int dim_cap, const std::vector<CubeDecl>& cubes,
                                    const std::vector<FaceDecl>& faces);

    int dim_cap() const { return dim_cap_; }
    const std::vector<std::string>& nondeg(int m) const;
    int nondeg_count(int m) const { return m <= dim_cap_ ? static_cast<int>(nondeg(m).size()) : 0; }
    bool has_cube(const std::string& id) const { return dim_of_.count(id) > 0; }
    int dim_of(const std::string& id) const;
    /// EZ pair of the (i,tau) face of a nondegenerate cube.
    const CubeRef& stored_face(const std::string& id, int i, int tau) const;

    /// All cubes of X_k, canonical order.  Defined for every k >= 0.
    std::vector<CubeRef> cubes(int k) const;

    CubeRef ez_face(const CubeRef& c, int i, int tau) const;
    CubeRef ez_degeneracy(const CubeRef& c, int i) const;
    /// X(eta) for the surjection of I^k deleting the given coordinates,
    /// applied to a cube of dimension k - |deleted|.
    CubeRef apply_surjection(int k, const std::vector<int>& deleted, const CubeRef& c) const;
    /// X(f) : X_k -> X_q for an arbitrary morphism f : I^q -> I^k.
    CubeRef apply_morphism(const CubeMorphism& f, const CubeRef& c) const;

    CubeRef nondeg_ref(const std::string& id) const { return CubeRef{dim_of(id), {}, id}; }
    CubeRef parse_ref(const std::string& text) const;

    bool operator==(const CubicalSetFin& o) const = default;

private:
    int dim_cap_ = 0;
    std::vector<std::vector<std::string>> nondeg_;
    std::map<std::string, int> dim_of_;
    std::map<std::string, std::vector<std::array<CubeRef, 2>>> faces_;
};

bool is_degenerate(const CubeRef& c);

/// The representable cubical set of I^n: nondegenerate m-cubes are the
/// injective morphisms I^m -> I^n, identified by their entries rendering.
CubicalSetFin standard_cube(int n);
/// Finds the injective morphism named by a standard-cube identifier.
CubeMorphism standard_cube_morphism(int n, const std::string& id);

/// Levelwise binary product.  Nondegenerate cubes are the pairs whose
/// deletion sets are disjoint; identifiers are "(left;right)".
CubicalSetFin product(const CubicalSetFin& x, const CubicalSetFin& y);
/// The factor refs of a product cube id.
std::pair<CubeRef, CubeRef> product_components(const CubicalSetFin& x, const CubicalSetFin& y,
                                               const std::string& pair_id);

/// Morphism of cubical sets, given on nondegenerate cubes.  Construction
/// checks commutation with every stored face.
class CubicalMap {
public:
    static CubicalMap create(CubicalSetFin source, CubicalSetFin target,
                             std::map<std::string, CubeRef> assignment);
    static CubicalMap identity(const CubicalSetFin& x);

    const CubicalSetFin& source() const { return source_; }
    const CubicalSetFin& target() const { return target_; }
    const std::map<std::string, CubeRef>& assignment() const { return assignment_; }

    CubeRef apply(const CubeRef& c) const;

private:
    CubicalSetFin source_, target_;
    std::map<std::string, CubeRef> assignment_;
};

CubicalMap compose(const CubicalMap& g, const CubicalMap& f);

struct Subobject {
    CubicalSetFin set;
    CubicalMap inclusion;  // into the ambient set
};

/// Subobject of X generated by a face-closed set of nondegenerate cube
/// identifiers (ValidationError when the set is not face-closed).
Subobject subobject(const CubicalSetFin& x, const std::set<std::string>& gens);
Subobject sub_union(const CubicalSetFin& x, const std::set<std::string>& gens1,
                    const std::set<std::string>& gens2);
Subobject sub_intersection(const CubicalSetFin& x, const std::set<std::string>& gens1,
                           const std::set<std::string>& gens2);

/// Levelwise pullback of f along the singular cube of y: cubes are pairs
/// (x in X_k, g : I^k -> I^n) with f(x) = Y(g)(y); cone projects to x.
struct InverseImage {
    CubicalSetFin set;
    CubicalMap cone;
};

InverseImage inverse_image(const CubicalMap& f, const CubeRef& y);

}  // namespace cubhom
