#pragma once

#include <string>
#include <vector>

#include "cubhom/abelian.hpp"
#include "cubhom/cube_cat.hpp"

namespace cubhom {

/// Bounded-below chain complex of finitely presented abelian groups.
/// terms[n] holds degree n for 0 <= n <= cap; diffs[n] : terms[n] ->
/// terms[n-1] for 1 <= n <= cap.  Construction checks that every
/// differential is well defined and that consecutive differentials compose
/// to the zero map of presented groups.
class ChainComplexFP {
public:
    static ChainComplexFP create(std::vector<FpAbGroup> terms, std::vector<GroupHom> diffs);

    int cap() const { return static_cast<int>(terms_.size()) - 1; }
    const FpAbGroup& term(int n) const { return terms_.at(n); }
    const GroupHom& diff(int n) const { return diffs_.at(n); }  // 1 <= n <= cap

private:
    std::vector<FpAbGroup> terms_;
    std::vector<GroupHom> diffs_;  // diffs_[0] unused placeholder
};

/// Degreewise map of chain complexes; squares are checked to commute as
/// maps of presented groups.
class ChainMap {
public:
    static ChainMap create(ChainComplexFP source, ChainComplexFP target,
                           std::vector<GroupHom> components);

    const ChainComplexFP& source() const { return source_; }
    const ChainComplexFP& target() const { return target_; }
    const GroupHom& component(int n) const { return components_.at(n); }
    int top_degree() const { return static_cast<int>(components_.size()) - 1; }

    static ChainMap identity(const ChainComplexFP& c);

private:
    ChainComplexFP source_, target_;
    std::vector<GroupHom> components_;
};

/// Homology at one degree: the group as invariant factors, a presentation
/// on the cycle generators, and the cycle witnesses themselves (columns in
/// the degree-n generator coordinates).
struct HomologyResult {
    int degree = 0;
    InvariantFactors group;
    FpAbGroup presentation;     // gens = cycle_basis columns
    IntMatrix cycle_basis;      // terms[n].gens x presentation.gens
};

/// Homology of C at degree n.  Requires n + 1 <= cap so the incoming
/// differential is available; the outgoing one at degree 0 is zero.
HomologyResult homology_at(const ChainComplexFP& c, int n);

/// Map induced on degree-n homology by a chain map.
GroupHom induced_on_homology(const ChainMap& f, int n);
GroupHom induced_on_homology(const ChainMap& f, const HomologyResult& source_h,
                             const HomologyResult& target_h);

/// The complex of free abelian groups on injective cube morphisms
/// I^k -> I^n with the alternating face-precomposition differential;
/// acyclic with H_0 = Z.  A zero group is appended on top so homology can
/// be asked through degree n.
ChainComplexFP plus_complex(int n);

/// Long exact sequence from a degreewise short exact pair of chain maps.
struct ExactnessCheck {
    std::string position;  // e.g. "H1(B)"
    bool exact = false;
};

struct SnakeResult {
    int n_max = 0;
    std::vector<HomologyResult> h_sub, h_total;  // degrees 0..n_max
    std::vector<HomologyResult> h_quot;          // degrees 0..n_max+1
    std::vector<GroupHom> incl_star, proj_star;  // degrees 0..n_max
    std::vector<GroupHom> connecting;            // connecting[q] : H_q(quot) -> H_{q-1}(sub), q = 1..n_max+1
    std::vector<ExactnessCheck> checks;
    bool all_exact = false;
};

/// Verifies the pair is levelwise short exact through degree n_max + 1
/// (throws ValidationError naming the offending degree otherwise), then
/// assembles homology, induced maps, the connecting homomorphisms built by
/// lift / differential / preimage on cycle witnesses, and exactness
/// verdicts at every position of degree <= n_max.
SnakeResult snake_sequence(const ChainMap& incl, const ChainMap& proj, int n_max);

}  // namespace cubhom
