#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubhom/common.hpp"

namespace cubhom {

/// Morphism I^k -> I^n of the category of cubes, stored semantically:
/// each output coordinate is either a constant 0/1 or the projection of a
/// distinct input coordinate, with projection indices strictly increasing
/// across outputs.  This is exactly the image of the unique face/degeneracy
/// decomposition, so composition is entry substitution and the normal form
/// is read off directly.
class CubeMorphism {
public:
    static CubeMorphism identity(int k);

    int source_dim() const { return src_; }
    int target_dim() const { return tgt_; }

    bool is_proj(int p) const { return ent_[p] > 0; }
    int proj_index(int p) const { return ent_[p]; }        // 1-based input index
    int const_value(int p) const { return -ent_[p]; }      // 0 or 1

    bool operator==(const CubeMorphism& o) const = default;
    auto operator<=>(const CubeMorphism& o) const = default;

    /// Inputs that appear in some projection entry, ascending.
    std::vector<int> used_inputs() const;
    /// Inputs deleted by the morphism (complement of used_inputs), ascending.
    std::vector<int> deleted_inputs() const;
    bool is_surjection() const;  // pure epsilon word: every entry a projection

    /// Rendering of the entries, e.g. "0,x1,1"; "*" for the empty list.
    std::string entries_string() const;

    friend CubeMorphism face(int k, int i, int tau);
    friend CubeMorphism degeneracy(int k, int i);
    friend CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f);
    friend CubeMorphism surjection_deleting(int k, const std::vector<int>& deleted);
    friend std::pair<CubeMorphism, CubeMorphism> epi_mono_factor(const CubeMorphism& f);
    friend std::vector<CubeMorphism> enumerate_hom(int k, int n);

private:
    CubeMorphism(int src, int tgt, std::vector<int> ent);
    int src_ = 0, tgt_ = 0;
    std::vector<int> ent_;  // per output: j >= 1 projection of input j, 0 const 0, -1 const 1
};

/// delta_i^{k,tau} : I^{k-1} -> I^k inserting the constant tau at slot i.
CubeMorphism face(int k, int i, int tau);
/// epsilon_i^k : I^k -> I^{k-1} deleting coordinate i.
CubeMorphism degeneracy(int k, int i);
/// g after f. Requires f.target_dim == g.source_dim.
CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f);
/// The surjection I^k ->> I^{k-r} deleting the given (ascending) inputs.
CubeMorphism surjection_deleting(int k, const std::vector<int>& deleted);

std::vector<int> evaluate(const CubeMorphism& f, const std::vector<int>& point);
bool is_injective(const CubeMorphism& f);
/// f = mono . epi with epi a pure degeneracy word and mono a pure face word.
std::pair<CubeMorphism, CubeMorphism> epi_mono_factor(const CubeMorphism& f);
/// All morphisms I^k -> I^n, deterministic order, no duplicates.
std::vector<CubeMorphism> enumerate_hom(int k, int n);

/// The unique decomposition of a morphism into faces after degeneracies:
/// delta positions strictly decreasing, epsilon positions strictly
/// increasing, lengths tied by k - r = n - s.
struct NormalFormWord {
    int source_dim = 0, target_dim = 0;
    std::vector<std::pair<int, int>> delta;  // (position j, sign tau), j strictly decreasing
    std::vector<int> epsilon;                // strictly increasing

    bool operator==(const NormalFormWord& o) const = default;
    /// "d[j,t] ... e[i] ..." with the rightmost generator applied first;
    /// "id" for the empty word.
    std::string to_string() const;
};

NormalFormWord normal_form(const CubeMorphism& f);
/// Rebuild the morphism by composing the word's generators.
CubeMorphism from_normal_form(const NormalFormWord& w);

/// One face or degeneracy generator in a textual word.
struct GenToken {
    bool is_face = false;
    int index = 0;
    int tau = 0;
    bool operator==(const GenToken& o) const = default;
};

/// Tokenizes "d[j,t]" / "e[i]" words; "id" yields the empty list.
std::vector<GenToken> parse_word(const std::string& text);

/// Folds a token list into a morphism with the tokens applied left to
/// right (pipeline order).  The source dimension is the minimal one making
/// every generator index valid unless an explicit dimension is supplied.
CubeMorphism eval_word_applied(const std::vector<GenToken>& tokens,
                               std::optional<int> source_dim = std::nullopt);

}  // namespace cubhom
