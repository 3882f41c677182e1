#include "cubhom/cube_cat.hpp"

#include <algorithm>
#include <sstream>

namespace cubhom {

CubeMorphism::CubeMorphism(int src, int tgt, std::vector<int> ent)
    : src_(src), tgt_(tgt), ent_(std::move(ent)) {
    if (src_ < 0 || tgt_ < 0 || static_cast<int>(ent_.size()) != tgt_)
        throw std::invalid_argument("CubeMorphism: inconsistent dimensions");
    int last = 0;
    for (int e : ent_) {
        if (e > 0) {
            if (e <= last || e > src_)
                throw std::invalid_argument("CubeMorphism: projection indices must be strictly increasing");
            last = e;
        } else if (e != 0 && e != -1) {
            throw std::invalid_argument("CubeMorphism: bad entry");
        }
    }
}

CubeMorphism CubeMorphism::identity(int k) {
    std::vector<int> ent(k);
    for (int i = 0; i < k; ++i) ent[i] = i + 1;
    return CubeMorphism(k, k, std::move(ent));
}

std::vector<int> CubeMorphism::used_inputs() const {
    std::vector<int> used;
    for (int e : ent_)
        if (e > 0) used.push_back(e);
    return used;
}

std::vector<int> CubeMorphism::deleted_inputs() const {
    std::vector<bool> seen(src_ + 1, false);
    for (int e : ent_)
        if (e > 0) seen[e] = true;
    std::vector<int> del;
    for (int j = 1; j <= src_; ++j)
        if (!seen[j]) del.push_back(j);
    return del;
}

bool CubeMorphism::is_surjection() const {
    for (int e : ent_)
        if (e <= 0) return false;
    return true;
}

std::string CubeMorphism::entries_string() const {
    if (ent_.empty()) return "*";
    std::ostringstream os;
    for (size_t p = 0; p < ent_.size(); ++p) {
        if (p) os << ",";
        if (ent_[p] > 0)
            os << "x" << ent_[p];
        else
            os << -ent_[p];
    }
    return os.str();
}

CubeMorphism face(int k, int i, int tau) {
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("face: index out of range");
    if (tau != 0 && tau != 1) throw std::invalid_argument("face: sign must be 0 or 1");
    std::vector<int> ent;
    ent.reserve(k);
    for (int p = 1; p < i; ++p) ent.push_back(p);
    ent.push_back(-tau);
    for (int p = i; p <= k - 1; ++p) ent.push_back(p);
    return CubeMorphism(k - 1, k, std::move(ent));
}

CubeMorphism degeneracy(int k, int i) {
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("degeneracy: index out of range");
    std::vector<int> ent;
    ent.reserve(k - 1);
    for (int p = 1; p <= k; ++p)
        if (p != i) ent.push_back(p);
    return CubeMorphism(k, k - 1, std::move(ent));
}

CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f) {
    if (f.tgt_ != g.src_) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<int> ent;
    ent.reserve(g.tgt_);
    for (int e : g.ent_) ent.push_back(e > 0 ? f.ent_[e - 1] : e);
    return CubeMorphism(f.src_, g.tgt_, std::move(ent));
}

CubeMorphism surjection_deleting(int k, const std::vector<int>& deleted) {
    std::vector<bool> del(k + 1, false);
    int last = 0;
    for (int d : deleted) {
        if (d <= last || d > k) throw std::invalid_argument("surjection_deleting: bad deletion list");
        del[d] = true;
        last = d;
    }
    std::vector<int> ent;
    for (int j = 1; j <= k; ++j)
        if (!del[j]) ent.push_back(j);
    int m = static_cast<int>(ent.size());
    return CubeMorphism(k, m, std::move(ent));
}

std::vector<int> evaluate(const CubeMorphism& f, const std::vector<int>& point) {
    if (static_cast<int>(point.size()) != f.source_dim())
        throw std::invalid_argument("evaluate: point length mismatch");
    std::vector<int> out(f.target_dim());
    for (int p = 0; p < f.target_dim(); ++p)
        out[p] = f.is_proj(p) ? point[f.proj_index(p) - 1] : f.const_value(p);
    return out;
}

bool is_injective(const CubeMorphism& f) {
    return static_cast<int>(f.used_inputs().size()) == f.source_dim();
}

std::pair<CubeMorphism, CubeMorphism> epi_mono_factor(const CubeMorphism& f) {
    CubeMorphism epi = surjection_deleting(f.source_dim(), f.deleted_inputs());
    // Rewrite the projections of f against the compacted inputs of the epi.
    std::vector<int> rank(f.source_dim() + 1, 0);
    int next = 0;
    std::vector<int> used = f.used_inputs();
    for (int j : used) rank[j] = ++next;
    std::vector<int> ent;
    ent.reserve(f.target_dim());
    for (int p = 0; p < f.target_dim(); ++p)
        ent.push_back(f.is_proj(p) ? rank[f.proj_index(p)] : -f.const_value(p));
    CubeMorphism mono(next, f.target_dim(), std::move(ent));
    return {epi, mono};
}

std::vector<CubeMorphism> enumerate_hom(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("enumerate_hom: negative dimension");
    std::vector<CubeMorphism> out;
    std::vector<int> ent(n);
    // Entries chosen position by position; projections must increase.
    auto rec = [&](auto&& self, int pos, int last) -> void {
        if (pos == n) {
            out.push_back(CubeMorphism(k, n, ent));
            return;
        }
        ent[pos] = 0;  // const 0
        self(self, pos + 1, last);
        ent[pos] = -1;  // const 1
        self(self, pos + 1, last);
        for (int j = last + 1; j <= k; ++j) {
            ent[pos] = j;
            self(self, pos + 1, j);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::string NormalFormWord::to_string() const {
    if (delta.empty() && epsilon.empty()) return "id";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, tau] : delta) {
        if (!first) os << " ";
        os << "d[" << j << "," << tau << "]";
        first = false;
    }
    for (int i : epsilon) {
        if (!first) os << " ";
        os << "e[" << i << "]";
        first = false;
    }
    return os.str();
}

NormalFormWord normal_form(const CubeMorphism& f) {
    NormalFormWord w;
    w.source_dim = f.source_dim();
    w.target_dim = f.target_dim();
    // Constant positions read from the top give the strictly decreasing j's.
    for (int p = f.target_dim() - 1; p >= 0; --p)
        if (!f.is_proj(p)) w.delta.emplace_back(p + 1, f.const_value(p));
    w.epsilon = f.deleted_inputs();
    return w;
}

CubeMorphism from_normal_form(const NormalFormWord& w) {
    const int k = w.source_dim;
    const int r = static_cast<int>(w.epsilon.size());
    const int s = static_cast<int>(w.delta.size());
    if (k - r != w.target_dim - s || k - r < 0)
        throw std::invalid_argument("from_normal_form: inconsistent lengths");
    CubeMorphism f = CubeMorphism::identity(k);
    // epsilon_{i1} ... epsilon_{ir} with i ascending: rightmost acts first.
    int dim = k;
    for (int q = r - 1; q >= 0; --q) {
        f = compose(degeneracy(dim, w.epsilon[q]), f);
        --dim;
    }
    for (int q = s - 1; q >= 0; --q) {
        ++dim;
        f = compose(face(dim, w.delta[q].first, w.delta[q].second), f);
    }
    return f;
}

std::vector<GenToken> parse_word(const std::string& text) {
    std::vector<GenToken> tokens;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto parse_int = [&]() -> int {
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ValidationError("word parse: expected number at position " + std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw ValidationError(std::string("word parse: expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    };
    skip_ws();
    if (text.compare(pos, 2, "id") == 0) {
        pos += 2;
        skip_ws();
        if (pos != text.size()) throw ValidationError("word parse: trailing input after 'id'");
        return tokens;
    }
    while (pos < text.size()) {
        GenToken t;
        char c = text[pos];
        if (c == 'd') {
            t.is_face = true;
            ++pos;
            expect('[');
            t.index = parse_int();
            expect(',');
            t.tau = parse_int();
            if (t.tau != 0 && t.tau != 1) throw ValidationError("word parse: face sign must be 0 or 1");
            expect(']');
        } else if (c == 'e') {
            t.is_face = false;
            ++pos;
            expect('[');
            t.index = parse_int();
            expect(']');
        } else {
            throw ValidationError(std::string("word parse: unexpected character '") + c + "'");
        }
        if (t.index < 1) throw ValidationError("word parse: generator indices are 1-based");
        tokens.push_back(t);
        skip_ws();
    }
    if (tokens.empty()) throw ValidationError("word parse: empty word (use 'id')");
    return tokens;
}

CubeMorphism eval_word_applied(const std::vector<GenToken>& tokens, std::optional<int> source_dim) {
    // Minimal start dimension keeping every generator in range.
    int need = 0, d = 0;
    for (const auto& t : tokens) {
        if (t.is_face) {
            need = std::max(need, t.index - d - 1);
            ++d;
        } else {
            need = std::max(need, std::max(t.index - d, 1 - d));
            --d;
        }
    }
    int k0 = source_dim.value_or(need);
    if (k0 < need)
        throw ValidationError("word: source dimension " + std::to_string(k0) +
                              " too small; need at least " + std::to_string(need));
    CubeMorphism f = CubeMorphism::identity(k0);
    int dim = k0;
    for (const auto& t : tokens) {
        if (t.is_face) {
            ++dim;
            f = compose(face(dim, t.index, t.tau), f);
        } else {
            f = compose(degeneracy(dim, t.index), f);
            --dim;
        }
    }
    return f;
}

}  // namespace cubhom
