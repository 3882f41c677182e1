#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cubhom/cube_cat.hpp"

using namespace cubhom;

namespace {

// Evaluation table of f on all 2^k points, bit i of the index = coordinate i+1.
std::vector<std::vector<int>> eval_table(const CubeMorphism& f) {
    const int k = f.source_dim();
    std::vector<std::vector<int>> table;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> p(k);
        for (int i = 0; i < k; ++i) p[i] = (mask >> i) & 1;
        table.push_back(evaluate(f, p));
    }
    return table;
}

// Brute-force closure of the generators under composition: all evaluation
// tables of composite maps I^k -> I^n, intermediate dimensions bounded by
// max(k, n), which the unique decomposition guarantees is enough.
std::set<std::vector<std::vector<int>>> closure_tables(int k, int n) {
    const int cap = std::max(k, n);
    using State = std::pair<int, std::vector<std::vector<int>>>;
    std::set<State> seen;
    std::vector<State> queue{{k, eval_table(CubeMorphism::identity(k))}};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        auto [m, table] = queue.back();
        queue.pop_back();
        auto push = [&](int m2, const CubeMorphism& g) {
            std::vector<std::vector<int>> t2;
            for (const auto& out : table) t2.push_back(evaluate(g, out));
            State s{m2, t2};
            if (seen.insert(s).second) queue.push_back(s);
        };
        for (int i = 1; i <= m; ++i) push(m - 1, degeneracy(m, i));
        if (m < cap)
            for (int i = 1; i <= m + 1; ++i)
                for (int tau = 0; tau <= 1; ++tau) push(m + 1, face(m + 1, i, tau));
    }
    std::set<std::vector<std::vector<int>>> result;
    for (const auto& [m, t] : seen)
        if (m == n) result.insert(t);
    return result;
}

CubeMorphism random_word_morphism(std::mt19937_64& rng, int max_dim, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    int len = len_dist(rng);
    CubeMorphism f = CubeMorphism::identity(static_cast<int>(rng() % (max_dim + 1)));
    for (int step = 0; step < len; ++step) {
        int m = f.target_dim();
        bool can_up = m < max_dim, can_down = m > 0;
        bool up = can_up && (!can_down || rng() % 2 == 0);
        if (up) {
            int i = 1 + static_cast<int>(rng() % (m + 1));
            f = compose(face(m + 1, i, static_cast<int>(rng() % 2)), f);
        } else {
            int i = 1 + static_cast<int>(rng() % m);
            f = compose(degeneracy(m, i), f);
        }
    }
    return f;
}

}  // namespace

TEST_CASE("face and degeneracy generators") {
    CubeMorphism d10 = face(1, 1, 0);
    CHECK(evaluate(d10, {}) == std::vector<int>{0});
    CHECK(evaluate(face(1, 1, 1), {}) == std::vector<int>{1});
    CHECK(evaluate(face(2, 1, 0), {1}) == std::vector<int>{0, 1});
    CHECK(evaluate(degeneracy(1, 1), {0}).empty());
    CHECK(evaluate(degeneracy(2, 1), {1, 0}) == std::vector<int>{0});
    CHECK(evaluate(degeneracy(2, 2), {1, 0}) == std::vector<int>{1});
    CHECK_THROWS_AS(face(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy(0, 1), std::invalid_argument);
}

TEST_CASE("composition identities from the defining relations") {
    // epsilon_i delta_i = id, and delta then epsilon is not the identity
    for (int k = 1; k <= 5; ++k)
        for (int i = 1; i <= k; ++i)
            for (int tau = 0; tau <= 1; ++tau)
                CHECK(compose(degeneracy(k, i), face(k, i, tau)) == CubeMorphism::identity(k - 1));
    CHECK(compose(face(1, 1, 0), degeneracy(1, 1)) != CubeMorphism::identity(1));

    // delta_j^{n,b} delta_i^{n-1,a} = delta_i^{n,a} delta_{j-1}^{n-1,b}, i < j
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 1; ++b)
                        CHECK(compose(face(n, j, b), face(n - 1, i, a)) ==
                              compose(face(n, i, a), face(n - 1, j - 1, b)));

    // epsilon_j^{n-1} epsilon_i^n = epsilon_i^{n-1} epsilon_{j+1}^n, i <= j
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j)
                CHECK(compose(degeneracy(n - 1, j), degeneracy(n, i)) ==
                      compose(degeneracy(n - 1, i), degeneracy(n, j + 1)));

    // mixed relation, both off-diagonal branches
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 1; i <= n + 1; ++i)
                for (int a = 0; a <= 1; ++a) {
                    CubeMorphism lhs = compose(degeneracy(n + 1, j), face(n + 1, i, a));
                    if (i < j)
                        CHECK(lhs == compose(face(n, i, a), degeneracy(n, j - 1)));
                    else if (i > j)
                        CHECK(lhs == compose(face(n, i - 1, a), degeneracy(n, j)));
                    else
                        CHECK(lhs == CubeMorphism::identity(n));
                }
}

TEST_CASE("composition agrees with pointwise function composition") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 4, 8);
        auto homs = enumerate_hom(f.target_dim(), static_cast<int>(rng() % 4));
        const CubeMorphism& g = homs[rng() % homs.size()];
        CubeMorphism gf = compose(g, f);
        for (int mask = 0; mask < (1 << f.source_dim()); ++mask) {
            std::vector<int> p(f.source_dim());
            for (int i = 0; i < f.source_dim(); ++i) p[i] = (mask >> i) & 1;
            CHECK(evaluate(gf, p) == evaluate(g, evaluate(f, p)));
        }
    }
}

TEST_CASE("composition is associative on random triples") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 4, 6);
        auto hs = enumerate_hom(f.target_dim(), static_cast<int>(rng() % 5));
        const CubeMorphism& g = hs[rng() % hs.size()];
        auto ks = enumerate_hom(g.target_dim(), static_cast<int>(rng() % 5));
        const CubeMorphism& h = ks[rng() % ks.size()];
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("normal form basics") {
    NormalFormWord idw = normal_form(CubeMorphism::identity(3));
    CHECK(idw.delta.empty());
    CHECK(idw.epsilon.empty());
    CHECK(idw.to_string() == "id");

    // constant map I^1 -> I^1 with value 0
    CubeMorphism c0 = compose(face(1, 1, 0), degeneracy(1, 1));
    NormalFormWord w = normal_form(c0);
    CHECK(w.delta == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK(w.epsilon == std::vector<int>{1});
    CHECK(w.to_string() == "d[1,0] e[1]");
    CHECK(from_normal_form(w) == c0);
}

TEST_CASE("normal form round-trips 10^4 random generator words") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 10000; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 5, 12);
        CubeMorphism rebuilt = from_normal_form(normal_form(f));
        CHECK(rebuilt == f);
        CHECK(eval_table(rebuilt) == eval_table(f));
    }
}

TEST_CASE("normal form word shape satisfies the decomposition constraints") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 5, 10);
        NormalFormWord w = normal_form(f);
        int k = w.source_dim, n = w.target_dim;
        int r = static_cast<int>(w.epsilon.size()), s = static_cast<int>(w.delta.size());
        CHECK(k - r == n - s);
        CHECK(k - r >= 0);
        for (size_t q = 1; q < w.delta.size(); ++q) CHECK(w.delta[q - 1].first > w.delta[q].first);
        for (size_t q = 1; q < w.epsilon.size(); ++q) CHECK(w.epsilon[q - 1] < w.epsilon[q]);
    }
}

TEST_CASE("normal form uniqueness, exhaustive for k,n <= 4") {
    for (int k = 0; k <= 4; ++k)
        for (int n = 0; n <= 4; ++n) {
            auto homs = enumerate_hom(k, n);
            std::set<std::vector<std::vector<int>>> tables;
            std::set<std::string> words;
            for (const auto& f : homs) {
                tables.insert(eval_table(f));
                words.insert(normal_form(f).to_string());
                CHECK(from_normal_form(normal_form(f)) == f);
            }
            // distinct morphisms <-> distinct functions <-> distinct words
            CHECK(tables.size() == homs.size());
            CHECK(words.size() == homs.size());
        }
}

TEST_CASE("injectivity predicate") {
    for (int k = 1; k <= 4; ++k)
        for (int i = 1; i <= k; ++i) {
            CHECK(is_injective(face(k, i, 0)));
            CHECK(is_injective(face(k, i, 1)));
            CHECK_FALSE(is_injective(degeneracy(k, i)));
        }
    for (int k = 0; k <= 3; ++k)
        for (int n = 0; n <= 3; ++n)
            for (const auto& f : enumerate_hom(k, n)) {
                // pointwise injectivity on all 2^k points
                std::set<std::vector<int>> images;
                for (const auto& out : eval_table(f)) images.insert(out);
                bool pointwise = images.size() == (1u << k);
                CHECK(is_injective(f) == pointwise);
                CHECK(is_injective(f) == normal_form(f).epsilon.empty());
            }
}

TEST_CASE("epi-mono factorization") {
    CubeMorphism id2 = CubeMorphism::identity(2);
    auto [e, m] = epi_mono_factor(id2);
    CHECK(e == id2);
    CHECK(m == id2);

    CubeMorphism c0 = compose(face(1, 1, 0), degeneracy(1, 1));
    auto [e2, m2] = epi_mono_factor(c0);
    CHECK(e2 == degeneracy(1, 1));
    CHECK(m2 == face(1, 1, 0));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 4, 8);
        auto [epi, mono] = epi_mono_factor(f);
        CHECK(compose(mono, epi) == f);
        CHECK(is_injective(mono));
        CHECK(epi.is_surjection());
        CHECK(epi.source_dim() == f.source_dim());
        CHECK(mono.target_dim() == f.target_dim());
    }
}

TEST_CASE("enumerate_hom counts and closure oracle") {
    auto h11 = enumerate_hom(1, 1);
    CHECK(h11.size() == 3);
    std::set<CubeMorphism> s11(h11.begin(), h11.end());
    CHECK(s11.count(CubeMorphism::identity(1)) == 1);
    CHECK(s11.count(compose(face(1, 1, 0), degeneracy(1, 1))) == 1);
    CHECK(s11.count(compose(face(1, 1, 1), degeneracy(1, 1))) == 1);

    CHECK(enumerate_hom(0, 1).size() == 2);
    CHECK(enumerate_hom(2, 1).size() == 4);

    for (int k = 0; k <= 3; ++k)
        for (int n = 0; n <= 3; ++n) {
            auto homs = enumerate_hom(k, n);
            std::set<CubeMorphism> uniq(homs.begin(), homs.end());
            CHECK(uniq.size() == homs.size());
            std::set<std::vector<std::vector<int>>> tables;
            for (const auto& f : homs) tables.insert(eval_table(f));
            CHECK(tables == closure_tables(k, n));
        }
}

TEST_CASE("evaluate preserves the product order") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        CubeMorphism f = random_word_morphism(rng, 4, 8);
        int k = f.source_dim();
        for (int a = 0; a < (1 << k); ++a)
            for (int b = 0; b < (1 << k); ++b) {
                if ((a & b) != a) continue;  // a <= b in the product order
                std::vector<int> pa(k), pb(k);
                for (int i = 0; i < k; ++i) {
                    pa[i] = (a >> i) & 1;
                    pb[i] = (b >> i) & 1;
                }
                auto ya = evaluate(f, pa), yb = evaluate(f, pb);
                for (size_t i = 0; i < ya.size(); ++i) CHECK(ya[i] <= yb[i]);
            }
    }
}

TEST_CASE("word parsing and pipeline evaluation") {
    auto tokens = parse_word("e[1] d[1,0]");
    REQUIRE(tokens.size() == 2);
    CubeMorphism f = eval_word_applied(tokens);
    CHECK(f.source_dim() == 1);
    CHECK(f.target_dim() == 1);
    CHECK(normal_form(f).to_string() == "d[1,0] e[1]");

    CHECK(eval_word_applied(parse_word("id")) == CubeMorphism::identity(0));
    CHECK(eval_word_applied(parse_word("id"), 3) == CubeMorphism::identity(3));
    CHECK(eval_word_applied(parse_word("e[2] e[1]")).source_dim() == 2);
    CHECK_THROWS_AS(parse_word("q[1]"), ValidationError);
    CHECK_THROWS_AS(parse_word("d[1]"), ValidationError);
    CHECK_THROWS_AS(eval_word_applied(parse_word("e[3]"), 1), ValidationError);
}
