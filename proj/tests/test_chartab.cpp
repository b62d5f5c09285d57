#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dsplit/chartab.hpp"

using namespace dsplit;

namespace {

// Class count by orbit enumeration over all conjugators.
int brute_class_count(const PermGroup& G) {
    std::set<Perm> seen;
    int k = 0;
    for (const auto& x : G.elements()) {
        if (seen.count(x)) continue;
        ++k;
        for (const auto& g : G.elements()) seen.insert(perm_mul(perm_mul(g, x), perm_inverse(g)));
    }
    return k;
}

std::multiset<long long> degs(const CharacterTable& T) { return {T.degrees.begin(), T.degrees.end()}; }

PermGroup cyclic(int k) {
    Perm c(k);
    for (int i = 0; i < k; ++i) c[i] = (i + 1) % k;
    return PermGroup({c}, k);
}

}  // namespace

TEST_CASE("perm helpers") {
    auto a = perm_from_cycles(3, {{1, 2, 3}});
    auto b = perm_from_cycles(3, {{1, 2}});
    CHECK(perm_mul(a, b)[0] == a[b[0]]);
    CHECK(perm_mul(a, perm_inverse(a)) == perm_identity(3));
    auto s = perm_from_signed(SignedPerm::parse(2, "(1,2,-1,-2)"));
    CHECK(s == Perm{1, 2, 3, 0});
}

TEST_CASE("conjugacy classes") {
    CHECK(PermGroup(std::vector<Perm>{perm_from_signed(SignedPerm::parse(2, "(1,2)(-1,-2)")),
                                      perm_from_signed(SignedPerm::parse(2, "(1,-1)"))},
                    4)
              .num_classes() == 5);
    CHECK(cyclic(4).num_classes() == 4);
    CHECK(preset_group("S3").num_classes() == 3);
    for (const auto& name : preset_names()) {
        auto G = preset_group(name);
        CHECK(G.num_classes() == brute_class_count(G));
        long long total = 0;
        for (int k = 0; k < G.num_classes(); ++k) total += G.class_size(k);
        CHECK(total == static_cast<long long>(G.order()));
    }
}

TEST_CASE("character table degrees") {
    CHECK(degs(character_table(preset_group("S3"))) == std::multiset<long long>{1, 1, 2});
    CHECK(degs(character_table(preset_group("C2wrS2"))) == std::multiset<long long>{1, 1, 1, 1, 2});
    CHECK(degs(character_table(preset_group("S4"))) == std::multiset<long long>{1, 1, 2, 3, 3});
    CHECK(degs(character_table(preset_group("Q8"))) == std::multiset<long long>{1, 1, 1, 1, 2});
    CHECK(degs(character_table(preset_group("D8"))) == std::multiset<long long>{1, 1, 1, 1, 2});
    for (int k : {3, 5, 6}) {
        auto T = character_table(cyclic(k));
        CHECK(T.size() == k);
        for (auto d : T.degrees) CHECK(d == 1);
        CHECK(verify_orthogonality(cyclic(k), T));
    }
}

TEST_CASE("tables are orthogonal and degrees divide the order") {
    for (const auto& name : preset_names()) {
        auto G = preset_group(name);
        auto T = character_table(G);
        CHECK(verify_orthogonality(G, T));
        for (auto d : T.degrees) CHECK(static_cast<long long>(G.order()) % d == 0);
        CHECK(T.size() == G.num_classes());
    }
}

TEST_CASE("wreath degrees follow the little-group count") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 1; m <= 3; ++m) {
            auto G = cyclic_wreath(k, m);
            auto T = character_table(G);
            auto p = wreath_predicted_degrees(k, m);
            CHECK(degs(T) == std::multiset<long long>(p.begin(), p.end()));
        }
}

TEST_CASE("induction and restriction") {
    auto G = preset_group("S3");
    auto A3 = PermGroup({perm_from_cycles(3, {{1, 2, 3}})}, 3);
    auto TG = character_table(G);
    auto TA = character_table(A3);
    auto ind1 = induce(trivial_character(A3), A3, G);
    CHECK(ind1[G.class_of(perm_identity(3))].rational() == 2);
    // a nontrivial linear character of A3 induces to the degree-2 irreducible
    for (const auto& th : TA.chars) {
        if (same_function(th, trivial_character(A3))) continue;
        auto ind = induce(th, A3, G);
        auto m = decompose(ind, G, TG);
        int nonzero = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) {
                ++nonzero;
                CHECK(m[i] == 1);
                CHECK(TG.degrees[i] == 2);
            }
        CHECK(nonzero == 1);
    }
    // Frobenius reciprocity
    for (const auto& name : {"S4", "C2wrS2", "C4wrS2"}) {
        auto H = preset_group(name);
        auto T = character_table(H);
        auto sub = PermGroup({H.generators()[0]}, H.degree());
        auto TS = character_table(sub);
        for (const auto& th : TS.chars)
            for (const auto& chi : T.chars)
                CHECK(inner(induce(th, sub, H), chi, H) == inner(th, restrict_to(chi, H, sub), sub));
    }
}

TEST_CASE("extendibility") {
    auto C3 = cyclic(3);
    auto r = inertia_and_extendibility(C3, C3, trivial_character(C3));
    CHECK(r.extends);
    // X = C3 inside (C3 : C2) wr S2
    std::vector<Perm> Y = {perm_from_cycles(3, {{1, 2, 3}}), perm_from_cycles(3, {{2, 3}})};
    auto gens = wreath_generators(Y, 3, 2);
    PermGroup W(gens, 6);
    PermGroup X({perm_from_cycles(6, {{1, 2, 3}}), perm_from_cycles(6, {{4, 5, 6}})}, 6);
    CHECK(X.is_normal_in(W));
    for (const auto& th : character_table(X).chars) CHECK(inertia_and_extendibility(X, W, th).extends);
}

TEST_CASE("power maps") {
    auto G = preset_group("S4");
    for (int k = 0; k < G.num_classes(); ++k) {
        CHECK(G.power_class(k, 1) == k);
        CHECK(G.power_class(k, G.elem_order(G.class_rep(k))) == G.class_of(perm_identity(4)));
    }
    CHECK(G.exponent() == 12);
}
