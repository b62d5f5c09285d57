#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dsplit/rootsys.hpp"

using namespace dsplit;

namespace {

SignedPerm P(int n, const char* s) { return SignedPerm::parse(n, s); }

std::vector<Root> R(int n, std::initializer_list<const char*> xs) {
    std::vector<Root> r;
    for (auto x : xs) r.push_back(Root::parse(n, x));
    return sorted_roots(r);
}

// Roots by the textbook lists, built without the library's table.
std::size_t oracle_root_count(RootKind k, int n) {
    std::set<std::vector<int>> s;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a : {-1, 1})
                for (int b : {-1, 1}) {
                    if (i == j) continue;
                    if (k == RootKind::A && a == b) continue;
                    std::vector<int> v(n, 0);
                    v[i] = a, v[j] = b;
                    s.insert(v);
                }
    if (k == RootKind::B || k == RootKind::C)
        for (int i = 0; i < n; ++i)
            for (int a : {-1, 1}) {
                std::vector<int> v(n, 0);
                v[i] = a * (k == RootKind::C ? 2 : 1);
                s.insert(v);
            }
    return s.size();
}

}  // namespace

TEST_CASE("root counts") {
    CHECK(build_root_system(RootKind::C, 2).roots.size() == 8);
    CHECK(build_root_system(RootKind::A, 3).roots.size() == 6);
    CHECK(build_root_system(RootKind::D, 4).roots.size() == 24);
    for (int n = 2; n <= 6; ++n) {
        CHECK(build_root_system(RootKind::C, n).roots.size() == std::size_t(2 * n * n));
        CHECK(build_root_system(RootKind::B, n).roots.size() == std::size_t(2 * n * n));
        CHECK(build_root_system(RootKind::A, n).roots.size() == std::size_t(n * (n - 1)));
        for (auto k : {RootKind::A, RootKind::B, RootKind::C})
            CHECK(build_root_system(k, n).roots.size() == oracle_root_count(k, n));
    }
    for (int n = 4; n <= 6; ++n) CHECK(build_root_system(RootKind::D, n).roots.size() == std::size_t(2 * n * (n - 1)));
    CHECK_THROWS(build_root_system(RootKind::D, 3));
}

TEST_CASE("root parse and print") {
    CHECK(Root::parse(3, "e1-e2").coeffs == std::vector<int>{1, -1, 0});
    CHECK(Root::parse(3, "2e3").coeffs == std::vector<int>{0, 0, 2});
    CHECK(Root::parse(3, "-e1-e3").str() == "-e1-e3");
    CHECK(dot(Root::parse(2, "e1-e2"), Root::parse(2, "2e2")) == -2);
}

TEST_CASE("parabolic_roots examples") {
    auto C2 = build_root_system(RootKind::C, 2);
    CHECK(parabolic_roots(C2, {2, {{1}, {2}}, false}).empty());
    CHECK(parabolic_roots(C2, {0, {}, false}) == C2.roots);
    auto C3 = build_root_system(RootKind::C, 3);
    CHECK(parabolic_roots(C3, {3, {{1, 2}}, false}) == R(3, {"e1-e2", "-e1+e2"}));
}

TEST_CASE("is_stable_under examples") {
    auto A = R(2, {"e1-e2", "-e1+e2"});
    CHECK(is_stable_under(A, P(2, "(1,2)(-1,-2)")));
    CHECK_FALSE(is_stable_under(A, P(2, "(1,-1)")));
    auto C2 = build_root_system(RootKind::C, 2);
    for (const auto& x : hyperoctahedral(2)) CHECK(is_stable_under(C2.roots, x));
}

TEST_CASE("classify_parabolic examples") {
    auto C3 = build_root_system(RootKind::C, 3);
    auto L = classify_parabolic(C3, R(3, {"e1-e2", "-e1+e2"}));
    CHECK(L.m == 3);
    CHECK(L.I == SetPartition{{1, 2}, {3}});
    auto C2 = build_root_system(RootKind::C, 2);
    auto M = classify_parabolic(C2, R(2, {"2e2", "-2e2"}));
    CHECK(M.m == 1);
    CHECK(M.I == SetPartition{{1}});
    auto E = classify_parabolic(C2, {});
    CHECK(E.m == 2);
    CHECK(E.I == SetPartition{{1}, {2}});
    CHECK_THROWS_AS(classify_parabolic(C2, R(2, {"e1-e2"})), NotParabolic);
}

TEST_CASE("reflections as signed permutations") {
    CHECK(reflection(3, Root::parse(3, "e1-e2")) == P(3, "(1,2)(-1,-2)"));
    CHECK(reflection(3, Root::parse(3, "e1+e3")) == P(3, "(1,-3)(-1,3)"));
    CHECK(reflection(3, Root::parse(3, "2e2")) == P(3, "(2,-2)"));
    for (int n = 2; n <= 4; ++n) CHECK(weyl_group(build_root_system(RootKind::C, n)).size() == hyperoctahedral(n).size());
    CHECK(weyl_group(build_root_system(RootKind::D, 4)).size() == 192);
}

TEST_CASE("stability agrees with the block criterion") {
    for (int n = 2; n <= 4; ++n) {
        auto sys = build_root_system(RootKind::C, n);
        auto G = hyperoctahedral(n);
        for (int m = 0; m <= n; ++m) {
            IndexSet head, S;
            for (int i = 1; i <= m; ++i) head.push_back(i);
            for (int i = m + 1; i <= n; ++i) S.push_back(i);
            for (const auto& I : set_partitions(head)) {
                auto roots = split_roots(sys, S, I);
                for (const auto& x : G) CHECK(is_stable_under(roots, x) == block_stable(S, I, x));
            }
        }
    }
}

TEST_CASE("set partitions are counted by Bell numbers") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
    for (int n = 0; n <= 5; ++n) {
        IndexSet pts;
        for (int i = 1; i <= n; ++i) pts.push_back(i);
        CHECK(set_partitions(pts).size() == bell[n]);
    }
}
