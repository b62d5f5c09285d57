#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dsplit/levi.hpp"

using namespace dsplit;

namespace {

SignedPerm P(int n, const char* s) { return SignedPerm::parse(n, s); }

// |GL_2(p)| by counting invertible 2x2 matrices.
long brute_gl2(int p) {
    long c = 0;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int x = 0; x < p; ++x)
                for (int y = 0; y < p; ++y)
                    if (((a * y - b * x) % p + p) % p) ++c;
    return c;
}

// |Sp_2(p)| = |SL_2(p)|
long brute_sl2(int p) {
    long c = 0;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int x = 0; x < p; ++x)
                for (int y = 0; y < p; ++y)
                    if (((a * y - b * x) % p + p) % p == 1) ++c;
    return c;
}

std::set<std::string> label_strings(int n, int d) {
    std::set<std::string> s;
    for (const auto& L : enumerate_labels(n, d)) s.insert(L.str());
    return s;
}

}  // namespace

TEST_CASE("compute_d0 table") {
    CHECK(compute_d0(TwistKind::BCD, 6) == 3);
    CHECK(compute_d0(TwistKind::BCD, 5) == 5);
    CHECK(compute_d0(TwistKind::A2, 3) == 6);
    CHECK(compute_d0(TwistKind::A, 4) == 4);
    for (int d = 1; d <= 12; ++d) CHECK(d0_of(d) == (d % 2 ? d : d / 2));
}

TEST_CASE("sylow twist examples") {
    CHECK(sylow_twist_w(2, 4) == P(2, "(1,2,-1,-2)"));
    CHECK(sylow_twist_w(2, 1).is_identity());
    CHECK(sylow_twist_w(3, 3) == P(3, "(1,3,-2)(-1,-3,2)"));
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 8; ++d) {
            auto w = sylow_twist_w(n, d);
            int d0 = d0_of(d), a = n / d0;
            // d0 * a points carry orbits of length d0 under bar
            for (int i = 1; i <= d0 * a; ++i) {
                int x = i, len = 0;
                do x = w.bar(x), ++len;
                while (x != i);
                CHECK(len == d0);
            }
        }
}

TEST_CASE("enumerate_labels examples") {
    CHECK(label_strings(2, 4) == std::set<std::string>{"n=2,d=4,I-1={1,2},I={}", "n=2,d=4,I-1={},I={{1},{2}}"});
    CHECK(enumerate_labels(2, 1).size() == 5);
    auto e8 = enumerate_labels(2, 8);
    REQUIRE(e8.size() == 1);
    CHECK(e8[0].I_minus1 == IndexSet{1, 2});
    CHECK(e8[0].I.empty());
}

TEST_CASE("labels are valid and consistent with the twist") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 8; ++d)
            for (const auto& L : enumerate_labels(n, d)) {
                auto w = sylow_twist_w(n, d);
                for (int i : L.I_minus1) {
                    int j = w.bar(i);
                    CHECK(std::find(L.I_minus1.begin(), L.I_minus1.end(), j) != L.I_minus1.end());
                }
                int covered = 0;
                for (const auto& [s, orbs] : L.orbits)
                    for (const auto& O : orbs) {
                        CHECK(static_cast<int>(O.blocks.size()) == L.d0);
                        for (const auto& B : O.blocks) CHECK(static_cast<int>(B.size()) == s);
                        covered += static_cast<int>(O.support().size());
                    }
                CHECK(covered + static_cast<int>(L.I_minus1.size()) == n);
                CHECK(is_levi_pair(n, d, L.I_minus1, L.I));
            }
    CHECK_THROWS(make_levi_label(2, 4, {1}, {{2}}));
}

TEST_CASE("group orders") {
    CHECK(order_gl(2, 3, 1) == brute_gl2(3));
    CHECK(order_gl(2, 5, 1) == brute_gl2(5));
    CHECK(order_sp(1, 3) == brute_sl2(3));
    CHECK(order_sp(1, 5) == brute_sl2(5));
    CHECK(order_sp(2, 3) == 51840);
    CHECK(order_gl(1, 9, -1) == 10);

    auto a = make_levi_label(2, 4, {}, {{1}, {2}});
    CHECK(levi_structure(a, 3).order == 10);
    auto b = make_levi_label(2, 1, {}, {{1, 2}});
    CHECK(levi_structure(b, 3).order == 48);
    for (const auto& L : enumerate_labels(3, 2))
        if (L.I.empty()) CHECK(levi_structure(L, 5).order == order_sp(3, 5));
    for (int d = 1; d <= 6; ++d)
        for (const auto& L : enumerate_labels(3, d)) CHECK(levi_structure(L, 3).epsilon == (d % 2 ? 1 : -1));
    CHECK(is_odd_prime_power(9));
    CHECK_FALSE(is_odd_prime_power(15));
    CHECK_FALSE(is_odd_prime_power(8));
}

TEST_CASE("relative Weyl examples") {
    auto a = relative_weyl(make_levi_label(2, 4, {}, {{1}, {2}}));
    CHECK(a.order() == 4);
    REQUIRE(a.gens.size() == 1);
    CHECK(a.gens[0] == P(2, "(1,2,-1,-2)"));
    CHECK(relative_weyl(make_levi_label(4, 4, {}, {{1}, {2}, {3}, {4}})).order() == 32);
    CHECK(relative_weyl(make_levi_label(2, 1, {1, 2}, {})).order() == 1);

    auto c = verify_relative_weyl(make_levi_label(2, 4, {}, {{1}, {2}}));
    CHECK(c.ok);
    CHECK(c.fixed_order == 4);
    auto e = verify_relative_weyl(make_levi_label(2, 1, {}, {{1}, {2}}));
    CHECK(e.ok);
    CHECK(e.fixed_order == 8);
    auto f = verify_relative_weyl(make_levi_label(3, 2, {}, {{1}, {2}, {3}}));
    CHECK(f.ok);
    CHECK(f.fixed_order == 48);
}

TEST_CASE("relative Weyl generators centralize the twist") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 8; ++d) {
            auto w = sylow_twist_w(n, d);
            for (const auto& L : enumerate_labels(n, d)) {
                auto rw = relative_weyl(L);
                for (const auto& g : rw.gens) {
                    // only the part on the I-support is constrained
                    auto gw = g * w, wg = w * g;
                    for (const auto& [s, orbs] : L.orbits)
                        for (const auto& O : orbs)
                            for (int i : O.support()) CHECK(gw(i) == wg(i));
                }
                CHECK(group_closure(rw.gens.empty() ? std::vector<SignedPerm>{SignedPerm::identity(n)} : rw.gens, n)
                          .size() == rw.order());
            }
        }
}
