#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dsplit/extweyl.hpp"

using namespace dsplit;

namespace {

SignedPerm P(int n, const char* s) { return SignedPerm::parse(n, s); }
Root r(int n, const char* s) { return Root::parse(n, s); }

IntMatrix id(int n) { return IntMatrix::Identity(2 * n, 2 * n); }

// x_a(t) x_{-a}(-t) x_a(t), written out independently of the library's word
IntMatrix n_word(int n, const Root& a) {
    Root m = a;
    for (auto& c : m.coeffs) c = -c;
    return x_root(n, a, 1) * x_root(n, m, -1) * x_root(n, a, 1);
}

std::set<SignedPerm> rho_image(const std::vector<IntMatrix>& G) {
    std::set<SignedPerm> s;
    for (const auto& g : G) s.insert(rho(g));
    return s;
}

}  // namespace

TEST_CASE("n_{2e1} at rank 1") {
    IntMatrix expected(2, 2);
    expected << 0, 1, -1, 0;
    auto m = n_root(1, r(1, "2e1"));
    CHECK(m == expected);
    CHECK(m * m == -id(1));
    CHECK(m * m == h_root(1, r(1, "2e1")));
    CHECK(rho(m) == P(1, "(1,-1)"));
}

TEST_CASE("rho examples") {
    CHECK(rho(n_root(2, r(2, "e1-e2"))) == P(2, "(1,2)(-1,-2)"));
    CHECK(rho(id(3)).is_identity());
    CHECK(rho(-id(3)).is_identity());
    CHECK_THROWS(rho(x_root(2, r(2, "e1-e2"), 1)));
}

TEST_CASE("Chevalley relations for every root") {
    for (int n = 1; n <= 4; ++n) {
        auto sys = build_root_system(RootKind::C, std::max(n, 2));
        if (n == 1) sys.roots = {r(1, "2e1"), r(1, "-2e1")};
        for (const auto& a : sys.roots) {
            auto na = n_root(n, a), ha = h_root(n, a);
            CHECK(is_symplectic(x_root(n, a, -1)));
            CHECK(is_symplectic(na));
            CHECK(is_signed_monomial(na));
            CHECK(na == n_word(n, a));
            CHECK(na * na == ha);
            CHECK(ha * ha == id(n));
            CHECK(rho(na) == reflection(n, a));
            CHECK(symplectic_inverse(na) * na == id(n));
        }
    }
}

TEST_CASE("H_Phi has order 2^n") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<IntMatrix> gens;
        for (const auto& a : build_root_system(RootKind::C, n).roots) gens.push_back(h_root(n, a));
        CHECK(matrix_closure(gens, n).size() == (1u << n));
    }
}

TEST_CASE("twist elements") {
    auto t = build_twist_elements(2, 4);
    CHECK(rho(t.v) == P(2, "(1,2,-1,-2)"));
    auto u = build_twist_elements(2, 1);
    REQUIRE(u.p.size() == 1);
    CHECK(u.p[0] * u.p[0] == u.h[0] * u.h[1]);
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto tw = build_twist_elements(n, d);
            CHECK(rho(tw.v) == sylow_twist_w(n, d));
            for (const auto& g : tw.vd_generators()) {
                CHECK(is_symplectic(g));
                CHECK(g * tw.v_prime == tw.v_prime * g);
            }
            for (std::size_t k = 0; k + 1 < tw.h.size(); ++k) CHECK(tw.p[k] * tw.p[k] == tw.h[k] * tw.h[k + 1]);
        }
}

TEST_CASE("rho(V_d) is the centralizer of the twist") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto tw = build_twist_elements(n, d);
            if (tw.a == 0) continue;
            int l = tw.l;
            auto img = rho_image(matrix_closure(tw.vd_generators(), n));
            std::set<SignedPerm> cent;
            auto w = sylow_twist_w(n, d);
            for (const auto& g : hyperoctahedral(l)) {
                auto G = g.extend(n);
                if (G * w == w * G) cent.insert(G);
            }
            CHECK(img == cent);
        }
}

TEST_CASE("V_d^I examples") {
    auto L = make_levi_label(2, 4, {}, {{1}, {2}});
    auto V = build_VdI(L);
    auto G = matrix_closure(V.generators, 2);
    CHECK(G.size() == 8);
    CHECK(rho_image(G).size() == 4);
    CHECK(matrix_closure(V.HdI, 2).size() == 2);

    auto M = make_levi_label(2, 1, {}, {{1}, {2}});
    auto W = build_VdI(M);
    auto H = matrix_closure(W.HdI, 2);
    CHECK(H.size() == 4);
    CHECK(matrix_closure(W.generators, 2).size() / H.size() == 8);

    auto E = build_VdI(make_levi_label(2, 1, {1, 2}, {}));
    auto T = matrix_closure(E.generators.empty() ? std::vector<IntMatrix>{id(2)} : E.generators, 2);
    CHECK(T.size() == 1);
}

TEST_CASE("disjoint supports commute") {
    auto a = n_root(4, r(4, "e1-e2")), b = n_root(4, r(4, "e3-e4")), c = n_root(4, r(4, "2e3"));
    CHECK(a * b == b * a);
    CHECK(a * c == c * a);
    CHECK(h_block(4, {1, 2}) * h_block(4, {3}) == h_block(4, {1, 2, 3}));
}
