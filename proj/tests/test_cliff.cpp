#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsplit/cliff.hpp"

using namespace dsplit;

namespace {

using CO = CentralOrder;

CharClassDescriptor D(const char* id, int c, CO z, int s = 1) { return {id, s, c, z}; }

CharLabel label(LeviLabel levi, std::vector<CharClassDescriptor> ds, bool full = true) {
    CharLabel L{std::move(levi), {}, full};
    for (auto& z : ds) L.assignment[z.s].push_back(z);
    return L;
}

LeviLabel one_orbit() { return make_levi_label(2, 4, {}, {{1}, {2}}); }
LeviLabel two_orbits() { return make_levi_label(4, 4, {}, {{1}, {2}, {3}, {4}}); }

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("descriptor rules") {
    CHECK(two_part(12) == 4);
    CHECK(two_part(7) == 1);
    CHECK(descriptor_valid(D("a", 4, CO::two), 2));
    CHECK_FALSE(descriptor_valid(D("a", 3, CO::one), 2));
    CHECK_FALSE(descriptor_valid(D("a", 2, CO::other), 2));
    CHECK(in_R1(D("a", 4, CO::two), 2));
    CHECK_FALSE(in_R1(D("a", 2, CO::two), 2));
    CHECK_FALSE(in_R1(D("a", 4, CO::one), 2));
    CHECK(in_R1(D("a", 2, CO::two), 1));
    CHECK(stab_tilde_order(D("a", 4, CO::two), 2) == 2);
    CHECK(stab_tilde_order(D("a", 4, CO::one), 2) == 4);
}

TEST_CASE("validation") {
    CHECK_NOTHROW(validate(label(one_orbit(), {D("a", 4, CO::two)})));
    CHECK_THROWS_AS(validate(label(one_orbit(), {})), std::invalid_argument);
    CHECK_THROWS_AS(validate(label(one_orbit(), {D("a", 3, CO::one)})), std::invalid_argument);
    CHECK_THROWS_AS(validate(label(two_orbits(), {D("a", 4, CO::two), D("a", 2, CO::two)})), std::invalid_argument);
}

TEST_CASE("W_lambda examples") {
    auto a = stab_lambda(label(one_orbit(), {D("a", 4, CO::two)}));
    CHECK(a.order == 4);
    CHECK(group_closure(a.gens, 2).size() == 4);
    auto b = stab_lambda(label(two_orbits(), {D("a", 4, CO::two), D("a", 4, CO::two)}));
    CHECK(b.order == 32);
    CHECK(group_closure(b.gens, 4).size() == 32);
    auto c = stab_lambda(label(two_orbits(), {D("a", 1, CO::one), D("a", 1, CO::one)}));
    CHECK(c.order == 2);
    auto e = stab_lambda(label(two_orbits(), {D("a", 1, CO::one), D("b", 1, CO::one)}));
    CHECK(e.order == 1);
}

TEST_CASE("nu_lambda examples") {
    auto a = nu_lambda(label(one_orbit(), {D("a", 4, CO::two)}));
    CHECK_FALSE(a.trivial);
    CHECK(a.kernel.order == 2);
    CHECK(group_closure(a.kernel.gens, 2).size() == 2);
    CHECK(nu_lambda(label(one_orbit(), {D("a", 4, CO::two)}, false)).trivial);
    CHECK(nu_lambda(label(one_orbit(), {D("a", 4, CO::one)})).trivial);
    CHECK(sign_character_well_defined({SignedPerm::parse(2, "(1,2,-1,-2)")}, {-1}, 2));
    CHECK_FALSE(sign_character_well_defined({SignedPerm::parse(1, "(1,-1)"), SignedPerm::parse(1, "(1,-1)")}, {1, -1}, 1));
}

TEST_CASE("K_lambda examples") {
    auto a = k_lambda(label(one_orbit(), {D("a", 4, CO::two)}));
    CHECK(a.order == 4);
    auto same = k_lambda(label(two_orbits(), {D("a", 4, CO::two), D("b", 4, CO::two)}));
    auto mixed = k_lambda(label(two_orbits(), {D("a", 4, CO::two), D("b", 4, CO::one)}));
    // the swap survives only when both blocks lie in the same family
    CHECK(same.order == 32);
    CHECK(mixed.order == 16);
}

TEST_CASE("kinva examples") {
    auto a = kinva_check(label(one_orbit(), {D("a", 4, CO::two)}));
    CHECK(a.pass);
    CHECK(a.W_lambda_order == 4);
    CHECK(a.ker_index == 2);
    auto b = kinva_check(label(two_orbits(), {D("a", 4, CO::two), D("a", 4, CO::two)}));
    CHECK(b.pass);
    CHECK(b.W_lambda_order == 32);
    auto c = kinva_check(label(one_orbit(), {D("a", 4, CO::two)}, false));
    CHECK(c.pass);
    CHECK(c.ker_index == 1);
}

TEST_CASE("cuspidal gate") {
    auto L = make_levi_label(4, 4, {}, {{1, 2}, {3, 4}});
    CHECK_FALSE(cuspidal_gate(label(L, {D("a", 4, CO::two, 2)})));
    CHECK(cuspidal_gate(label(two_orbits(), {D("a", 4, CO::one), D("b", 2, CO::one)})));
    CHECK_FALSE(cuspidal_gate(label(two_orbits(), {D("a", 4, CO::two), D("b", 4, CO::two)})));
    CHECK(cuspidal_gate(label(two_orbits(), {D("a", 4, CO::two), D("a", 4, CO::two)})));
}

TEST_CASE("structural invariants over all labels at small rank") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 6; ++d)
            for (const auto& levi : enumerate_labels(n, d))
                for (const auto& L : enumerate_char_labels(levi)) {
                    auto W = stab_lambda(L);
                    long long formula = 1;
                    bool has_r1 = false;
                    for (const auto& b : j_blocks(L)) {
                        for (std::size_t k = 0; k < b.J.size(); ++k) formula *= b.desc.c;
                        formula *= factorial(static_cast<int>(b.J.size()));
                        has_r1 = has_r1 || in_R1(b.desc, levi.d0);
                    }
                    CHECK(W.order == formula);
                    CHECK(static_cast<long long>(group_closure(W.gens.empty() ? std::vector<SignedPerm>{SignedPerm::identity(n)} : W.gens, n).size()) == formula);
                    auto nu = nu_lambda(L);
                    CHECK(nu.trivial == !(L.ltilde_full && has_r1));
                    CHECK(W.order / nu.kernel.order == (nu.trivial ? 1 : 2));
                    auto r = kinva_check(L);
                    if (cuspidal_gate(L)) CHECK(r.pass);
                }
}
