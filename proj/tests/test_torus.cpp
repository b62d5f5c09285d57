#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsplit/levi.hpp"
#include "dsplit/torus.hpp"

using namespace dsplit;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

TorusElem single(const OrbitData& O, const FieldPtr& F, int code) {
    auto h = torus_identity(O, F);
    h.coords.begin()->second = code;
    return h;
}

}  // namespace

TEST_CASE("finite field arithmetic") {
    for (auto [q, K] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 2}, {9, 1}, {3, 4}, {5, 4}, {27, 2}}) {
        FqField F(q, K);
        CHECK(F.size() == ipow(q, K));
        CHECK(F.order(F.generator()) == F.units());
        CHECK(F.mul(F.neg_one(), F.neg_one()) == 1);
        CHECK(F.add(F.neg_one(), 1) == 0);
        for (long long e = 0; e < F.units(); e += 1 + F.units() / 37) {
            int a = F.exp(e);
            CHECK(F.log(a) == e);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, F.units()) == 1);
            // Frobenius is additive
            int b = F.exp((e * 7 + 3) % F.units());
            CHECK(F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p())));
        }
    }
    CHECK_THROWS(FqField(3, 20));
}

TEST_CASE("Lang map examples at q=3, d=2") {
    auto F = torus_field(3, 2);
    auto O = make_orbit(2, 1, {1});
    CHECK(lang_map(torus_identity(O, F), O).is_identity());
    for (long long e = 0; e < F->units(); ++e) {
        int t = F->exp(e);
        bool fixed = lang_map(single(O, F, t), O).is_identity();
        CHECK(fixed == (F->pow(t, 4) == 1));
    }
    int psi = F->exp(F->units() / 8);
    auto z = lang_map(single(O, F, psi), O);
    CHECK(z == single(O, F, F->neg_one()));
    CHECK(z == z_O(O, F));
}

TEST_CASE("theta") {
    auto F = torus_field(3, 2);
    auto O = make_orbit(2, 1, {1});
    CHECK(theta_modulus(O, 3) == 4);
    CHECK(theta(O, F, 1).is_identity());
    for (long long e = 0; e < F->units(); e += F->units() / 4) CHECK(lang_map(theta(O, F, F->exp(e)), O).is_identity());
    CHECK(theta(O, F, F->neg_one()) == z_O(O, F));
}

TEST_CASE("z plus") {
    for (long long q : {3, 5})
        for (int d = 1; d <= 4; ++d) {
            auto F = torus_field(q, d);
            for (auto O : {make_orbit(d, 1, {1}), make_orbit(d, 2, {1, 2})}) {
                auto zp = z_plus(O, F);
                CHECK(lang_map(zp, O) == z_O(O, F));
                int d0 = d0_of(d);
                if (d0 % 2 == 0)
                    CHECK((zp * zp).is_identity());
                else
                    CHECK((zp * zp).pow(theta_modulus(O, q) / 2) == z_O(O, F));
            }
        }
    auto F = torus_field(3, 2);
    auto zp = z_plus(make_orbit(2, 1, {1}), F);
    CHECK(F->order(zp.coords.begin()->second) == 8);
}

TEST_CASE("z plus on the I_-1 block") {
    for (long long q : {3, 5})
        for (int d = 1; d <= 4; ++d)
            for (int n = 1; n <= 4; ++n) {
                auto F = torus_field(q, d);
                IndexSet pts;
                for (int i = 1; i <= n; ++i) pts.push_back(i);
                auto zp = z_plus_sp_block(pts, d, F);
                auto z = lang_map_twist(sylow_twist_w(n, d), zp);
                for (auto [k, c] : z.coords) CHECK(c == F->neg_one());
            }
}

TEST_CASE("fixed points") {
    for (long long q : {3, 5})
        for (int d = 1; d <= 4; ++d) {
            auto F = torus_field(q, d);
            auto O = make_orbit(d, 1, {1});
            auto r = enumerate_fixed_points(O, F);
            int d0 = d0_of(d);
            long long eps = d % 2 ? 1 : -1;
            CHECK(static_cast<long long>(r.fixed) == ipow(q, d0) - eps);
            CHECK(r.expected == ipow(q, d0) - eps);
            CHECK(r.theta_bijective);
        }
}

TEST_CASE("conjugation on the centre") {
    auto F = torus_field(3, 2);
    auto c = conj_center_action(make_orbit(2, 1, {1}), F);
    CHECK(c.matches);
    CHECK(c.modulus == 8);
    CHECK(c.exponent == 7);
    CHECK(c.closed_exponent == 7);
    for (long long q : {3, 5})
        for (int d = 1; d <= 4; ++d) {
            auto G = torus_field(q, d);
            CHECK(conj_center_action(make_orbit(d, 1, {1}), G).matches);
            CHECK(conj_center_action(make_orbit(d, 2, {1, 2}), G).matches);
        }
}

TEST_CASE("stabilizer jump") {
    auto F = torus_field(3, 2);
    auto O = make_orbit(2, 1, {1});
    CHECK(central_stabilizer_jump(O, F, 2));
    CHECK_FALSE(central_stabilizer_jump(O, F, 1));
    CHECK_FALSE(central_stabilizer_jump(O, F, 4));
    auto t = theta(O, F, F->exp(F->units() / 4));
    CHECK(theta_log(O, F, t) == 1);
}
