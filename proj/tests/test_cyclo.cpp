#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "dsplit/cyclo.hpp"
#include "dsplit/rootsys.hpp"

using namespace dsplit;

namespace {

SignedPerm P(int n, const char* s) { return SignedPerm::parse(n, s); }

// Floating-point image under zeta_d -> exp(2 pi i / d).
std::complex<double> embed_c(const CycNum& x) {
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, 2 * pi / x.d()), r = 0, p = 1;
    for (const auto& c : x.coeffs()) r += c.get_d() * p, p *= z;
    return r;
}

CycNum random_cyc(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-5, 5);
    CycNum r(d);
    for (int k = 0; k < static_cast<int>(euler_phi(d)); ++k) {
        mpq_class q(u(rng), 1 + std::abs(u(rng)));
        q.canonicalize();
        r = r + CycNum(d, q) * CycNum::zeta(d, k);
    }
    return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_poly(8) == std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (int d = 1; d <= 30; ++d) CHECK(cyclotomic_poly(d).size() == std::size_t(euler_phi(d) + 1));
}

TEST_CASE("zeta identities") {
    for (int d = 1; d <= 24; ++d) {
        auto z = CycNum::zeta(d);
        CHECK(z.pow(d) == CycNum(d, 1));
        CycNum v(d);
        const auto& phi = cyclotomic_poly(d);
        for (std::size_t k = 0; k < phi.size(); ++k) v = v + CycNum(d, mpq_class(static_cast<long>(phi[k]))) * z.pow(k);
        CHECK(v.is_zero());
        for (int k = 1; k < d; ++k) CHECK_FALSE(z.pow(k) == CycNum(d, 1));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(5);
    for (int d : {3, 4, 5, 8, 12}) {
        for (int it = 0; it < 20; ++it) {
            auto a = random_cyc(d, rng), b = random_cyc(d, rng), c = random_cyc(d, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(d, 1));
            CHECK(std::abs(embed_c(a * b) - embed_c(a) * embed_c(b)) < 1e-6);
            CHECK(std::abs(embed_c(a.conj()) - std::conj(embed_c(a))) < 1e-6);
        }
    }
    CHECK_THROWS(CycNum(4).inverse());
}

TEST_CASE("embed and galois") {
    auto z4 = CycNum::zeta(4);
    CHECK(z4.embed(8) == CycNum::zeta(8, 2));
    CHECK(z4.galois(3) == -z4);
    CHECK((CycNum::zeta(6) + CycNum::zeta(6, 5)).rational() == 1);
    CHECK_THROWS(z4.rational());
}

TEST_CASE("eigenspace examples") {
    auto b = eigenspace_basis(P(2, "(1,2,-1,-2)"), 4, 1);
    REQUIRE(b.size() == 1);
    // spanned by (zeta_4, 1)
    CHECK(b[0][0] * CycNum(4, 1) == CycNum::zeta(4) * b[0][1]);
    CHECK(eigenspace_basis(SignedPerm::identity(3), 1).size() == 3);
    auto e = eigenspace_basis(P(1, "(1,-1)"), 2);
    REQUIRE(e.size() == 1);
}

TEST_CASE("check_eq1 examples") {
    auto C2 = build_root_system(RootKind::C, 2);
    auto pi = P(2, "(1,2,-1,-2)");
    CHECK(check_eq1(pi, 4, {}, C2));
    CHECK(check_eq1(pi, 4, C2.roots, C2));
    CHECK_FALSE(check_eq1(pi, 4, {Root::parse(2, "e1-e2"), Root::parse(2, "-e1+e2")}, C2));
}

TEST_CASE("primitive power sign check") {
    CHECK(primitive_power_sign_check(P(2, "(1,2,-1,-2)"), 4));
    CHECK(primitive_power_sign_check(SignedPerm::identity(2), 1));
    auto six = P(3, "(1,2,3,-1,-2,-3)");
    CHECK(primitive_power_sign_check(six * six, 3));
}
