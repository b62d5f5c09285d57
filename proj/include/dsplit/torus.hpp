#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dsplit/sperm.hpp"

namespace dsplit {

// F_{q^K} realized over F_p with the least monic irreducible of degree f*K
// (coefficients compared from x^{deg-1} down to the constant term).
// Elements are coded as integers: digit i in base p is the coefficient of x^i.
class FqField {
public:
    FqField(long long q, int K);

    long long p() const { return p_; }
    long long q() const { return q_; }
    int K() const { return K_; }
    long long size() const { return size_; }
    long long units() const { return size_ - 1; }
    const std::vector<int>& modulus() const { return mod_; }
    int generator() const { return gen_; }

    int add(int a, int b) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;
    int neg_one() const { return exp_[units() / 2]; }
    long long log(int a) const;  // relative to the canonical generator
    int exp(long long e) const;
    long long order(int a) const;

private:
    long long p_, q_, size_;
    int K_, deg_;
    std::vector<int> mod_;
    int gen_;
    std::vector<int> exp_;
    std::vector<long long> log_;
    int slow_mul(int a, int b) const;
};

using FieldPtr = std::shared_ptr<const FqField>;

struct FqElem {
    FieldPtr F;
    int code = 1;
    FqElem operator*(const FqElem& o) const { return {F, F->mul(code, o.code)}; }
    FqElem pow(long long e) const { return {F, F->pow(code, e)}; }
    bool operator==(const FqElem& o) const { return code == o.code; }
};

// One orbit of the twist: coordinates j*a + i, i in J, 0 <= j < d0.
struct OrbitData {
    int d = 1, d0 = 1, a = 1;
    IndexSet J;
    std::vector<int> support() const;
    int rank() const { return d0 * a; }
};

OrbitData make_orbit(int d, int a, IndexSet J);
FieldPtr torus_field(long long q, int d);  // K = 2 d0

struct TorusElem {
    FieldPtr F;
    std::map<int, int> coords;  // coordinate k -> code of t_k
    bool operator==(const TorusElem& o) const { return coords == o.coords; }
    TorusElem operator*(const TorusElem& o) const;
    TorusElem inverse() const;
    TorusElem pow(long long e) const;
    bool is_identity() const;
    std::string str() const;
};

TorusElem torus_identity(const OrbitData& O, const FieldPtr& F);
// (sigma . t)_{|sigma(k)|} = t_k^{sgn sigma(k)}
TorusElem twist_act(const SignedPerm& sigma, const TorusElem& h);
TorusElem frobenius(const TorusElem& h);
SignedPerm orbit_twist(const OrbitData& O);  // w restricted to the orbit
SignedPerm orbit_wprime(const OrbitData& O);  // w'_Q of the orbit
TorusElem lang_map(const TorusElem& h, const OrbitData& O);
// h^-1 (wF)(h) for an explicit twist
TorusElem lang_map_twist(const SignedPerm& w, const TorusElem& h);
TorusElem z_O(const OrbitData& O, const FieldPtr& F);
long long theta_modulus(const OrbitData& O, long long q);  // q^{d0} - eps
TorusElem theta(const OrbitData& O, const FieldPtr& F, int t);
int choose_psi(const OrbitData& O, const FieldPtr& F);
TorusElem z_plus(const OrbitData& O, const FieldPtr& F);
// z+ on an I_-1 block, each point handled as a d0 = 1 orbit.
TorusElem z_plus_sp_block(const IndexSet& pts, int d, const FieldPtr& F);

// Number of h with lang_map(h) = 1 (coordinates range over F_{q^d}^x,
// which contains every fixed point since (wF)^d = F^d), and whether theta
// is a bijection onto that set.
struct FixedPointCount {
    std::size_t fixed = 0;
    long long expected = 0;
    bool theta_bijective = false;
};
FixedPointCount enumerate_fixed_points(const OrbitData& O, const FieldPtr& F);

struct ConjAction {
    bool matches = false;
    long long exponent = 0;         // d0 odd: computed e with A(z+) = (z+)^e
    long long closed_exponent = 0;  // d0 odd: the closed form reduced mod o(z+)
    long long modulus = 0;          // o(z+) for d0 odd
    std::string detail;
};
ConjAction conj_center_action(const OrbitData& O, const FieldPtr& F);
// Discrete log of an element of Z_O with respect to theta(gamma), gamma the
// generator gen^{(Q-1)/N} of C_N.
long long theta_log(const OrbitData& O, const FieldPtr& F, const TorusElem& z);
bool central_stabilizer_jump(const OrbitData& O, const FieldPtr& F, long long eta_order);

}  // namespace dsplit
