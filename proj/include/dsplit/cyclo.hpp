#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "dsplit/rootsys.hpp"
#include "dsplit/sperm.hpp"

namespace dsplit {

long long euler_phi(long long d);
// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_poly(int d);

// Element of Q(zeta_d) = Q[x]/(Phi_d), coefficients of 1, x, ..., x^{phi(d)-1}.
class CycNum {
public:
    CycNum() : CycNum(1) {}
    explicit CycNum(int d);
    CycNum(int d, const mpq_class& q);
    static CycNum zeta(int d, long long k = 1);

    int d() const { return d_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
    CycNum operator-() const;
    CycNum inverse() const;
    CycNum pow(long long k) const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational() const;  // throws unless rational

    CycNum galois(long long k) const;  // zeta -> zeta^k, gcd(k,d)=1
    CycNum conj() const { return galois(-1); }
    CycNum embed(int e) const;         // into Q(zeta_e), d | e
    // Canonical text over the power basis, e.g. "1+2*z8^3" ; "0" for zero.
    std::string str() const;

private:
    int d_;
    std::vector<mpq_class> c_;
    static CycNum from_poly(int d, std::vector<mpq_class> p);
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum one_like(const CycNum& x) { return CycNum(x.d(), 1); }
inline CycNum zero_like(const CycNum& x) { return CycNum(x.d()); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline mpq_class zero_like(const mpq_class&) { return 0; }

using CycVector = std::vector<CycNum>;

std::vector<CycVector> eigenspace_basis(const SignedPerm& pi, int d, long long k = 1);
bool check_eq1(const SignedPerm& pi, int d, const std::vector<Root>& roots, const RootSystem& ambient);
bool primitive_power_sign_check(const SignedPerm& pi, int d);

}  // namespace dsplit
