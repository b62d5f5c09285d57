#include "dsplit/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "dsplit/linalg.hpp"

namespace dsplit {

long long euler_phi(long long d) {
    long long r = d;
    for (long long p = 2; p * p <= d; ++p)
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            r -= r / p;
        }
    if (d > 1) r -= r / d;
    return r;
}

const std::vector<long long>& cyclotomic_poly(int d) {
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mu;
    if (d < 1) throw std::invalid_argument("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    // x^d - 1 divided by Phi_e for every proper divisor e
    std::vector<long long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        const auto& den = cyclotomic_poly(e);
        std::vector<long long> q(num.size() - den.size() + 1, 0);
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
            long long c = num[i];
            int s = i - static_cast<int>(den.size()) + 1;
            q[s] = c;
            for (std::size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
        }
        num = q;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(d, num).first->second;
}

CycNum::CycNum(int d) : d_(d), c_(euler_phi(d)) {}

CycNum::CycNum(int d, const mpq_class& q) : CycNum(d) { c_[0] = q; }

CycNum CycNum::from_poly(int d, std::vector<mpq_class> p) {
    const auto& phi = cyclotomic_poly(d);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (sgn(p[i]) == 0) continue;
        mpq_class c = p[i];
        for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * mpq_class(static_cast<long>(phi[j]));
    }
    p.resize(deg);
    CycNum r(d);
    r.c_ = std::move(p);
    return r;
}

CycNum CycNum::zeta(int d, long long k) {
    k %= d;
    if (k < 0) k += d;
    std::vector<mpq_class> p(k + 1);
    p[k] = 1;
    return from_poly(d, p);
}

static int common(const CycNum& a, const CycNum& b) { return std::lcm(a.d(), b.d()); }

CycNum CycNum::operator+(const CycNum& o) const {
    if (d_ != o.d_) {
        int e = common(*this, o);
        return embed(e) + o.embed(e);
    }
    CycNum r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    if (d_ != o.d_) {
        int e = common(*this, o);
        return embed(e) * o.embed(e);
    }
    std::vector<mpq_class> p(2 * c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    }
    return from_poly(d_, std::move(p));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    const std::size_t n = c_.size();
    // columns: this * x^j
    linalg::Matrix<mpq_class> M(n, std::vector<mpq_class>(n + 1, 0));
    CycNum col = *this;
    CycNum x = zeta(d_, 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) M[i][j] = col.c_[i];
        col = col * x;
    }
    M[0][n] = 1;
    linalg::rref(M);
    CycNum r(d_);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = M[i][n];
    return r;
}

CycNum CycNum::pow(long long k) const {
    CycNum base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    CycNum r(d_, 1);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool CycNum::operator==(const CycNum& o) const {
    if (d_ != o.d_) {
        int e = common(*this, o);
        return embed(e) == o.embed(e);
    }
    return c_ == o.c_;
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

mpq_class CycNum::rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return c_[0];
}

CycNum CycNum::galois(long long k) const {
    if (std::gcd(static_cast<long long>(d_), k < 0 ? -k : k) != 1) throw std::invalid_argument("galois: k not a unit mod d");
    long long kk = ((k % d_) + d_) % d_;
    std::vector<mpq_class> p(d_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) p[(i * kk) % d_] += c_[i];
    return from_poly(d_, std::move(p));
}

CycNum CycNum::embed(int e) const {
    if (e == d_) return *this;
    if (e % d_) throw std::invalid_argument("embed: conductor does not divide target");
    int step = e / d_;
    std::vector<mpq_class> p(step * c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    return from_poly(e, std::move(p));
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        mpq_class a = abs(c_[i]);
        if (sgn(c_[i]) < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (i == 0)
            os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << '*';
            os << 'z' << d_;
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<CycVector> eigenspace_basis(const SignedPerm& pi, int d, long long k) {
    if (d < 1) throw std::invalid_argument("conductor must be positive");
    if (std::gcd(static_cast<long long>(d), k < 0 ? -k : k) != 1) throw std::invalid_argument("zeta^k must be primitive");
    const int n = pi.n();
    CycNum z = CycNum::zeta(d, k);
    linalg::Matrix<CycNum> A(n, std::vector<CycNum>(n, CycNum(d)));
    for (int i = 1; i <= n; ++i) A[pi.bar(i) - 1][i - 1] = CycNum(d, pi.sign(i));
    for (int i = 0; i < n; ++i) A[i][i] = A[i][i] - z;
    return linalg::nullspace(A, n, CycNum(d, 1));
}

bool check_eq1(const SignedPerm& pi, int d, const std::vector<Root>& roots0, const RootSystem& ambient) {
    const int n = pi.n();
    std::vector<Root> roots = sorted_roots(roots0);
    std::vector<CycVector> V = eigenspace_basis(pi, d, 1);
    std::vector<CycVector> U;
    if (!V.empty()) {
        linalg::Matrix<CycNum> A;
        for (const Root& r : roots) {
            std::vector<CycNum> row;
            for (const auto& b : V) {
                CycNum s(d);
                for (int i = 0; i < n; ++i)
                    if (r.coeffs[i]) s = s + CycNum(d, r.coeffs[i]) * b[i];
                row.push_back(s);
            }
            A.push_back(row);
        }
        for (const auto& c : linalg::nullspace(A, V.size(), CycNum(d, 1))) {
            CycVector u(n, CycNum(d));
            for (std::size_t j = 0; j < V.size(); ++j)
                for (int i = 0; i < n; ++i) u[i] = u[i] + c[j] * V[j][i];
            U.push_back(u);
        }
    }
    std::vector<Root> perp;
    for (const Root& a : ambient.roots) {
        bool ok = true;
        for (const auto& u : U) {
            CycNum s(d);
            for (int i = 0; i < n; ++i)
                if (a.coeffs[i]) s = s + CycNum(d, a.coeffs[i]) * u[i];
            if (!s.is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) perp.push_back(a);
    }
    return sorted_roots(perp) == roots;
}

bool primitive_power_sign_check(const SignedPerm& pi, int d) {
    int d0 = d % 2 ? d : d / 2;
    CycNum one(d, 1);
    for (int k = 1; k < d0; ++k) {
        SignedPerm pk = pi.pow(k);
        CycNum z = CycNum::zeta(d, k);
        for (int i = 1; i <= pi.n(); ++i) {
            CycNum e(d, pk.sign(i));
            if (z == e || z == -e) return false;
        }
    }
    return true;
}

}  // namespace dsplit
