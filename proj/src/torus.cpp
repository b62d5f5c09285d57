#include "dsplit/torus.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "dsplit/levi.hpp"

namespace dsplit {

namespace {

using Poly = std::vector<int>;  // low to high, entries mod p

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Poly decode(long long code, long long p, int deg) {
    Poly r(deg);
    for (int i = 0; i < deg; ++i) {
        r[i] = static_cast<int>(code % p);
        code /= p;
    }
    return r;
}

long long encode(const Poly& a, long long p) {
    long long c = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) c = c * p + a[i];
    return c;
}

// remainder of a modulo monic b
Poly poly_mod(Poly a, const Poly& b, long long p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        long long c = a[i];
        if (!c) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = static_cast<int>(((a[i - db + j] - c * b[j]) % p + p) % p);
    }
    a.resize(db);
    return a;
}

bool irreducible(const Poly& f, long long p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int k = 1; 2 * k <= deg; ++k)
        for (long long c = 0; c < ipow(p, k); ++c) {
            Poly g = decode(c, p, k);
            g.push_back(1);
            Poly r = poly_mod(f, g, p);
            bool zero = true;
            for (int x : r) zero = zero && x == 0;
            if (zero) return false;
        }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> f;
    for (long long r = 2; r * r <= n; ++r)
        if (n % r == 0) {
            f.push_back(r);
            while (n % r == 0) n /= r;
        }
    if (n > 1) f.push_back(n);
    return f;
}

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

long long powmod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b = mod(b, m);
    while (e) {
        if (e & 1) r = static_cast<long long>((__int128)r * b % m);
        b = static_cast<long long>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

FqField::FqField(long long q, int K) : q_(q), K_(K) {
    if (!is_odd_prime_power(q)) throw std::invalid_argument("field base must be an odd prime power");
    if (K < 1) throw std::invalid_argument("extension degree must be positive");
    p_ = prime_factors(q)[0];
    int f = 0;
    for (long long x = q; x > 1; x /= p_) ++f;
    deg_ = f * K;
    size_ = ipow(p_, deg_);
    if (size_ > 4000000) throw std::invalid_argument("field too large for table arithmetic");
    for (long long c = 0; c < size_; ++c) {
        Poly m = decode(c, p_, deg_);
        if (m[0] == 0) continue;
        m.push_back(1);
        if (irreducible(m, p_)) {
            mod_ = m;
            break;
        }
    }
    auto slow_pow = [&](int a, long long e) {
        int r = 1;
        int b = a;
        while (e) {
            if (e & 1) r = slow_mul(r, b);
            b = slow_mul(b, b);
            e >>= 1;
        }
        return r;
    };
    const long long u = size_ - 1;
    auto pf = prime_factors(u);
    for (int g = 1; g < size_; ++g) {
        bool prim = true;
        for (long long r : pf)
            if (slow_pow(g, u / r) == 1) {
                prim = false;
                break;
            }
        if (prim) {
            gen_ = g;
            break;
        }
    }
    exp_.assign(u, 1);
    log_.assign(size_, -1);
    for (long long e = 0; e < u; ++e) {
        if (e) exp_[e] = slow_mul(exp_[e - 1], gen_);
        log_[exp_[e]] = e;
    }
}

int FqField::slow_mul(int a, int b) const {
    Poly x = decode(a, p_, deg_), y = decode(b, p_, deg_);
    Poly r(2 * deg_, 0);
    for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j) r[i + j] = static_cast<int>((r[i + j] + 1LL * x[i] * y[j]) % p_);
    return static_cast<int>(encode(poly_mod(r, mod_, p_), p_));
}

int FqField::add(int a, int b) const {
    Poly x = decode(a, p_, deg_), y = decode(b, p_, deg_);
    for (int i = 0; i < deg_; ++i) x[i] = static_cast<int>((x[i] + y[i]) % p_);
    return static_cast<int>(encode(x, p_));
}

int FqField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % units()];
}

int FqField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return exp_[mod(-log_[a], units())];
}

int FqField::pow(int a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("nonpositive power of zero");
        return 0;
    }
    return exp_[static_cast<long long>(mod(static_cast<long long>((__int128)log_[a] * mod(e, units()) % units()), units()))];
}

long long FqField::log(int a) const {
    if (a <= 0 || a >= size_) throw std::domain_error("log of zero or out-of-range code");
    return log_[a];
}

int FqField::exp(long long e) const { return exp_[mod(e, units())]; }

long long FqField::order(int a) const { return units() / std::gcd(units(), log(a)); }

std::vector<int> OrbitData::support() const {
    std::vector<int> s;
    for (int j = 0; j < d0; ++j)
        for (int i : J) s.push_back(j * a + i);
    std::sort(s.begin(), s.end());
    return s;
}

OrbitData make_orbit(int d, int a, IndexSet J) {
    OrbitData O;
    O.d = d;
    O.d0 = d0_of(d);
    O.a = a;
    O.J = make_index_set(J);
    if (O.J.empty() || O.J.back() > a) throw std::invalid_argument("orbit representatives must lie in {1..a}");
    return O;
}

FieldPtr torus_field(long long q, int d) { return std::make_shared<const FqField>(q, 2 * d0_of(d)); }

TorusElem TorusElem::operator*(const TorusElem& o) const {
    TorusElem r = *this;
    for (const auto& [k, v] : o.coords) {
        auto it = r.coords.find(k);
        if (it == r.coords.end()) throw std::invalid_argument("torus elements on different supports");
        it->second = F->mul(it->second, v);
    }
    return r;
}

TorusElem TorusElem::inverse() const {
    TorusElem r = *this;
    for (auto& [k, v] : r.coords) v = F->inv(v);
    return r;
}

TorusElem TorusElem::pow(long long e) const {
    TorusElem r = *this;
    for (auto& [k, v] : r.coords) v = F->pow(v, e);
    return r;
}

bool TorusElem::is_identity() const {
    for (const auto& [k, v] : coords)
        if (v != 1) return false;
    return true;
}

std::string TorusElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coords) {
        os << (first ? "" : " ") << "t" << k << "=g^" << F->log(v);
        first = false;
    }
    return os.str();
}

TorusElem torus_identity(const OrbitData& O, const FieldPtr& F) {
    TorusElem h{F, {}};
    for (int k : O.support()) h.coords[k] = 1;
    return h;
}

TorusElem twist_act(const SignedPerm& sigma, const TorusElem& h) {
    TorusElem r{h.F, {}};
    for (const auto& [k, v] : h.coords) {
        int y = sigma(k);
        r.coords[std::abs(y)] = y > 0 ? v : h.F->inv(v);
    }
    if (r.coords.size() != h.coords.size()) throw std::invalid_argument("twist does not preserve the support");
    for (const auto& [k, v] : r.coords)
        if (!h.coords.count(k)) throw std::invalid_argument("twist does not preserve the support");
    return r;
}

TorusElem frobenius(const TorusElem& h) { return h.pow(h.F->q()); }

SignedPerm orbit_twist(const OrbitData& O) { return sylow_twist_w(O.rank(), O.d); }

SignedPerm orbit_wprime(const OrbitData& O) {
    SignedPerm r(O.rank());
    for (int i : O.J) r = r * wprime(O.rank(), grid_set(O.d0, O.a, i));
    return r;
}

TorusElem lang_map_twist(const SignedPerm& w, const TorusElem& h) { return h.inverse() * twist_act(w, frobenius(h)); }

TorusElem lang_map(const TorusElem& h, const OrbitData& O) {
    auto sup = O.support();
    if (h.coords.size() != sup.size()) throw std::invalid_argument("lang_map: unsupported coordinates");
    for (int k : sup)
        if (!h.coords.count(k)) throw std::invalid_argument("lang_map: unsupported coordinates");
    return lang_map_twist(orbit_twist(O), h);
}

TorusElem z_O(const OrbitData& O, const FieldPtr& F) {
    TorusElem h = torus_identity(O, F);
    for (auto& [k, v] : h.coords) v = F->neg_one();
    return h;
}

long long theta_modulus(const OrbitData& O, long long q) { return ipow(q, O.d0) - (O.d % 2 ? 1 : -1); }

// coordinate exponent pattern of theta: t_{ja+i} = t^{pattern(j)}
static long long theta_exponent(const OrbitData& O, long long q, int j, long long m) {
    if (O.d % 2 == 0) return powmod(q, j, m);
    if (j % 2 == 0) return powmod(q, j / 2, m);
    return mod(-powmod(q, (O.d0 + j) / 2, m), m);
}

TorusElem theta(const OrbitData& O, const FieldPtr& F, int t) {
    long long N = theta_modulus(O, F->q());
    if (F->pow(t, N) != 1) throw std::invalid_argument("theta: t^(q^d0 - eps) != 1");
    TorusElem h = torus_identity(O, F);
    for (int j = 0; j < O.d0; ++j)
        for (int i : O.J) h.coords[j * O.a + i] = F->pow(t, theta_exponent(O, F->q(), j, F->units()));
    return h;
}

int choose_psi(const OrbitData& O, const FieldPtr& F) {
    long long N = theta_modulus(O, F->q());
    for (long long e = 0; e < F->units(); ++e) {
        int x = F->exp(e);
        if (O.d0 % 2 == 0) {
            if (F->order(x) == N) return x;
        } else if (F->pow(x, N) == F->neg_one()) {
            return x;
        }
    }
    throw std::domain_error("no suitable psi in the chosen field");
}

TorusElem z_plus(const OrbitData& O, const FieldPtr& F) {
    TorusElem h = torus_identity(O, F);
    const long long q = F->q(), u = F->units();
    const int m1 = F->neg_one();
    auto sgn = [&](long long k) { return k % 2 ? m1 : 1; };
    int psi = choose_psi(O, F);
    for (int j = 0; j < O.d0; ++j) {
        int val;
        if (O.d0 % 2 == 0)
            val = sgn(j);
        else if (O.d % 2 == 0)
            val = F->mul(sgn(j), F->pow(psi, powmod(q, j, u)));
        else if (j % 2 == 0)
            val = F->mul(sgn(j / 2), F->pow(psi, powmod(q, j / 2, u)));
        else
            val = F->mul(sgn((O.d0 + j) / 2), F->pow(psi, mod(-powmod(q, (O.d0 + j) / 2, u), u)));
        for (int i : O.J) h.coords[j * O.a + i] = val;
    }
    return h;
}

TorusElem z_plus_sp_block(const IndexSet& pts, int d, const FieldPtr& F) {
    TorusElem h{F, {}};
    if (pts.empty()) return h;
    const int n = pts.back();
    const int d0 = d0_of(d), l = (n / d0) * d0;
    SignedPerm w = sylow_twist_w(n, d);
    // points moved by the twist come in whole grid sets J_i^{d0,a}
    std::set<int> reps;
    for (int k : pts)
        if (w.bar(k) != k || (k <= l && d0 == 1 && w(k) != k)) reps.insert((k - 1) % (l / d0) + 1);
    for (int i : reps) {
        TorusElem part = z_plus(make_orbit(d, l / d0, {i}), F);
        h.coords.insert(part.coords.begin(), part.coords.end());
    }
    // points fixed by the twist behave like d = 1 orbits
    OrbitData fixed_orbit = make_orbit(1, 1, {1});
    int psi1 = choose_psi(fixed_orbit, F);
    for (int k : pts)
        if (!h.coords.count(k)) h.coords[k] = psi1;
    return h;
}

FixedPointCount enumerate_fixed_points(const OrbitData& O, const FieldPtr& F) {
    FixedPointCount res;
    const long long q = F->q(), u = F->units();
    const long long sub = ipow(q, O.d) - 1;
    if (u % sub) throw std::logic_error("F_{q^d} is not a subfield of the torus field");
    const long long step = u / sub;
    std::vector<int> sup = O.support();
    const std::size_t m = sup.size();
    SignedPerm w = orbit_twist(O);
    std::map<int, std::size_t> pos;
    for (std::size_t k = 0; k < m; ++k) pos[sup[k]] = k;
    // (wF)(h) - h in exponent coordinates
    std::vector<std::size_t> tgt(m);
    std::vector<int> sg(m);
    for (std::size_t k = 0; k < m; ++k) {
        int y = w(sup[k]);
        tgt[k] = pos.at(std::abs(y));
        sg[k] = y > 0 ? 1 : -1;
    }
    std::vector<long long> e(m, 0), img(m);
    std::set<std::vector<long long>> fixed_set;
    while (true) {
        for (std::size_t k = 0; k < m; ++k) img[tgt[k]] = sg[k] * q * e[k];
        bool ok = true;
        for (std::size_t k = 0; k < m && ok; ++k) ok = mod(img[k] - e[k], u) == 0;
        if (ok) fixed_set.insert(e);
        std::size_t k = 0;
        while (k < m) {
            e[k] += step;
            if (e[k] < u) break;
            e[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    res.fixed = fixed_set.size();
    res.expected = theta_modulus(O, q);
    // theta image over C_N
    const long long N = res.expected;
    std::set<std::vector<long long>> image;
    bool inside = true;
    for (long long j = 0; j < N; ++j) {
        TorusElem h = theta(O, F, F->exp(j * (u / N)));
        std::vector<long long> ex;
        for (int k : sup) ex.push_back(F->log(h.coords.at(k)));
        inside = inside && fixed_set.count(ex);
        image.insert(ex);
    }
    res.theta_bijective = inside && static_cast<long long>(image.size()) == N && image.size() == fixed_set.size();
    return res;
}

static TorusElem act_xinv(const OrbitData& O, const TorusElem& h) { return twist_act(orbit_wprime(O).inverse(), h); }

ConjAction conj_center_action(const OrbitData& O, const FieldPtr& F) {
    ConjAction ca;
    const long long q = F->q();
    TorusElem zp = z_plus(O, F);
    TorusElem Azp = act_xinv(O, zp);
    if (O.d0 % 2 == 0) {
        int psi = choose_psi(O, F);
        long long N = theta_modulus(O, q);
        bool z_ok = Azp == zp * theta(O, F, F->pow(psi, N / 2));
        bool t_ok = act_xinv(O, theta(O, F, psi)) == theta(O, F, F->pow(psi, q));
        ca.matches = z_ok && t_ok;
        ca.detail = std::string("z+ -> z+ theta(psi^((q^d0+1)/2)): ") + (z_ok ? "ok" : "FAIL") +
                    "; theta(psi) -> theta(psi^q): " + (t_ok ? "ok" : "FAIL");
        return ca;
    }
    long long M = 1;
    for (const auto& [k, v] : zp.coords) M = std::lcm(M, F->order(v));
    ca.modulus = M;
    ca.exponent = -1;
    for (long long e = 0; e < M; ++e)
        if (zp.pow(e) == Azp) {
            ca.exponent = e;
            break;
        }
    long long closed;
    if (O.d % 2 == 0)
        closed = q + ipow(q, O.d0) + 1;
    else
        closed = ((O.d0 + 1) / 2) * (ipow(q, O.d0) - 1) - ipow(q, (O.d0 + 1) / 2);
    ca.closed_exponent = mod(closed, M);
    ca.matches = ca.exponent == ca.closed_exponent;
    std::ostringstream os;
    os << "z+ -> (z+)^" << ca.exponent << " mod " << M << ", closed form " << closed << " = " << ca.closed_exponent;
    ca.detail = os.str();
    return ca;
}

long long theta_log(const OrbitData& O, const FieldPtr& F, const TorusElem& z) {
    const long long N = theta_modulus(O, F->q());
    const long long step = F->units() / N;
    long long e0 = F->log(z.coords.at(O.J[0]));
    if (e0 % step) throw std::domain_error("element not in Z_O");
    long long j = e0 / step;
    if (!(theta(O, F, F->exp(j * step)) == z)) throw std::domain_error("element not in Z_O");
    return j;
}

bool central_stabilizer_jump(const OrbitData& O, const FieldPtr& F, long long eta_order) {
    const long long N = theta_modulus(O, F->q());
    if (eta_order < 1 || N % eta_order) throw std::invalid_argument("eta order must divide q^d0 - eps");
    const long long u = F->units();
    TorusElem gen = theta(O, F, F->exp(u / N));
    TorusElem zp = z_plus(O, F);
    // logs of A^m(gen) and of A^m(z+)/z+ for each power of x^-1
    std::vector<long long> lg, lz;
    TorusElem g = gen, z = zp;
    for (int m = 0; m < 2 * O.d0; ++m) {
        lg.push_back(theta_log(O, F, g));
        lz.push_back(theta_log(O, F, z * zp.inverse()));
        g = act_xinv(O, g);
        z = act_xinv(O, z);
    }
    int verdict = -1;
    for (long long k = 0; k < N; ++k) {
        if (N / std::gcd(k, N) != eta_order) continue;
        int st_eta = 0, st_tilde = 0;
        for (int m = 0; m < 2 * O.d0; ++m) {
            bool fe = mod(k * (lg[m] - 1), N) == 0;
            st_eta += fe;
            st_tilde += fe && mod(k * lz[m], N) == 0;
        }
        int jump = st_eta != st_tilde;
        if (verdict >= 0 && verdict != jump) throw std::logic_error("characters of equal order disagree on the jump");
        verdict = jump;
    }
    return verdict == 1;
}

}  // namespace dsplit
