#include "dsplit/levi.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "dsplit/closure.hpp"

namespace dsplit {

int compute_d0(TwistKind kind, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    switch (kind) {
        case TwistKind::A: return d;
        case TwistKind::A2:
            if (d % 4 == 0) return d;
            if (d % 2 == 0) return d / 2;
            return 2 * d;
        default: return d % 2 ? d : d / 2;
    }
}

static void twist_shape(int n, int d, int& d0, int& l, int& a) {
    d0 = d0_of(d);
    l = (n / d0) * d0;
    a = l / d0;
}

SignedPerm sylow_wprime(int n, int d) {
    int d0, l, a;
    twist_shape(n, d, d0, l, a);
    SignedPerm w(n);
    for (int i = 1; i <= a; ++i) w = w * wprime(n, grid_set(d0, a, i));
    return w;
}

SignedPerm sylow_twist_w(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("sylow_twist_w: n, d must be positive");
    SignedPerm w = sylow_wprime(n, d);
    return d % 2 ? w * w : w;
}

int LeviLabel::t(int s) const {
    auto it = orbits.find(s);
    return it == orbits.end() ? 0 : static_cast<int>(it->second.size());
}

static std::string set_str(const IndexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

std::string LeviLabel::str() const {
    std::ostringstream os;
    os << "n=" << n << ",d=" << d << ",I-1=" << set_str(I_minus1) << ",I={";
    for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << set_str(I[i]);
    os << '}';
    return os.str();
}

static IndexSet image_of(const SignedPerm& w, const IndexSet& J) {
    IndexSet r;
    for (int x : J) r.push_back(w.bar(x));
    std::sort(r.begin(), r.end());
    return r;
}

bool is_levi_pair(int n, int d, const IndexSet& S, const SetPartition& I) {
    SignedPerm w = sylow_twist_w(n, d);
    if (!block_stable(S, I, w)) return false;
    for (const IndexSet& J : I) {
        if (J.size() == 1 && std::find(I.begin(), I.end(), image_of(w, J)) == I.end()) return false;
        int len = 0;
        IndexSet K = J;
        do {
            K = image_of(w, K);
            ++len;
        } while (K != J);
        if (len != d0_of(d)) return false;
    }
    return true;
}

LeviLabel make_levi_label(int n, int d, IndexSet S, SetPartition I) {
    S = make_index_set(S);
    I = make_partition(I);
    IndexSet all = S;
    IndexSet u = underline(I);
    all.insert(all.end(), u.begin(), u.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != n || (n > 0 && (all.front() != 1 || all.back() != n)) ||
        std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("I_minus1 and I must partition {1..n}");
    if (!is_levi_pair(n, d, S, I)) throw std::invalid_argument("not a d-split label: " + set_str(S));
    LeviLabel L;
    L.n = n;
    L.d = d;
    L.I_minus1 = S;
    L.I = I;
    twist_shape(n, d, L.d0, L.l, L.a);
    SignedPerm w = sylow_twist_w(n, d);
    std::set<IndexSet> done;
    std::map<int, std::vector<LeviOrbit>> by_s;
    for (const IndexSet& J : I) {
        if (done.count(J)) continue;
        LeviOrbit O;
        O.s = static_cast<int>(J.size());
        IndexSet K = J;
        do {
            O.blocks.push_back(K);
            done.insert(K);
            K = image_of(w, K);
        } while (K != J);
        std::sort(O.blocks.begin(), O.blocks.end());
        for (int x : O.support())
            if (x <= L.a) O.J.push_back(x);
        if (std::find(O.blocks.begin(), O.blocks.end(), O.J) == O.blocks.end())
            throw std::logic_error("orbit meets {1..a} outside a single block");
        IndexSet grid_union;
        for (int k : O.J) {
            O.Q.push_back(grid_set(L.d0, L.a, k));
            grid_union.insert(grid_union.end(), O.Q.back().begin(), O.Q.back().end());
        }
        std::sort(grid_union.begin(), grid_union.end());
        if (grid_union != O.support()) throw std::logic_error("orbit support is not a union of grid sets");
        by_s[O.s].push_back(O);
    }
    for (auto& [s, v] : by_s)
        std::sort(v.begin(), v.end(), [](const LeviOrbit& x, const LeviOrbit& y) { return x.J[0] < y.J[0]; });
    L.orbits = by_s;
    return L;
}

std::vector<LeviLabel> enumerate_labels(int n, int d) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_labels: n out of range");
    std::vector<LeviLabel> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IndexSet S, C;
        for (int i = 1; i <= n; ++i) (mask >> (i - 1) & 1 ? S : C).push_back(i);
        for (const SetPartition& I : set_partitions(C))
            if (is_levi_pair(n, d, S, I)) out.push_back(make_levi_label(n, d, S, I));
    }
    return out;
}

std::vector<LeviLabel> dedup_by_conjugacy(const std::vector<LeviLabel>& labels) {
    std::vector<LeviLabel> out;
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    for (const auto& L : labels) {
        std::vector<std::size_t> sizes;
        for (const auto& J : L.I) sizes.push_back(J.size());
        std::sort(sizes.begin(), sizes.end());
        if (seen.insert({L.I_minus1.size(), sizes}).second) out.push_back(L);
    }
    return out;
}

static mpz_class power(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class order_sp(int m, const mpz_class& q) {
    mpz_class r = power(q, static_cast<unsigned long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= power(q, 2 * i) - 1;
    return r;
}

mpz_class order_gl(int s, const mpz_class& Q, int eps) {
    mpz_class r = power(Q, static_cast<unsigned long>(s) * (s - 1) / 2);
    for (int i = 1; i <= s; ++i) r *= power(Q, i) - ((eps == -1 && i % 2) ? -1 : 1);
    return r;
}

bool is_odd_prime_power(long long q) {
    if (q < 3 || q % 2 == 0) return false;
    long long p = 3;
    while (p * p <= q && q % p) p += 2;
    if (p * p > q) p = q;
    while (q % p == 0) q /= p;
    return q == 1;
}

LeviStructure levi_structure(const LeviLabel& L, long long q) {
    if (!is_odd_prime_power(q)) throw std::invalid_argument("q must be an odd prime power");
    LeviStructure st;
    st.sp_rank = static_cast<int>(L.I_minus1.size());
    st.epsilon = L.d % 2 ? 1 : -1;
    st.d0 = L.d0;
    mpz_class Q = power(mpz_class(static_cast<long>(q)), L.d0);
    st.order = order_sp(st.sp_rank, static_cast<long>(q));
    for (const auto& [s, orbs] : L.orbits) {
        int t = static_cast<int>(orbs.size());
        st.gl_parts.push_back({s, t});
        for (int k = 0; k < t; ++k) st.order *= order_gl(s, Q, st.epsilon);
    }
    return st;
}

mpz_class RelativeWeylDescriptor::order() const {
    mpz_class r = 1;
    for (auto [c, t] : factors) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), t);
        r *= power(c, t) * f;
    }
    return r;
}

SignedPerm wprime_multi(int n, const std::vector<IndexSet>& Q) {
    SignedPerm r(n);
    for (const auto& J : Q) r = r * wprime(n, J);
    return r;
}

SignedPerm tau_multi(int n, const std::vector<IndexSet>& Q, const std::vector<IndexSet>& Q2) {
    SignedPerm r(n);
    for (std::size_t j = 0; j < Q.size(); ++j) r = r * tau(n, Q[j], Q2[j]);
    return r;
}

SignedPerm kappa_embed(const LeviLabel& L, int s, const SignedPerm& x) {
    const auto& orbs = L.orbits.at(s);
    const int t = static_cast<int>(orbs.size());
    if (x.n() != L.d0 * t) throw std::invalid_argument("kappa_embed: wrong source rank");
    std::vector<int> img = SignedPerm(L.n).image();
    for (int j = 0; j < s; ++j) {
        auto phi = [&](int p) {
            int i = (p - 1) % t, r = (p - 1) / t;
            return orbs[i].Q[j][r];
        };
        for (int p = 1; p <= x.n(); ++p) {
            int y = x(p);
            img[phi(p) - 1] = y > 0 ? phi(y) : -phi(-y);
        }
    }
    return SignedPerm(L.n, img);
}

RelativeWeylDescriptor relative_weyl(const LeviLabel& L) {
    RelativeWeylDescriptor R;
    for (const auto& [s, orbs] : L.orbits) {
        const int t = static_cast<int>(orbs.size());
        R.factors.push_back({2 * L.d0, t});
        const int m = L.d0 * t;
        for (int i = 1; i <= t; ++i) R.gens.push_back(kappa_embed(L, s, grid(m, L.d0, t, i)));
        for (int i = 1; i < t; ++i)
            R.gens.push_back(kappa_embed(L, s, tau(m, grid_set(L.d0, t, i), grid_set(L.d0, t, i + 1))));
    }
    return R;
}

RelWeylCheck verify_relative_weyl(const LeviLabel& L) {
    if (L.n > 4) throw std::invalid_argument("verify_relative_weyl: rank above brute-force bound 4");
    RelWeylCheck chk;
    const int n = L.n;
    RootSystem C = build_root_system(RootKind::C, n);
    std::vector<Root> phiL = split_roots(C, L.I_minus1, L.I);
    std::vector<SignedPerm> refl;
    for (const Root& r : phiL) refl.push_back(reflection(n, r));
    std::vector<SignedPerm> WL = group_closure(refl, n);
    std::unordered_set<SignedPerm> WLs(WL.begin(), WL.end());
    std::vector<SignedPerm> N;
    for (const SignedPerm& x : hyperoctahedral(n))
        if (is_stable_under(phiL, x)) N.push_back(x);
    SignedPerm w = sylow_twist_w(n, L.d);
    SignedPerm wi = w.inverse();
    std::size_t fixed = 0;
    for (const SignedPerm& x : N)
        if (WLs.count(x.inverse() * w * x * wi)) ++fixed;
    chk.fixed_order = fixed / WL.size();
    RelativeWeylDescriptor R = relative_weyl(L);
    chk.expected = R.order();
    std::vector<SignedPerm> G = group_closure(R.gens, n);
    chk.closure_order = G.size();
    std::unordered_set<SignedPerm> Ns(N.begin(), N.end());
    if (mpz_class(static_cast<unsigned long>(chk.fixed_order)) != chk.expected) {
        chk.reason = "fixed-point order differs from the wreath formula";
        return chk;
    }
    if (mpz_class(static_cast<unsigned long>(G.size())) != chk.expected) {
        chk.reason = "generator closure order differs";
        return chk;
    }
    for (const SignedPerm& g : R.gens)
        if (g * w != w * g) {
            chk.reason = "generator does not centralize w";
            return chk;
        }
    for (const SignedPerm& g : G) {
        if (!Ns.count(g)) {
            chk.reason = "generator closure leaves the root-set stabilizer";
            return chk;
        }
        if (!g.is_identity() && WLs.count(g)) {
            chk.reason = "generator closure meets W_L";
            return chk;
        }
    }
    chk.ok = true;
    return chk;
}

}  // namespace dsplit
