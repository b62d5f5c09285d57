#include "dsplit/sperm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "dsplit/closure.hpp"

namespace dsplit {

IndexSet make_index_set(std::vector<int> pts) {
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw std::invalid_argument("index set has duplicates");
    if (!pts.empty() && pts.front() < 1) throw std::invalid_argument("index set needs positive points");
    return pts;
}

SetPartition make_partition(std::vector<IndexSet> blocks) {
    for (auto& b : blocks) {
        b = make_index_set(b);
        if (b.empty()) throw std::invalid_argument("empty block");
    }
    std::sort(blocks.begin(), blocks.end(), [](const IndexSet& a, const IndexSet& b) { return a[0] < b[0]; });
    IndexSet all = underline(blocks);
    make_index_set(all);
    return blocks;
}

IndexSet underline(const SetPartition& p) {
    IndexSet u;
    for (const auto& b : p) u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
}

SignedPerm::SignedPerm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

SignedPerm::SignedPerm(int n, std::vector<int> image) : img_(std::move(image)) {
    if (static_cast<int>(img_.size()) != n) throw std::invalid_argument("image length != n");
    std::vector<bool> hit(n + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || hit[a]) throw std::invalid_argument("not a signed permutation");
        hit[a] = true;
    }
}

SignedPerm SignedPerm::parse(int n, const std::string& text) {
    std::vector<int> full(2 * n + 1, 0);  // index x+n
    auto at = [&](int x) -> int& { return full[x + n]; };
    std::size_t pos = 0;
    auto fail = [&]() { throw std::invalid_argument("bad cycle notation: " + text); };
    std::vector<bool> used(2 * n + 1, false);
    while (pos < text.size()) {
        if (text[pos] != '(') fail();
        ++pos;
        std::vector<int> cyc;
        while (pos < text.size() && text[pos] != ')') {
            std::size_t end = text.find_first_of(",)", pos);
            if (end == std::string::npos) fail();
            int v = 0;
            try {
                std::size_t used_chars = 0;
                v = std::stoi(text.substr(pos, end - pos), &used_chars);
                if (used_chars != end - pos) fail();
            } catch (const std::logic_error&) {
                fail();
            }
            if (v == 0 || std::abs(v) > n || used[v + n]) fail();
            used[v + n] = true;
            cyc.push_back(v);
            pos = end;
            if (text[pos] == ',') ++pos;
        }
        if (pos >= text.size()) fail();
        ++pos;
        for (std::size_t k = 0; k < cyc.size(); ++k) at(cyc[k]) = cyc[(k + 1) % cyc.size()];
    }
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        int a = at(i) ? at(i) : i;
        int b = at(-i) ? at(-i) : -i;
        if (b != -a) throw std::invalid_argument("cycle notation not odd-symmetric: " + text);
        img[i - 1] = a;
    }
    return SignedPerm(n, img);
}

SignedPerm SignedPerm::operator*(const SignedPerm& b) const {
    if (n() != b.n()) throw std::invalid_argument("rank mismatch in compose");
    std::vector<int> r(n());
    for (int i = 1; i <= n(); ++i) r[i - 1] = (*this)(b(i));
    SignedPerm out;
    out.img_ = std::move(r);
    return out;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) { return a * b; }

SignedPerm SignedPerm::inverse() const {
    SignedPerm out(n());
    for (int i = 1; i <= n(); ++i) {
        int v = img_[i - 1];
        out.img_[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return out;
}

SignedPerm SignedPerm::pow(long long k) const {
    SignedPerm base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    SignedPerm r(n());
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool SignedPerm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

int SignedPerm::order() const {
    int o = 1;
    for (const auto& c : cycle_data(*this).cycles) o = std::lcm(o, static_cast<int>(c.points.size()));
    return o;
}

std::vector<int> SignedPerm::bar_perm() const {
    std::vector<int> b(n());
    for (int i = 1; i <= n(); ++i) b[i - 1] = bar(i);
    return b;
}

SignedPerm SignedPerm::extend(int m) const {
    if (m < n()) throw std::invalid_argument("cannot shrink rank");
    std::vector<int> img = img_;
    for (int i = n() + 1; i <= m; ++i) img.push_back(i);
    return SignedPerm(m, img);
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    std::vector<bool> seen(2 * n() + 1, false);
    auto emit = [&](int start) {
        os << '(';
        int x = start;
        bool first = true;
        do {
            if (!first) os << ',';
            os << x;
            first = false;
            seen[x + n()] = true;
            x = (*this)(x);
        } while (x != start);
        os << ')';
    };
    for (int i = 1; i <= n(); ++i) {
        if (seen[i + n()] || (*this)(i) == i) continue;
        emit(i);
        if (!seen[-i + n()]) emit(-i);
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

CycleData cycle_data(const SignedPerm& s) {
    const int n = s.n();
    CycleData cd;
    for (int i = 1; i <= n; ++i) {
        cd.bar.push_back(s.bar(i));
        cd.sign.push_back(s.sign(i));
    }
    std::vector<bool> seen(2 * n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i + n]) continue;
        SignedCycle c;
        int x = i;
        do {
            c.points.push_back(x);
            seen[x + n] = true;
            x = s(x);
        } while (x != i);
        c.self_paired = seen[-i + n];
        if (!c.self_paired)
            for (int y : c.points) seen[-y + n] = true;
        cd.cycles.push_back(std::move(c));
    }
    return cd;
}

SignedPerm wprime(int n, const IndexSet& J) {
    std::vector<int> img = SignedPerm(n).image();
    const int k = static_cast<int>(J.size());
    for (int t = 0; t < k; ++t) {
        if (J[t] < 1 || J[t] > n) throw std::invalid_argument("wprime: point out of range");
        img[J[t] - 1] = t + 1 < k ? J[t + 1] : -J[0];
    }
    return SignedPerm(n, img);
}

SignedPerm tau(int n, const IndexSet& J, const IndexSet& J2) {
    if (J.size() != J2.size()) throw std::invalid_argument("tau: size mismatch");
    for (int x : J)
        if (std::find(J2.begin(), J2.end(), x) != J2.end()) throw std::invalid_argument("tau: overlapping sets");
    std::vector<int> img = SignedPerm(n).image();
    for (std::size_t t = 0; t < J.size(); ++t) {
        img[J[t] - 1] = J2[t];
        img[J2[t] - 1] = J[t];
    }
    return SignedPerm(n, img);
}

SignedPerm iota(int n, const IndexSet& J) {
    std::vector<int> img = SignedPerm(n).image();
    for (int x : J) img[x - 1] = -x;
    return SignedPerm(n, img);
}

IndexSet grid_set(int k, int m, int i) {
    IndexSet J;
    for (int j = 0; j < k; ++j) J.push_back(i + j * m);
    return J;
}

SignedPerm grid(int n, int k, int m, int i) { return wprime(n, grid_set(k, m, i)); }

CentralizerType centralizer_type(const SignedPerm& s) {
    CentralizerType ct;
    for (const auto& c : cycle_data(s).cycles) {
        int len = static_cast<int>(c.points.size());
        if (c.self_paired)
            ++ct.m1[len / 2];
        else
            ++ct.m2[len];
    }
    return ct;
}

mpz_class CentralizerType::order() const {
    mpz_class r = 1;
    auto part = [&](int base, int m) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2 * base, m);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        r *= p * f;
    };
    for (auto [i, m] : m1) part(i, m);
    for (auto [i, m] : m2) part(i, m);
    return r;
}

std::vector<SignedPerm> group_closure(const std::vector<SignedPerm>& gens, int n, std::size_t cap) {
    for (const auto& g : gens)
        if (g.n() != n) throw std::invalid_argument("closure: rank mismatch");
    if (cap < 1) throw std::invalid_argument("closure: cap must be positive");
    return closure(gens, SignedPerm(n), cap);
}

std::vector<SignedPerm> hyperoctahedral(int n) {
    std::vector<SignedPerm> gens;
    for (int i = 1; i < n; ++i) gens.push_back(tau(n, {i}, {i + 1}));
    gens.push_back(iota(n, {1}));
    return group_closure(gens, n);
}

std::vector<SignedPerm> brute_normalizer(const std::vector<SignedPerm>& H, const std::vector<SignedPerm>& G) {
    std::unordered_set<SignedPerm> hs(H.begin(), H.end());
    std::unordered_set<SignedPerm> gs(G.begin(), G.end());
    for (const auto& a : H) {
        if (!gs.count(a)) throw std::invalid_argument("normalizer: H not inside G");
        for (const auto& b : H)
            if (!hs.count(a * b)) throw std::invalid_argument("normalizer: H not a subgroup");
    }
    std::vector<SignedPerm> out;
    for (const auto& g : G) {
        SignedPerm gi = g.inverse();
        bool ok = true;
        for (const auto& h : H)
            if (!hs.count(g * h * gi)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<SignedPerm> brute_centralizer(const SignedPerm& x, const std::vector<SignedPerm>& G) {
    std::vector<SignedPerm> out;
    for (const auto& g : G)
        if (g * x == x * g) out.push_back(g);
    return out;
}

NormalizerPrediction predicted_normalizer(int n, const SetPartition& I, const std::vector<bool>& A_is_C2) {
    if (A_is_C2.size() != I.size()) throw std::invalid_argument("one A_J choice per block");
    NormalizerPrediction p;
    for (std::size_t b = 0; b < I.size(); ++b) {
        const IndexSet& J = I[b];
        for (std::size_t t = 0; t + 1 < J.size(); ++t) p.H_gens.push_back(tau(n, {J[t]}, {J[t + 1]}));
        if (A_is_C2[b]) p.H_gens.push_back(iota(n, {J[0]}));
        p.Z_gens.push_back(iota(n, J));
    }
    for (std::size_t b = 0; b < I.size(); ++b)
        for (std::size_t c = b + 1; c < I.size(); ++c)
            if (I[b].size() == I[c].size() && A_is_C2[b] == A_is_C2[c]) p.S_gens.push_back(tau(n, I[b], I[c]));
    return p;
}

}  // namespace dsplit
