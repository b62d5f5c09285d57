#include "dsplit/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dsplit/closure.hpp"

namespace dsplit {

RootKind parse_root_kind(const std::string& s) {
    if (s == "A") return RootKind::A;
    if (s == "B") return RootKind::B;
    if (s == "C") return RootKind::C;
    if (s == "D") return RootKind::D;
    throw std::invalid_argument("unknown root system kind " + s);
}

std::string to_string(RootKind k) {
    switch (k) {
        case RootKind::A: return "A";
        case RootKind::B: return "B";
        case RootKind::C: return "C";
        default: return "D";
    }
}

std::string Root::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i];
        if (!c) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (std::abs(c) != 1) os << std::abs(c);
        os << 'e' << i + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

Root Root::parse(int n, const std::string& s) {
    Root r{std::vector<int>(n, 0)};
    std::size_t pos = 0;
    auto fail = [&]() { throw std::invalid_argument("bad root text: " + s); };
    if (s.empty()) fail();
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        int c = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) c = 10 * c + (s[pos++] - '0');
        if (c == 0) c = 1;
        if (pos >= s.size() || s[pos] != 'e') fail();
        ++pos;
        int idx = 0;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) idx = 10 * idx + (s[pos++] - '0');
        if (pos == start || idx < 1 || idx > n) fail();
        r.coeffs[idx - 1] += sign * c;
    }
    return r;
}

int dot(const Root& a, const Root& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
    return s;
}

Root act(const SignedPerm& x, const Root& r) {
    if (x.n() != static_cast<int>(r.coeffs.size())) throw std::invalid_argument("act: rank mismatch");
    Root out{std::vector<int>(r.coeffs.size(), 0)};
    for (int i = 1; i <= x.n(); ++i) out.coeffs[x.bar(i) - 1] += x.sign(i) * r.coeffs[i - 1];
    return out;
}

bool RootSystem::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

static Root unit(int n, int i, int c) {
    Root r{std::vector<int>(n, 0)};
    r.coeffs[i - 1] = c;
    return r;
}

static Root pair(int n, int i, int si, int j, int sj) {
    Root r{std::vector<int>(n, 0)};
    r.coeffs[i - 1] = si;
    r.coeffs[j - 1] = sj;
    return r;
}

std::vector<Root> sorted_roots(std::vector<Root> r) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

RootSystem build_root_system(RootKind kind, int n) {
    int min_n = kind == RootKind::D ? 4 : 2;
    if (n < min_n || n > 64) throw std::invalid_argument("root system rank out of range");
    RootSystem sys{kind, n, {}, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            sys.roots.push_back(pair(n, i, 1, j, -1));
            if (kind != RootKind::A && i < j) {
                sys.roots.push_back(pair(n, i, 1, j, 1));
                sys.roots.push_back(pair(n, i, -1, j, -1));
            }
        }
    if (kind == RootKind::B || kind == RootKind::C) {
        int c = kind == RootKind::B ? 1 : 2;
        for (int i = 1; i <= n; ++i) {
            sys.roots.push_back(unit(n, i, c));
            sys.roots.push_back(unit(n, i, -c));
        }
    }
    sys.roots = sorted_roots(sys.roots);
    for (int i = 1; i < n; ++i) sys.simple.push_back(pair(n, i, 1, i + 1, -1));
    if (kind == RootKind::B) sys.simple.push_back(unit(n, n, 1));
    if (kind == RootKind::C) sys.simple.push_back(unit(n, n, 2));
    if (kind == RootKind::D) sys.simple.push_back(pair(n, n - 1, 1, n, 1));
    return sys;
}

ParabolicLabel normalize_label(int n, ParabolicLabel label) {
    if (label.m < 0 || label.m > n) throw std::invalid_argument("label m out of range");
    IndexSet u = underline(label.I);
    for (int x : u)
        if (x > label.m) throw std::invalid_argument("label block outside {1..m}");
    for (int x = 1; x <= label.m; ++x)
        if (!std::binary_search(u.begin(), u.end(), x)) label.I.push_back({x});
    label.I = make_partition(label.I);
    return label;
}

std::vector<Root> split_roots(const RootSystem& sys, const IndexSet& S, const SetPartition& I) {
    std::vector<Root> out;
    auto in = [](const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); };
    for (const Root& r : sys.roots) {
        bool inS = true;
        for (int i = 1; i <= sys.n; ++i)
            if (r.coeffs[i - 1] && !in(S, i)) inS = false;
        if (inS) out.push_back(r);
    }
    for (const IndexSet& J : I)
        for (int i : J)
            for (int j : J)
                if (i != j) out.push_back(pair(sys.n, i, 1, j, -1));
    return sorted_roots(out);
}

std::vector<Root> parabolic_roots(const RootSystem& sys, const ParabolicLabel& label0) {
    ParabolicLabel label = normalize_label(sys.n, label0);
    if (sys.kind == RootKind::D && label.m == sys.n - 1) throw std::invalid_argument("type D label with m = n-1");
    if (sys.kind == RootKind::A && label.m != sys.n) throw std::invalid_argument("type A label needs m = n");
    if (label.flip && sys.kind != RootKind::D) throw std::invalid_argument("flip flag only in type D");
    IndexSet S;
    for (int i = label.m + 1; i <= sys.n; ++i) S.push_back(i);
    std::vector<Root> r = split_roots(sys, S, label.I);
    if (label.flip) {
        SignedPerm f = iota(sys.n, {sys.n});
        for (Root& x : r) x = act(f, x);
        r = sorted_roots(r);
    }
    return r;
}

bool is_stable_under(const std::vector<Root>& roots, const SignedPerm& x) {
    std::vector<Root> s = sorted_roots(roots);
    for (const Root& r : s)
        if (!std::binary_search(s.begin(), s.end(), act(x, r))) return false;
    return true;
}

bool block_stable(const IndexSet& S, const SetPartition& I, const SignedPerm& x) {
    auto in = [](const IndexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); };
    for (int i : S)
        if (!in(S, x.bar(i))) return false;
    for (const IndexSet& J : I) {
        IndexSet img;
        for (int i : J) {
            if (x.sign(i) != x.sign(J[0])) return false;
            img.push_back(x.bar(i));
        }
        std::sort(img.begin(), img.end());
        if (J.size() > 1 && std::find(I.begin(), I.end(), img) == I.end()) return false;
    }
    return true;
}

SignedPerm reflection(int n, const Root& r) {
    std::vector<int> nz;
    for (int i = 1; i <= n; ++i)
        if (r.coeffs[i - 1]) nz.push_back(i);
    if (nz.size() == 1) return iota(n, {nz[0]});
    if (nz.size() != 2) throw std::invalid_argument("reflection: not a root");
    int i = nz[0], j = nz[1];
    if (r.coeffs[i - 1] * r.coeffs[j - 1] < 0) return tau(n, {i}, {j});
    std::vector<int> img = SignedPerm(n).image();
    img[i - 1] = -j;
    img[j - 1] = -i;
    return SignedPerm(n, img);
}

std::vector<SignedPerm> weyl_group(const RootSystem& sys) {
    std::vector<SignedPerm> gens;
    for (const Root& r : sys.simple) gens.push_back(reflection(sys.n, r));
    return group_closure(gens, sys.n);
}

static void integer_partitions(int m, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(m, maxpart); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions(m - p, p, cur, out);
        cur.pop_back();
    }
}

ParabolicLabel classify_parabolic(const RootSystem& sys, const std::vector<Root>& roots0) {
    if (sys.n > 4) throw std::invalid_argument("classify_parabolic: rank above brute-force bound 4");
    std::vector<Root> roots = sorted_roots(roots0);
    for (const Root& r : roots)
        if (!sys.contains(r)) throw NotParabolic("root outside the system: " + r.str());
    std::vector<SignedPerm> W = weyl_group(sys);

    std::vector<ParabolicLabel> targets;
    for (int flip = 0; flip <= (sys.kind == RootKind::D ? 1 : 0); ++flip)
        for (int m = sys.n; m >= 0; --m) {
            if (sys.kind == RootKind::D && m == sys.n - 1) continue;
            if (sys.kind == RootKind::A && m != sys.n) continue;
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            integer_partitions(m, m, cur, parts);
            for (const auto& lam : parts) {
                ParabolicLabel L{m, {}, flip == 1};
                int next = 1;
                for (int p : lam) {
                    IndexSet b;
                    for (int k = 0; k < p; ++k) b.push_back(next++);
                    L.I.push_back(b);
                }
                targets.push_back(L);
            }
        }
    for (const ParabolicLabel& L : targets) {
        std::vector<Root> t = parabolic_roots(sys, L);
        if (t.size() != roots.size()) continue;
        for (const SignedPerm& w : W) {
            std::vector<Root> img;
            for (const Root& r : roots) img.push_back(act(w, r));
            if (sorted_roots(img) == t) return L;
        }
    }
    throw NotParabolic("no W-conjugate standard parabolic subsystem");
}

std::vector<SetPartition> set_partitions(const IndexSet& pts) {
    std::vector<SetPartition> out;
    SetPartition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == pts.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(pts[k]);
            rec(k + 1);
            cur[b].pop_back();
        }
        cur.push_back({pts[k]});
        rec(k + 1);
        cur.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace dsplit
