#include "dsplit/chartab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dsplit {

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

Perm perm_identity(int degree) {
    Perm r(degree);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

Perm perm_from_signed(const SignedPerm& s) {
    const int n = s.n();
    Perm r(2 * n);
    auto pt = [n](int x) { return x > 0 ? x - 1 : n - x - 1; };
    for (int i = 1; i <= n; ++i) {
        r[pt(i)] = pt(s(i));
        r[pt(-i)] = pt(s(-i));
    }
    return r;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm r = perm_identity(degree);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 1 || c[k] > degree) throw std::invalid_argument("cycle point out of range");
            r[c[k] - 1] = c[(k + 1) % c.size()] - 1;
        }
    return r;
}

PermGroup::PermGroup(const std::vector<Perm>& gens, int degree, std::size_t cap) : degree_(degree) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("generator of wrong degree");
        if (g != perm_identity(degree)) gens_.push_back(g);
    }
    build(cap);
}

PermGroup PermGroup::from_elements(const std::vector<Perm>& elems, int degree, std::size_t cap) {
    std::vector<Perm> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Perm> gens;
    std::unordered_map<Perm, int, PermHash> have;
    have[perm_identity(degree)] = 0;
    std::vector<Perm> cur{perm_identity(degree)};
    for (const auto& x : sorted) {
        if (have.count(x)) continue;
        gens.push_back(x);
        // extend the closure by the new generator
        for (std::size_t k = 0; k < cur.size(); ++k)
            for (const auto& g : gens) {
                Perm y = perm_mul(cur[k], g);
                if (!have.count(y)) {
                    have[y] = 0;
                    cur.push_back(std::move(y));
                }
            }
    }
    PermGroup G(gens, degree, cap);
    if (G.order() != sorted.size()) throw std::invalid_argument("element list is not a group");
    return G;
}

void PermGroup::build(std::size_t cap) {
    Perm id = perm_identity(degree_);
    std::vector<Perm> el{id};
    std::unordered_map<Perm, int, PermHash> seen{{id, 0}};
    for (std::size_t k = 0; k < el.size(); ++k)
        for (const auto& g : gens_) {
            Perm y = perm_mul(el[k], g);
            if (!seen.count(y)) {
                if (el.size() >= cap) throw ClosureExceedsCap(cap);
                seen[y] = 0;
                el.push_back(std::move(y));
            }
        }
    std::sort(el.begin(), el.end());
    elems_ = std::move(el);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = static_cast<int>(i);
    const int N = static_cast<int>(elems_.size());
    inv_.resize(N);
    order_.resize(N);
    for (int i = 0; i < N; ++i) {
        inv_[i] = index_.at(perm_inverse(elems_[i]));
        int o = 1;
        Perm x = elems_[i];
        while (x != id) {
            x = perm_mul(x, elems_[i]);
            ++o;
        }
        order_[i] = o;
    }
    class_of_.assign(N, -1);
    for (int i = 0; i < N; ++i) {
        if (class_of_[i] >= 0) continue;
        int k = static_cast<int>(class_rep_.size());
        class_rep_.push_back(i);
        std::vector<int> orbit{i};
        class_of_[i] = k;
        for (std::size_t t = 0; t < orbit.size(); ++t)
            for (const auto& g : gens_) {
                int y = index_.at(perm_mul(perm_mul(perm_inverse(g), elems_[orbit[t]]), g));
                if (class_of_[y] < 0) {
                    class_of_[y] = k;
                    orbit.push_back(y);
                }
            }
        class_size_.push_back(static_cast<long long>(orbit.size()));
    }
}

int PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const { return index_.at(perm_mul(elems_[a], elems_[b])); }

int PermGroup::class_of(const Perm& p) const {
    int i = index_of(p);
    if (i < 0) throw std::invalid_argument("element not in group");
    return class_of_[i];
}

long long PermGroup::exponent() const {
    long long e = 1;
    for (int o : order_) e = std::lcm(e, static_cast<long long>(o));
    return e;
}

int PermGroup::power_class(int k, long long t) const {
    const int r = class_rep_[k];
    t %= order_[r];
    if (t < 0) t += order_[r];
    Perm x = perm_identity(degree_);
    for (long long i = 0; i < t; ++i) x = perm_mul(x, elems_[r]);
    return class_of_[index_.at(x)];
}

bool PermGroup::is_abelian() const {
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (perm_mul(a, b) != perm_mul(b, a)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& H) const {
    for (const auto& g : gens_)
        if (!H.contains(g)) return false;
    for (const auto& h : H.generators())
        for (const auto& g : gens_)
            if (!contains(perm_mul(perm_mul(perm_inverse(h), g), h))) return false;
    return true;
}

namespace {

long long md(long long x, long long p) { return ((x % p) + p) % p; }

long long powm(long long b, long long e, long long p) {
    long long r = 1;
    b = md(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long invm(long long a, long long p) { return powm(a, p - 2, p); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long r = 2; r * r <= n; ++r)
        if (n % r == 0) return false;
    return true;
}

long long primitive_root(long long p) {
    std::vector<long long> f;
    long long m = p - 1;
    for (long long r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            f.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) f.push_back(m);
    for (long long g = 2;; ++g) {
        bool ok = true;
        for (long long r : f) ok = ok && powm(g, (p - 1) / r, p) != 1;
        if (ok) return g;
    }
}

using ModMat = std::vector<std::vector<long long>>;

// basis of the nullspace of A (rows x cols) over F_p
std::vector<std::vector<long long>> nullspace_mod(ModMat A, int cols, long long p) {
    const int rows = static_cast<int>(A.size());
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int s = r;
        while (s < rows && A[s][c] == 0) ++s;
        if (s == rows) continue;
        std::swap(A[s], A[r]);
        long long iv = invm(A[r][c], p);
        for (auto& x : A[r]) x = x * iv % p;
        for (int i = 0; i < rows; ++i)
            if (i != r && A[i][c]) {
                long long f = A[i][c];
                for (int j = 0; j < cols; ++j) A[i][j] = md(A[i][j] - f * A[r][j], p);
            }
        piv.push_back(c);
        ++r;
    }
    std::vector<std::vector<long long>> basis;
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<long long> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = md(-A[i][f], p);
        basis.push_back(v);
    }
    return basis;
}

// characteristic polynomial via Hessenberg reduction, constant term first
std::vector<long long> charpoly_mod(ModMat H, long long p) {
    const int n = static_cast<int>(H.size());
    for (int m = 1; m + 1 < n; ++m) {
        int i = m;
        while (i < n && H[i][m - 1] == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(H[i], H[m]);
            for (int r = 0; r < n; ++r) std::swap(H[r][i], H[r][m]);
        }
        long long iv = invm(H[m][m - 1], p);
        for (int r = m + 1; r < n; ++r) {
            long long u = H[r][m - 1] * iv % p;
            if (!u) continue;
            for (int c = 0; c < n; ++c) H[r][c] = md(H[r][c] - u * H[m][c], p);
            for (int c = 0; c < n; ++c) H[c][m] = md(H[c][m] + u * H[c][r], p);
        }
    }
    std::vector<std::vector<long long>> P(n + 1);
    P[0] = {1};
    for (int k = 0; k < n; ++k) {
        std::vector<long long> next(k + 2, 0);
        for (int i = 0; i <= k; ++i) {
            next[i + 1] = md(next[i + 1] + P[k][i], p);
            next[i] = md(next[i] - H[k][k] * P[k][i], p);
        }
        long long prod = 1;
        for (int i = k - 1; i >= 0; --i) {
            prod = prod * H[i + 1][i] % p;
            long long coef = H[i][k] * prod % p;
            if (!coef) continue;
            for (std::size_t j = 0; j < P[i].size(); ++j) next[j] = md(next[j] - coef * P[i][j], p);
        }
        P[k + 1] = next;
    }
    return P[n];
}

// Sum m_i zeta_e^i as an element of Q(zeta_e).
CycNum from_exponent_vector(const std::vector<long long>& m, int e) {
    CycNum r(e);
    for (int i = 0; i < e; ++i)
        if (m[i]) r = r + CycNum(e, mpq_class(static_cast<long>(m[i]))) * CycNum::zeta(e, i);
    return r;
}

}  // namespace

CharacterTable character_table(const PermGroup& G) {
    const int r = G.num_classes();
    const long long order = static_cast<long long>(G.order());
    const long long e = G.exponent();
    long long ell = e + 1;
    while (!(is_prime(ell) && ell * ell > 4 * order)) ell += e;
    const long long p = ell;

    // class algebra structure constants a[j][k][l]
    std::vector<ModMat> M(r, ModMat(r, std::vector<long long>(r, 0)));
    std::vector<std::vector<int>> members(r);
    for (int i = 0; i < static_cast<int>(G.order()); ++i) members[G.class_of(i)].push_back(i);
    for (int j = 0; j < r; ++j)
        for (int x : members[j])
            for (int l = 0; l < r; ++l) {
                int k = G.class_of(G.mul(G.inv(x), G.class_rep(l)));
                M[j][k][l] = (M[j][k][l] + 1) % p;
            }

    // split into common eigenspaces; each space is a list of column vectors
    std::vector<std::vector<std::vector<long long>>> spaces;
    {
        std::vector<std::vector<long long>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<long long> v(r, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    for (int j = 0; j < r; ++j) {
        bool done = true;
        for (const auto& s : spaces) done = done && s.size() == 1;
        if (done) break;
        std::vector<std::vector<std::vector<long long>>> next;
        for (const auto& V : spaces) {
            const int k = static_cast<int>(V.size());
            if (k == 1) {
                next.push_back(V);
                continue;
            }
            // echelonize V (as rows) so the pivot coordinates give coordinates
            ModMat E = V;
            std::vector<int> piv;
            int row = 0;
            for (int c = 0; c < r && row < k; ++c) {
                int s = row;
                while (s < k && E[s][c] == 0) ++s;
                if (s == k) continue;
                std::swap(E[s], E[row]);
                long long iv = invm(E[row][c], p);
                for (auto& x : E[row]) x = x * iv % p;
                for (int i = 0; i < k; ++i)
                    if (i != row && E[i][c]) {
                        long long f = E[i][c];
                        for (int t = 0; t < r; ++t) E[i][t] = md(E[i][t] - f * E[row][t], p);
                    }
                piv.push_back(c);
                ++row;
            }
            // B[a][b] = coordinate a of M_j applied to basis vector b
            ModMat B(k, std::vector<long long>(k, 0));
            for (int b = 0; b < k; ++b) {
                std::vector<long long> img(r, 0);
                for (int x = 0; x < r; ++x) {
                    long long s = 0;
                    for (int y = 0; y < r; ++y)
                        if (E[b][y]) s = (s + M[j][x][y] * E[b][y]) % p;
                    img[x] = s;
                }
                for (int a = 0; a < k; ++a) B[a][b] = img[piv[a]];
            }
            auto cp = charpoly_mod(B, p);
            std::vector<long long> roots;
            for (long long x = 0; x < p; ++x) {
                long long v = 0;
                for (int i = static_cast<int>(cp.size()) - 1; i >= 0; --i) v = (v * x + cp[i]) % p;
                if (v == 0) roots.push_back(x);
            }
            std::size_t total = 0;
            for (long long lam : roots) {
                ModMat C = B;
                for (int a = 0; a < k; ++a) C[a][a] = md(C[a][a] - lam, p);
                auto ns = nullspace_mod(C, k, p);
                std::vector<std::vector<long long>> W;
                for (const auto& u : ns) {
                    std::vector<long long> v(r, 0);
                    for (int a = 0; a < k; ++a)
                        if (u[a])
                            for (int t = 0; t < r; ++t) v[t] = (v[t] + u[a] * E[a][t]) % p;
                    W.push_back(v);
                }
                total += W.size();
                next.push_back(W);
            }
            if (total != static_cast<std::size_t>(k)) throw std::logic_error("class matrix not diagonalizable mod the Dixon prime");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1) throw std::logic_error("Dixon splitting did not separate all characters");

    const long long z = powm(primitive_root(p), (p - 1) / e, p);
    std::vector<std::vector<int>> pw(r, std::vector<int>(e));
    for (int k = 0; k < r; ++k)
        for (long long t = 0; t < e; ++t) pw[k][t] = G.power_class(k, t);

    struct Raw {
        long long deg;
        std::vector<std::vector<long long>> mult;  // per class, exponent vector
    };
    std::vector<Raw> raws;
    for (const auto& s : spaces) {
        std::vector<long long> w = s[0];
        if (w[0] == 0) throw std::logic_error("eigenvector vanishes at the identity class");
        long long iv = invm(w[0], p);
        for (auto& x : w) x = x * iv % p;
        long long sum = 0;
        for (int k = 0; k < r; ++k) sum = (sum + w[k] * w[G.inverse_class(k)] % p * invm(G.class_size(k) % p, p)) % p;
        long long d2 = order % p * invm(sum, p) % p;
        long long deg = -1;
        for (long long d = 1; 2 * d < p; ++d)
            if (d * d % p == d2 && order % d == 0) {
                deg = d;
                break;
            }
        if (deg < 0) throw std::logic_error("no admissible degree lift");
        std::vector<long long> val(r);
        for (int k = 0; k < r; ++k) val[k] = w[k] * deg % p * invm(G.class_size(k) % p, p) % p;
        Raw raw{deg, {}};
        long long einv = invm(e % p, p);
        for (int k = 0; k < r; ++k) {
            std::vector<long long> m(e);
            long long tot = 0;
            for (long long i = 0; i < e; ++i) {
                long long s = 0;
                for (long long t = 0; t < e; ++t) s = (s + val[pw[k][t]] * powm(z, md(-i * t, e), p)) % p;
                m[i] = s * einv % p;
                if (m[i] > deg) throw std::logic_error("eigenvalue multiplicity lift failed");
                tot += m[i];
            }
            if (tot != deg) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
            raw.mult.push_back(m);
        }
        raws.push_back(std::move(raw));
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.mult > b.mult;
    });

    CharacterTable T;
    T.exponent = e;
    T.dixon_prime = p;
    for (const auto& raw : raws) {
        T.degrees.push_back(raw.deg);
        ClassFunction chi;
        for (const auto& m : raw.mult) chi.push_back(from_exponent_vector(m, static_cast<int>(e)));
        T.chars.push_back(std::move(chi));
    }
    if (!verify_orthogonality(G, T)) throw std::logic_error("character table failed exact orthogonality");
    return T;
}

std::shared_ptr<const CharacterTable> cached_character_table(const PermGroup& G) {
    static std::mutex mu;
    static std::map<std::vector<Perm>, std::shared_ptr<const CharacterTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(G.elements());
        if (it != cache.end()) return it->second;
    }
    auto T = std::make_shared<const CharacterTable>(character_table(G));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(G.elements(), T);
    return T;
}

bool verify_orthogonality(const PermGroup& G, const CharacterTable& T) {
    const int r = G.num_classes();
    if (T.size() != r) return false;
    const int e = static_cast<int>(T.exponent);
    long long sq = 0;
    for (long long d : T.degrees) {
        if (static_cast<long long>(G.order()) % d) return false;
        sq += d * d;
    }
    if (sq != static_cast<long long>(G.order())) return false;
    std::vector<ClassFunction> bar(r);
    for (int i = 0; i < r; ++i)
        for (const auto& v : T.chars[i]) bar[i].push_back(v.conj());
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            CycNum s(e);
            for (int k = 0; k < r; ++k) s = s + CycNum(e, mpq_class(static_cast<long>(G.class_size(k)))) * T.chars[i][k] * bar[j][k];
            if (s != CycNum(e, i == j ? mpq_class(static_cast<long>(G.order())) : mpq_class(0))) return false;
        }
    for (int k = 0; k < r; ++k)
        for (int l = k; l < r; ++l) {
            CycNum s(e);
            for (int i = 0; i < r; ++i) s = s + T.chars[i][k] * bar[i][l];
            if (s != CycNum(e, k == l ? mpq_class(static_cast<long>(G.centralizer_order(k))) : mpq_class(0))) return false;
        }
    return true;
}

std::vector<int> fusion(const PermGroup& H, const PermGroup& G) {
    if (H.degree() != G.degree()) throw std::invalid_argument("subgroup mismatch: degrees differ");
    std::vector<int> f;
    for (int k = 0; k < H.num_classes(); ++k) {
        int i = G.index_of(H.element(H.class_rep(k)));
        if (i < 0) throw std::invalid_argument("subgroup mismatch: element outside the group");
        f.push_back(G.class_of(i));
    }
    for (const auto& g : H.generators())
        if (!G.contains(g)) throw std::invalid_argument("subgroup mismatch: generator outside the group");
    return f;
}

ClassFunction restrict_to(const ClassFunction& chi, const PermGroup& G, const PermGroup& H) {
    auto f = fusion(H, G);
    ClassFunction r;
    for (int k : f) r.push_back(chi.at(k));
    return r;
}

static int common_conductor(const ClassFunction& a) {
    long long e = 1;
    for (const auto& x : a) e = std::lcm(e, static_cast<long long>(x.d()));
    return static_cast<int>(e);
}

ClassFunction induce(const ClassFunction& theta, const PermGroup& H, const PermGroup& G) {
    auto f = fusion(H, G);
    const int e = common_conductor(theta);
    ClassFunction r(G.num_classes(), CycNum(e));
    for (int c = 0; c < H.num_classes(); ++c) {
        mpq_class w(static_cast<long>(G.centralizer_order(f[c])), static_cast<long>(H.centralizer_order(c)));
        w.canonicalize();
        r[f[c]] = r[f[c]] + theta[c].embed(e) * CycNum(e, w);
    }
    return r;
}

CycNum inner_value(const ClassFunction& a, const ClassFunction& b, const PermGroup& G) {
    const int e = static_cast<int>(std::lcm(static_cast<long long>(common_conductor(a)), static_cast<long long>(common_conductor(b))));
    CycNum s(e);
    for (int k = 0; k < G.num_classes(); ++k)
        s = s + CycNum(e, mpq_class(static_cast<long>(G.class_size(k)))) * a.at(k).embed(e) * b.at(k).embed(e).conj();
    mpq_class inv_order(1, static_cast<long>(G.order()));
    inv_order.canonicalize();
    return s * CycNum(e, inv_order);
}

long long inner(const ClassFunction& a, const ClassFunction& b, const PermGroup& G) {
    mpq_class v = inner_value(a, b, G).rational();
    if (v.get_den() != 1 || sgn(v) < 0) throw std::logic_error("inner product of characters is not a nonnegative integer");
    return v.get_num().get_si();
}

ClassFunction trivial_character(const PermGroup& G) { return ClassFunction(G.num_classes(), CycNum(1, 1)); }

std::vector<long long> decompose(const ClassFunction& chi, const PermGroup& G, const CharacterTable& T) {
    std::vector<long long> m;
    for (const auto& psi : T.chars) m.push_back(inner(chi, psi, G));
    return m;
}

std::vector<int> conjugation_on_classes(const PermGroup& N, const Perm& g) {
    Perm gi = perm_inverse(g);
    std::vector<int> r;
    for (int k = 0; k < N.num_classes(); ++k) {
        int i = N.index_of(perm_mul(perm_mul(g, N.element(N.class_rep(k))), gi));
        if (i < 0) throw std::invalid_argument("element does not normalize the subgroup");
        r.push_back(N.class_of(i));
    }
    return r;
}

ClassFunction act_on_character(const ClassFunction& theta, const std::vector<int>& class_perm) {
    ClassFunction r;
    for (int k : class_perm) r.push_back(theta.at(k));
    return r;
}

bool same_function(const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int e = static_cast<int>(std::lcm(static_cast<long long>(a[k].d()), static_cast<long long>(b[k].d())));
        if (a[k].embed(e) != b[k].embed(e)) return false;
    }
    return true;
}

InertiaResult inertia_and_extendibility(const PermGroup& N, const PermGroup& H, const ClassFunction& theta) {
    if (!N.is_normal_in(H)) throw std::invalid_argument("N is not normal in H");
    std::vector<Perm> stab;
    for (const auto& h : H.elements())
        if (same_function(act_on_character(theta, conjugation_on_classes(N, h)), theta)) stab.push_back(h);
    InertiaResult res{PermGroup::from_elements(stab, H.degree()), false, -1};
    auto T = cached_character_table(res.inertia);
    for (int i = 0; i < T->size(); ++i)
        if (same_function(restrict_to(T->chars[i], res.inertia, N), theta)) {
            res.extends = true;
            res.witness = i;
            break;
        }
    return res;
}

std::vector<Perm> wreath_generators(const std::vector<Perm>& Y, int k, int m) {
    const int deg = k * m;
    std::vector<Perm> gens;
    for (const auto& y : Y) {
        Perm g = perm_identity(deg);
        for (int x = 0; x < k; ++x) g[x] = y[x];
        gens.push_back(g);
    }
    for (int j = 0; j + 1 < m; ++j) {
        Perm g = perm_identity(deg);
        for (int x = 0; x < k; ++x) {
            g[j * k + x] = (j + 1) * k + x;
            g[(j + 1) * k + x] = j * k + x;
        }
        gens.push_back(g);
    }
    return gens;
}

PermGroup cyclic_wreath(int k, int m) {
    Perm c(k);
    for (int x = 0; x < k; ++x) c[x] = (x + 1) % k;
    return PermGroup(wreath_generators({c}, k, m), k * m);
}

std::vector<std::string> preset_names() {
    return {"S3", "S4", "D8", "Q8", "C2wrS2", "C3wrS2", "C4wrS2", "C2wrS3", "C3wrS3", "C4wrS3"};
}

PermGroup preset_group(const std::string& name) {
    if (name == "S3") return PermGroup({perm_from_cycles(3, {{1, 2}}), perm_from_cycles(3, {{1, 2, 3}})}, 3);
    if (name == "S4") return PermGroup({perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})}, 4);
    if (name == "D8") return PermGroup({perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{1, 3}})}, 4);
    if (name == "Q8")
        return PermGroup({perm_from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), perm_from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})}, 8);
    if (name.size() == 6 && name[0] == 'C' && name.substr(2, 3) == "wrS") {
        int k = name[1] - '0', m = name[5] - '0';
        if (k >= 2 && k <= 9 && m >= 1 && m <= 4) return cyclic_wreath(k, m);
    }
    throw std::invalid_argument("unknown group preset: " + name);
}

namespace {

void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// hook length formula
std::vector<long long> symmetric_degrees(int n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n, n, cur, parts);
    std::vector<long long> degs;
    for (const auto& lam : parts) {
        long long hooks = 1;
        for (std::size_t i = 0; i < lam.size(); ++i)
            for (int j = 0; j < lam[i]; ++j) {
                int arm = lam[i] - j - 1, leg = 0;
                for (std::size_t t = i + 1; t < lam.size() && lam[t] > j; ++t) ++leg;
                hooks *= arm + leg + 1;
            }
        degs.push_back(factorial(n) / hooks);
    }
    return degs;
}

}  // namespace

std::vector<long long> wreath_predicted_degrees(int k, int m) {
    std::vector<long long> out;
    // multiplicity vectors (m_0..m_{k-1}) of the linear characters of C_k
    std::vector<int> mult(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
            mult[pos] = left;
            long long index = factorial(m);
            for (int x : mult) index /= factorial(x);
            std::vector<long long> degs{index};
            for (int x : mult) {
                std::vector<long long> nd;
                for (long long a : degs)
                    for (long long b : symmetric_degrees(x)) nd.push_back(a * b);
                degs = nd;
            }
            out.insert(out.end(), degs.begin(), degs.end());
            return;
        }
        for (int x = 0; x <= left; ++x) {
            mult[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dsplit
