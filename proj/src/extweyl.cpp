#include "dsplit/extweyl.hpp"

#include "dsplit/closure.hpp"

namespace dsplit {

IntMatrix symplectic_form(int n) {
    IntMatrix J = IntMatrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        J(i, n + i) = 1;
        J(n + i, i) = -1;
    }
    return J;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2) return false;
    IntMatrix J = symplectic_form(static_cast<int>(m.rows() / 2));
    return m.transpose() * J * m == J;
}

bool is_signed_monomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        int nz = 0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            int v = m(r, c);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++nz;
        }
        if (nz != 1) return false;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int nz = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) nz += m(r, c) != 0;
        if (nz != 1) return false;
    }
    return true;
}

IntMatrix symplectic_inverse(const IntMatrix& m) {
    IntMatrix J = symplectic_form(static_cast<int>(m.rows() / 2));
    return -(J * m.transpose() * J);
}

IntMatrix conj(const IntMatrix& x, const IntMatrix& g) { return symplectic_inverse(g) * x * g; }

IntMatrix chevalley_generator(ChevKind kind, int n, const Root& r, int t) {
    if (t != 1 && t != -1) throw std::invalid_argument("integer realization needs t = +-1");
    {
        int ones = 0, twos = 0, other = 0;
        if (static_cast<int>(r.coeffs.size()) != n) ++other;
        for (int c : r.coeffs) {
            if (c == 1 || c == -1) ++ones;
            else if (c == 2 || c == -2) ++twos;
            else if (c) ++other;
        }
        if (other || !((ones == 2 && twos == 0) || (ones == 0 && twos == 1)))
            throw std::invalid_argument("root not in C_n: " + r.str());
    }
    if (kind == ChevKind::n) {
        Root neg{r.coeffs};
        for (int& c : neg.coeffs) c = -c;
        IntMatrix xa = x_root(n, r, t);
        return xa * x_root(n, neg, -t) * xa;
    }
    if (kind == ChevKind::h) return symplectic_inverse(n_root(n, r, 1)) * n_root(n, r, t);
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (r.coeffs[i]) nz.push_back(i);
    IntMatrix E = IntMatrix::Zero(2 * n, 2 * n);
    bool positive;
    if (nz.size() == 1) {
        int i = nz[0];
        positive = r.coeffs[i] > 0;
        E(i, n + i) = 1;
    } else {
        int i = nz[0], j = nz[1];
        int ci = r.coeffs[i], cj = r.coeffs[j];
        if (ci * cj < 0) {
            // e_i - e_j with i the positive coordinate; negative roots are
            // again of this shape with the roles swapped
            if (ci < 0) std::swap(i, j);
            positive = true;
            E(i, j) = 1;
            E(n + j, n + i) = -1;
        } else {
            positive = ci > 0;
            E(i, n + j) = 1;
            E(j, n + i) = 1;
        }
    }
    if (!positive) E.transposeInPlace();
    return IntMatrix::Identity(2 * n, 2 * n) + t * E;
}

SignedPerm rho(const IntMatrix& m) {
    if (!is_signed_monomial(m)) throw std::invalid_argument("rho: matrix is not signed monomial");
    const int n = static_cast<int>(m.rows() / 2);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < 2 * n; ++r)
            if (m(r, k)) img[k] = r < n ? r + 1 : -(r - n + 1);
    return SignedPerm(n, img);
}

std::vector<int> monomial_points(const IntMatrix& m) {
    if (!is_signed_monomial(m)) throw std::invalid_argument("not a signed monomial matrix");
    const int N = static_cast<int>(m.rows());
    // point 2k is +b_k, 2k+1 is -b_k
    std::vector<int> img(2 * N);
    for (int k = 0; k < N; ++k)
        for (int r = 0; r < N; ++r)
            if (m(r, k)) {
                img[2 * k] = 2 * r + (m(r, k) < 0);
                img[2 * k + 1] = 2 * r + (m(r, k) > 0);
            }
    return img;
}

static Root simple_a(int n, int i, int j) {
    Root r{std::vector<int>(n, 0)};
    r.coeffs[i - 1] = 1;
    r.coeffs[j - 1] = -1;
    return r;
}

static Root long_root(int n, int i) {
    Root r{std::vector<int>(n, 0)};
    r.coeffs[i - 1] = 2;
    return r;
}

IntMatrix h_block(int n, const IndexSet& J) {
    IntMatrix m = IntMatrix::Identity(2 * n, 2 * n);
    for (int j : J) m = m * h_root(n, long_root(n, j), -1);
    return m;
}

static IntMatrix mpow(const IntMatrix& x, int k) {
    IntMatrix r = IntMatrix::Identity(x.rows(), x.cols());
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

std::vector<IntMatrix> TwistElements::vd_generators() const {
    std::vector<IntMatrix> g = h;
    if (!c.empty()) g.push_back(c[0]);
    g.insert(g.end(), p.begin(), p.end());
    return g;
}

TwistElements build_twist_elements(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("build_twist_elements: n, d must be positive");
    TwistElements T;
    T.n = n;
    T.d = d;
    T.d0 = d0_of(d);
    T.l = (n / T.d0) * T.d0;
    T.a = T.l / T.d0;
    const IntMatrix I = IntMatrix::Identity(2 * n, 2 * n);
    T.v0 = T.v = T.v_prime = I;
    if (T.l == 0) return T;
    for (int i = 1; i < T.l; ++i) T.v0 = T.v0 * n_root(n, simple_a(n, i, i + 1), 1);
    T.v0 = T.v0 * n_root(n, long_root(n, T.l), -1);
    T.v = mpow(T.v0, 2 * T.l / d);

    for (int i = 1; i <= T.a; ++i) T.h.push_back(h_block(n, grid_set(T.d0, T.a, i)));

    // c_1: the v0-shaped word on J_1, corrected by a sign element on J_1 so
    // that it commutes with v
    IndexSet J1 = grid_set(T.d0, T.a, 1);
    IntMatrix c0 = I;
    for (int k = 0; k + 1 < T.d0; ++k) c0 = c0 * n_root(n, simple_a(n, J1[k], J1[k + 1]), 1);
    c0 = c0 * n_root(n, long_root(n, J1.back()), -1);
    bool found = false;
    for (unsigned mask = 0; mask < (1u << T.d0) && !found; ++mask) {
        IndexSet sub;
        for (int k = 0; k < T.d0; ++k)
            if (mask >> k & 1) sub.push_back(J1[k]);
        IntMatrix c1 = c0 * h_block(n, sub);
        if (c1 * T.v == T.v * c1) {
            T.c.push_back(c1);
            found = true;
        }
    }
    if (!found) throw std::logic_error("no element over w'_{J_1} centralizes v");

    std::vector<IntMatrix> vpow{I};
    for (int i = 1; i < T.d0; ++i) vpow.push_back(vpow.back() * T.v);
    for (int k = 1; k < T.a; ++k) {
        IntMatrix nk = n_root(n, simple_a(n, k, k + 1), 1);
        IntMatrix pk = I;
        for (int i = 0; i < T.d0; ++i) pk = pk * conj(nk, vpow[i]);
        T.p.push_back(pk);
    }
    for (int k = 2; k <= T.a; ++k) {
        IntMatrix g = I;
        for (int i = 1; i < k; ++i) g = g * T.p[i - 1];
        T.c.push_back(conj(T.c[0], g));
    }
    for (int k = 1; k <= T.a; ++k)
        for (int k2 = k + 1; k2 <= T.a; ++k2) {
            IntMatrix g = I;
            for (int i = k + 1; i < k2; ++i) g = g * T.p[i - 1];
            T.p_pair[{k, k2}] = conj(T.p[k - 1], g);
        }
    for (const auto& ci : T.c) T.v_prime = T.v_prime * ci;
    return T;
}

VdI build_VdI(const LeviLabel& L) { return build_VdI(L, build_twist_elements(L.n, L.d)); }

VdI build_VdI(const LeviLabel& L, const TwistElements& T) {
    VdI out;
    const int n = L.n;
    const IntMatrix I = IntMatrix::Identity(2 * n, 2 * n);
    for (const auto& [s, orbs] : L.orbits) {
        const int t = static_cast<int>(orbs.size());
        std::vector<IntMatrix> eta;
        for (int j = 0; j < s; ++j) {
            IntMatrix e = I;
            for (int i = 1; i <= t; ++i) {
                int k = orbs[i - 1].J[j];
                if (k != i) e = e * T.p_pair.at({i, k});
            }
            eta.push_back(e);
        }
        auto kappa = [&](const IntMatrix& x) {
            IntMatrix r = I;
            for (const auto& e : eta) r = r * e * x * symplectic_inverse(e);
            return r;
        };
        for (int i = 1; i <= t; ++i) out.generators.push_back(kappa(T.h[i - 1]));
        for (int i = 1; i <= t; ++i) out.generators.push_back(kappa(T.c[i - 1]));
        for (int k = 1; k < t; ++k) out.generators.push_back(kappa(T.p[k - 1]));
        for (int i = 0; i < t; ++i) {
            IntMatrix h = I;
            for (const auto& Q : orbs[i].Q) h = h * h_block(n, Q);
            out.HdI.push_back(h);
        }
    }
    return out;
}

std::vector<IntMatrix> matrix_closure(const std::vector<IntMatrix>& gens, int n, std::size_t cap) {
    return closure<IntMatrix, IntMatrixHash>(gens, IntMatrix::Identity(2 * n, 2 * n), cap);
}

}  // namespace dsplit
