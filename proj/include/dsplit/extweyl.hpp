#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dsplit/levi.hpp"
#include "dsplit/rootsys.hpp"
#include "dsplit/sperm.hpp"

namespace dsplit {

using IntMatrix = Eigen::MatrixXi;

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Eigen::Index k = 0; k < m.size(); ++k)
            h = (h ^ static_cast<std::size_t>(m.data()[k] + 3)) * 1099511628211ull;
        return h;
    }
};

enum class ChevKind { x, n, h };

IntMatrix symplectic_form(int n);
bool is_symplectic(const IntMatrix& m);
bool is_signed_monomial(const IntMatrix& m);
IntMatrix symplectic_inverse(const IntMatrix& m);
// g^-1 x g
IntMatrix conj(const IntMatrix& x, const IntMatrix& g);

IntMatrix chevalley_generator(ChevKind kind, int n, const Root& root, int t);
inline IntMatrix x_root(int n, const Root& r, int t) { return chevalley_generator(ChevKind::x, n, r, t); }
inline IntMatrix n_root(int n, const Root& r, int t = 1) { return chevalley_generator(ChevKind::n, n, r, t); }
inline IntMatrix h_root(int n, const Root& r, int t = -1) { return chevalley_generator(ChevKind::h, n, r, t); }

SignedPerm rho(const IntMatrix& m);
// The signed monomial matrix as a permutation of the 4n points +-basis.
std::vector<int> monomial_points(const IntMatrix& m);

// prod_{j in J} h_{2e_j}(-1)
IntMatrix h_block(int n, const IndexSet& J);

struct TwistElements {
    int n = 0, d = 0, d0 = 0, l = 0, a = 0;
    IntMatrix v0, v, v_prime;
    std::vector<IntMatrix> h;  // h_1..h_a
    std::vector<IntMatrix> c;  // c_1..c_a
    std::vector<IntMatrix> p;  // p_1..p_{a-1}
    std::map<std::pair<int, int>, IntMatrix> p_pair;
    std::vector<IntMatrix> vd_generators() const;
};

TwistElements build_twist_elements(int n, int d);

struct VdI {
    std::vector<IntMatrix> generators;
    std::vector<IntMatrix> HdI;  // h_{Q_i^s}
};

VdI build_VdI(const LeviLabel& label);
VdI build_VdI(const LeviLabel& label, const TwistElements& tw);

std::vector<IntMatrix> matrix_closure(const std::vector<IntMatrix>& gens, int n, std::size_t cap = kDefaultClosureCap);

}  // namespace dsplit
