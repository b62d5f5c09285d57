#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dsplit/rootsys.hpp"
#include "dsplit/sperm.hpp"

namespace dsplit {

enum class TwistKind { A, A2, BCD };

int compute_d0(TwistKind kind, int d);
inline int d0_of(int d) { return compute_d0(TwistKind::BCD, d); }

SignedPerm sylow_twist_w(int n, int d);
// w'_{J_1^{d0,a}} ... w'_{J_a^{d0,a}}, the element v' maps to.
SignedPerm sylow_wprime(int n, int d);

// One orbit of the twist on the blocks of I.
struct LeviOrbit {
    int s = 0;
    std::vector<IndexSet> blocks;  // the blocks forming the orbit
    IndexSet J;                    // underline(O) intersected with {1..a}
    std::vector<IndexSet> Q;       // grid sets J_k^{d0,a}, k in J, in increasing order
    IndexSet support() const { return underline(blocks); }
};

struct LeviLabel {
    int n = 0, d = 0;
    IndexSet I_minus1;
    SetPartition I;
    // derived
    int d0 = 0, l = 0, a = 0;
    std::map<int, std::vector<LeviOrbit>> orbits;  // by s, ordered by min of J

    int t(int s) const;
    std::string str() const;
    bool operator==(const LeviLabel& o) const { return n == o.n && d == o.d && I_minus1 == o.I_minus1 && I == o.I; }
};

// Validates the (I_-1, I) pair against the twist and fills the orbit data.
LeviLabel make_levi_label(int n, int d, IndexSet I_minus1, SetPartition I);
bool is_levi_pair(int n, int d, const IndexSet& S, const SetPartition& I);
std::vector<LeviLabel> enumerate_labels(int n, int d);
// Representatives of the labels up to conjugacy in the signed permutation group.
std::vector<LeviLabel> dedup_by_conjugacy(const std::vector<LeviLabel>& labels);

mpz_class order_sp(int m, const mpz_class& q);
mpz_class order_gl(int s, const mpz_class& Q, int eps);
bool is_odd_prime_power(long long q);

struct LeviStructure {
    int sp_rank = 0;
    std::vector<std::pair<int, int>> gl_parts;  // (s, t_s)
    int epsilon = 1;
    int d0 = 1;
    mpz_class order;
};

LeviStructure levi_structure(const LeviLabel& label, long long q);

struct RelativeWeylDescriptor {
    std::vector<std::pair<int, int>> factors;  // (2 d0, t_s)
    std::vector<SignedPerm> gens;
    mpz_class order() const;
};

SignedPerm wprime_multi(int n, const std::vector<IndexSet>& Q);
SignedPerm tau_multi(int n, const std::vector<IndexSet>& Q, const std::vector<IndexSet>& Q2);
// Transport of x in the signed permutations of {1..d0*t_s} to the size-s part.
SignedPerm kappa_embed(const LeviLabel& label, int s, const SignedPerm& x);
RelativeWeylDescriptor relative_weyl(const LeviLabel& label);

struct RelWeylCheck {
    bool ok = false;
    std::size_t fixed_order = 0;
    mpz_class expected;
    std::size_t closure_order = 0;
    std::string reason;
};
RelWeylCheck verify_relative_weyl(const LeviLabel& label);

}  // namespace dsplit
