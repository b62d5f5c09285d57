#pragma once

#include <string>
#include <vector>

#include "dsplit/sperm.hpp"

namespace dsplit {

enum class RootKind { A, B, C, D };

RootKind parse_root_kind(const std::string& s);
std::string to_string(RootKind k);

struct Root {
    std::vector<int> coeffs;
    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
    bool operator<(const Root& o) const { return coeffs < o.coeffs; }
    std::string str() const;  // "e1-e2", "2e3", "-e1"
    static Root parse(int n, const std::string& s);
};

int dot(const Root& a, const Root& b);
Root act(const SignedPerm& x, const Root& r);  // x.e_i = eps(i) e_bar(i)

// Type A with parameter n is A_{n-1} in the ambient rank n.
struct RootSystem {
    RootKind kind;
    int n;
    std::vector<Root> roots;
    std::vector<Root> simple;
    bool contains(const Root& r) const;
};

RootSystem build_root_system(RootKind kind, int n);

struct ParabolicLabel {
    int m = 0;
    SetPartition I;     // canonical: partition of all of {1..m}
    bool flip = false;  // type D: image under r_{e_n}
    bool operator==(const ParabolicLabel& o) const { return m == o.m && I == o.I && flip == o.flip; }
};

ParabolicLabel normalize_label(int n, ParabolicLabel label);
std::vector<Root> parabolic_roots(const RootSystem& sys, const ParabolicLabel& label);
// Phi_S plus the A-parts of a partition of the complement; covers every
// parabolic label shape where S need not be a terminal segment.
std::vector<Root> split_roots(const RootSystem& sys, const IndexSet& S, const SetPartition& I);

std::vector<Root> sorted_roots(std::vector<Root> r);
bool is_stable_under(const std::vector<Root>& roots, const SignedPerm& x);
// Block-wise criterion: S and I bar(x)-stable, sign constant on each block.
bool block_stable(const IndexSet& S, const SetPartition& I, const SignedPerm& x);

SignedPerm reflection(int n, const Root& r);
std::vector<SignedPerm> weyl_group(const RootSystem& sys);

class NotParabolic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ParabolicLabel classify_parabolic(const RootSystem& sys, const std::vector<Root>& roots);

std::vector<SetPartition> set_partitions(const IndexSet& pts);

}  // namespace dsplit
