#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsplit/chartab.hpp"
#include "dsplit/levi.hpp"
#include "dsplit/sperm.hpp"

namespace dsplit {

enum class CentralOrder { one, two, other };
std::string to_string(CentralOrder c);

struct CharClassDescriptor {
    std::string id;
    int s = 1;
    int c = 1;  // order of the stabilizer in C_{2 d0}
    CentralOrder central = CentralOrder::one;
};

// 2-part of m
int two_part(int m);
bool descriptor_valid(const CharClassDescriptor& z, int d0);
bool in_R1(const CharClassDescriptor& z, int d0);
int stab_tilde_order(const CharClassDescriptor& z, int d0);

struct CharLabel {
    LeviLabel levi;
    std::map<int, std::vector<CharClassDescriptor>> assignment;  // per s, one per orbit
    bool ltilde_full = true;
    std::string str() const;
};

// Throws std::invalid_argument when the label is not normalized.
void validate(const CharLabel& L);

struct JBlock {
    int s = 0;
    std::vector<int> J;  // orbit indices, 0-based
    CharClassDescriptor desc;
};
// J_{lambda,s}(zeta) for every s and zeta, ordered by s then least index.
std::vector<JBlock> j_blocks(const CharLabel& L);

struct SubgroupPresentation {
    std::vector<SignedPerm> gens;
    std::string type;
    long long order = 1;  // predicted
};

SubgroupPresentation stab_lambda(const CharLabel& L);

struct NuLambda {
    std::vector<int> signs;  // on the stab_lambda generators
    bool trivial = true;
    SubgroupPresentation kernel;
};
NuLambda nu_lambda(const CharLabel& L);
// Closure check that (g, sign) pairs define a homomorphism; order of the
// closure must equal the group order.
bool sign_character_well_defined(const std::vector<SignedPerm>& gens, const std::vector<int>& signs, int n);

SubgroupPresentation k_lambda(const CharLabel& L);

struct KinvaReport {
    std::string label;
    std::size_t W_lambda_order = 0;
    int ker_index = 1;
    int xi0_count = 0;
    bool pass = false;
    bool all_constituents_invariant = false;
    std::vector<std::pair<int, int>> witnesses;  // (xi0, xi)
};
KinvaReport kinva_check(const CharLabel& L, std::size_t cap = kChartabCap);

bool cuspidal_gate(const CharLabel& L);

// All descriptor assignments of a Levi label: per s a set partition of the
// orbits into J-blocks, each block with valid (c, central) data, and both
// values of ltilde_full.
std::vector<CharLabel> enumerate_char_labels(const LeviLabel& levi);

}  // namespace dsplit
