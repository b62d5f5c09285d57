#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsplit/cyclo.hpp"
#include "dsplit/sperm.hpp"

namespace dsplit {

using Perm = std::vector<int>;  // images of the points 0..N-1

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
Perm perm_identity(int degree);
// +i -> i-1, -i -> n+i-1
Perm perm_from_signed(const SignedPerm& s);
// 1-based cycle list, e.g. {{1,2,3},{4,5}}
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

constexpr std::size_t kChartabCap = 10000;

// Finite permutation group with elements sorted lexicographically and
// conjugacy classes represented by their least element.
class PermGroup {
public:
    PermGroup(const std::vector<Perm>& gens, int degree, std::size_t cap = kChartabCap);
    static PermGroup from_elements(const std::vector<Perm>& elems, int degree, std::size_t cap = kChartabCap);

    int degree() const { return degree_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const Perm& element(int i) const { return elems_[i]; }
    int index_of(const Perm& p) const;  // -1 if absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const { return order_[a]; }
    long long exponent() const;

    int num_classes() const { return static_cast<int>(class_rep_.size()); }
    int class_of(int elem) const { return class_of_[elem]; }
    int class_of(const Perm& p) const;
    int class_rep(int k) const { return class_rep_[k]; }
    long long class_size(int k) const { return class_size_[k]; }
    long long centralizer_order(int k) const { return static_cast<long long>(order()) / class_size_[k]; }
    int power_class(int k, long long t) const;
    int inverse_class(int k) const { return class_of_[inv_[class_rep_[k]]]; }
    bool is_abelian() const;
    bool is_normal_in(const PermGroup& H) const;

private:
    int degree_;
    std::vector<Perm> gens_, elems_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<int> inv_, order_, class_of_, class_rep_;
    std::vector<long long> class_size_;
    void build(std::size_t cap);
};

using ClassFunction = std::vector<CycNum>;

struct CharacterTable {
    long long exponent = 1;
    long long dixon_prime = 0;
    std::vector<long long> degrees;
    std::vector<ClassFunction> chars;  // chars[i][k] = chi_i on class k
    int size() const { return static_cast<int>(chars.size()); }
};

CharacterTable character_table(const PermGroup& G);
// Memoized on the element set; safe to call from several threads.
std::shared_ptr<const CharacterTable> cached_character_table(const PermGroup& G);
// Exact row and column orthogonality plus sum of squared degrees.
bool verify_orthogonality(const PermGroup& G, const CharacterTable& T);

// H-class k -> G-class containing it; throws if H is not inside G.
std::vector<int> fusion(const PermGroup& H, const PermGroup& G);
ClassFunction restrict_to(const ClassFunction& chi, const PermGroup& G, const PermGroup& H);
ClassFunction induce(const ClassFunction& theta, const PermGroup& H, const PermGroup& G);
CycNum inner_value(const ClassFunction& a, const ClassFunction& b, const PermGroup& G);
long long inner(const ClassFunction& a, const ClassFunction& b, const PermGroup& G);
ClassFunction trivial_character(const PermGroup& G);
// Multiplicities of the irreducibles of G in chi.
std::vector<long long> decompose(const ClassFunction& chi, const PermGroup& G, const CharacterTable& T);

// Class permutation of N induced by x -> g x g^-1 for g normalizing N.
std::vector<int> conjugation_on_classes(const PermGroup& N, const Perm& g);
// theta^g with theta^g(x) = theta(g x g^-1)
ClassFunction act_on_character(const ClassFunction& theta, const std::vector<int>& class_perm);
bool same_function(const ClassFunction& a, const ClassFunction& b);

struct InertiaResult {
    PermGroup inertia;
    bool extends = false;
    int witness = -1;  // index in the table of the inertia group
};
InertiaResult inertia_and_extendibility(const PermGroup& N, const PermGroup& H, const ClassFunction& theta);

// Presets: S3, S4, D8, Q8, C2wrS2, C3wrS2, C4wrS2, C2wrS3, C3wrS3, C4wrS3.
PermGroup preset_group(const std::string& name);
std::vector<std::string> preset_names();
// C_k wr S_m on k*m points.
PermGroup cyclic_wreath(int k, int m);
// Y wr S_m where Y acts on k points; gens of the base copy first.
std::vector<Perm> wreath_generators(const std::vector<Perm>& Y, int k, int m);
// Character degrees of C_k wr S_m predicted from the little-group method.
std::vector<long long> wreath_predicted_degrees(int k, int m);

}  // namespace dsplit
