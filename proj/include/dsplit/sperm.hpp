#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dsplit {

// Sorted, duplicate-free set of positive points.
using IndexSet = std::vector<int>;
// Blocks kept sorted by their minimal element.
using SetPartition = std::vector<IndexSet>;

IndexSet make_index_set(std::vector<int> pts);
SetPartition make_partition(std::vector<IndexSet> blocks);
IndexSet underline(const SetPartition& p);

class ClosureExceedsCap : public std::runtime_error {
public:
    explicit ClosureExceedsCap(std::size_t cap)
        : std::runtime_error("group closure exceeds cap " + std::to_string(cap)) {}
};

// Element of the signed permutation group on {±1..±n}; only images of
// positive points are stored.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(int n);
    SignedPerm(int n, std::vector<int> image);

    static SignedPerm identity(int n) { return SignedPerm(n); }
    // Cycle notation, e.g. "(1,2,-1,-2)(3,-3)"; "()" is the identity.
    static SignedPerm parse(int n, const std::string& text);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return i > 0 ? img_[i - 1] : -img_[-i - 1]; }
    const std::vector<int>& image() const { return img_; }

    int bar(int i) const { return std::abs((*this)(i)); }
    int sign(int i) const { return (*this)(i) > 0 ? 1 : -1; }

    SignedPerm operator*(const SignedPerm& b) const;  // (a*b)(x) = a(b(x))
    SignedPerm inverse() const;
    SignedPerm pow(long long k) const;
    // x^g = g^-1 x g
    SignedPerm conj(const SignedPerm& g) const { return g.inverse() * (*this) * g; }
    bool is_identity() const;
    int order() const;
    // Restrict the bar projection to a permutation of {1..n}.
    std::vector<int> bar_perm() const;
    SignedPerm extend(int n) const;

    std::string str() const;

    bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
    bool operator!=(const SignedPerm& o) const { return img_ != o.img_; }
    bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

struct SignedCycle {
    std::vector<int> points;  // starting at the representative point
    bool self_paired = false;  // alpha = alpha' in the dichotomy
};

struct CycleData {
    std::vector<int> bar;   // bar[i-1] = |s(i)|
    std::vector<int> sign;  // sign[i-1] = sgn s(i)
    std::vector<SignedCycle> cycles;  // one entry per self-paired cycle or per paired pair
};

CycleData cycle_data(const SignedPerm& s);

SignedPerm wprime(int n, const IndexSet& J);
SignedPerm tau(int n, const IndexSet& J, const IndexSet& J2);
SignedPerm iota(int n, const IndexSet& J);
IndexSet grid_set(int k, int m, int i);
SignedPerm grid(int n, int k, int m, int i);

struct CentralizerType {
    std::map<int, int> m1;  // self-paired cycles of length 2i
    std::map<int, int> m2;  // paired pairs of length i
    mpz_class order() const;
};

CentralizerType centralizer_type(const SignedPerm& s);

constexpr std::size_t kDefaultClosureCap = 20000;

std::vector<SignedPerm> group_closure(const std::vector<SignedPerm>& gens, int n,
                                      std::size_t cap = kDefaultClosureCap);
std::vector<SignedPerm> hyperoctahedral(int n);
std::vector<SignedPerm> brute_normalizer(const std::vector<SignedPerm>& H,
                                         const std::vector<SignedPerm>& G);
std::vector<SignedPerm> brute_centralizer(const SignedPerm& x, const std::vector<SignedPerm>& G);

// Structural normalizer of H_I = prod A_J wr S(J) (A_J in {1, C2}).
struct NormalizerPrediction {
    std::vector<SignedPerm> H_gens, Z_gens, S_gens;
};
NormalizerPrediction predicted_normalizer(int n, const SetPartition& I, const std::vector<bool>& A_is_C2);

}  // namespace dsplit

template <>
struct std::hash<dsplit::SignedPerm> {
    std::size_t operator()(const dsplit::SignedPerm& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : s.image()) h = (h ^ static_cast<std::size_t>(v + 64)) * 1099511628211ull;
        return h;
    }
};
