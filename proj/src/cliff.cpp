#include "dsplit/cliff.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dsplit/rootsys.hpp"

namespace dsplit {

std::string to_string(CentralOrder c) {
    switch (c) {
        case CentralOrder::one: return "1";
        case CentralOrder::two: return "2";
        default: return "other";
    }
}

int two_part(int m) {
    int r = 1;
    while (m % 2 == 0) {
        m /= 2;
        r *= 2;
    }
    return r;
}

bool descriptor_valid(const CharClassDescriptor& z, int d0) {
    if (z.c < 1 || (2 * d0) % z.c) return false;
    if (z.c % 2 == 0 && z.central == CentralOrder::other) return false;
    return true;
}

bool in_R1(const CharClassDescriptor& z, int d0) {
    return z.central == CentralOrder::two && z.c % two_part(2 * d0) == 0;
}

int stab_tilde_order(const CharClassDescriptor& z, int d0) { return in_R1(z, d0) ? z.c / 2 : z.c; }

std::string CharLabel::str() const {
    std::ostringstream os;
    os << levi.str() << " |";
    for (const auto& [s, ds] : assignment) {
        os << " s" << s << ":";
        for (std::size_t i = 0; i < ds.size(); ++i)
            os << (i ? "," : "") << ds[i].id << "(c=" << ds[i].c << ",z=" << to_string(ds[i].central) << ")";
    }
    os << " full=" << (ltilde_full ? "T" : "F");
    return os.str();
}

void validate(const CharLabel& L) {
    if (L.assignment.size() != L.levi.orbits.size()) throw std::invalid_argument("un-normalized label: orbit sizes differ");
    std::map<std::string, CharClassDescriptor> seen;
    for (const auto& [s, orbs] : L.levi.orbits) {
        auto it = L.assignment.find(s);
        if (it == L.assignment.end() || it->second.size() != orbs.size())
            throw std::invalid_argument("un-normalized label: missing descriptors");
        for (const auto& z : it->second) {
            if (z.s != s) throw std::invalid_argument("un-normalized label: descriptor size mismatch");
            if (!descriptor_valid(z, L.levi.d0)) throw std::invalid_argument("un-normalized label: invalid descriptor " + z.id);
            auto [pos, fresh] = seen.emplace(z.id, z);
            if (!fresh && (pos->second.s != z.s || pos->second.c != z.c || pos->second.central != z.central))
                throw std::invalid_argument("un-normalized label: inconsistent descriptor " + z.id);
        }
    }
}

std::vector<JBlock> j_blocks(const CharLabel& L) {
    std::vector<JBlock> out;
    for (const auto& [s, ds] : L.assignment) {
        std::map<std::string, std::size_t> where;
        for (int i = 0; i < static_cast<int>(ds.size()); ++i) {
            auto it = where.find(ds[i].id);
            if (it == where.end()) {
                where[ds[i].id] = out.size();
                out.push_back({s, {i}, ds[i]});
            } else {
                out[it->second].J.push_back(i);
            }
        }
    }
    return out;
}

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

SignedPerm orbit_w(const CharLabel& L, int s, int i) { return wprime_multi(L.levi.n, L.levi.orbits.at(s)[i].Q); }

SignedPerm block_swap(const CharLabel& L, int s, const std::vector<int>& J1, const std::vector<int>& J2) {
    const auto& orbs = L.levi.orbits.at(s);
    SignedPerm r(L.levi.n);
    for (std::size_t k = 0; k < J1.size(); ++k) r = r * tau_multi(L.levi.n, orbs[J1[k]].Q, orbs[J2[k]].Q);
    return r;
}

struct SignedGens {
    SubgroupPresentation pres;
    std::vector<int> nu_prime;
};

SignedGens stab_with_signs(const CharLabel& L) {
    validate(L);
    SignedGens out;
    const int d0 = L.levi.d0;
    std::vector<std::string> types;
    for (const auto& b : j_blocks(L)) {
        const int m = static_cast<int>(b.J.size());
        for (int i : b.J) {
            SignedPerm g = orbit_w(L, b.s, i).pow(2 * d0 / b.desc.c);
            if (g.is_identity()) continue;
            out.pres.gens.push_back(g);
            out.nu_prime.push_back(in_R1(b.desc, d0) ? -1 : 1);
        }
        for (int k = 0; k + 1 < m; ++k) {
            const auto& orbs = L.levi.orbits.at(b.s);
            out.pres.gens.push_back(tau_multi(L.levi.n, orbs[b.J[k]].Q, orbs[b.J[k + 1]].Q));
            out.nu_prime.push_back(1);
        }
        for (int k = 0; k < m; ++k) out.pres.order *= b.desc.c;
        out.pres.order *= factorial(m);
        types.push_back("C" + std::to_string(b.desc.c) + "wrS" + std::to_string(m));
    }
    for (std::size_t i = 0; i < types.size(); ++i) out.pres.type += (i ? " x " : "") + types[i];
    if (types.empty()) out.pres.type = "1";
    return out;
}

}  // namespace

SubgroupPresentation stab_lambda(const CharLabel& L) { return stab_with_signs(L).pres; }

bool sign_character_well_defined(const std::vector<SignedPerm>& gens, const std::vector<int>& signs, int n) {
    if (gens.size() != signs.size()) throw std::invalid_argument("one sign per generator required");
    std::unordered_map<SignedPerm, int> seen{{SignedPerm(n), 1}};
    std::vector<SignedPerm> queue{SignedPerm(n)};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int sk = seen.at(queue[k]);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            SignedPerm y = queue[k] * gens[g];
            int sy = sk * signs[g];
            auto it = seen.find(y);
            if (it == seen.end()) {
                if (queue.size() >= kDefaultClosureCap) throw ClosureExceedsCap(kDefaultClosureCap);
                seen.emplace(y, sy);
                queue.push_back(y);
            } else if (it->second != sy) {
                return false;
            }
        }
    }
    return true;
}

NuLambda nu_lambda(const CharLabel& L) {
    SignedGens sg = stab_with_signs(L);
    const int n = L.levi.n;
    const int d0 = L.levi.d0;
    for (const auto& b : j_blocks(L)) {
        int ratio = b.desc.c / stab_tilde_order(b.desc, d0);
        if (ratio != 1 && ratio != 2) throw std::logic_error("stabilizer index must be 1 or 2");
    }
    NuLambda out;
    out.signs.assign(sg.pres.gens.size(), 1);
    bool nontrivial = false;
    for (int s : sg.nu_prime) nontrivial = nontrivial || s < 0;
    if (L.ltilde_full && nontrivial) {
        if (!sign_character_well_defined(sg.pres.gens, sg.nu_prime, n))
            throw std::logic_error("nu' does not lift to a well-defined character");
        out.signs = sg.nu_prime;
        out.trivial = false;
    }
    out.kernel.type = out.trivial ? sg.pres.type : "ker(nu) in " + sg.pres.type;
    out.kernel.order = out.trivial ? sg.pres.order : sg.pres.order / 2;
    if (out.trivial) {
        out.kernel.gens = sg.pres.gens;
        return out;
    }
    // Schreier generators for the transversal {1, t}
    std::size_t ti = 0;
    while (out.signs[ti] > 0) ++ti;
    const SignedPerm t = sg.pres.gens[ti], tinv = t.inverse();
    std::set<SignedPerm> ks;
    for (std::size_t g = 0; g < sg.pres.gens.size(); ++g) {
        const SignedPerm& x = sg.pres.gens[g];
        if (out.signs[g] > 0) {
            ks.insert(x);
            ks.insert(t * x * tinv);
        } else {
            ks.insert(x * tinv);
            ks.insert(t * x);
        }
    }
    for (const auto& x : ks)
        if (!x.is_identity()) out.kernel.gens.push_back(x);
    return out;
}

SubgroupPresentation k_lambda(const CharLabel& L) {
    SignedGens sg = stab_with_signs(L);
    NuLambda nu = nu_lambda(L);
    const int d0 = L.levi.d0;
    SubgroupPresentation K;
    auto blocks = j_blocks(L);
    for (const auto& b : blocks) {
        SignedPerm z(L.levi.n);
        for (int i : b.J) z = z * orbit_w(L, b.s, i);
        if (!z.is_identity()) K.gens.push_back(z);
    }
    K.gens.insert(K.gens.end(), sg.pres.gens.begin(), sg.pres.gens.end());
    std::map<std::tuple<int, std::size_t, int, int>, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& b = blocks[k];
        int family = nu.trivial ? 0 : (in_R1(b.desc, d0) ? 1 : 2);
        classes[{b.s, b.J.size(), b.desc.c, family}].push_back(k);
    }
    for (const auto& [key, ks] : classes)
        for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
            const auto& b1 = blocks[ks[i]];
            const auto& b2 = blocks[ks[i + 1]];
            K.gens.push_back(block_swap(L, b1.s, b1.J, b2.J));
        }
    K.order = static_cast<long long>(group_closure(K.gens, L.levi.n).size());
    K.type = "K(lambda)";
    return K;
}

namespace {

std::vector<Perm> to_perms(const std::vector<SignedPerm>& gens) {
    std::vector<Perm> r;
    for (const auto& g : gens) r.push_back(perm_from_signed(g));
    return r;
}

}  // namespace

KinvaReport kinva_check(const CharLabel& L, std::size_t cap) {
    KinvaReport rep;
    rep.label = L.str();
    const int deg = 2 * L.levi.n;
    SubgroupPresentation Wp = stab_lambda(L);
    NuLambda nu = nu_lambda(L);
    SubgroupPresentation Kp = k_lambda(L);
    PermGroup W(to_perms(Wp.gens), deg, cap);
    PermGroup Wt(to_perms(nu.kernel.gens), deg, cap);
    PermGroup K(to_perms(Kp.gens), deg, cap);
    if (static_cast<long long>(W.order()) != Wp.order) throw std::logic_error("W_lambda order differs from the formula");
    if (!Wt.is_normal_in(W)) throw std::logic_error("ker(nu) is not normal in W_lambda");
    for (const auto& k : K.generators())
        for (const auto* H : {&W, &Wt})
            for (const auto& g : H->generators())
                if (!H->contains(perm_mul(perm_mul(perm_inverse(k), g), k)))
                    throw std::logic_error("K(lambda) does not normalize W_lambda and ker(nu)");
    rep.W_lambda_order = W.order();
    rep.ker_index = static_cast<int>(W.order() / Wt.order());
    auto TW = cached_character_table(W);
    auto TWt = cached_character_table(Wt);
    rep.xi0_count = TWt->size();

    std::vector<std::vector<int>> on_Wt, on_W;
    for (const auto& k : K.elements()) {
        on_Wt.push_back(conjugation_on_classes(Wt, k));
        on_W.push_back(conjugation_on_classes(W, k));
    }
    rep.pass = true;
    rep.all_constituents_invariant = true;
    for (int x0 = 0; x0 < TWt->size(); ++x0) {
        const ClassFunction& xi0 = TWt->chars[x0];
        std::vector<std::size_t> stab;
        for (std::size_t k = 0; k < on_Wt.size(); ++k)
            if (same_function(act_on_character(xi0, on_Wt[k]), xi0)) stab.push_back(k);
        auto mult = decompose(induce(xi0, Wt, W), W, *TW);
        int witness = -1;
        for (int j = 0; j < TW->size(); ++j) {
            if (!mult[j]) continue;
            bool inv = true;
            for (std::size_t k : stab) inv = inv && same_function(act_on_character(TW->chars[j], on_W[k]), TW->chars[j]);
            if (inv && witness < 0) witness = j;
            rep.all_constituents_invariant = rep.all_constituents_invariant && inv;
        }
        if (witness < 0) rep.pass = false;
        rep.witnesses.push_back({x0, witness});
    }
    return rep;
}

bool cuspidal_gate(const CharLabel& L) {
    validate(L);
    const int d0 = L.levi.d0;
    std::set<std::string> r1_ids;
    for (const auto& [s, ds] : L.assignment)
        for (const auto& z : ds) {
            if (!in_R1(z, d0)) continue;
            if (s >= 2) return false;
            r1_ids.insert(z.id);
        }
    return r1_ids.size() <= 1;
}

std::vector<CharLabel> enumerate_char_labels(const LeviLabel& levi) {
    const int d0 = levi.d0;
    std::vector<std::pair<int, CentralOrder>> options;
    for (int c = 1; c <= 2 * d0; ++c) {
        if ((2 * d0) % c) continue;
        for (CentralOrder z : {CentralOrder::one, CentralOrder::two, CentralOrder::other})
            if (descriptor_valid({"", 1, c, z}, d0)) options.push_back({c, z});
    }
    // per s: list of descriptor vectors
    std::vector<std::pair<int, std::vector<std::vector<CharClassDescriptor>>>> per_s;
    for (const auto& [s, orbs] : levi.orbits) {
        const int t = static_cast<int>(orbs.size());
        IndexSet pts;
        for (int i = 1; i <= t; ++i) pts.push_back(i);
        std::vector<std::vector<CharClassDescriptor>> choices;
        for (const auto& P : set_partitions(pts)) {
            const int nb = static_cast<int>(P.size());
            std::vector<std::size_t> idx(nb, 0);
            while (true) {
                std::vector<CharClassDescriptor> ds(t);
                for (int b = 0; b < nb; ++b)
                    for (int i : P[b])
                        ds[i - 1] = {"s" + std::to_string(s) + "z" + std::to_string(b + 1), s, options[idx[b]].first, options[idx[b]].second};
                choices.push_back(ds);
                int b = 0;
                while (b < nb && ++idx[b] == options.size()) idx[b++] = 0;
                if (b == nb) break;
            }
        }
        per_s.push_back({s, choices});
    }
    std::vector<CharLabel> out;
    std::vector<std::size_t> idx(per_s.size(), 0);
    while (true) {
        for (bool full : {true, false}) {
            CharLabel L{levi, {}, full};
            for (std::size_t k = 0; k < per_s.size(); ++k) L.assignment[per_s[k].first] = per_s[k].second[idx[k]];
            out.push_back(L);
        }
        std::size_t k = 0;
        while (k < per_s.size() && ++idx[k] == per_s[k].second.size()) idx[k++] = 0;
        if (k == per_s.size()) break;
    }
    return out;
}

}  // namespace dsplit
