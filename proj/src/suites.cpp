#include "dsplit/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "dsplit/chartab.hpp"
#include "dsplit/cliff.hpp"
#include "dsplit/closure.hpp"
#include "dsplit/cyclo.hpp"
#include "dsplit/extweyl.hpp"
#include "dsplit/levi.hpp"
#include "dsplit/rootsys.hpp"
#include "dsplit/sperm.hpp"
#include "dsplit/torus.hpp"

namespace dsplit {

int worker_count() {
    const char* v = std::getenv("DSPLIT_WORKERS");
    if (!v) return 1;
    int w = std::atoi(v);
    return std::clamp(w, 1, 64);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const int w = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= count || err) return;
                    i = next++;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

namespace {

json set_json(const IndexSet& s) { return json(s); }

json partition_json(const SetPartition& p) {
    json a = json::array();
    for (const auto& b : p) a.push_back(b);
    return a;
}

json finish(json r) {
    r["pass"] = r["failures"].empty();
    return r;
}

json new_report(const std::string& name) {
    json r;
    r["suite"] = name;
    r["checked"] = 0;
    r["failures"] = json::array();
    return r;
}

std::vector<SignedPerm> rho_all(const std::vector<IntMatrix>& ms) {
    std::vector<SignedPerm> r;
    for (const auto& m : ms) r.push_back(rho(m));
    return r;
}

std::string perm_str(const Perm& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            s += (first ? "" : ",") + std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

}  // namespace

json suite_centralizers(const std::vector<int>& ns) {
    json r = new_report("centralizers");
    long long checked = 0;
    for (int n : ns) {
        auto G = hyperoctahedral(n);
        for (const auto& s : G) {
            std::size_t brute = brute_centralizer(s, G).size();
            mpz_class formula = centralizer_type(s).order();
            ++checked;
            if (formula != static_cast<unsigned long>(brute))
                r["failures"].push_back({{"n", n}, {"sigma", s.str()}, {"brute", brute}, {"formula", formula.get_str()}});
        }
    }
    r["checked"] = checked;
    return finish(r);
}

json suite_normalizers(const std::vector<int>& ns) {
    json r = new_report("normalizers");
    long long checked = 0;
    for (int n : ns) {
        auto G = hyperoctahedral(n);
        IndexSet all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        for (const auto& I : set_partitions(all)) {
            for (unsigned mask = 0; mask < (1u << I.size()); ++mask) {
                std::vector<bool> A;
                for (std::size_t b = 0; b < I.size(); ++b) A.push_back(mask >> b & 1);
                auto pred = predicted_normalizer(n, I, A);
                auto H = group_closure(pred.H_gens, n);
                auto N = brute_normalizer(H, G);
                std::vector<SignedPerm> gens = pred.H_gens;
                gens.insert(gens.end(), pred.Z_gens.begin(), pred.Z_gens.end());
                gens.insert(gens.end(), pred.S_gens.begin(), pred.S_gens.end());
                auto P = group_closure(gens, n);
                ++checked;
                if (!same_set(N, P)) {
                    json a = json::array();
                    for (bool x : A) a.push_back(x ? "C2" : "1");
                    r["failures"].push_back({{"n", n}, {"I", partition_json(I)}, {"A", a}, {"brute", N.size()}, {"predicted", P.size()}});
                }
            }
        }
    }
    r["checked"] = checked;
    return finish(r);
}

json suite_eq1(const std::vector<int>& ns, const std::vector<int>& ds) {
    json r = new_report("eq1");
    struct Cell {
        int n, d;
        long long stable = 0, levi = 0, enumerated = 0;
        json failures = json::array();
    };
    std::vector<Cell> cells;
    for (int n : ns)
        for (int d : ds) cells.push_back({n, d});
    parallel_for(cells.size(), [&](std::size_t k) {
        Cell& c = cells[k];
        RootSystem sys = build_root_system(RootKind::C, c.n);
        SignedPerm w = sylow_twist_w(c.n, c.d);
        for (unsigned mask = 0; mask < (1u << c.n); ++mask) {
            IndexSet S, C;
            for (int i = 1; i <= c.n; ++i) (mask >> (i - 1) & 1 ? S : C).push_back(i);
            for (const auto& I : set_partitions(C)) {
                auto roots = split_roots(sys, S, I);
                if (!is_stable_under(roots, w)) continue;
                ++c.stable;
                bool comb = is_levi_pair(c.n, c.d, S, I);
                bool eq = check_eq1(w, c.d, roots, sys);
                c.levi += comb;
                if (comb != eq)
                    c.failures.push_back({{"n", c.n}, {"d", c.d}, {"I_minus1", set_json(S)}, {"I", partition_json(I)},
                                          {"combinatorial", comb}, {"eq1", eq}});
            }
        }
        c.enumerated = static_cast<long long>(enumerate_labels(c.n, c.d).size());
        if (c.enumerated != c.levi)
            c.failures.push_back({{"n", c.n}, {"d", c.d}, {"enumerated", c.enumerated}, {"criterion", c.levi}});
    });
    long long checked = 0;
    json grid = json::array();
    for (const auto& c : cells) {
        checked += c.stable;
        grid.push_back({{"n", c.n}, {"d", c.d}, {"stable_labels", c.stable}, {"levi_labels", c.levi}});
        for (const auto& f : c.failures) r["failures"].push_back(f);
    }
    r["checked"] = checked;
    r["grid"] = grid;
    return finish(r);
}

json suite_relweyl(const std::vector<int>& ns, const std::vector<int>& ds) {
    json r = new_report("relweyl");
    long long checked = 0;
    for (int n : ns)
        for (int d : ds)
            for (const auto& L : enumerate_labels(n, d)) {
                RelWeylCheck c = verify_relative_weyl(L);
                ++checked;
                if (!c.ok)
                    r["failures"].push_back({{"label", L.str()}, {"fixed_order", c.fixed_order}, {"expected", c.expected.get_str()},
                                             {"closure_order", c.closure_order}, {"reason", c.reason}});
            }
    r["checked"] = checked;
    return finish(r);
}

json suite_extweyl(const std::vector<int>& ns, const std::vector<int>& ds) {
    json r = new_report("extweyl");
    long long checked = 0;
    auto fail = [&](json f) { r["failures"].push_back(std::move(f)); };
    for (int n : ns) {
        const IntMatrix I = IntMatrix::Identity(2 * n, 2 * n);
        RootSystem sys = build_root_system(RootKind::C, n);
        std::vector<IntMatrix> hs;
        for (const auto& a : sys.roots) {
            IntMatrix na = n_root(n, a, 1), ha = h_root(n, a, -1);
            ++checked;
            if (!is_symplectic(na) || !is_signed_monomial(na)) fail({{"n", n}, {"root", a.str()}, {"relation", "n_alpha in V"}});
            if (na * na != ha) fail({{"n", n}, {"root", a.str()}, {"relation", "n_alpha^2 = h_alpha(-1)"}});
            if (ha * ha != I) fail({{"n", n}, {"root", a.str()}, {"relation", "h_alpha(-1)^2 = 1"}});
            hs.push_back(ha);
        }
        std::size_t HPhi = matrix_closure(hs, n).size();
        ++checked;
        if (HPhi != (std::size_t{1} << n)) fail({{"n", n}, {"relation", "|H_Phi| = 2^n"}, {"order", HPhi}});
        for (int d : ds) {
            TwistElements T = build_twist_elements(n, d);
            if (T.l == 0) continue;
            SignedPerm w = sylow_twist_w(n, d);
            json where = {{"n", n}, {"d", d}};
            auto failw = [&](const std::string& rel) {
                json f = where;
                f["relation"] = rel;
                fail(f);
            };
            ++checked;
            if (rho(T.v) != w) failw("rho(v) = w");
            for (std::size_t k = 0; k < T.p.size(); ++k)
                if (T.p[k] * T.p[k] != T.h[k] * T.h[k + 1]) failw("p_k^2 = h_k h_{k+1}, k=" + std::to_string(k + 1));
            for (int i = 0; i < T.a; ++i)
                if (rho(T.c[i]) != wprime(n, grid_set(T.d0, T.a, i + 1))) failw("rho(c_i) = w'_{J_i}, i=" + std::to_string(i + 1));
            auto gens = T.vd_generators();
            gens.push_back(T.v);
            for (const auto& g : gens) {
                if (!is_symplectic(g)) failw("generator symplectic");
                if (T.v_prime * g != g * T.v_prime) failw("v' central in V_d");
            }
            // rho(V_d) against the brute-force centralizer of w in the signed permutations of {1..l}
            auto img = group_closure(rho_all(T.vd_generators()), n);
            std::vector<SignedPerm> cent;
            for (const auto& x : hyperoctahedral(n)) {
                bool fixes = true;
                for (int i = T.l + 1; i <= n; ++i) fixes = fixes && x(i) == i;
                if (fixes && x * w == w * x) cent.push_back(x);
            }
            if (!same_set(img, cent)) failw("rho(V_d) = Cent(w)");
            for (const auto& L : enumerate_labels(n, d)) {
                VdI V = build_VdI(L, T);
                json wl = {{"label", L.str()}};
                ++checked;
                auto W = group_closure(relative_weyl(L).gens, n);
                auto rhoV = group_closure(rho_all(V.generators), n);
                if (!same_set(W, rhoV)) fail({{"label", L.str()}, {"relation", "rho(V_d^I) = W_d^I"}});
                auto Vel = matrix_closure(V.generators, n);
                auto Hel = matrix_closure(V.HdI, n);
                std::vector<IntMatrix> ker;
                for (const auto& x : Vel) {
                    if (!is_symplectic(x)) {
                        fail({{"label", L.str()}, {"relation", "V_d^I symplectic"}});
                        break;
                    }
                    if (rho(x).is_identity()) ker.push_back(x);
                }
                if (!same_set<IntMatrix, IntMatrixHash>(ker, Hel)) fail({{"label", L.str()}, {"relation", "ker rho = H_d^I"}});
                for (const auto& a : V.HdI)
                    for (const auto& b : V.HdI)
                        if (a * a != I || a * b != b * a) fail({{"label", L.str()}, {"relation", "H_d^I elementary abelian"}});
                if (Vel.size() != Hel.size() * W.size()) fail({{"label", L.str()}, {"relation", "|V_d^I| = |H_d^I||W_d^I|"}});
            }
        }
    }
    r["checked"] = checked;
    return finish(r);
}

json suite_extendibility(const std::vector<int>& ns, const std::vector<int>& ds, std::size_t max_order) {
    json r = new_report("extendibility");
    long long checked = 0, skipped = 0, thetas = 0;
    for (int n : ns)
        for (int d : ds) {
            TwistElements T = build_twist_elements(n, d);
            for (const auto& L : enumerate_labels(n, d)) {
                VdI V = build_VdI(L, T);
                std::vector<IntMatrix> Vel;
                try {
                    Vel = matrix_closure(V.generators, n, max_order);
                } catch (const ClosureExceedsCap&) {
                    ++skipped;
                    continue;
                }
                std::vector<Perm> vg, hg;
                for (const auto& g : V.generators) vg.push_back(monomial_points(g));
                for (const auto& h : V.HdI) hg.push_back(monomial_points(h));
                PermGroup VG(vg, 4 * n), HG(hg, 4 * n);
                auto TH = cached_character_table(HG);
                ++checked;
                for (int i = 0; i < TH->size(); ++i) {
                    ++thetas;
                    auto res = inertia_and_extendibility(HG, VG, TH->chars[i]);
                    if (!res.extends)
                        r["failures"].push_back({{"label", L.str()}, {"theta", i}, {"inertia_order", res.inertia.order()}});
                }
            }
        }
    r["checked"] = checked;
    r["skipped_over_cap"] = skipped;
    r["characters"] = thetas;
    return finish(r);
}

namespace {

std::vector<long long> divisors(long long N) {
    std::vector<long long> r;
    for (long long k = 1; k <= N; ++k)
        if (N % k == 0) r.push_back(k);
    return r;
}

}  // namespace

json suite_torus(const std::vector<long long>& qs, const std::vector<int>& ds) {
    json r = new_report("torus");
    long long checked = 0;
    json cases = json::array();
    for (long long q : qs)
        for (int d : ds) {
            FieldPtr F = torus_field(q, d);
            const int d0 = d0_of(d);
            json c = {{"q", q}, {"d", d}, {"d0", d0}};
            OrbitData O1 = make_orbit(d, 1, {1});
            FixedPointCount fp = enumerate_fixed_points(O1, F);
            c["fixed_points"] = fp.fixed;
            c["expected"] = fp.expected;
            c["theta_bijective"] = fp.theta_bijective;
            bool ok = fp.theta_bijective && static_cast<long long>(fp.fixed) == fp.expected;
            json lang = json::array(), conj = json::array();
            for (const OrbitData& O : {O1, make_orbit(d, 2, {1, 2}), make_orbit(d, 2, {2})}) {
                bool lz = lang_map(z_plus(O, F), O) == z_O(O, F);
                ConjAction ca = conj_center_action(O, F);
                lang.push_back(lz);
                conj.push_back(ca.detail);
                ok = ok && lz && ca.matches;
            }
            c["lang_z_plus"] = lang;
            c["conjugation"] = conj;
            json sp = json::array();
            for (int n = 1; n <= 4; ++n) {
                IndexSet pts;
                for (int i = 1; i <= n; ++i) pts.push_back(i);
                TorusElem z = z_plus_sp_block(pts, d, F);
                TorusElem lz = lang_map_twist(sylow_twist_w(n, d), z);
                bool good = true;
                for (const auto& [k, v] : lz.coords) good = good && v == F->neg_one();
                sp.push_back(good);
                ok = ok && good;
            }
            c["lang_z_plus_sp_block"] = sp;
            json jumps = json::array();
            for (long long o : divisors(theta_modulus(O1, q))) {
                bool j = central_stabilizer_jump(O1, F, o);
                jumps.push_back({{"eta_order", o}, {"jump", j}});
                ok = ok && (j == (o == 2));
            }
            c["jumps"] = jumps;
            c["pass"] = ok;
            ++checked;
            if (!ok) r["failures"].push_back(c);
            cases.push_back(c);
        }
    r["checked"] = checked;
    r["cases"] = cases;
    return finish(r);
}

namespace {

std::vector<long long> expected_degrees(const std::string& g) {
    if (g == "S3") return {1, 1, 2};
    if (g == "S4") return {1, 1, 2, 3, 3};
    if (g == "D8" || g == "Q8") return {1, 1, 1, 1, 2};
    if (g.size() == 6 && g.substr(2, 3) == "wrS") return wreath_predicted_degrees(g[1] - '0', g[5] - '0');
    return {};
}

}  // namespace

json suite_chartab(const std::vector<std::string>& groups) {
    json r = new_report("chartab");
    long long checked = 0;
    for (const auto& name : groups) {
        PermGroup G = preset_group(name);
        CharacterTable T = character_table(G);
        std::vector<long long> deg = T.degrees;
        std::sort(deg.begin(), deg.end());
        bool ortho = verify_orthogonality(G, T);
        bool degs = deg == expected_degrees(name);
        ++checked;
        if (!ortho || !degs) r["failures"].push_back({{"group", name}, {"orthogonality", ortho}, {"degrees", deg}});
    }
    r["checked"] = checked;
    return finish(r);
}

json suite_wreath_extension(const std::vector<int>& ks, int max_m) {
    json r = new_report("wreath_extension");
    long long checked = 0;
    for (int k : ks)
        for (int m = 1; m <= max_m; ++m) {
            // Y = C_k semidirect C_2 (inversion) on Z_k x {0,1}
            const int deg = 2 * k;
            Perm a(deg), e(deg);
            for (int x = 0; x < k; ++x)
                for (int b = 0; b < 2; ++b) {
                    a[x + k * b] = (x + 1) % k + k * b;
                    e[x + k * b] = (k - x) % k + k * (1 - b);
                }
            PermGroup G(wreath_generators({a, e}, deg, m), deg * m);
            std::vector<Perm> xg;
            for (int j = 0; j < m; ++j) {
                Perm g = perm_identity(deg * m);
                for (int x = 0; x < deg; ++x) g[j * deg + x] = j * deg + a[x];
                xg.push_back(g);
            }
            PermGroup X(xg, deg * m);
            auto TX = cached_character_table(X);
            for (int i = 0; i < TX->size(); ++i) {
                ++checked;
                auto res = inertia_and_extendibility(X, G, TX->chars[i]);
                if (!res.extends) r["failures"].push_back({{"A", "C" + std::to_string(k)}, {"m", m}, {"theta", i}});
            }
        }
    r["checked"] = checked;
    return finish(r);
}

json suite_kinva(const std::vector<int>& ns, const std::vector<int>& ds, std::size_t cap, long long random_count,
                 std::uint64_t seed) {
    json r = new_report("kinva");
    std::vector<CharLabel> all;
    for (int n : ns)
        for (int d : ds)
            for (const auto& L : enumerate_labels(n, d))
                for (auto& cl : enumerate_char_labels(L)) all.push_back(std::move(cl));
    std::vector<CharLabel> todo;
    long long over_cap = 0;
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, all.empty() ? 0 : all.size() - 1);
        for (long long i = 0; i < random_count && !all.empty(); ++i) todo.push_back(all[pick(rng)]);
    } else {
        for (auto& cl : all)
            if (cuspidal_gate(cl)) todo.push_back(cl);
    }
    std::vector<CharLabel> run;
    for (auto& cl : todo) {
        if (stab_lambda(cl).order > static_cast<long long>(cap)) {
            ++over_cap;
            continue;
        }
        run.push_back(cl);
    }
    std::vector<KinvaReport> reps(run.size());
    std::vector<std::string> errors(run.size());
    std::vector<char> capped(run.size(), 0);
    parallel_for(run.size(), [&](std::size_t i) {
        try {
            reps[i] = kinva_check(run[i], cap);
        } catch (const ClosureExceedsCap&) {
            capped[i] = 1;
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    });
    long long gated = 0, passed = 0, all_inv = 0, xi0 = 0;
    json rows = json::array();
    long long checked = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (capped[i]) {
            ++over_cap;
            continue;
        }
        ++checked;
        bool gate = cuspidal_gate(run[i]);
        gated += gate;
        if (!errors[i].empty()) {
            r["failures"].push_back({{"label", run[i].str()}, {"error", errors[i]}});
            continue;
        }
        const auto& k = reps[i];
        passed += k.pass;
        all_inv += k.all_constituents_invariant;
        xi0 += k.xi0_count;
        if (gate && !k.pass) {
            json w = json::array();
            for (const auto& [a, b] : k.witnesses) w.push_back({{"xi0_id", a}, {"xi_id", b}});
            r["failures"].push_back({{"label", k.label}, {"W_lambda_order", k.W_lambda_order}, {"ker_index", k.ker_index},
                                     {"xi0_count", k.xi0_count}, {"pass", k.pass}, {"witnesses", w}});
        }
        if (random_count > 0)
            rows.push_back({{"label", k.label}, {"gate", gate}, {"pass", k.pass}, {"ker_index", k.ker_index}});
    }
    r["checked"] = checked;
    r["gate_passing"] = gated;
    r["kinva_pass"] = passed;
    r["all_constituents_invariant"] = all_inv;
    r["xi0_total"] = xi0;
    r["skipped_over_cap"] = over_cap;
    if (random_count > 0) {
        r["seed"] = seed;
        r["random"] = rows;
    }
    return finish(r);
}

json levis_report(const std::vector<int>& ns, const std::vector<int>& ds, long long q) {
    json r;
    r["command"] = "levis";
    json labels = json::array();
    for (int n : ns)
        for (int d : ds)
            for (const auto& L : enumerate_labels(n, d)) {
                json j = {{"n", n}, {"d", d}, {"d0", L.d0}, {"epsilon", d % 2 ? 1 : -1}, {"I_minus1", L.I_minus1}, {"I", partition_json(L.I)}};
                json t = json::object();
                json rw = json::array();
                for (const auto& [s, orbs] : L.orbits) {
                    t[std::to_string(s)] = orbs.size();
                    rw.push_back({2 * L.d0, orbs.size()});
                }
                j["t"] = t;
                j["relative_weyl"] = rw;
                if (q > 0) j["order"] = levi_structure(L, q).order.get_str();
                labels.push_back(j);
            }
    r["labels"] = labels;
    r["count"] = labels.size();
    if (q > 0) r["q"] = q;
    r["pass"] = true;
    r["failures"] = json::array();
    return r;
}

json chartab_report(const std::string& group) {
    PermGroup G = preset_group(group);
    CharacterTable T = character_table(G);
    json r;
    r["command"] = "chartab";
    r["group"] = group;
    r["order"] = G.order();
    json classes = json::array();
    for (int k = 0; k < G.num_classes(); ++k)
        classes.push_back({{"rep", perm_str(G.element(G.class_rep(k)))}, {"size", G.class_size(k)}, {"element_order", G.elem_order(G.class_rep(k))}});
    r["classes"] = classes;
    r["degrees"] = T.degrees;
    json chars = json::array();
    for (const auto& chi : T.chars) {
        json row = json::array();
        for (const auto& v : chi) row.push_back(v.str());
        chars.push_back(row);
    }
    r["characters"] = chars;
    r["exponent"] = T.exponent;
    r["dixon_prime"] = T.dixon_prime;
    bool ok = verify_orthogonality(G, T);
    r["orthogonality"] = ok;
    r["pass"] = ok;
    r["failures"] = ok ? json::array() : json::array({{{"group", group}, {"orthogonality", false}}});
    return r;
}

}  // namespace dsplit
