#include "dsplit/cli.hpp"

#include <algorithm>
#include <stdexcept>

#include <CLI11.hpp>

#include "dsplit/chartab.hpp"
#include "dsplit/levi.hpp"
#include "dsplit/suites.hpp"

namespace dsplit {

std::vector<long long> parse_range(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty item in range '" + text + "'");
        auto dots = item.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
            out.push_back(v);
        } else {
            std::string a = item.substr(0, dots), b = item.substr(dots + 2);
            long long lo = std::stoll(a, &used);
            if (used != a.size()) throw std::invalid_argument("bad range '" + item + "'");
            long long hi = std::stoll(b, &used);
            if (used != b.size() || hi < lo) throw std::invalid_argument("bad range '" + item + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

namespace {

void flatten(const json& j, const std::string& path, const std::string& sep, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), sep, out);
    } else if (j.is_array()) {
        if (j.empty()) out << path << sep << "[]\n";
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", sep, out);
    } else {
        out << path << sep << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        flatten(j, "", format == "tsv" ? "\t" : ": ", out);
}

struct BadFlags : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<long long> flag_range(const std::string& text) {
    try {
        return parse_range(text);
    } catch (const std::exception& e) {
        throw BadFlags(e.what());
    }
}

std::vector<int> ints(const std::string& text, int lo, const char* what) {
    std::vector<int> r;
    for (long long v : flag_range(text)) {
        if (v < lo || v > 64) throw BadFlags(std::string(what) + " out of range: " + std::to_string(v));
        r.push_back(static_cast<int>(v));
    }
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for d-split Levi subgroups of Sp(2n, q)", "dsplit"};
    app.require_subcommand(1);
    std::string format = "json";
    std::size_t cap = kChartabCap;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--cap", cap, "Group order cap for closures and character tables")->check(CLI::PositiveNumber);

    std::string n_text, d_text, q_text, groups_text, ks_text;
    long long q_single = 0, random_count = 0;
    std::uint64_t seed = 0;
    std::string suite, group;

    auto* levis = app.add_subcommand("levis", "Enumerate d-split Levi labels and their structure");
    levis->add_option("--n", n_text, "Rank(s)")->required();
    levis->add_option("--d", d_text, "d value(s)")->required();
    levis->add_option("--q", q_single, "Odd prime power for group orders");

    auto* relweyl = app.add_subcommand("relweyl", "Relative Weyl groups with brute-force verification");
    relweyl->add_option("--n", n_text)->required();
    relweyl->add_option("--d", d_text)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"centralizers", "normalizers", "eq1", "relweyl", "extweyl", "extendibility", "torus", "chartab",
                               "wreath", "kinva"}));
    verify->add_option("--n", n_text);
    verify->add_option("--d", d_text);
    verify->add_option("--q", q_text);
    verify->add_option("--groups", groups_text, "Comma-separated chartab presets");
    verify->add_option("--k", ks_text, "Cyclic orders for the wreath suite");

    auto* kinva = app.add_subcommand("kinva", "Invariance check over character labels");
    kinva->add_option("--n", n_text)->required();
    kinva->add_option("--d", d_text)->required();
    kinva->add_option("--random", random_count, "Sample this many labels (gate not applied)")->check(CLI::NonNegativeNumber);
    kinva->add_option("--seed", seed);

    auto* chartab = app.add_subcommand("chartab", "Character table of a preset group");
    chartab->add_option("--group", group)->required()->check(CLI::IsMember(preset_names()));

    for (auto* sc : {levis, relweyl, verify, kinva, chartab}) sc->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dsplit: " << e.what() << "\n";
        return 2;
    }

    json report;
    try {
        auto n_or = [&](const std::string& def, int lo) { return ints(n_text.empty() ? def : n_text, lo, "n"); };
        auto d_or = [&](const std::string& def) { return ints(d_text.empty() ? def : d_text, 1, "d"); };
        {
            if (levis->parsed()) {
                if (q_single != 0 && !is_odd_prime_power(q_single)) throw BadFlags("q must be an odd prime power");
                auto ns = n_or("", 2);
                auto ds = d_or("");
                report = levis_report(ns, ds, q_single);
            } else if (relweyl->parsed()) {
                auto ns = n_or("", 2);
                if (*std::max_element(ns.begin(), ns.end()) > 4) throw BadFlags("relweyl brute force needs n <= 4");
                report = suite_relweyl(ns, d_or(""));
                report["command"] = "relweyl";
                json labels = json::array();
                for (int n : ns)
                    for (int d : d_or(""))
                        for (const auto& L : enumerate_labels(n, d)) {
                            auto rw = relative_weyl(L);
                            json gens = json::array();
                            for (const auto& g : rw.gens) gens.push_back(g.str());
                            json factors = json::array();
                            for (const auto& [c, t] : rw.factors) factors.push_back({c, t});
                            labels.push_back({{"label", L.str()}, {"factors", factors}, {"order", rw.order().get_str()}, {"generators", gens}});
                        }
                report["labels"] = labels;
            } else if (verify->parsed()) {
                if (suite == "centralizers")
                    report = suite_centralizers(n_or("2..4", 1));
                else if (suite == "normalizers")
                    report = suite_normalizers(n_or("1..4", 1));
                else if (suite == "eq1")
                    report = suite_eq1(n_or("2..4", 2), d_or("1..8"));
                else if (suite == "relweyl")
                    report = suite_relweyl(n_or("2..4", 2), d_or("1..8"));
                else if (suite == "extweyl")
                    report = suite_extweyl(n_or("2..4", 2), d_or("1..6"));
                else if (suite == "extendibility")
                    report = suite_extendibility(n_or("2..4", 2), d_or("1..8"), std::min<std::size_t>(cap, 2000));
                else if (suite == "torus") {
                    std::vector<long long> qs = flag_range(q_text.empty() ? "3,5" : q_text);
                    for (long long q : qs)
                        if (!is_odd_prime_power(q)) throw BadFlags("q must be an odd prime power");
                    report = suite_torus(qs, d_or("1..4"));
                } else if (suite == "chartab") {
                    std::vector<std::string> gs;
                    std::stringstream ss(groups_text.empty() ? "S3,S4,D8,Q8,C2wrS2,C4wrS2" : groups_text);
                    std::string g;
                    while (std::getline(ss, g, ',')) {
                        auto names = preset_names();
                        if (std::find(names.begin(), names.end(), g) == names.end()) throw BadFlags("unknown group preset: " + g);
                        gs.push_back(g);
                    }
                    report = suite_chartab(gs);
                } else if (suite == "wreath") {
                    report = suite_wreath_extension(ints(ks_text.empty() ? "2..4" : ks_text, 2, "k"), 3);
                } else {
                    report = suite_kinva(n_or("2..4", 2), d_or("1..8"), cap);
                }
                report["command"] = "verify";
            } else if (kinva->parsed()) {
                report = suite_kinva(n_or("", 2), d_or(""), cap, random_count, seed);
                report["command"] = "kinva";
            } else if (chartab->parsed()) {
                report = chartab_report(group);
            }
        }
    } catch (const BadFlags& e) {
        err << "dsplit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        report = {{"pass", false}, {"failures", json::array({{{"error", e.what()}}})}};
        emit(report, format, out);
        return 1;
    }
    emit(report, format, out);
    return report.value("pass", false) ? 0 : 1;
}

}  // namespace dsplit
