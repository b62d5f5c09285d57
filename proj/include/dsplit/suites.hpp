#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dsplit {

using json = nlohmann::json;

// Worker count from DSPLIT_WORKERS (default 1); never affects results.
int worker_count();
// Runs body(i) for i in [0, count) on worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Each suite returns {"suite", "pass", "checked", "failures": [...], ...}.
json suite_centralizers(const std::vector<int>& ns);
json suite_normalizers(const std::vector<int>& ns);
json suite_eq1(const std::vector<int>& ns, const std::vector<int>& ds);
json suite_relweyl(const std::vector<int>& ns, const std::vector<int>& ds);
json suite_extweyl(const std::vector<int>& ns, const std::vector<int>& ds);
json suite_extendibility(const std::vector<int>& ns, const std::vector<int>& ds, std::size_t max_order = 2000);
json suite_torus(const std::vector<long long>& qs, const std::vector<int>& ds);
json suite_chartab(const std::vector<std::string>& groups);
json suite_wreath_extension(const std::vector<int>& ks, int max_m);
json suite_kinva(const std::vector<int>& ns, const std::vector<int>& ds, std::size_t cap, long long random_count = 0,
                 std::uint64_t seed = 0);

json levis_report(const std::vector<int>& ns, const std::vector<int>& ds, long long q);
json chartab_report(const std::string& group);

}  // namespace dsplit
