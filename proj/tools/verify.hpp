#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rwl::cli {

struct VerifyLimits {
    int max_tree_vertices = 22;
    int max_comb_vertices = 20;
    int max_torus_n = 9;
    int max_two_cycle_sum = 20;
    int max_two_cycle_path = 8;
};

struct Instance {
    std::string family;
    nlohmann::ordered_json params;
    std::string check;
    std::string expected; // oracle or reference value
    std::string actual;   // formula value
    bool match = false;
};

using Progress = std::function<void(const std::string&)>;

// family: tree, comb, torus, twocycles or all.
std::vector<Instance> verify_family(const std::string& family, const VerifyLimits& limits,
                                    const Progress& progress);

nlohmann::ordered_json to_json(const std::vector<Instance>& instances);

} // namespace rwl::cli
