#include "verify.hpp"

#include "rwl/combs.hpp"
#include "rwl/graph.hpp"
#include "rwl/oracle.hpp"
#include "rwl/torus.hpp"
#include "rwl/trees.hpp"
#include "rwl/twocycles.hpp"

namespace rwl::cli {

namespace {

void record(std::vector<Instance>& out, std::string family, nlohmann::ordered_json params, std::string check,
            const Count& expected, const Count& actual)
{
    out.push_back({std::move(family), std::move(params), std::move(check), to_decimal(expected),
                   to_decimal(actual), expected == actual});
}

void verify_trees(const VerifyLimits& lim, std::vector<Instance>& out, const Progress& progress)
{
    for (int m = 2; m <= lim.max_tree_vertices; ++m) {
        for (int h = 0;; ++h) {
            if (trees::tree_size(h, m) > lim.max_tree_vertices) {
                break;
            }
            progress("tree h=" + std::to_string(h) + " m=" + std::to_string(m));
            nlohmann::ordered_json params{{"h", h}, {"m", m}};
            Count oracle = oracle::count_labelings(build_family(PerfectTree{h, m}));
            record(out, "tree", params, "recurrence vs oracle", oracle,
                   trees::count_perfect_tree(h, m, trees::Method::recurrence));
            record(out, "tree", params, "closed form vs oracle", oracle,
                   trees::count_perfect_tree(h, m, trees::Method::closed_form));
            for (int k = 0; k < h; ++k) {
                Graph g = build_family(TreeMinusChild{h, m, k});
                const Vertex parent = vertex_at(g, "parent");
                record(out, "tree", {{"h", h}, {"m", m}, {"k", k}}, "s recurrence vs oracle",
                       oracle::count_labelings_from(g, parent), trees::s_rec(h, m, k));
            }
        }
    }
}

void verify_combs(const VerifyLimits& lim, std::vector<Instance>& out, const Progress& progress)
{
    for (int m = 1; 2 * m <= lim.max_comb_vertices; ++m) {
        for (int n = 2; m * n <= lim.max_comb_vertices; ++n) {
            for (int k = 1; k <= n; ++k) {
                progress("comb m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                nlohmann::ordered_json params{{"m", m}, {"n", n}, {"k", k}};
                Count oracle = oracle::count_labelings(build_family(Comb{m, n, k}));
                record(out, "comb", params, "closed form vs oracle", oracle, combs::count_comb(m, n, k));
                record(out, "comb", params, "per-start sum vs oracle", oracle,
                       combs::count_comb_by_starts(m, n, k));
            }
        }
    }
}

void verify_torus(const VerifyLimits& lim, std::vector<Instance>& out, const Progress& progress)
{
    for (int n = 1; n <= lim.max_torus_n; ++n) {
        progress("torus n=" + std::to_string(n));
        nlohmann::ordered_json params{{"n", n}};
        Count oracle = oracle::count_labelings(build_family(Torus{n}));
        record(out, "torus", params, "closed form vs oracle", oracle, torus::count_torus(n));
        record(out, "torus", params, "recurrence vs oracle", oracle, 2 * n * torus::a_rec(n, 1));
    }
}

void verify_two_cycles(const VerifyLimits& lim, std::vector<Instance>& out, const Progress& progress)
{
    const int cap = lim.max_two_cycle_path;
    for (int a1 = 2; a1 <= cap; ++a1) {
        for (int a2 = 2; a2 <= cap; ++a2) {
            for (int a3 = 2; a3 <= cap; ++a3) {
                if (a1 + a2 + a3 > lim.max_two_cycle_sum) {
                    continue;
                }
                progress("twocycles " + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3));
                record(out, "twocycles", {{"a1", a1}, {"a2", a2}, {"a3", a3}}, "formula vs oracle",
                       oracle::count_labelings(build_family(TwoCycles{a1, a2, a3})),
                       twocycles::count_two_cycles(a1, a2, a3));
            }
        }
    }
}

} // namespace

std::vector<Instance> verify_family(const std::string& family, const VerifyLimits& limits,
                                    const Progress& progress)
{
    std::vector<Instance> out;
    const bool all = (family == "all");
    bool known = all;
    if (all || family == "tree") {
        verify_trees(limits, out, progress);
        known = true;
    }
    if (all || family == "comb") {
        verify_combs(limits, out, progress);
        known = true;
    }
    if (all || family == "torus") {
        verify_torus(limits, out, progress);
        known = true;
    }
    if (all || family == "twocycles") {
        verify_two_cycles(limits, out, progress);
        known = true;
    }
    if (!known) {
        throw Error("unknown family '" + family + "'");
    }
    return out;
}

nlohmann::ordered_json to_json(const std::vector<Instance>& instances)
{
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& i : instances) {
        ok = ok && i.match;
        list.push_back({{"family", i.family},
                        {"params", i.params},
                        {"check", i.check},
                        {"expected", i.expected},
                        {"actual", i.actual},
                        {"match", i.match}});
    }
    return {{"ok", ok}, {"checked", instances.size()}, {"instances", std::move(list)}};
}

} // namespace rwl::cli
