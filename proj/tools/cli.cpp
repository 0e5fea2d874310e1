#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rwl/combs.hpp"
#include "rwl/graph.hpp"
#include "rwl/oracle.hpp"
#include "rwl/series.hpp"
#include "rwl/torus.hpp"
#include "rwl/trees.hpp"
#include "rwl/twocycles.hpp"
#include "verify.hpp"

namespace rwl::cli {

namespace {

using nlohmann::ordered_json;

void print_count(std::ostream& out, bool json, const std::string& family, ordered_json params, const Count& c)
{
    if (json) {
        ordered_json rec{{"family", family}, {"params", std::move(params)}, {"count", to_decimal(c)}};
        out << rec.dump() << '\n';
    } else {
        out << to_decimal(c) << '\n';
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Vertex> parse_vertex_list(const std::string& text)
{
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) {
            throw Error("malformed vertex list '" + text + "'");
        }
        mpz_class v = parse_decimal(item);
        if (v < 0 || v > (1 << 26)) {
            throw Error("vertex index out of range");
        }
        out.push_back(static_cast<Vertex>(v.get_si()));
    }
    return out;
}

void write_bfile(std::ostream& out, const std::vector<Count>& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << (i + 1) << ' ' << to_decimal(seq[i]) << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of random walk labelings"};
    app.name("rwl");
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Closed-form count for a graph family");
    count->require_subcommand(1);
    bool json = false;
    int h = 0, m = 2, n = 2, k = 1, a1 = 2, a2 = 2, a3 = 2;
    auto* c_tree = count->add_subcommand("tree", "Perfect m-ary tree T_{h,m}");
    c_tree->set_help_flag("--help", "Print this help message and exit");
    c_tree->add_option("--h", h, "Height")->required();
    c_tree->add_option("--m", m, "Arity")->required();
    auto* c_comb = count->add_subcommand("comb", "Comb C_{m,n,k}");
    c_comb->add_option("--m", m, "Number of teeth")->required();
    c_comb->add_option("--n", n, "Tooth length")->required();
    c_comb->add_option("--k", k, "Spine position")->required();
    auto* c_torus = count->add_subcommand("torus", "Circular ladder C_2 x C_n");
    c_torus->add_option("--n", n, "Cycle length")->required();
    auto* c_two = count->add_subcommand("twocycles", "Two-cycle graph S_{a1,a2,a3}");
    c_two->add_option("--a1", a1, "Top path length")->required();
    c_two->add_option("--a2", a2, "Middle path length")->required();
    c_two->add_option("--a3", a3, "Bottom path length")->required();
    for (auto* sub : {c_tree, c_comb, c_torus, c_two}) {
        sub->add_flag("--json", json, "Emit a JSON record");
    }

    // oracle
    auto* orc = app.add_subcommand("oracle", "Brute-force count on an edge-list graph");
    std::string input, alg = "dp", completions;
    int from = -1;
    int dp_limit = oracle::kDefaultDpLimit;
    orc->add_option("--input", input, "Edge-list file")->required();
    orc->add_option("--alg", alg, "dp or perm")->check(CLI::IsMember({"dp", "perm"}));
    orc->add_option("--from", from, "Start vertex index");
    orc->add_option("--completions", completions, "Comma-separated labeled vertex indices");
    orc->add_option("--dp-limit", dp_limit, "Largest vertex count for the DP");

    // verify
    auto* ver = app.add_subcommand("verify", "Compare formulas against the oracle");
    std::string family;
    VerifyLimits limits;
    bool quiet = false;
    ver->add_flag("--quiet", quiet, "Suppress progress logs");
    ver->add_option("--family", family, "tree, comb, torus, twocycles or all")
        ->required()
        ->check(CLI::IsMember({"tree", "comb", "torus", "twocycles", "all"}));
    ver->add_option("--max-vertices", limits.max_tree_vertices, "Largest tree checked");
    ver->add_option("--max-mn", limits.max_comb_vertices, "Largest comb (m*n) checked");
    ver->add_option("--max-n", limits.max_torus_n, "Largest torus n checked");
    ver->add_option("--max-sum", limits.max_two_cycle_sum, "Largest a1+a2+a3 checked");
    ver->add_option("--max-path", limits.max_two_cycle_path, "Largest single a_i checked");

    // series
    auto* ser = app.add_subcommand("series", "Expand the two-cycle generating function");
    int degree = 11;
    std::string format = "csv";
    ser->add_option("--degree", degree, "Total degree bound")->required();
    ser->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // numerator
    auto* num = app.add_subcommand("numerator", "Recover the numerator polynomial and diff it");
    int num_degree = 19;
    std::string against = "verbatim";
    num->add_option("--degree", num_degree, "Total degree bound for the recovery");
    num->add_option("--against", against, "verbatim or corrected transcription")
        ->check(CLI::IsMember({"verbatim", "corrected"}));

    // oeis
    auto* oeis = app.add_subcommand("oeis", "Export a sequence in b-file format");
    oeis->require_subcommand(1);
    int terms = 10;
    auto* o_tree = oeis->add_subcommand("tree-root", "Root-start counts of perfect binary trees");
    o_tree->add_option("--count", terms, "Number of terms")->required();
    auto* o_comb = oeis->add_subcommand("comb-row", "Comb counts L(C_{m,2,1})");
    o_comb->add_option("--count", terms, "Number of terms")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*count) {
            if (*c_tree) {
                print_count(out, json, "tree", {{"h", h}, {"m", m}}, trees::count_perfect_tree(h, m));
            } else if (*c_comb) {
                print_count(out, json, "comb", {{"m", m}, {"n", n}, {"k", k}}, combs::count_comb(m, n, k));
            } else if (*c_torus) {
                print_count(out, json, "torus", {{"n", n}}, torus::count_torus(n));
            } else {
                print_count(out, json, "twocycles", {{"a1", a1}, {"a2", a2}, {"a3", a3}},
                            twocycles::count_two_cycles(a1, a2, a3));
            }
            return 0;
        }
        if (*orc) {
            Graph g = parse_edge_list(read_file(input));
            if (!g.connected()) {
                throw Error("graph not connected");
            }
            oracle::Config cfg{dp_limit};
            Count result;
            if (!completions.empty()) {
                if (alg != "dp" || from >= 0) {
                    throw Error("--completions needs --alg dp and no --from");
                }
                result = oracle::count_completions(g, parse_vertex_list(completions), cfg);
            } else if (from >= 0) {
                result = (alg == "dp") ? oracle::count_labelings_from(g, from, cfg)
                                       : oracle::count_labelings_from_perm(g, from);
            } else {
                result = (alg == "dp") ? oracle::count_labelings(g, cfg) : oracle::count_labelings_perm(g);
            }
            out << to_decimal(result) << '\n';
            return 0;
        }
        if (*ver) {
            Progress progress = [&](const std::string& msg) {
                if (!quiet) {
                    err << "verify: " << msg << '\n';
                }
            };
            auto instances = verify_family(family, limits, progress);
            auto report = to_json(instances);
            out << report.dump(2) << '\n';
            return report["ok"].get<bool>() ? 0 : 1;
        }
        if (*ser) {
            auto coeffs = series::expand_rational(series::two_cycle_gf(), degree);
            if (format == "csv") {
                out << series::to_csv(coeffs);
            } else {
                ordered_json rows = ordered_json::array();
                for (const auto& [e, c] : coeffs.terms()) {
                    rows.push_back({{"a1", e[0]}, {"a2", e[1]}, {"a3", e[2]}, {"coefficient", c.get_str()}});
                }
                out << ordered_json{{"degree", degree}, {"coefficients", std::move(rows)}}.dump(2) << '\n';
            }
            return 0;
        }
        if (*num) {
            auto recovered = series::recover_numerator(num_degree);
            auto transcribed = series::parse_poly3(against == "verbatim" ? series::f_numerator_verbatim_text()
                                                                         : series::f_numerator_text());
            out << "i,j,k,recovered,transcribed\n";
            for (const auto& d : series::diff(recovered, transcribed)) {
                out << d.exponent[0] << ',' << d.exponent[1] << ',' << d.exponent[2] << ','
                    << d.expected.get_str() << ',' << d.actual.get_str() << '\n';
            }
            return 0;
        }
        if (*oeis) {
            if (*o_tree) {
                write_bfile(out, trees::oeis_tree_root_sequence(terms));
            } else {
                if (terms < 1) {
                    throw Error("count must be at least 1");
                }
                std::vector<Count> seq;
                for (int mm = 1; mm <= terms; ++mm) {
                    seq.push_back(combs::count_comb(mm, 2, 1));
                }
                write_bfile(out, seq);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace rwl::cli
