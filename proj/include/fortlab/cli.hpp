#pragma once
/* Command-line front end. run_cli is the whole tool; tools/fortlab.cpp is a
   thin main() around it, and the tests drive it in-process through string
   streams so every path below is exercised without spawning binaries.

   Conventions shared by all subcommands:
     - machine output is JSON on stdout; nlohmann::json keeps object keys
       sorted, so identical invocations produce byte-identical output
     - --human swaps the JSON for an aligned text rendering
     - exit codes: 0 success or all checks pass, 1 a verification check
       failed, 2 usage or input error, 3 a resource cap or budget was hit
     - a graph argument containing a colon is a family spec ("cycle:9");
       anything else is a path to an edge-list file
     - search-budget precedence: --budget flag, then the FORTLAB_BUDGET
       environment variable, then policy::kDefaultSearchBudget */

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "fort_cover.hpp"
#include "forts.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "policy.hpp"
#include "products.hpp"
#include "vertex_set.hpp"
#include "zero_forcing.hpp"

namespace fortlab::cli {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

inline std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("FORTLAB_BUDGET")) {
        const std::string text(env);
        const bool digits_only =
            !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
                return std::isdigit(c) != 0;
            });
        if (!digits_only)
            throw std::invalid_argument("FORTLAB_BUDGET is not a number: \"" + text + "\"");
        try {
            return std::stoull(text);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("FORTLAB_BUDGET is out of range: \"" + text + "\"");
        }
    }
    return policy::kDefaultSearchBudget;
}

inline Graph load_graph_argument(const std::string& token) {
    if (token.find(':') != std::string::npos) return generate(parse_family_spec(token));
    std::ifstream in(token);
    if (!in) throw std::invalid_argument("cannot open graph file: " + token);
    return parse_edge_list(in);
}

/* Families whose minimal-fort count has an exact closed form. Shapes with
   only bounds (wheel, sunlet) and the helper shapes (comb, ladder) give
   nullopt so callers fall back to enumeration. The small cases without a
   closed form (a lone K_1 clique, K_{1,1}, a one-leaf star) also give
   nullopt rather than a wrong number. */
inline std::optional<BigInt> closed_count(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::empty: return BigInt(p[0]);
        case FamilyKind::complete:
            if (p[0] < 2) return std::nullopt;
            return binomial(p[0], 2);
        case FamilyKind::complete_bipartite:
            if (p[0] + p[1] < 3) return std::nullopt;
            return binomial(p[0], 2) + binomial(p[1], 2);
        case FamilyKind::path: return path_count(p[0]);
        case FamilyKind::cycle: return cycle_count(p[0]);
        case FamilyKind::star:
            if (p[0] < 2) return std::nullopt;
            return binomial(p[0], 2);
        case FamilyKind::spider: return spider_count(p);
        case FamilyKind::windmill: return windmill_count(p[0], p[1]);
        case FamilyKind::comb:
        case FamilyKind::ladder:
        case FamilyKind::wheel:
        case FamilyKind::sunlet: return std::nullopt;
    }
    return std::nullopt;
}

/* Every fort, minimal or not, by scanning all nonempty subsets. Exposed via
   `forts` without --minimal; the scan is the only enumeration that large
   non-minimal fort lattices admit, so the oracle order cap applies. */
inline FortCollection enumerate_all_forts(const Graph& g) {
    const int n = g.order();
    if (n > policy::kFortOracleMaxOrder)
        throw ResourceLimitError("enumerate_all_forts: order " + std::to_string(n) +
                                 " exceeds the subset-scan cap of " +
                                 std::to_string(policy::kFortOracleMaxOrder));
    std::vector<VertexSet> sets;
    for (std::uint64_t m = 1; n > 0 && m < (std::uint64_t{1} << n); ++m) {
        VertexSet s = VertexSet::from_mask(n, m);
        if (is_fort(g, s)) sets.push_back(std::move(s));
    }
    return FortCollection::from_sets(n, std::move(sets));
}

/* What a verify-table1 manifest row checks each instance against. Selectors
   name a computation, so new rows need no code change:
     closed              closed_count for the family (must exist)
     rounded_cycle       cycle:n     -> cycle_count_rounded(n)
     rounded_path        path:n      -> path_count_rounded(n)
     rounded_cycle_rim   wheel:n     -> cycle_count_rounded(n - 1)
     rounded_cycle_base  sunlet:n    -> cycle_count_rounded(n)
     blade_power         windmill:r,k -> (r - 1)^k
     literal:<decimal>   a pinned value */
inline BigInt expected_for(const std::string& expect, const FamilySpec& spec) {
    auto need = [&](FamilyKind kind) {
        if (spec.kind != kind)
            throw std::invalid_argument("expect selector " + expect + " does not apply to " +
                                        family_spec_to_string(spec));
    };
    if (expect == "closed") {
        if (auto v = closed_count(spec)) return *v;
        throw std::invalid_argument("no closed-form count for " + family_spec_to_string(spec));
    }
    if (expect == "rounded_cycle") {
        need(FamilyKind::cycle);
        return cycle_count_rounded(spec.params[0]);
    }
    if (expect == "rounded_path") {
        need(FamilyKind::path);
        return path_count_rounded(spec.params[0]);
    }
    if (expect == "rounded_cycle_rim") {
        need(FamilyKind::wheel);
        return cycle_count_rounded(spec.params[0] - 1);
    }
    if (expect == "rounded_cycle_base") {
        need(FamilyKind::sunlet);
        return cycle_count_rounded(spec.params[0]);
    }
    if (expect == "blade_power") {
        need(FamilyKind::windmill);
        return ipow(spec.params[0] - 1, static_cast<unsigned long long>(spec.params[1]));
    }
    if (expect.rfind("literal:", 0) == 0) {
        try {
            return BigInt(expect.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad literal count: " + expect);
        }
    }
    throw std::invalid_argument("unknown expect selector: " + expect);
}

/* Desk-scale instances for verify-table1, one row per closed form or bound.
   data/table1_manifest.json carries the same content for users who want to
   edit a copy and pass it via --manifest; a unit test keeps the two equal. */
inline const char* default_table1_manifest() {
    return R"json({
  "version": 1,
  "rows": [
    {
      "label": "empty graphs",
      "relation": "eq",
      "expect": "closed",
      "instances": ["empty:1", "empty:2", "empty:3", "empty:4", "empty:5", "empty:6", "empty:7", "empty:8"]
    },
    {
      "label": "complete graphs",
      "relation": "eq",
      "expect": "closed",
      "instances": ["complete:2", "complete:3", "complete:4", "complete:5", "complete:6", "complete:7", "complete:8"]
    },
    {
      "label": "complete bipartite graphs",
      "relation": "eq",
      "expect": "closed",
      "instances": ["complete_bipartite:1,2", "complete_bipartite:1,3", "complete_bipartite:1,4", "complete_bipartite:2,2", "complete_bipartite:2,3", "complete_bipartite:2,4", "complete_bipartite:3,3", "complete_bipartite:3,4", "complete_bipartite:4,4"]
    },
    {
      "label": "cycles, rounded form",
      "relation": "eq",
      "expect": "rounded_cycle",
      "instances": ["cycle:10", "cycle:11", "cycle:12", "cycle:13"]
    },
    {
      "label": "paths, rounded form",
      "relation": "eq",
      "expect": "rounded_path",
      "instances": ["path:1", "path:2", "path:3", "path:4", "path:5", "path:6", "path:7", "path:8", "path:9", "path:10", "path:11", "path:12", "path:13", "path:14"]
    },
    {
      "label": "spiders",
      "relation": "eq",
      "expect": "closed",
      "instances": ["spider:1,1", "spider:2,2", "spider:1,2,3", "spider:2,2,2", "spider:3,3,3", "spider:1,1,1,1", "spider:2,3,4", "spider:4,4,4"]
    },
    {
      "label": "wheels vs rim cycle count",
      "relation": "ge",
      "expect": "rounded_cycle_rim",
      "instances": ["wheel:11", "wheel:12", "wheel:13"]
    },
    {
      "label": "sunlets vs base cycle count",
      "relation": "ge",
      "expect": "rounded_cycle_base",
      "instances": ["sunlet:10", "sunlet:11", "sunlet:12"]
    },
    {
      "label": "windmills",
      "relation": "eq",
      "expect": "closed",
      "instances": ["windmill:3,2", "windmill:3,3", "windmill:4,2", "windmill:4,3", "windmill:5,2", "windmill:5,3"]
    },
    {
      "label": "windmill blade growth",
      "relation": "ge",
      "expect": "blade_power",
      "instances": ["windmill:4,2", "windmill:4,3", "windmill:4,4"]
    }
  ]
}
)json";
}

namespace detail {

inline std::string join_ints(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline json fort_array(const std::vector<VertexSet>& forts) {
    json arr = json::array();
    for (const auto& f : forts) arr.push_back(f.to_vector());
    return arr;
}

inline void emit(const json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

}  // namespace detail

inline int cmd_gen(const std::string& family, const std::vector<std::string>& params,
                   const std::string& format, const std::string& out_path, std::ostream& out) {
    std::string spec_text = family;
    if (!params.empty()) {
        spec_text += ':';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) spec_text += ',';
            spec_text += params[i];
        }
    }
    const Graph g = generate(parse_family_spec(spec_text));
    const std::string text = format == "dot" ? to_dot(g) : to_edge_list(g);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
    return kExitOk;
}

inline int cmd_forts(const std::string& token, bool minimal, bool oracle, bool count_only,
                     const std::optional<std::uint64_t>& budget_flag, bool human,
                     std::ostream& out) {
    const Graph g = load_graph_argument(token);
    FortCollection c;
    if (!minimal)
        c = enumerate_all_forts(g);
    else if (oracle)
        c = enumerate_minimal_forts_oracle(g);
    else
        c = enumerate_minimal_forts(g, resolve_budget(budget_flag));
    if (human) {
        out << "n      " << g.order() << "\n";
        out << "count  " << c.forts.size() << "\n";
        if (!count_only)
            for (const auto& f : c.forts) out << "fort   " << detail::join_ints(f.to_vector(), " ") << "\n";
        return kExitOk;
    }
    json doc;
    doc["n"] = g.order();
    doc["count"] = static_cast<std::int64_t>(c.forts.size());
    if (!count_only) doc["forts"] = detail::fort_array(c.forts);
    detail::emit(doc, out);
    return kExitOk;
}

inline int cmd_count(const std::string& spec_text, const std::string& via,
                     const std::optional<std::uint64_t>& budget_flag, bool human,
                     std::ostream& out) {
    const FamilySpec spec = parse_family_spec(spec_text);
    std::optional<BigInt> enumerated, formula;
    if (via != "formula")
        enumerated = BigInt(enumerate_minimal_forts(generate(spec), resolve_budget(budget_flag))
                                .forts.size());
    if (via != "enumerate") formula = closed_count(spec);
    std::string match = "not-comparable";
    if (enumerated && formula) match = *enumerated == *formula ? "match" : "mismatch";
    if (human) {
        out << "family      " << family_spec_to_string(spec) << "\n";
        out << "enumerated  " << (enumerated ? enumerated->str() : "-") << "\n";
        out << "formula     " << (formula ? formula->str() : "-") << "\n";
        out << "match       " << match << "\n";
    } else {
        json doc;
        doc["family"] = family_spec_to_string(spec);
        if (enumerated) doc["enumerated"] = enumerated->str();
        if (formula) doc["formula"] = formula->str();
        doc["match"] = match;
        detail::emit(doc, out);
    }
    return match == "mismatch" ? kExitMismatch : kExitOk;
}

inline int cmd_zf(const std::string& token, const std::string& method, bool certificate,
                  bool human, std::ostream& out) {
    const Graph g = load_graph_argument(token);
    if (method == "brute" && certificate)
        throw std::invalid_argument("--certificate requires --method fortcover");
    int z = 0;
    std::optional<FortCoverResult> res;
    if (method == "brute") {
        z = zf_number_bruteforce(g);
    } else {
        res = zf_number_fortcover(g);
        z = res->zf_number;
    }
    if (human) {
        out << "n       " << g.order() << "\n";
        out << "method  " << method << "\n";
        out << "Z       " << z << "\n";
        if (certificate && res) {
            out << "hitting set  " << detail::join_ints(res->certificate.hitting_set.to_vector(), " ")
                << "\n";
            out << "rounds  " << res->certificate.rounds << "\n";
            for (const auto& f : res->certificate.forts.forts)
                out << "fort    " << detail::join_ints(f.to_vector(), " ") << "\n";
        }
        return kExitOk;
    }
    json doc;
    doc["n"] = g.order();
    doc["method"] = method;
    doc["zero_forcing_number"] = z;
    if (certificate && res) {
        json cert;
        cert["hitting_set"] = res->certificate.hitting_set.to_vector();
        cert["forts"] = detail::fort_array(res->certificate.forts.forts);
        cert["rounds"] = res->certificate.rounds;
        doc["certificate"] = cert;
    }
    detail::emit(doc, out);
    return kExitOk;
}

inline int cmd_product(const std::string& left, const std::string& right, const std::string& op,
                       const std::optional<int>& left_vertex, const std::optional<int>& right_vertex,
                       bool human, std::ostream& out) {
    if ((left_vertex || right_vertex) && op != "vsum")
        throw std::invalid_argument("--left-vertex/--right-vertex only apply to --op vsum");
    const Graph a = load_graph_argument(left);
    const Graph b = load_graph_argument(right);
    ProductGraph p;
    if (op == "join") {
        p = join_graphs(a, b);
    } else if (op == "corona") {
        p = corona(a, b);
    } else if (op == "cartesian") {
        p = cartesian(a, b);
    } else {
        if (!left_vertex || !right_vertex)
            throw std::invalid_argument("--op vsum requires --left-vertex and --right-vertex");
        p = vertex_sum(a, *left_vertex, b, *right_vertex);
    }
    const auto edge_pairs = p.graph.edges();
    if (human) {
        out << "op  " << op << "\n";
        out << "n   " << p.graph.order() << "\n";
        out << "m   " << edge_pairs.size() << "\n";
        out << to_edge_list(p.graph);
        return kExitOk;
    }
    json doc;
    doc["op"] = op;
    doc["n"] = p.graph.order();
    doc["m"] = static_cast<std::int64_t>(edge_pairs.size());
    json edges = json::array();
    for (auto [u, v] : edge_pairs) edges.push_back(json::array({u, v}));
    doc["edges"] = edges;
    if (!p.left_map.empty()) doc["left_map"] = p.left_map;
    if (!p.right_map.empty()) doc["right_map"] = p.right_map;
    if (!p.right_copy_maps.empty()) doc["copy_maps"] = p.right_copy_maps;
    if (p.merged_vertex) doc["merged_vertex"] = *p.merged_vertex;
    if (op == "cartesian") {
        doc["left_order"] = a.order();
        doc["right_order"] = b.order();
    }
    detail::emit(doc, out);
    return kExitOk;
}

inline int cmd_verify_table1(const std::string& manifest_path,
                             const std::optional<std::uint64_t>& budget_flag, bool human,
                             std::ostream& out) {
    json manifest;
    if (manifest_path.empty()) {
        manifest = json::parse(default_table1_manifest());
    } else {
        std::ifstream in(manifest_path);
        if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
        try {
            manifest = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("bad manifest JSON: " + std::string(e.what()));
        }
    }
    if (!manifest.contains("version") || manifest["version"] != 1)
        throw std::invalid_argument("unsupported manifest version");
    const std::uint64_t budget = resolve_budget(budget_flag);
    bool all_pass = true;
    int checks = 0;
    json rows = json::array();
    std::ostringstream table;
    table << std::left << std::setw(28) << "row" << std::setw(24) << "instance" << std::setw(13)
          << "expected" << std::setw(13) << "enumerated"
          << "result\n";
    for (const auto& row : manifest.at("rows")) {
        const std::string label = row.at("label").get<std::string>();
        const std::string relation = row.at("relation").get<std::string>();
        const std::string expect = row.at("expect").get<std::string>();
        if (relation != "eq" && relation != "ge")
            throw std::invalid_argument("unknown relation: " + relation);
        json results = json::array();
        for (const auto& inst : row.at("instances")) {
            const std::string spec_text = inst.get<std::string>();
            const FamilySpec spec = parse_family_spec(spec_text);
            const BigInt expected = expected_for(expect, spec);
            const BigInt enumerated(enumerate_minimal_forts(generate(spec), budget).forts.size());
            const bool pass = relation == "eq" ? enumerated == expected : enumerated >= expected;
            all_pass = all_pass && pass;
            ++checks;
            results.push_back({{"spec", spec_text},
                               {"expected", expected.str()},
                               {"enumerated", enumerated.str()},
                               {"pass", pass}});
            table << std::left << std::setw(28) << label << std::setw(24) << spec_text
                  << std::setw(13) << expected.str() << std::setw(13) << enumerated.str()
                  << (pass ? "pass" : "FAIL") << "\n";
        }
        rows.push_back({{"label", label}, {"relation", relation}, {"instances", results}});
    }
    if (human) {
        out << table.str();
        out << (all_pass ? "all " + std::to_string(checks) + " checks pass"
                         : "some checks FAILED")
            << "\n";
    } else {
        json doc;
        doc["all_pass"] = all_pass;
        doc["checks"] = checks;
        doc["rows"] = rows;
        detail::emit(doc, out);
    }
    return all_pass ? kExitOk : kExitMismatch;
}

inline int cmd_wheel_seq(int n_max, const std::optional<std::uint64_t>& budget_flag, bool human,
                         std::ostream& out) {
    if (n_max < 4) throw std::invalid_argument("wheel-seq: requires n_max >= 4");
    if (n_max > policy::kWheelSequenceMaxOrder)
        throw ResourceLimitError("wheel-seq: n_max " + std::to_string(n_max) +
                                 " exceeds the cap of " +
                                 std::to_string(policy::kWheelSequenceMaxOrder));
    const std::uint64_t budget = resolve_budget(budget_flag);
    std::vector<int> counts;
    for (int n = 4; n <= n_max; ++n) {
        const Graph w = generate({FamilyKind::wheel, {n}});
        counts.push_back(count_minimal_forts_containing(w, n - 1, budget));
    }
    if (human) {
        out << detail::join_ints(counts, ",") << "\n";
    } else {
        json doc;
        doc["from"] = 4;
        doc["to"] = n_max;
        doc["counts"] = counts;
        detail::emit(doc, out);
    }
    return kExitOk;
}

inline int cmd_sperner_check(const std::string& token,
                             const std::optional<std::uint64_t>& budget_flag, bool human,
                             std::ostream& out) {
    const Graph g = load_graph_argument(token);
    if (g.order() < 1)
        throw std::invalid_argument("sperner-check: graph must have at least one vertex");
    const FortCollection c = enumerate_minimal_forts(g, resolve_budget(budget_flag));
    const BigInt count(c.forts.size());
    const BigInt bound = sperner_bound(g.order());
    const bool strict = is_connected(g) && g.order() >= 6;
    const bool pass = strict ? count < bound : count <= bound;
    if (human) {
        out << "n       " << g.order() << "\n";
        out << "count   " << count.str() << "\n";
        out << "bound   " << bound.str() << (strict ? "  (strict)" : "") << "\n";
        out << "result  " << (pass ? "pass" : "FAIL") << "\n";
    } else {
        json doc;
        doc["n"] = g.order();
        doc["count"] = count.str();
        doc["bound"] = bound.str();
        doc["strict"] = strict;
        doc["pass"] = pass;
        detail::emit(doc, out);
    }
    return pass ? kExitOk : kExitMismatch;
}

inline int cmd_tree_check(const std::string& token,
                          const std::optional<std::uint64_t>& budget_flag, bool human,
                          std::ostream& out) {
    const Graph t = load_graph_argument(token);
    if (!is_tree(t)) throw std::invalid_argument("tree-check: input graph is not a tree");
    const FortCollection c = enumerate_minimal_forts(t, resolve_budget(budget_flag));
    int pairs = 0;
    bool all_pass = true;
    for (const auto& f : c.forts) {
        const TreePathReport r = check_tree_induced_path(t, f);
        pairs += r.pairs_checked;
        all_pass = all_pass && r.all_pass;
    }
    if (human) {
        out << "n              " << t.order() << "\n";
        out << "minimal forts  " << c.forts.size() << "\n";
        out << "pairs checked  " << pairs << "\n";
        out << "result         " << (all_pass ? "pass" : "FAIL") << "\n";
    } else {
        json doc;
        doc["n"] = t.order();
        doc["fort_count"] = static_cast<std::int64_t>(c.forts.size());
        doc["pairs_checked"] = pairs;
        doc["all_pass"] = all_pass;
        detail::emit(doc, out);
    }
    return all_pass ? kExitOk : kExitMismatch;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal forts, fort counts, and zero forcing numbers of graphs"};
    app.require_subcommand(1);

    bool human = false;
    std::optional<std::uint64_t> budget;

    std::string gen_family, gen_format = "edgelist", gen_out;
    std::vector<std::string> gen_params;
    CLI::App* gen = app.add_subcommand("gen", "write a family graph as an edge list or DOT");
    gen->add_option("family", gen_family, "family name, e.g. cycle")->required();
    gen->add_option("params", gen_params, "family parameters, e.g. 4 or 2,2");
    gen->add_option("--format", gen_format, "edgelist or dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    gen->add_option("--out", gen_out, "write to a file instead of stdout");

    std::string forts_graph;
    bool forts_minimal = false, forts_oracle = false, forts_count_only = false;
    CLI::App* forts = app.add_subcommand("forts", "enumerate the forts of a graph");
    forts->add_option("graph", forts_graph, "family spec or edge-list file")->required();
    forts->add_flag("--minimal", forts_minimal, "minimal forts only (default scans every fort)");
    forts->add_flag("--oracle", forts_oracle, "use the subset-scan enumerator");
    forts->add_flag("--count-only", forts_count_only, "omit the fort lists");
    forts->add_option("--budget", budget, "search-node budget");
    forts->add_flag("--human", human, "aligned text instead of JSON");

    std::string count_spec, count_via = "both";
    CLI::App* count = app.add_subcommand("count", "compare enumerated and closed-form counts");
    count->add_option("family", count_spec, "family spec, e.g. cycle:9")->required();
    count->add_option("--via", count_via, "formula, enumerate, or both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));
    count->add_option("--budget", budget, "search-node budget");
    count->add_flag("--human", human, "aligned text instead of JSON");

    std::string zf_graph, zf_method = "fortcover";
    bool zf_certificate = false;
    CLI::App* zf = app.add_subcommand("zf", "compute the zero forcing number");
    zf->add_option("graph", zf_graph, "family spec or edge-list file")->required();
    zf->add_option("--method", zf_method, "brute or fortcover")
        ->check(CLI::IsMember({"brute", "fortcover"}));
    zf->add_flag("--certificate", zf_certificate, "emit the fort list and hitting set");
    zf->add_flag("--human", human, "aligned text instead of JSON");

    std::string prod_left, prod_right, prod_op;
    std::optional<int> prod_lv, prod_rv;
    CLI::App* product = app.add_subcommand("product", "construct a graph product");
    product->add_option("left", prod_left, "family spec or edge-list file")->required();
    product->add_option("right", prod_right, "family spec or edge-list file")->required();
    product->add_option("--op", prod_op, "join, corona, vsum, or cartesian")
        ->required()
        ->check(CLI::IsMember({"join", "corona", "vsum", "cartesian"}));
    product->add_option("--left-vertex", prod_lv, "merge vertex in the left factor (vsum)");
    product->add_option("--right-vertex", prod_rv, "merge vertex in the right factor (vsum)");
    product->add_flag("--human", human, "aligned text instead of JSON");

    std::string table_manifest;
    CLI::App* table = app.add_subcommand("verify-table1",
                                         "check closed-form counts against enumeration");
    table->add_option("--manifest", table_manifest, "instance manifest JSON file");
    table->add_option("--budget", budget, "search-node budget");
    table->add_flag("--human", human, "aligned text instead of JSON");

    int wheel_max = 16;
    CLI::App* wheel = app.add_subcommand("wheel-seq",
                                         "hub-containing minimal fort counts of wheels");
    wheel->add_option("n_max", wheel_max, "largest wheel order, 4..20");
    wheel->add_option("--budget", budget, "search-node budget");
    wheel->add_flag("--human", human, "comma-separated counts instead of JSON");

    std::string sperner_graph;
    CLI::App* sperner = app.add_subcommand("sperner-check",
                                           "check the antichain bound on the fort count");
    sperner->add_option("graph", sperner_graph, "family spec or edge-list file")->required();
    sperner->add_option("--budget", budget, "search-node budget");
    sperner->add_flag("--human", human, "aligned text instead of JSON");

    std::string tree_graph;
    CLI::App* tree = app.add_subcommand("tree-check",
                                        "check fort pair connectivity through induced paths");
    tree->add_option("graph", tree_graph, "family spec or edge-list file")->required();
    tree->add_option("--budget", budget, "search-node budget");
    tree->add_flag("--human", human, "aligned text instead of JSON");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_format, gen_out, out);
        if (forts->parsed())
            return cmd_forts(forts_graph, forts_minimal, forts_oracle, forts_count_only, budget,
                             human, out);
        if (count->parsed()) return cmd_count(count_spec, count_via, budget, human, out);
        if (zf->parsed()) return cmd_zf(zf_graph, zf_method, zf_certificate, human, out);
        if (product->parsed())
            return cmd_product(prod_left, prod_right, prod_op, prod_lv, prod_rv, human, out);
        if (table->parsed()) return cmd_verify_table1(table_manifest, budget, human, out);
        if (wheel->parsed()) return cmd_wheel_seq(wheel_max, budget, human, out);
        if (sperner->parsed()) return cmd_sperner_check(sperner_graph, budget, human, out);
        if (tree->parsed()) return cmd_tree_check(tree_graph, budget, human, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fortlab::cli
