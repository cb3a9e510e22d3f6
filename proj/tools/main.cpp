#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "skelgraph/serialize.hpp"
#include "skelgraph/verify.hpp"
#include "skelgraph/vspace.hpp"
#include "skelgraph/zdg.hpp"

namespace fs = std::filesystem;
using namespace skelgraph;

namespace {

// Exit codes: 0 all checks pass, 1 some check failed, 2 bad configuration.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void write_atomic(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << bytes;
    }
    fs::rename(tmp, path);
}

// "2,3:1-4" -> q list and n list; ranges allowed in either part. Empty
// sides are legal and yield an empty sweep.
std::pair<std::vector<int>, std::vector<int>> parse_grid(const std::string& grid) {
    auto parse_list = [](const std::string& part) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw Error("empty grid entry");
            auto dash = item.find('-');
            if (dash != std::string::npos && dash > 0) {
                int lo = std::stoi(item.substr(0, dash));
                int hi = std::stoi(item.substr(dash + 1));
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            } else {
                out.push_back(std::stoi(item));
            }
        }
        return out;
    };
    auto colon = grid.find(':');
    if (colon == std::string::npos) throw Error("grid must look like qlist:nlist, e.g. 2,3:1-4");
    return {parse_list(grid.substr(0, colon)), parse_list(grid.substr(colon + 1))};
}

int cmd_build(const std::string& kind, int q, int n, const std::string& format,
              const std::string& out_dir) {
    std::string bytes;
    const std::string stem = kind + "_q" + std::to_string(q) + "_n" + std::to_string(n);
    const bool dot = format == "dot";

    auto graph_out = [&](const Graph& g) {
        bytes = dot ? graph_to_dot(g, stem) : canonical_bytes(graph_to_json(g));
    };
    auto poset_out = [&](const Poset& p) {
        bytes = dot ? poset_to_dot(p, stem) : canonical_bytes(poset_to_json(p));
    };

    if (kind == "ig") graph_out(build_ig(q, n));
    else if (kind == "ug") graph_out(build_ug(q, n));
    else if (kind == "zdg-poset") graph_out(zdg_poset(build_l_lattice(q, n).poset()).graph);
    else if (kind == "ring-zdg") graph_out(ring_zdg(q, n));
    else if (kind == "L") poset_out(build_l_lattice(q, n).poset());
    else if (kind == "dualL") poset_out(build_l_lattice(q, n).dual().poset());
    else if (kind == "boolean-v") poset_out(build_boolean_vlattice(q, n).poset());
    else throw Error("unknown build kind '" + kind + "'");

    fs::path path = fs::path(out_dir) / (stem + (dot ? ".dot" : ".json"));
    fs::create_directories(out_dir);
    write_atomic(path, bytes);
    std::cout << path.string() << "\n";
    return kExitPass;
}

int cmd_verify(const std::string& id, int q, int n, const CheckOptions& opts) {
    auto result = run_check(id, q, n, opts);
    std::cout << report_table({result});
    return result.status == CheckStatus::fail ? kExitFail : kExitPass;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_dir) {
    auto results = run_sweep(config);
    std::cout << report_table(results);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_atomic(fs::path(out_dir) / "report.json",
                     canonical_bytes(report_json(config, results)));
        write_atomic(fs::path(out_dir) / "report.txt", report_table(results, false));
        std::cout << "report written to " << out_dir << "\n";
    }
    for (const auto& r : results)
        if (r.status == CheckStatus::fail) return kExitFail;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "skelgraph: component graphs of finite vector spaces, the supporting\n"
        "lattices, zero-divisor graphs, and exhaustive verification of their\n"
        "structure theory at desk scale"};
    app.require_subcommand(1);

    std::string kind, format = "json", out_dir = ".", theorem, grid;
    int q = 2, n = 2;
    CheckOptions opts;
    opts.color_cap = 128;  // default grid includes an 80-vertex coloring instance

    auto* build = app.add_subcommand("build", "construct an object and write JSON or DOT");
    build->add_option("--kind", kind, "ig | ug | L | dualL | zdg-poset | ring-zdg | boolean-v")
        ->required();
    build->add_option("--q", q, "field cardinality")->required();
    build->add_option("--n", n, "dimension")->required();
    build->add_option("--format", format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    build->add_option("--out", out_dir, "output directory (default .)");

    auto* verify = app.add_subcommand("verify", "run one structure check at (q, n)");
    verify->add_option("--theorem", theorem, "one of: " + [] {
                           std::string s;
                           for (const auto& id : check_ids()) s += id + " ";
                           return s;
                       }())
        ->required();
    verify->add_option("--q", q, "field cardinality");
    verify->add_option("--n", n, "dimension");
    verify->add_option("--perfect-cap", opts.perfect_cap, "hole-search size cap (default 64)");
    verify->add_option("--color-cap", opts.color_cap, "coloring size cap (default 128)");

    auto* sweep = app.add_subcommand("sweep", "run every check over a (q, n) grid");
    sweep->add_option("--grid", grid, "qlist:nlist, e.g. 2,3:1-4 (default 2,3:1-4)");
    sweep->add_option("--out", out_dir, "directory for report.json / report.txt");
    sweep->add_option("--perfect-cap", opts.perfect_cap, "hole-search size cap (default 64)");
    sweep->add_option("--color-cap", opts.color_cap, "coloring size cap (default 128)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (build->parsed()) return cmd_build(kind, q, n, format, out_dir);
        if (verify->parsed()) {
            if (!is_check_id(theorem)) throw Error("unknown theorem id '" + theorem + "'");
            return cmd_verify(theorem, q, n, opts);
        }
        SweepConfig config;
        config.opts = opts;
        if (!grid.empty()) std::tie(config.qs, config.ns) = parse_grid(grid);
        for (int qv : config.qs)
            if (!Field::supported(qv)) throw UnsupportedCardinality(qv);
        for (int nv : config.ns)
            if (nv < 1) throw Error("dimensions must be at least 1");
        return cmd_sweep(config, sweep->count("--out") ? out_dir : "");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
