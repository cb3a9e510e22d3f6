#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skelgraph/graph.hpp"

namespace skelgraph {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One verification record. FAIL details carry the witness (a label pair,
/// a cycle, a mapping failure); SKIPPED details say which cap was hit.
struct CheckResult {
    std::string id;
    int q = 0, n = 0;  // 0 for grid-independent checks
    CheckStatus status = CheckStatus::fail;
    std::string detail;
    double wall_ms = 0.0;
};

struct CheckOptions {
    int perfect_cap = 64;  // twin-reduced size cap for the hole search
    int color_cap = 64;    // vertex cap for exact clique/coloring
    int iso_cap = 512;     // vertex cap for isomorphism search
};

/// The known check ids, in canonical order: igv, ugv, gamma-iso, reduced,
/// boolean-compress, chain-replace, lemma22, chordal-cor, perfect-cor,
/// diameter, weakly-perfect.
const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);

/// Whether a check depends on (q, n); chain-replace does not.
bool check_uses_grid(const std::string& id);

/// Run one check. CapExceeded from the underlying searches becomes a
/// SKIPPED result; invalid parameters propagate as exceptions.
CheckResult run_check(const std::string& id, int q, int n, const CheckOptions& opts = {});

struct SweepConfig {
    std::vector<int> qs{2, 3};
    std::vector<int> ns{1, 2, 3, 4};
    // Sweep defaults let every check on the default grid run to a verdict
    // (exact coloring at q=3, n=4 needs 80 vertices).
    CheckOptions opts{64, 128, 512};
};

/// Every check over the grid, grid-independent checks once.
std::vector<CheckResult> run_sweep(const SweepConfig& config);

/// Plain-text table. with_times adds the wall-time column; leave it off
/// for output that must be byte-identical across reruns.
std::string report_table(const std::vector<CheckResult>& results, bool with_times = true);

/// Machine-readable report. Wall times are left out so reruns are
/// byte-identical.
nlohmann::ordered_json report_json(const SweepConfig& config,
                                   const std::vector<CheckResult>& results);

/// Certificate validators used by the checks and re-usable by harnesses.
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle, bool in_complement,
                      bool require_odd);
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

} // namespace skelgraph
