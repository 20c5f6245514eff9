#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigroots/graph.hpp"
#include "sigroots/polynomial.hpp"
#include "sigroots/root_analysis.hpp"

namespace sigroots {

// H-family adjoint roots.

enum class ParamRule { constant, equal_n };

/// k or t as a function of the clique size n: a constant, or n itself.
struct HFamilyParam {
    ParamRule rule = ParamRule::constant;
    int value = 0;

    int resolve(int n) const { return rule == ParamRule::equal_n ? n : value; }
    /// "n" or a nonnegative integer.
    static HFamilyParam parse(const std::string& text);
};

struct HFamilyResult {
    HGraphSpec spec;
    bool skipped = false;
    std::string skip_reason;
    IntPoly adjoint;
    bool has_nonreal = false;  // exact
    std::vector<NumericRoot> nonreal_roots;
    double max_abs_im = 0;
};

std::vector<HFamilyResult> h_family_roots(int n_min, int n_max, HFamilyParam k, HFamilyParam t,
                                          double residual_bound = default_residual_bound);
/// "n,k,t,re,im" rows, one per nonreal root.
std::string h_family_roots_csv(const std::vector<HFamilyResult>& results);
/// "n,k,t,vertices,status,nonreal_roots,max_abs_im" rows, one per tuple.
std::string h_family_summary_csv(const std::vector<HFamilyResult>& results);

// Minimum real root of the edgeless graph.

struct StirlingTrendRow {
    int n = 0;
    RationalInterval bracket;
    double min_root = 0;
    double ratio = 0;  // min_root / n; tends to -e
    bool all_real = false;
};

std::vector<StirlingTrendRow> stirling_trend_report(int n_max);
std::string stirling_trend_csv(const std::vector<StirlingTrendRow>& rows);

// Edge-deletion monotonicity of the minimum real sigma-root.

struct MonotonicityReport {
    int trials = 0;
    int checked = 0;  // (graph, edge) pairs; equals trials
    int skipped = 0;  // edgeless draws, redrawn
    int violations = 0;
    std::vector<std::string> counterexamples;  // "graph6 u-v"
};

MonotonicityReport monotonicity_suite(int trials, int n_max, std::uint64_t seed, double tolerance = 1e-9);

/// True unless the brackets certify min root of sigma(g - uv) exceeds that of sigma(g) by more than tolerance.
bool deletion_keeps_min_root(const Graph& g, int u, int v, double tolerance = 1e-9);

// Polynomial identities over graph families.

struct IdentityCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
};

struct IdentityConfig {
    int triangle_free_max = 6;
    int tree_max = 9;
    int join_max = 4;
};

std::vector<IdentityCheck> identity_suite(const IdentityConfig& cfg = {});

}  // namespace sigroots
