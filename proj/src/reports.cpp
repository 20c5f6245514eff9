#include "sigroots/reports.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sigroots/enumerate.hpp"
#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"
#include "sigroots/graph_polynomials.hpp"
#include "sigroots/survey.hpp"

namespace sigroots {

namespace {

constexpr double imaginary_threshold = 1e-7;

}  // namespace

HFamilyParam HFamilyParam::parse(const std::string& text) {
    if (text == "n") return {ParamRule::equal_n, 0};
    std::size_t used = 0;
    int value = -1;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 0) throw domain_error("expected \"n\" or a nonnegative integer, got \"" + text + "\"");
    return {ParamRule::constant, value};
}

std::vector<HFamilyResult> h_family_roots(int n_min, int n_max, HFamilyParam k_rule, HFamilyParam t_rule,
                                          double residual_bound) {
    if (n_min < 1 || n_max < n_min) throw domain_error("h_family_roots: need 1 <= n_min <= n_max");
    std::vector<HFamilyResult> results;
    for (int n = n_min; n <= n_max; ++n) {
        HFamilyResult r;
        r.spec = {n, k_rule.resolve(n), t_rule.resolve(n)};
        try {
            h_graph(r.spec);
        } catch (const std::exception& e) {
            r.skipped = true;
            r.skip_reason = e.what();
            results.push_back(std::move(r));
            continue;
        }
        r.adjoint = h_graph_adjoint_poly(r.spec);
        r.has_nonreal = has_nonreal_roots(r.adjoint);
        if (r.has_nonreal) {
            for (const auto& root : numeric_roots(r.adjoint, residual_bound)) {
                if (std::abs(root.value.imag()) <= imaginary_threshold) continue;
                r.nonreal_roots.push_back(root);
                r.max_abs_im = std::max(r.max_abs_im, std::abs(root.value.imag()));
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string h_family_roots_csv(const std::vector<HFamilyResult>& results) {
    std::ostringstream out;
    out << csv_schema_tag << "\nn,k,t,re,im\n";
    for (const auto& r : results)
        for (const auto& root : r.nonreal_roots)
            out << r.spec.clique << ',' << r.spec.paths << ',' << r.spec.path_length << ','
                << format_decimal(root.value.real()) << ',' << format_decimal(root.value.imag()) << '\n';
    return out.str();
}

std::string h_family_summary_csv(const std::vector<HFamilyResult>& results) {
    std::ostringstream out;
    out << csv_schema_tag << "\nn,k,t,vertices,status,nonreal_roots,max_abs_im\n";
    for (const auto& r : results) {
        const auto& s = r.spec;
        out << s.clique << ',' << s.paths << ',' << s.path_length << ','
            << static_cast<long long>(s.clique) + static_cast<long long>(s.paths) * s.path_length << ',';
        if (r.skipped) {
            out << "skipped,,\n";
            continue;
        }
        out << (r.has_nonreal ? "nonreal" : "real") << ',' << r.nonreal_roots.size() << ','
            << format_decimal(r.max_abs_im) << '\n';
    }
    return out.str();
}

std::vector<StirlingTrendRow> stirling_trend_report(int n_max) {
    if (n_max < 2 || n_max > 40) throw domain_error("stirling_trend_report: n_max must be in 2..40");
    std::vector<StirlingTrendRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        IntPoly sigma = edgeless_sigma(n);
        StirlingTrendRow row;
        row.n = n;
        row.bracket = min_real_root(sigma);
        row.min_root = row.bracket.midpoint().get_d();
        row.ratio = row.min_root / n;
        row.all_real = !has_nonreal_roots(sigma);
        rows.push_back(row);
    }
    return rows;
}

std::string stirling_trend_csv(const std::vector<StirlingTrendRow>& rows) {
    std::ostringstream out;
    out << csv_schema_tag << "\nn,min_root,ratio,ratio_over_e,all_real\n";
    for (const auto& r : rows)
        out << r.n << ',' << format_decimal(r.min_root) << ',' << format_decimal(r.ratio) << ','
            << format_decimal(r.ratio / std::exp(1.0)) << ',' << (r.all_real ? "true" : "false") << '\n';
    return out.str();
}

bool deletion_keeps_min_root(const Graph& g, int u, int v, double tolerance) {
    const RationalInterval before = min_real_root(sigma_poly(g), tolerance);
    const RationalInterval after = min_real_root(sigma_poly(delete_edge(g, u, v)), tolerance);
    return after.lo <= before.hi + Rational(tolerance);
}

MonotonicityReport monotonicity_suite(int trials, int n_max, std::uint64_t seed, double tolerance) {
    if (n_max < 2 || n_max > 8) throw domain_error("monotonicity_suite: n_max must be in 2..8");
    if (trials < 0) throw domain_error("monotonicity_suite: trials must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, n_max);
    std::bernoulli_distribution coin(0.5);
    MonotonicityReport report;
    report.trials = trials;
    while (report.checked < trials) {
        Graph g(order(rng));
        for (int v = 1; v < g.order(); ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) g.add_edge(u, v);
        const auto edges = g.edges();
        if (edges.empty()) {
            ++report.skipped;
            continue;
        }
        const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        ++report.checked;
        if (!deletion_keeps_min_root(g, u, v, tolerance)) {
            ++report.violations;
            report.counterexamples.push_back(emit_graph6(g) + ' ' + std::to_string(u) + '-' + std::to_string(v));
        }
    }
    return report;
}

namespace {

void record(IdentityCheck& check, bool ok, const std::string& example) {
    ++check.checked;
    if (ok) return;
    if (check.failures++ == 0) check.first_counterexample = example;
}

IntPoly neg_x_power(int n) { return IntPoly::monomial(n % 2 == 0 ? Integer(1) : Integer(-1), n); }

}  // namespace

std::vector<IdentityCheck> identity_suite(const IdentityConfig& cfg) {
    IdentityCheck triangle{"triangle_free", 0, 0, {}};
    for (int n = 1; n <= cfg.triangle_free_max; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            if (!is_triangle_free(g)) continue;
            record(triangle, sigma_of_complement_substituted(g) == neg_x_power(n) * matching_poly(g), emit_graph6(g));
        }

    IdentityCheck forest{"forest", 0, 0, {}};
    for (int n = 1; n <= cfg.tree_max; ++n)
        for (const Graph& g : enumerate_trees(n))
            record(forest, characteristic_poly(g) == matching_poly(g), emit_graph6(g));

    IdentityCheck joins{"join", 0, 0, {}};
    std::vector<std::pair<Graph, IntPoly>> small;
    for (int n = 1; n <= cfg.join_max; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) small.emplace_back(g, sigma_poly(g));
    for (const auto& [g, sg] : small)
        for (const auto& [h, sh] : small)
            record(joins, sigma_poly(join(g, h)) == sg * sh, emit_graph6(g) + " v " + emit_graph6(h));

    return {triangle, forest, joins};
}

}  // namespace sigroots
