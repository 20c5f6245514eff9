#include "sigroots/limit_roots.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "sigroots/errors.hpp"

namespace sigroots {

void LinearRecursion::validate() const {
    const int k = order();
    if (k < 1 || k > max_recursion_order)
        throw domain_error("LinearRecursion: order must be between 1 and " + std::to_string(max_recursion_order));
    if (static_cast<int>(initial.size()) != k)
        throw domain_error("LinearRecursion: need exactly k initial polynomials");
    if (coefficients.back().is_zero()) throw domain_error("LinearRecursion: f_k must be nonzero");
}

LinearRecursion constant_branching_recursion(int n) {
    if (n < 1) throw domain_error("constant_branching_recursion: n must be positive");
    return LinearRecursion{{IntPoly{0, -1}, IntPoly{n}}, {IntPoly{1}, IntPoly{0, 1}}};
}

std::vector<IntPoly> generate_full_sequence(const LinearRecursion& r, int upto) {
    r.validate();
    const int k = r.order();
    if (upto < k) throw domain_error("generate_sequence: need upto >= k");
    std::vector<IntPoly> p = r.initial;
    for (int m = k; m <= upto; ++m) {
        IntPoly next;
        for (int j = 1; j <= k; ++j) next -= r.coefficients[j - 1] * p[m - j];
        p.push_back(std::move(next));
    }
    return p;
}

std::vector<IntPoly> generate_sequence(const LinearRecursion& r, int upto) {
    auto full = generate_full_sequence(r, upto);
    return {full.begin() + r.order(), full.end()};
}

std::vector<IntPoly> balanced_tree_recursion(const BalancedTreeSpec& spec) {
    balanced_tree_order(spec);  // validates
    const int k = static_cast<int>(spec.branching.size());
    // branching = (n_k, ..., n_1), so n_i sits at index k - i.
    auto n = [&](int i) { return spec.branching[k - i]; };
    std::vector<IntPoly> p{IntPoly{1}, IntPoly{0, 1}};
    for (int j = 2; j <= k; ++j) p.push_back(IntPoly{0, 1} * p[j - 1] - IntPoly{n(j - 1)} * p[j - 2]);
    return p;
}

CharRoots2 char_roots_deg2(const IntPoly& f1, const IntPoly& f2, cdouble x) {
    cdouble b = eval_float(f1, x);
    cdouble c = eval_float(f2, x);
    cdouble root = std::sqrt(b * b - 4.0 * c);
    cdouble l1 = (-b + root) / 2.0;
    cdouble l2 = (-b - root) / 2.0;
    if (std::abs(l2) > std::abs(l1)) std::swap(l1, l2);
    return {l1, l2};
}

namespace {

/// Durand-Kerner on the monic polynomial lambda^k + a_1 lambda^(k-1) + ... + a_k.
std::vector<cdouble> monic_roots(const std::vector<cdouble>& a) {
    const int k = static_cast<int>(a.size());
    auto eval = [&](cdouble z) {
        cdouble v = 1;
        for (cdouble c : a) v = v * z + c;
        return v;
    };
    double radius = 1;
    for (int j = 0; j < k; ++j) radius = std::max(radius, 2 * std::pow(std::abs(a[j]), 1.0 / (j + 1)));
    std::vector<cdouble> z(k);
    for (int i = 0; i < k; ++i) z[i] = std::polar(radius, 2 * M_PI * i / k + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < k; ++i) {
            cdouble denom = 1;
            for (int j = 0; j < k; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == cdouble(0)) denom = 1e-300;
            cdouble step = eval(z[i]) / denom;
            z[i] -= step;
            moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

}  // namespace

std::vector<cdouble> char_roots(const LinearRecursion& r, cdouble x) {
    r.validate();
    std::vector<cdouble> roots;
    if (r.order() == 2) {
        auto pair = char_roots_deg2(r.coefficients[0], r.coefficients[1], x);
        return {pair.dominant, pair.subdominant};
    }
    std::vector<cdouble> a;
    for (const auto& f : r.coefficients) a.push_back(eval_float(f, x));
    roots = r.order() == 1 ? std::vector<cdouble>{-a[0]} : monic_roots(a);
    std::stable_sort(roots.begin(), roots.end(), [](cdouble u, cdouble v) { return std::abs(u) > std::abs(v); });
    return roots;
}

AlphaPair alpha_coefficients_deg2(const LinearRecursion& r, cdouble x) {
    r.validate();
    if (r.order() != 2) throw domain_error("alpha_coefficients_deg2: recursion must have order 2");
    auto [l1, l2] = char_roots_deg2(r.coefficients[0], r.coefficients[1], x);
    cdouble gap = l1 - l2;
    if (std::abs(gap) <= 1e-12 * std::max(1.0, std::abs(l1)))
        throw domain_error("alpha_coefficients_deg2: repeated characteristic root at this point");
    cdouble p0 = eval_float(r.initial[0], x);
    cdouble p1 = eval_float(r.initial[1], x);
    return {(p1 - l2 * p0) / gap, (l1 * p0 - p1) / gap};
}

const char* to_string(LimitFlag flag) {
    switch (flag) {
        case LimitFlag::equimodular:
            return "equimodular";
        case LimitFlag::alpha_zero:
            return "alpha_zero";
        case LimitFlag::none:
            break;
    }
    return "none";
}

LimitFlag classify_point(const LinearRecursion& r, cdouble x, double tol) {
    auto lambda = char_roots(r, x);
    if (lambda.size() >= 2) {
        double top = std::abs(lambda[0]);
        if (std::abs(top - std::abs(lambda[1])) <= tol * std::max(top, 1.0)) return LimitFlag::equimodular;
    }
    if (r.order() == 2) {
        auto alpha = alpha_coefficients_deg2(r, x);
        if (std::abs(alpha.dominant) <= tol) return LimitFlag::alpha_zero;
    }
    return LimitFlag::none;
}

LimitSetSample equimodular_scan(const LinearRecursion& r, const Rectangle& region, double grid_step, double tol,
                                int workers) {
    r.validate();
    if (!(grid_step > 0)) throw domain_error("equimodular_scan: grid step must be positive");
    if (region.re_min > region.re_max || region.im_min > region.im_max)
        throw domain_error("equimodular_scan: empty region");
    workers = std::max(1, workers);

    // Grid points are integer multiples of the half step; base points use even indices.
    const double half = grid_step / 2;
    auto first = [&](double lo) { return 2 * static_cast<long>(std::ceil(lo / grid_step - 1e-9)); };
    auto last = [&](double hi) { return 2 * static_cast<long>(std::floor(hi / grid_step + 1e-9)); };
    const long re0 = first(region.re_min), re1 = last(region.re_max);
    const long im0 = first(region.im_min), im1 = last(region.im_max);

    std::vector<std::pair<long, long>> base;
    for (long j = im0; j <= im1; j += 2)
        for (long i = re0; i <= re1; i += 2) base.emplace_back(i, j);

    auto evaluate = [&](const std::vector<std::pair<long, long>>& idx) {
        std::vector<LimitSamplePoint> pts(idx.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s) {
                cdouble x(idx[s].first * half, idx[s].second * half);
                pts[s] = {x, classify_point(r, x, tol)};
            }
        };
        if (workers == 1 || idx.size() < 1024) {
            work(0, idx.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (idx.size() + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::size_t b = std::min(idx.size(), w * chunk), e = std::min(idx.size(), b + chunk);
                pool.emplace_back(work, b, e);
            }
            for (auto& t : pool) t.join();
        }
        return pts;
    };

    LimitSetSample out;
    out.grid_step = grid_step;
    out.tolerance = tol;
    out.points = evaluate(base);

    std::set<std::pair<long, long>> known(base.begin(), base.end());
    std::vector<std::pair<long, long>> refine;
    for (std::size_t s = 0; s < base.size(); ++s) {
        if (out.points[s].flag == LimitFlag::none) continue;
        auto [i, j] = base[s];
        for (auto [di, dj] : {std::pair{-1L, 0L}, {1L, 0L}, {0L, -1L}, {0L, 1L}}) {
            std::pair<long, long> q{i + di, j + dj};
            if (known.insert(q).second) refine.push_back(q);
        }
    }
    std::sort(refine.begin(), refine.end(), [](auto a, auto b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    auto extra = evaluate(refine);
    out.points.insert(out.points.end(), extra.begin(), extra.end());
    return out;
}

std::string limit_sample_csv(const LimitSetSample& sample) {
    std::ostringstream out;
    out.precision(17);
    out << "re,im,flag\n";
    for (const auto& p : sample.points) out << p.x.real() << ',' << p.x.imag() << ',' << to_string(p.flag) << '\n';
    return out.str();
}

double AnalyticLimitInterval::endpoint() const { return 2 * std::sqrt(static_cast<double>(n)); }

double AnalyticLimitInterval::at(double a) const { return 2 * std::sqrt(n / (1 + a * a)); }

std::string AnalyticLimitInterval::to_string() const {
    int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (root * root == n) return "[" + std::to_string(-2 * root) + ", " + std::to_string(2 * root) + "]";
    return "[-2*sqrt(" + std::to_string(n) + "), 2*sqrt(" + std::to_string(n) + ")]";
}

AnalyticLimitInterval analytic_limit_interval(int n) {
    if (n < 1) throw domain_error("analytic_limit_interval: n must be positive");
    return {n};
}

double density_gap(std::span<const double> sorted_roots, int n) {
    if (!std::is_sorted(sorted_roots.begin(), sorted_roots.end()))
        throw domain_error("density_gap: roots must be sorted ascending");
    const double edge = analytic_limit_interval(n).endpoint() * (1 + 1e-12);
    std::vector<double> inside;
    for (double r : sorted_roots)
        if (std::abs(r) <= edge) inside.push_back(r);
    if (inside.size() < 2) throw domain_error("density_gap: need at least two roots in the interval");
    double gap = 0;
    for (std::size_t i = 1; i < inside.size(); ++i) gap = std::max(gap, inside[i] - inside[i - 1]);
    return gap;
}

NondegeneracyReport check_nondegeneracy_deg2(const LinearRecursion& r, std::span<const cdouble> samples) {
    r.validate();
    if (r.order() != 2) throw domain_error("check_nondegeneracy_deg2: recursion must have order 2");
    if (samples.size() < 5) throw domain_error("check_nondegeneracy_deg2: need at least five sample points");
    NondegeneracyReport report;

    for (cdouble x : samples) {
        auto [l1, l2] = char_roots_deg2(r.coefficients[0], r.coefficients[1], x);
        if (l2 == cdouble(0)) {
            std::ostringstream note;
            note << "skipped x=" << x << ": lambda_2 vanishes";
            report.notes.push_back(note.str());
            continue;
        }
        report.modulus_ratios.push_back(std::abs(l1 / l2));
    }
    if (!report.modulus_ratios.empty()) {
        auto [lo, hi] = std::minmax_element(report.modulus_ratios.begin(), report.modulus_ratios.end());
        report.ratio_spread = *hi - *lo;
    }
    report.unimodular_multiple_ruled_out = report.ratio_spread > 1e-6;

    constexpr int terms = 10;
    auto seq = generate_full_sequence(r, terms);
    bool constant_everywhere = true;
    int usable = 0;
    for (cdouble x : samples) {
        std::vector<cdouble> ratios;
        for (int j = 0; j < terms; ++j) {
            cdouble den = eval_float(seq[j], x);
            if (std::abs(den) < 1e-300) continue;
            ratios.push_back(eval_float(seq[j + 1], x) / den);
        }
        if (ratios.size() < 2) continue;
        ++usable;
        for (cdouble q : ratios)
            if (std::abs(q - ratios.front()) > 1e-9 * std::max(1.0, std::abs(ratios.front()))) constant_everywhere = false;
    }
    report.lower_order_recursion_detected = usable > 0 && constant_everywhere;
    return report;
}

}  // namespace sigroots
