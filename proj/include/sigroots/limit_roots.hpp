#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "sigroots/graph.hpp"
#include "sigroots/polynomial.hpp"

namespace sigroots {

using cdouble = std::complex<double>;

inline constexpr int max_recursion_order = 4;
inline constexpr double default_equimodular_tolerance = 1e-9;

/// P_{n+k} = -(f_1 P_{n+k-1} + ... + f_k P_n), seeded with P_0..P_{k-1}.
struct LinearRecursion {
    std::vector<IntPoly> coefficients;  // f_1..f_k
    std::vector<IntPoly> initial;       // P_0..P_{k-1}

    int order() const { return static_cast<int>(coefficients.size()); }
    /// Throws domain_error unless 1 <= k <= 4, sizes agree and f_k != 0.
    void validate() const;
};

/// f = (-x, n), P_0 = 1, P_1 = x: the complete n-ary tree family.
LinearRecursion constant_branching_recursion(int n);

/// P_k .. P_upto.
std::vector<IntPoly> generate_sequence(const LinearRecursion& r, int upto);
/// P_0 .. P_upto.
std::vector<IntPoly> generate_full_sequence(const LinearRecursion& r, int upto);

/// P_0 = 1, P_1 = x, P_j = x P_{j-1} - n_{j-1} P_{j-2} for j = 2..k, where
/// n_{j-1} is the number of children of each vertex j levels above the leaves.
/// Returns P_0..P_k.
std::vector<IntPoly> balanced_tree_recursion(const BalancedTreeSpec& spec);

/// Roots of lambda^2 + f1(x) lambda + f2(x), larger modulus first.
struct CharRoots2 {
    cdouble dominant;
    cdouble subdominant;
};

CharRoots2 char_roots_deg2(const IntPoly& f1, const IntPoly& f2, cdouble x);
/// Roots of lambda^k + sum_j f_j(x) lambda^(k-j), by nonincreasing modulus.
std::vector<cdouble> char_roots(const LinearRecursion& r, cdouble x);

struct AlphaPair {
    cdouble dominant;     // multiplies lambda_1^n
    cdouble subdominant;  // multiplies lambda_2^n
};

/// Solves alpha_1 + alpha_2 = P_0(x), alpha_1 lambda_1 + alpha_2 lambda_2 = P_1(x).
/// domain_error where lambda_1(x) = lambda_2(x).
AlphaPair alpha_coefficients_deg2(const LinearRecursion& r, cdouble x);

enum class LimitFlag { none, equimodular, alpha_zero };

const char* to_string(LimitFlag flag);

struct Rectangle {
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
};

struct LimitSamplePoint {
    cdouble x;
    LimitFlag flag = LimitFlag::none;
};

/// Base grid points (multiples of the step, row-major by imaginary then real
/// part) followed by half-step refinement points around each flagged point.
struct LimitSetSample {
    double grid_step = 0;
    double tolerance = 0;
    std::vector<LimitSamplePoint> points;
};

LimitFlag classify_point(const LinearRecursion& r, cdouble x, double tol);

LimitSetSample equimodular_scan(const LinearRecursion& r, const Rectangle& region, double grid_step,
                                double tol = default_equimodular_tolerance, int workers = 1);

/// CSV with header "re,im,flag".
std::string limit_sample_csv(const LimitSetSample& sample);

/// [-2 sqrt(n), 2 sqrt(n)], the real limit set of the constant-branching family.
struct AnalyticLimitInterval {
    int n = 1;

    double endpoint() const;
    double lo() const { return -endpoint(); }
    double hi() const { return endpoint(); }
    /// Positive branch of x(a) = 2 sqrt(n / (1 + a^2)).
    double at(double a) const;
    /// "[-2*sqrt(n), 2*sqrt(n)]", or integer endpoints when n is a square.
    std::string to_string() const;
};

AnalyticLimitInterval analytic_limit_interval(int n);

/// Largest gap between consecutive sorted roots lying in [-2 sqrt(n), 2 sqrt(n)].
double density_gap(std::span<const double> sorted_roots, int n);

struct NondegeneracyReport {
    /// |lambda_1 / lambda_2| at each usable sample.
    std::vector<double> modulus_ratios;
    double ratio_spread = 0;
    /// The ratio moved across samples, so no unimodular omega links the roots.
    bool unimodular_multiple_ruled_out = false;
    /// P_{j+1}/P_j was the same for every j at every sample: a first-order recursion fits.
    bool lower_order_recursion_detected = false;
    std::vector<std::string> notes;
};

/// Sampled evidence (not proof) for the two nondegeneracy conditions of an
/// order-2 recursion; needs at least five sample points.
NondegeneracyReport check_nondegeneracy_deg2(const LinearRecursion& r, std::span<const cdouble> samples);

}  // namespace sigroots
