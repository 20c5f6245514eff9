#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sigroots/polynomial.hpp"

namespace sigroots {

inline constexpr double default_residual_bound = 1e-10;
inline constexpr double default_isolation_tolerance = 1e-12;

/// Closed rational interval [lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

/// Fraction-free Sturm sequence of the squarefree part of a nonzero polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    int variations_at(const Rational& x) const;
    int variations_at_negative_infinity() const;
    int variations_at_positive_infinity() const;

    /// Distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const;
    int count_all() const;

    const std::vector<IntPoly>& sequence() const { return chain_; }
    const IntPoly& squarefree() const { return chain_.front(); }

private:
    std::vector<IntPoly> chain_;
};

int sturm_distinct_real_roots(const IntPoly& p);
/// Distinct real roots in the half-open interval (lo, hi].
int sturm_distinct_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Exact: the squarefree part has fewer distinct real roots than its degree.
bool has_nonreal_roots(const IntPoly& p);

/// Integer B with |z| < B for every complex root z.
Integer cauchy_bound(const IntPoly& p);

struct NumericRoot {
    std::complex<double> value;
    /// |p(value)| / (1 + sum |c_i| |value|^i), evaluated in extended precision.
    double residual = 0.0;
};

/// All roots with multiplicity, sorted by (real, imaginary). Zero roots are
/// split off exactly; the rest are found per squarefree factor by Aberth
/// iteration. Throws numeric_error if a residual exceeds the bound.
std::vector<NumericRoot> numeric_roots(const IntPoly& p, double residual_bound = default_residual_bound);
std::vector<std::complex<double>> numeric_root_values(const IntPoly& p,
                                                      double residual_bound = default_residual_bound);

/// Relative residual of a candidate root of p.
double relative_residual(const IntPoly& p, std::complex<double> z);

/// Interval of width <= tolerance holding the least real root and no other
/// real root. Bisection on Sturm counts with dyadic endpoints.
RationalInterval min_real_root(const IntPoly& p, double tolerance = default_isolation_tolerance);

struct RootReport {
    int degree = 0;
    int distinct_real = 0;
    /// Degree of the squarefree part.
    int distinct_roots = 0;
    bool has_nonreal = false;
    std::vector<NumericRoot> numeric;
    std::optional<RationalInterval> min_real_root;
};

RootReport analyze_roots(const IntPoly& p, double residual_bound = default_residual_bound,
                         double isolation_tolerance = default_isolation_tolerance);

}  // namespace sigroots
