#include "sigroots/root_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "sigroots/errors.hpp"

namespace sigroots {

namespace {

using cld = std::complex<long double>;

/// Strip the positive content without touching the sign.
IntPoly drop_content(const IntPoly& p) {
    Integer g = content(p);
    if (g <= 1) return p;
    std::vector<Integer> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

int count_variations(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

long double to_ld(const Integer& x) {
    double hi = x.get_d();
    Integer rest = x - Integer(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(squarefree_part(p));
    if (chain_.front().degree() == 0) return;
    chain_.push_back(drop_content(derivative(chain_.front())));
    for (;;) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        if (b.degree() == 0) break;
        // prem = lc(b)^(da-db+1) * rem; the next entry is -rem up to a positive factor.
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        int power = a.degree() - b.degree() + 1;
        bool flip = !(b.leading() < 0 && power % 2 == 1);
        if (flip) r = -r;
        chain_.push_back(drop_content(r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign_at(q, x));
    return count_variations(signs);
}

int SturmChain::variations_at_negative_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
    return count_variations(signs);
}

int SturmChain::variations_at_positive_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_at_negative_infinity() - variations_at_positive_infinity(); }

int sturm_distinct_real_roots(const IntPoly& p) { return SturmChain(p).count_all(); }

int sturm_distinct_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
    return SturmChain(p).count(lo, hi);
}

bool has_nonreal_roots(const IntPoly& p) {
    SturmChain chain(p);
    return chain.count_all() < chain.squarefree().degree();
}

Integer cauchy_bound(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("cauchy_bound: zero polynomial");
    Integer top = 0;
    for (int i = 0; i < p.degree(); ++i) top = std::max(top, Integer(abs(p.coeffs()[i])));
    Integer lead = abs(p.leading());
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    return q + 2;
}

double relative_residual(const IntPoly& p, std::complex<double> z) {
    constexpr mp_bitcnt_t precision = 512;
    mpf_class re(0, precision), im(0, precision), zr(z.real(), precision), zi(z.imag(), precision);
    mpf_class t(0, precision);
    for (int i = p.degree(); i >= 0; --i) {
        t = re * zr - im * zi;
        im = re * zi + im * zr;
        re = t + mpf_class(p.coeffs()[i], precision);
    }
    // Scale by sum |c_i| |z|^i so the bound is meaningful for roots far from the unit circle.
    mpf_class scale(0, precision);
    const mpf_class radius = sqrt(zr * zr + zi * zi);
    for (int i = p.degree(); i >= 0; --i) scale = scale * radius + mpf_class(abs(p.coeffs()[i]), precision);
    mpf_class modulus = sqrt(re * re + im * im);
    mpf_class scaled = modulus / (scale + 1);
    return scaled.get_d();
}

namespace {

/// Factors above this degree get multiprecision refinement.
constexpr int multiprecision_degree = 12;

/// Complex arithmetic over mpf_class, just enough for the refinement below.
struct MpComplex {
    mpf_class re, im;
};

MpComplex mp_mul(const MpComplex& a, const MpComplex& b, mp_bitcnt_t prec) {
    MpComplex r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

MpComplex mp_div(const MpComplex& a, const MpComplex& b, mp_bitcnt_t prec) {
    mpf_class den(b.re * b.re + b.im * b.im, prec);
    MpComplex r{mpf_class(0, prec), mpf_class(0, prec)};
    r.re = (a.re * b.re + a.im * b.im) / den;
    r.im = (a.im * b.re - a.re * b.im) / den;
    return r;
}

long double mp_to_ld(const mpf_class& x) {
    double hi = x.get_d();
    mpf_class rest(x - hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

/// Aberth sweeps in multiprecision from long-double starting points. Needed
/// for high-degree factors with large coefficients, where clustered roots are
/// too ill-conditioned for extended precision.
void refine_multiprecision(const IntPoly& f, std::vector<cld>& z) {
    const int d = f.degree();
    std::size_t coeff_bits = 0;
    for (const auto& c : f.coeffs()) coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    const mp_bitcnt_t prec = std::max<mp_bitcnt_t>(256, 64 + 4 * d + coeff_bits);

    std::vector<mpf_class> c;
    for (const auto& x : f.coeffs()) c.emplace_back(x, prec);
    std::vector<MpComplex> w;
    auto widen = [&](long double x) {
        const double hi = static_cast<double>(x);
        mpf_class r(hi, prec);
        r += static_cast<double>(x - hi);
        return r;
    };
    for (const auto& x : z) w.push_back({widen(x.real()), widen(x.imag())});

    const mpf_class one(1, prec), target(1e-40, prec);
    constexpr int budget = 400;
    for (int iter = 0; iter < budget; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < d; ++i) {
            MpComplex value{c[d], mpf_class(0, prec)}, slope{mpf_class(0, prec), mpf_class(0, prec)};
            for (int k = d - 1; k >= 0; --k) {
                slope = mp_mul(slope, w[i], prec);
                slope.re += value.re;
                slope.im += value.im;
                value = mp_mul(value, w[i], prec);
                value.re += c[k];
            }
            if (sgn(value.re) == 0 && sgn(value.im) == 0) continue;
            MpComplex repulsion{mpf_class(0, prec), mpf_class(0, prec)};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                MpComplex diff{mpf_class(w[i].re - w[j].re, prec), mpf_class(w[i].im - w[j].im, prec)};
                MpComplex inv = mp_div({one, mpf_class(0, prec)}, diff, prec);
                repulsion.re += inv.re;
                repulsion.im += inv.im;
            }
            MpComplex ratio = mp_div(value, slope, prec);
            MpComplex denom = mp_mul(ratio, repulsion, prec);
            denom.re = one - denom.re;
            denom.im = -denom.im;
            MpComplex step = mp_div(ratio, denom, prec);
            w[i].re -= step.re;
            w[i].im -= step.im;
            mpf_class size(sqrt(step.re * step.re + step.im * step.im), prec);
            mpf_class scale(sqrt(w[i].re * w[i].re + w[i].im * w[i].im), prec);
            if (scale > one) size /= scale;
            if (size > worst) worst = size;
        }
        if (worst < target) break;
        if (iter + 1 == budget) throw numeric_error("numeric_roots: multiprecision refinement did not converge for " + f.to_string());
    }
    for (int i = 0; i < d; ++i) z[i] = cld(mp_to_ld(w[i].re), mp_to_ld(w[i].im));
}

/// Aberth-Ehrlich iteration on a squarefree polynomial with nonzero constant term.
std::vector<cld> aberth(const IntPoly& f, const IntPoly& original) {
    const int d = f.degree();
    std::vector<long double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = to_ld(f.coeffs()[i]);
    if (d == 1) return {cld(-c[0] / c[1], 0)};

    // Fujiwara bound for the starting circle.
    long double radius = 0;
    for (int i = 0; i < d; ++i) {
        long double ratio = std::fabs(c[i] / c[d]);
        if (i == 0) ratio /= 2;
        if (ratio > 0) radius = std::max(radius, std::pow(ratio, 1.0L / (d - i)));
    }
    radius *= 2;
    if (radius == 0) radius = 1;

    std::vector<cld> z(d);
    for (int k = 0; k < d; ++k) {
        long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
        z[k] = std::polar(radius, angle);
    }

    auto eval = [&](cld x, cld& value, cld& slope) {
        value = c[d];
        slope = 0;
        for (int i = d - 1; i >= 0; --i) {
            slope = slope * x + value;
            value = value * x + c[i];
        }
    };

    // A root is settled once its step is negligible or |f(z)| is at the rounding
    // level of the evaluation, whichever comes first.
    auto at_rounding_level = [&](cld x, cld value) {
        long double scale = 0, r = std::abs(x);
        for (int i = d; i >= 0; --i) scale = scale * r + std::fabs(c[i]);
        return std::abs(value) <= 16 * d * std::numeric_limits<long double>::epsilon() * scale;
    };

    constexpr int budget = 800;
    constexpr long double step_tol = 1e-15L;
    std::vector<bool> settled(d, false);
    bool converged = false;
    for (int iter = 0; iter < budget && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < d; ++i) {
            if (settled[i]) continue;
            cld value, slope;
            eval(z[i], value, slope);
            if (value == cld(0) || at_rounding_level(z[i], value)) {
                settled[i] = true;
                continue;
            }
            cld repulsion = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) repulsion += 1.0L / (z[i] - z[j]);
            cld step;
            if (slope == cld(0)) {
                step = cld(radius * 1e-3L, radius * 1e-3L);
            } else {
                cld ratio = value / slope;
                step = ratio / (1.0L - ratio * repulsion);
            }
            z[i] -= step;
            if (std::abs(step) > step_tol * std::max(std::abs(z[i]), 1e-30L)) converged = false;
            else settled[i] = true;
        }
    }
    const bool refine = d > multiprecision_degree;
    if (refine) refine_multiprecision(f, z);
    else if (!converged)
        throw numeric_error("numeric_roots: Aberth iteration did not converge for " + original.to_string());

    // Newton polish.
    for (auto& x : z)
        for (int k = 0; k < 3 && !refine; ++k) {
            cld value, slope;
            eval(x, value, slope);
            if (slope == cld(0) || value == cld(0)) break;
            x -= value / slope;
        }

    // A real polynomial's roots are real or come in conjugate pairs.
    std::vector<cld> out;
    std::vector<cld> upper, lower;
    for (auto x : z) {
        if (std::fabs(x.imag()) <= 1e-9L * std::max(1.0L, std::abs(x))) {
            long double r = x.real();
            for (int k = 0; k < 3 && !refine; ++k) {
                cld value, slope;
                eval(cld(r, 0), value, slope);
                if (slope.real() == 0 || value.real() == 0) break;
                r -= value.real() / slope.real();
            }
            out.emplace_back(r, 0);
        } else if (x.imag() > 0) {
            upper.push_back(x);
        } else {
            lower.push_back(x);
        }
    }
    if (upper.size() == lower.size()) {
        std::vector<bool> taken(lower.size(), false);
        for (auto u : upper) {
            std::size_t best = lower.size();
            long double best_dist = std::numeric_limits<long double>::infinity();
            for (std::size_t j = 0; j < lower.size(); ++j) {
                if (taken[j]) continue;
                long double dist = std::abs(u - std::conj(lower[j]));
                if (dist < best_dist) {
                    best_dist = dist;
                    best = j;
                }
            }
            taken[best] = true;
            cld mean = (u + std::conj(lower[best])) / 2.0L;
            out.push_back(mean);
            out.push_back(std::conj(mean));
        }
    } else {
        out.insert(out.end(), upper.begin(), upper.end());
        out.insert(out.end(), lower.begin(), lower.end());
    }
    return out;
}

}  // namespace

std::vector<NumericRoot> numeric_roots(const IntPoly& p, double residual_bound) {
    if (p.degree() < 1) throw domain_error("numeric_roots: need degree >= 1");
    if (p.degree() > 200) throw capacity_error("numeric_roots: degree above 200");
    std::vector<NumericRoot> roots;
    const int zeros = p.low_order();
    for (int i = 0; i < zeros; ++i) roots.push_back({{0.0, 0.0}, 0.0});
    IntPoly rest = divide_by_x_power(p, zeros);
    if (rest.degree() > 0) {
        auto factors = squarefree_decomposition(rest);
        for (std::size_t m = 0; m < factors.size(); ++m) {
            if (factors[m].degree() < 1) continue;
            for (cld z : aberth(factors[m], p)) {
                std::complex<double> value(static_cast<double>(z.real()), static_cast<double>(z.imag()));
                for (std::size_t rep = 0; rep <= m; ++rep) roots.push_back({value, 0.0});
            }
        }
    }
    for (auto& r : roots) {
        if (r.value == std::complex<double>(0, 0)) continue;
        r.residual = relative_residual(p, r.value);
        if (!(r.residual <= residual_bound))
        {
            char value[32];
            std::snprintf(value, sizeof value, "%.3g", r.residual);
            throw numeric_error(std::string("numeric_roots: residual ") + value + " above bound for " + p.to_string());
        }
    }
    std::sort(roots.begin(), roots.end(), [](const NumericRoot& a, const NumericRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return roots;
}

std::vector<std::complex<double>> numeric_root_values(const IntPoly& p, double residual_bound) {
    std::vector<std::complex<double>> out;
    for (const auto& r : numeric_roots(p, residual_bound)) out.push_back(r.value);
    return out;
}

RationalInterval min_real_root(const IntPoly& p, double tolerance) {
    if (!(tolerance > 0)) throw domain_error("min_real_root: tolerance must be positive");
    SturmChain chain(p);
    Integer bound = cauchy_bound(p);
    Rational lo(-bound), hi(bound);
    int v_lo = chain.variations_at(lo);
    int v_hi = chain.variations_at(hi);
    if (v_lo - v_hi == 0) throw domain_error("min_real_root: polynomial has no real roots");
    const Rational tol(tolerance);
    // Invariant: lo is not a root and the least root lies in (lo, hi].
    while (hi - lo > tol || v_lo - v_hi > 1) {
        Rational mid = (lo + hi) / 2;
        int v_mid = chain.variations_at(mid);
        if (v_lo - v_mid >= 1) {
            hi = mid;
            v_hi = v_mid;
        } else {
            lo = mid;
            v_lo = v_mid;
        }
    }
    if (sign_at(p, hi) == 0) return {hi, hi};
    return {lo, hi};
}

RootReport analyze_roots(const IntPoly& p, double residual_bound, double isolation_tolerance) {
    RootReport report;
    SturmChain chain(p);
    report.degree = p.degree();
    report.distinct_real = chain.count_all();
    report.distinct_roots = chain.squarefree().degree();
    report.has_nonreal = report.distinct_real < report.distinct_roots;
    if (p.degree() >= 1) report.numeric = numeric_roots(p, residual_bound);
    if (report.distinct_real >= 1) report.min_real_root = min_real_root(p, isolation_tolerance);
    return report;
}

}  // namespace sigroots
