#pragma once

#include <gmpxx.h>

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigroots {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Z; coeffs()[i] multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int power);
    static IntPoly x() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const Integer> coeffs() const { return c_; }
    /// Coefficient of x^i, zero past the degree.
    Integer coeff(int i) const;
    const Integer& leading() const;
    /// Largest power of x dividing the polynomial (0 for the zero polynomial).
    int low_order() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Canonical text form: nonzero terms in descending order as "c*x^k",
    /// "c*x" and "c", joined by " + " / " - "; the zero polynomial is "0".
    std::string to_string() const;
    static IntPoly parse(std::string_view text);

private:
    void trim();
    std::vector<Integer> c_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly scalar_mul(const IntPoly& p, const Integer& c);
IntPoly derivative(const IntPoly& p);
/// p(q(x)).
IntPoly shift_compose(const IntPoly& p, const IntPoly& q);
/// p(x) / x^k; requires x^k | p.
IntPoly divide_by_x_power(const IntPoly& p, int k);

/// Nonnegative gcd of the coefficients.
Integer content(const IntPoly& p);
/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// lc(d)^(deg p - deg d + 1) * p mod d, computed over Z.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d);
/// Quotient of an exact division over Z; domain_error if d does not divide p there.
IntPoly exact_quotient(const IntPoly& p, const IntPoly& d);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& p, const IntPoly& q);
IntPoly squarefree_part(const IntPoly& p);
/// True iff d divides p over Q.
bool divides(const IntPoly& d, const IntPoly& p);
/// Yun decomposition: factors[m-1] is the primitive product of the irreducible
/// factors of multiplicity m (1 when there are none).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

Rational eval_exact(const IntPoly& p, const Rational& r);
/// Sign of p(r) without forming the rational value.
int sign_at(const IntPoly& p, const Rational& r);
std::complex<double> eval_float(const IntPoly& p, std::complex<double> z);
std::complex<long double> eval_float(const IntPoly& p, std::complex<long double> z);

/// Coefficients a_0..a_n in the falling-factorial basis; a[i] counts
/// i-colour partitions when the vector comes from a graph.
struct PartitionPoly {
    std::vector<Integer> a;

    /// First nonzero index (the chromatic number), or -1 if all zero.
    int first_nonzero() const;
    friend bool operator==(const PartitionPoly&, const PartitionPoly&) = default;
};

/// x(x-1)...(x-i+1); 1 for i = 0.
IntPoly falling_factorial(int i);
IntPoly partition_to_sigma(const PartitionPoly& p);
IntPoly partition_to_chromatic(const PartitionPoly& p);
/// Inverse basis change; domain_error if some coefficient is negative.
PartitionPoly chromatic_to_partition(const IntPoly& chromatic);

/// Stirling number of the second kind S(n, k).
Integer stirling2(int n, int k);

}  // namespace sigroots
