#include "sigroots/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "sigroots/errors.hpp"

namespace sigroots {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int power) {
    if (power < 0) throw domain_error("monomial: negative power");
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

int IntPoly::low_order() const {
    int k = 0;
    while (k < degree() && c_[k] == 0) ++k;
    return c_.empty() ? 0 : k;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Integer> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = c_[k];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += Integer(abs(c)).get_str();
        if (k >= 2) {
            out += "*x^" + std::to_string(k);
        } else if (k == 1) {
            out += "*x";
        }
    }
    return out;
}

IntPoly IntPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "0") return {};
    if (s.empty()) throw domain_error("IntPoly::parse: empty text");
    std::vector<Integer> c;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw domain_error("IntPoly::parse: expected '+' or '-' in \"" + s + "\"");
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Integer coef = start == i ? Integer(1) : Integer(s.substr(start, i - start));
        int power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'x')) {
            if (s[i] == '*') ++i;
            if (i >= s.size() || s[i] != 'x') throw domain_error("IntPoly::parse: expected 'x' in \"" + s + "\"");
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t p0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (p0 == i) throw domain_error("IntPoly::parse: missing exponent in \"" + s + "\"");
                power = std::stoi(s.substr(p0, i - p0));
            }
        } else if (start == i) {
            throw domain_error("IntPoly::parse: empty term in \"" + s + "\"");
        }
        if (static_cast<int>(c.size()) <= power) c.resize(power + 1);
        c[power] += sign * coef;
    }
    return IntPoly(std::move(c));
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly scalar_mul(const IntPoly& p, const Integer& c) { return p * c; }

IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return {};
    std::vector<Integer> d(p.degree());
    for (int i = 1; i <= p.degree(); ++i) d[i - 1] = p.coeffs()[i] * i;
    return IntPoly(std::move(d));
}

IntPoly shift_compose(const IntPoly& p, const IntPoly& q) {
    IntPoly out;
    for (int i = p.degree(); i >= 0; --i) {
        out *= q;
        out += IntPoly::constant(p.coeffs()[i]);
    }
    return out;
}

IntPoly divide_by_x_power(const IntPoly& p, int k) {
    if (k == 0 || p.is_zero()) return p;
    if (k > p.low_order()) throw domain_error("divide_by_x_power: x^" + std::to_string(k) + " does not divide");
    return IntPoly(std::vector<Integer>(p.coeffs().begin() + k, p.coeffs().end()));
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw domain_error("pseudo_remainder: zero divisor");
    if (p.degree() < d.degree()) return p;
    const Integer& lead = d.leading();
    int steps = p.degree() - d.degree() + 1;
    IntPoly r = p;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        IntPoly t = IntPoly::monomial(r.leading(), r.degree() - d.degree()) * d;
        r *= lead;
        r -= t;
        --steps;
    }
    if (steps > 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps));
        r *= scale;
    }
    return r;
}

IntPoly exact_quotient(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw domain_error("exact_quotient: zero divisor");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw domain_error("exact_quotient: divisor has larger degree");
    std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
    std::vector<Integer> q(p.degree() - d.degree() + 1);
    const auto dc = d.coeffs();
    for (int k = p.degree() - d.degree(); k >= 0; --k) {
        Integer& top = r[k + d.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
            throw domain_error("exact_quotient: division is not exact over the integers");
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * dc[j];
        q[k] = f;
    }
    for (const auto& x : r)
        if (x != 0) throw domain_error("exact_quotient: nonzero remainder");
    return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw domain_error("gcd: both arguments are zero");
    IntPoly a = primitive_part(p);
    IntPoly b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPoly{1};
    IntPoly prim = primitive_part(p);
    return primitive_part(exact_quotient(prim, gcd(prim, derivative(prim))));
}

bool divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero()) throw domain_error("divides: zero divisor");
    return pseudo_remainder(p, d).is_zero();
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    std::vector<IntPoly> factors;
    if (p.degree() == 0) return factors;
    IntPoly f = primitive_part(p);
    IntPoly df = derivative(f);
    IntPoly a = gcd(f, df);
    IntPoly b = exact_quotient(f, a);
    IntPoly c = exact_quotient(df, a);
    IntPoly d = c - derivative(b);
    while (b.degree() > 0) {
        IntPoly next = d.is_zero() ? primitive_part(b) : gcd(b, d);
        factors.push_back(next);
        b = exact_quotient(b, next);
        c = exact_quotient(d, next);
        d = c - derivative(b);
    }
    return factors;
}

Rational eval_exact(const IntPoly& p, const Rational& at) {
    Rational r = at;
    r.canonicalize();
    Rational acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * r + p.coeffs()[i];
    return acc;
}

int sign_at(const IntPoly& p, const Rational& at) {
    if (p.is_zero()) return 0;
    Rational r = at;
    r.canonicalize();
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    Integer acc = p.leading();
    Integer den_power = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        den_power *= den;
        acc *= num;
        acc += p.coeffs()[i] * den_power;
    }
    return sgn(acc);
}

namespace {

long double to_long_double(const Integer& x) {
    // Two doubles carry ~106 bits, enough to round correctly to 64.
    double hi = x.get_d();
    Integer rest = x - Integer(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

template <class T>
std::complex<T> horner(const IntPoly& p, std::complex<T> z) {
    std::complex<T> acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
        T c;
        if constexpr (std::is_same_v<T, double>) {
            c = p.coeffs()[i].get_d();
        } else {
            c = to_long_double(p.coeffs()[i]);
        }
        acc = acc * z + c;
    }
    return acc;
}

}  // namespace

std::complex<double> eval_float(const IntPoly& p, std::complex<double> z) { return horner(p, z); }
std::complex<long double> eval_float(const IntPoly& p, std::complex<long double> z) { return horner(p, z); }

int PartitionPoly::first_nonzero() const {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

IntPoly falling_factorial(int i) {
    if (i < 0) throw domain_error("falling_factorial: negative index");
    IntPoly out{1};
    for (int j = 0; j < i; ++j) out *= IntPoly{-j, 1};
    return out;
}

IntPoly partition_to_sigma(const PartitionPoly& p) { return IntPoly(p.a); }

IntPoly partition_to_chromatic(const PartitionPoly& p) {
    IntPoly out;
    IntPoly ff{1};
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        if (p.a[i] != 0) out += ff * p.a[i];
        ff *= IntPoly{-static_cast<long>(i), 1};
    }
    return out;
}

PartitionPoly chromatic_to_partition(const IntPoly& chromatic) {
    PartitionPoly out;
    if (chromatic.is_zero()) return out;
    out.a.resize(chromatic.degree() + 1);
    IntPoly rest = chromatic;
    for (int i = chromatic.degree(); i >= 0; --i) {
        Integer c = rest.coeff(i);
        if (c < 0)
            throw domain_error("chromatic_to_partition: negative falling-factorial coefficient at index " +
                               std::to_string(i) + "; not a chromatic polynomial");
        if (c != 0) rest -= falling_factorial(i) * c;
        out.a[i] = c;
    }
    if (chromatic.degree() > 0 && out.a[0] != 0)
        throw domain_error("chromatic_to_partition: nonzero constant term; not a chromatic polynomial");
    return out;
}

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0) throw domain_error("stirling2: negative argument");
    if (k > n) throw domain_error("stirling2: k > n");
    std::vector<Integer> row{1};  // S(0, 0)
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> next(m + 1);
        for (int j = 1; j <= m; ++j) {
            if (j < m) next[j] = j * row[j];
            next[j] += row[j - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace sigroots
