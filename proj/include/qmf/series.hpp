#pragma once

#include <qmf/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmf {

// Formal power series in q truncated at a fixed order, with dense
// exact-rational coefficients. Index n holds the coefficient of q^n.
// Binary operations truncate to the minimum of the operand orders;
// nothing is ever silently extended.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}

    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    // Order deduced from the coefficient count (must be nonempty).
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    // Zero-fills up to the requested order.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1)
            throw std::invalid_argument("TruncatedSeries: more coefficients than order+1");
        coeffs_.resize(order + 1);
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Index of the lowest nonzero coefficient, if any.
    std::optional<std::size_t> lowest_nonzero() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (coeffs_[n] != 0) return n;
        return std::nullopt;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

// Residues of a series mod m, stored in [0, m).
class ModSeries {
public:
    ModSeries(std::int64_t modulus, std::vector<std::int64_t> residues)
        : modulus_(modulus), residues_(std::move(residues)) {
        if (modulus_ < 2) throw std::invalid_argument("ModSeries: modulus must be >= 2");
        if (residues_.empty()) throw std::invalid_argument("ModSeries: empty residue list");
        for (auto r : residues_)
            if (r < 0 || r >= modulus_) throw std::invalid_argument("ModSeries: residue out of range");
    }

    std::int64_t modulus() const { return modulus_; }
    std::size_t order() const { return residues_.size() - 1; }
    std::int64_t operator[](std::size_t n) const { return residues_[n]; }
    const std::vector<std::int64_t>& residues() const { return residues_; }

    friend bool operator==(const ModSeries&, const ModSeries&) = default;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> residues_;
};

namespace detail {

// acc[i+j] += a[i]*b[j] over i+j <= order. Zero coefficients of either
// factor are skipped, so a sparse factor (Lambert-type blocks, theta sums)
// costs only its support. Raw mpq calls keep the inner loop allocation-free.
inline void acc_mul(std::vector<Rational>& acc, const std::vector<Rational>& a,
                    const std::vector<Rational>& b, std::size_t order) {
    mpq_t tmp;
    mpq_init(tmp);
    const std::size_t amax = std::min(a.size() - 1, order);
    for (std::size_t i = 0; i <= amax; ++i) {
        if (mpq_sgn(a[i].get_mpq_t()) == 0) continue;
        const std::size_t jmax = std::min(b.size() - 1, order - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (mpq_sgn(b[j].get_mpq_t()) == 0) continue;
            mpq_mul(tmp, a[i].get_mpq_t(), b[j].get_mpq_t());
            mpq_add(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
}

inline std::size_t count_nonzero(const std::vector<Rational>& v) {
    std::size_t n = 0;
    for (const auto& c : v)
        if (mpq_sgn(c.get_mpq_t()) != 0) ++n;
    return n;
}

}  // namespace detail

inline TruncatedSeries make_series(std::vector<Rational> coeffs, long order) {
    if (order < 0) throw std::invalid_argument("make_series: negative order");
    return TruncatedSeries(std::move(coeffs), static_cast<std::size_t>(order));
}

inline TruncatedSeries series_zero(std::size_t order) { return TruncatedSeries(order); }

inline TruncatedSeries series_one(std::size_t order) {
    TruncatedSeries s(order);
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

// c*q^exp; exponents past the order are dropped.
inline TruncatedSeries monomial(const Rational& c, std::size_t exp, std::size_t order) {
    std::vector<Rational> v(order + 1);
    if (exp <= order) v[exp] = c;
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
    if (order >= a.order()) return a;
    std::vector<Rational> v(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] + b[i];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] - b[i];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries negate(const TruncatedSeries& a) {
    std::vector<Rational> v(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) v[i] = -a[i];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
    std::vector<Rational> v(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) v[i] = a[i] * c;
    return TruncatedSeries(std::move(v));
}

// Cauchy product, truncated to the minimum operand order. Schoolbook
// O(N^2); the sparser factor drives the outer loop.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    if (detail::count_nonzero(a.coeffs()) <= detail::count_nonzero(b.coeffs()))
        detail::acc_mul(v, a.coeffs(), b.coeffs(), n);
    else
        detail::acc_mul(v, b.coeffs(), a.coeffs(), n);
    return TruncatedSeries(std::move(v));
}

// Multiplicative inverse up to the truncation order (long division).
inline TruncatedSeries invert(const TruncatedSeries& a) {
    if (a[0] == 0) throw std::domain_error("invert: zero constant term");
    const std::size_t n = a.order();
    std::vector<Rational> v(n + 1);
    const Rational inv0 = 1 / a[0];
    v[0] = inv0;
    mpq_t tmp, sum;
    mpq_init(tmp);
    mpq_init(sum);
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_set_ui(sum, 0, 1);
        for (std::size_t i = 1; i <= k; ++i) {
            if (mpq_sgn(a[i].get_mpq_t()) == 0) continue;
            mpq_mul(tmp, a[i].get_mpq_t(), v[k - i].get_mpq_t());
            mpq_add(sum, sum, tmp);
        }
        mpq_neg(sum, sum);
        mpq_mul(v[k].get_mpq_t(), sum, inv0.get_mpq_t());
    }
    mpq_clear(tmp);
    mpq_clear(sum);
    return TruncatedSeries(std::move(v));
}

// D = q d/dq: multiplies the coefficient of q^n by n. Order preserved.
inline TruncatedSeries derive(const TruncatedSeries& a) {
    std::vector<Rational> v(a.order() + 1);
    for (std::size_t i = 1; i <= a.order(); ++i) v[i] = a[i] * static_cast<long>(i);
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries pow(const TruncatedSeries& a, unsigned long k) {
    TruncatedSeries result = series_one(a.order());
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

// q -> q^k. Exponents pushed past the truncation order are dropped.
inline TruncatedSeries substitute_power(const TruncatedSeries& a, unsigned long k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be >= 1");
    const std::size_t n = a.order();
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i * k <= n; ++i) v[i * k] = a[i];
    return TruncatedSeries(std::move(v));
}

inline const Rational& coefficient(const TruncatedSeries& a, std::size_t n) {
    if (n > a.order()) throw std::out_of_range("coefficient: index above truncation order");
    return a[n];
}

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t % m) + m) % m;
}

inline std::int64_t residue_of(const Rational& x, std::int64_t m) {
    const auto um = static_cast<unsigned long>(m);
    const std::int64_t num = static_cast<std::int64_t>(mpz_fdiv_ui(x.get_num().get_mpz_t(), um));
    const std::int64_t den = static_cast<std::int64_t>(mpz_fdiv_ui(x.get_den().get_mpz_t(), um));
    if (std::gcd(den, m) != 1)
        throw std::domain_error("reduce_mod: denominator not coprime to modulus");
    return (num * mod_inverse(den, m)) % m;
}

}  // namespace detail

// Coefficientwise reduction mod m; every denominator must be coprime to m.
inline ModSeries reduce_mod(const TruncatedSeries& a, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    std::vector<std::int64_t> r(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = detail::residue_of(a[i], m);
    return ModSeries(m, std::move(r));
}

inline ModSeries add(const ModSeries& a, const ModSeries& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("ModSeries add: modulus mismatch");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<std::int64_t> r(n + 1);
    for (std::size_t i = 0; i <= n; ++i) r[i] = (a[i] + b[i]) % a.modulus();
    return ModSeries(a.modulus(), std::move(r));
}

inline ModSeries mul(const ModSeries& a, const ModSeries& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("ModSeries mul: modulus mismatch");
    const std::size_t n = std::min(a.order(), b.order());
    const std::int64_t m = a.modulus();
    std::vector<std::int64_t> r(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    }
    return ModSeries(m, std::move(r));
}

// First index (up to the common order) where the two series differ.
inline std::optional<std::size_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

inline bool agree_to(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order) {
    if (a.order() < order || b.order() < order)
        throw std::invalid_argument("agree_to: operand order too small");
    for (std::size_t i = 0; i <= order; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }

inline std::string to_string(const TruncatedSeries& a) {
    std::string out;
    bool first = true;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (a[n] == 0) continue;
        if (!first) out += " + ";
        out += rational_str(a[n]);
        if (n > 0) out += "*q^" + std::to_string(n);
        first = false;
    }
    if (first) out = "0";
    return out;
}

}  // namespace qmf
