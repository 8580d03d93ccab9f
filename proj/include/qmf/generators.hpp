#pragma once

#include <qmf/series.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qmf {

// Bernoulli numbers B_0..B_n from the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0 (so B_1 = -1/2; only the even ones feed
// the Eisenstein series).
class BernoulliCache {
public:
    explicit BernoulliCache(std::size_t n_max) : values_(n_max + 1) {
        values_[0] = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Rational sum = 0;
            for (std::size_t k = 0; k < n; ++k)
                sum += Rational(binomial(n + 1, k)) * values_[k];
            values_[n] = -sum / Rational(binomial(n + 1, n));
        }
    }

    const Rational& value(std::size_t k) const { return values_.at(k); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

inline Rational bernoulli(std::size_t n) { return BernoulliCache(n).value(n); }

// sigma_k(n) = sum of d^k over divisors d of n.
inline Integer divisor_power_sum(unsigned long k, unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisor_power_sum: n must be >= 1");
    Integer sum = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += int_pow(d, k);
        const unsigned long e = n / d;
        if (e != d) sum += int_pow(e, k);
    }
    return sum;
}

namespace detail {

// sigma_k(1..order) by the divisor lattice, O(N log N) terms.
inline std::vector<Integer> sigma_table(unsigned long k, std::size_t order) {
    std::vector<Integer> t(order + 1);
    for (unsigned long d = 1; d <= order; ++d) {
        const Integer dk = int_pow(d, k);
        for (std::size_t m = d; m <= order; m += d) t[m] += dk;
    }
    return t;
}

}  // namespace detail

// E_{2k}(q) = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n.
inline TruncatedSeries eisenstein(unsigned k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("eisenstein: k must be >= 1");
    const Rational factor = Rational(-4L * k) / bernoulli(2 * k);
    const auto sigma = detail::sigma_table(2 * k - 1, order);
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) v[n] = factor * Rational(sigma[n]);
    return TruncatedSeries(std::move(v));
}

// (q^m; q^m)_infinity via the pentagonal number expansion of (x;x)_infinity.
inline TruncatedSeries euler_product(unsigned long m, std::size_t order) {
    if (m == 0) throw std::invalid_argument("euler_product: m must be >= 1");
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (long j = 1;; ++j) {
        const unsigned long e1 = static_cast<unsigned long>(j) * (3 * j - 1) / 2;
        const unsigned long e2 = static_cast<unsigned long>(j) * (3 * j + 1) / 2;
        if (m * e1 > order && m * e2 > order) break;
        const long sign = (j % 2 == 0) ? 1 : -1;
        if (m * e1 <= order) v[m * e1] += sign;
        if (m * e2 <= order) v[m * e2] += sign;
    }
    return TruncatedSeries(std::move(v));
}

enum class ThetaKind { three, four, two_pow4 };

// theta3 = sum q^{m^2}, theta4 = sum (-1)^m q^{m^2}. theta2 itself has
// exponents in Z + 1/4, so only its fourth power is exposed: expand
// 2*sum u^{(2n+1)^2} in u = q^{1/4}, take the fourth power (all exponents
// are then divisible by 4) and reindex u^4 -> q.
inline TruncatedSeries theta(ThetaKind kind, std::size_t order) {
    if (kind == ThetaKind::two_pow4) {
        const std::size_t uorder = 4 * order + 3;
        std::vector<Rational> u(uorder + 1);
        for (unsigned long n = 0; (2 * n + 1) * (2 * n + 1) <= uorder; ++n)
            u[(2 * n + 1) * (2 * n + 1)] = 2;
        const TruncatedSeries fourth = pow(TruncatedSeries(std::move(u)), 4);
        std::vector<Rational> v(order + 1);
        for (std::size_t n = 0; n <= order; ++n) v[n] = fourth[4 * n];
        return TruncatedSeries(std::move(v));
    }
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (unsigned long mm = 1; mm * mm <= order; ++mm) {
        const long c = (kind == ThetaKind::four && (mm % 2 == 1)) ? -2 : 2;
        v[mm * mm] = c;
    }
    return TruncatedSeries(std::move(v));
}

enum class DiagConvention { plain, doubled };

// Theta_{r,s} = X^r Y^s + X^s Y^r with X = theta2^4, Y = theta3^4.
// On the diagonal r = s the literal definition doubles the monomial while
// several printed formulas use the single monomial; both readings are
// supported, default plain (single).
inline TruncatedSeries big_theta(unsigned r, unsigned s, std::size_t order,
                                 DiagConvention diag = DiagConvention::plain) {
    const TruncatedSeries x = theta(ThetaKind::two_pow4, order);
    const TruncatedSeries y = pow(theta(ThetaKind::three, order), 4);
    if (r == s) {
        TruncatedSeries d = mul(pow(x, r), pow(y, r));
        return diag == DiagConvention::doubled ? scale(d, 2) : d;
    }
    return add(mul(pow(x, r), pow(y, s)), mul(pow(x, s), pow(y, r)));
}

// G_2(q) = 2 E_2(q^2) - E_2(q).
inline TruncatedSeries g2(std::size_t order) {
    const TruncatedSeries e2 = eisenstein(1, order);
    return sub(scale(substitute_power(e2, 2), 2), e2);
}

// Lambert series S_j = sum_{m>=1} m^j q^m/(1-q^m) = sum sigma_j(n) q^n.
inline TruncatedSeries lambert(unsigned long j, std::size_t order) {
    const auto sigma = detail::sigma_table(j, order);
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 1; n <= order; ++n) v[n] = Rational(sigma[n]);
    return TruncatedSeries(std::move(v));
}

// H_r(q) = sum_{k>=1} q^{rk}/(1-q^k)^{2r}, summed term by term.
inline TruncatedSeries h_series(unsigned long r, std::size_t order) {
    if (r == 0) throw std::invalid_argument("h_series: r must be >= 1");
    TruncatedSeries acc = series_zero(order);
    for (unsigned long k = 1; r * k <= order; ++k) {
        std::vector<Rational> base(order + 1);
        base[0] = 1;
        if (k <= order) base[k] = -1;
        const TruncatedSeries den = pow(TruncatedSeries(std::move(base)), 2 * r);
        acc = add(acc, mul(monomial(1, r * k, order), invert(den)));
    }
    return acc;
}

}  // namespace qmf
