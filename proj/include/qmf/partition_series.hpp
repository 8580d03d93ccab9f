#pragma once

#include <qmf/generators.hpp>
#include <qmf/series.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmf {

// A q-series carrying a degree-bounded marker variable x: component j is
// the coefficient of x^j. All components share one truncation order.
class MarkedSeries {
public:
    MarkedSeries(std::size_t marker_bound, std::size_t order)
        : components_(marker_bound + 1, series_zero(order)) {}

    explicit MarkedSeries(std::vector<TruncatedSeries> components)
        : components_(std::move(components)) {
        if (components_.empty()) throw std::invalid_argument("MarkedSeries: no components");
        for (const auto& c : components_)
            if (c.order() != components_[0].order())
                throw std::invalid_argument("MarkedSeries: component orders differ");
    }

    std::size_t marker_bound() const { return components_.size() - 1; }
    std::size_t order() const { return components_[0].order(); }
    const TruncatedSeries& component(std::size_t j) const { return components_.at(j); }
    const std::vector<TruncatedSeries>& components() const { return components_; }

private:
    std::vector<TruncatedSeries> components_;
};

enum class MacFamily { u, u_star, c, u_two };

namespace detail {

// Coefficients of q^k/(1-q^k)^2 = sum_{m>=1} m q^{km}.
inline std::vector<Rational> lambert_block(unsigned long k, std::size_t order) {
    std::vector<Rational> g(order + 1);
    for (unsigned long m = 1; k * m <= order; ++m) g[k * m] = static_cast<long>(m);
    return g;
}

}  // namespace detail

// One sweep over the index set builds every marker component at once.
// For u and c the factors are (1 + x g_k): update components descending.
// For u_star the factors are 1/(1 - x g_k): since out = in + x g * out,
// updating ascending realizes the division as a linear recurrence.
inline MarkedSeries macmahon_components(MacFamily family, std::size_t marker_bound,
                                        std::size_t order) {
    if (family == MacFamily::u_two)
        throw std::invalid_argument("macmahon_components: u_two is not a marker product");
    std::vector<std::vector<Rational>> comp(marker_bound + 1,
                                            std::vector<Rational>(order + 1));
    comp[0][0] = 1;
    const unsigned long step = (family == MacFamily::c) ? 2 : 1;
    for (unsigned long k = 1; k <= order; k += step) {
        const auto g = detail::lambert_block(k, order);
        if (family == MacFamily::u_star) {
            for (std::size_t i = 1; i <= marker_bound; ++i)
                detail::acc_mul(comp[i], g, comp[i - 1], order);
        } else {
            for (std::size_t i = marker_bound; i >= 1; --i)
                detail::acc_mul(comp[i], g, comp[i - 1], order);
        }
    }
    std::vector<TruncatedSeries> out;
    out.reserve(marker_bound + 1);
    for (auto& v : comp) out.emplace_back(std::move(v));
    return MarkedSeries(std::move(out));
}

// MacMahon's U_{2t}: coefficient of x^t in prod_{k>=1} (1 + x q^k/(1-q^k)^2).
inline TruncatedSeries macmahon_u(std::size_t t, std::size_t order) {
    return macmahon_components(MacFamily::u, t, order).component(t);
}

// U*_{2t}: coefficient of x^t in prod_{k>=1} (1 - x q^k/(1-q^k)^2)^{-1}
// (weakly increasing index tuples).
inline TruncatedSeries macmahon_u_star(std::size_t t, std::size_t order) {
    return macmahon_components(MacFamily::u_star, t, order).component(t);
}

// C_{2t}: as U_{2t} but over odd indices only.
inline TruncatedSeries macmahon_c(std::size_t t, std::size_t order) {
    return macmahon_components(MacFamily::c, t, order).component(t);
}

namespace detail {

// (q)_inf / (q^2)_inf^2, the prefactor of the single-sum U_{2t}(2;q).
inline TruncatedSeries u_two_prefactor(std::size_t order) {
    return mul(euler_product(1, order), invert(pow(euler_product(2, order), 2)));
}

// sum_{n>=0} C(n+t, 2t) q^{n(n+1)/2}, truncated.
inline TruncatedSeries u_two_binomial_sum(std::size_t t, std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (unsigned long n = 0; n * (n + 1) / 2 <= order; ++n)
        v[n * (n + 1) / 2] += Rational(binomial(n + t, 2 * t));
    return TruncatedSeries(std::move(v));
}

}  // namespace detail

// U_{2t}(2;q) = (q)_inf/(q^2)_inf^2 * sum_{n>=0} C(n+t,2t) q^{n(n+1)/2}.
inline TruncatedSeries macmahon_u_two(std::size_t t, std::size_t order) {
    return mul(detail::u_two_prefactor(order), detail::u_two_binomial_sum(t, order));
}

// U*_{2t} as a single sum:
// sum_{n>=1} (-1)^{n-1}(1+q^n) q^{C(n,2)+tn} / (1-q^n)^{2t}.
inline TruncatedSeries u_star_single_sum(std::size_t t, std::size_t order) {
    if (t == 0) throw std::invalid_argument("u_star_single_sum: t must be >= 1");
    std::vector<Rational> v(order + 1);
    for (unsigned long n = 1;; ++n) {
        const unsigned long base = n * (n - 1) / 2 + t * n;
        if (base > order) break;
        const long sign = (n % 2 == 1) ? 1 : -1;
        // (1-q^n)^{-2t} = sum_m C(m+2t-1, 2t-1) q^{nm}
        for (unsigned long m = 0; base + n * m <= order; ++m) {
            const Rational c = Rational(binomial(m + 2 * t - 1, 2 * t - 1)) * sign;
            v[base + n * m] += c;
            if (base + n * m + n <= order) v[base + n * m + n] += c;
        }
    }
    return TruncatedSeries(std::move(v));
}

enum class PartsClass { all, odd };

// Partition as part size -> multiplicity, every multiplicity >= 1.
struct Partition {
    std::vector<std::pair<unsigned long, unsigned long>> multiplicities;
};

namespace detail {

template <typename Fn>
void enumerate_partitions(unsigned long remaining, unsigned long max_part, PartsClass parts,
                          Partition& scratch, Fn&& visit) {
    if (remaining == 0) {
        visit(const_cast<const Partition&>(scratch));
        return;
    }
    long p = static_cast<long>(std::min(remaining, max_part));
    if (parts == PartsClass::odd && p % 2 == 0) --p;
    const long step = (parts == PartsClass::odd) ? 2 : 1;
    for (; p >= 1; p -= step) {
        const auto part = static_cast<unsigned long>(p);
        for (unsigned long m = 1; m * part <= remaining; ++m) {
            scratch.multiplicities.emplace_back(part, m);
            enumerate_partitions(remaining - m * part, part - 1, parts, scratch, visit);
            scratch.multiplicities.pop_back();
        }
    }
}

}  // namespace detail

// Naive reference count: enumerate partitions of n over the chosen parity
// class, keep those with exactly t distinct part sizes, and sum the product
// of the multiplicities. Guarded at n <= 80.
inline Integer multiplicity_oracle(std::size_t t, std::size_t n, PartsClass parts) {
    if (n > 80) throw std::invalid_argument("multiplicity_oracle: n above enumeration guard (80)");
    if (n == 0) return (t == 0) ? 1 : 0;
    Integer total = 0;
    Partition scratch;
    detail::enumerate_partitions(n, n, parts, scratch, [&](const Partition& p) {
        if (p.multiplicities.size() != t) return;
        Integer prod = 1;
        for (const auto& [part, mult] : p.multiplicities) prod *= mult;
        total += prod;
    });
    return total;
}

// U*_{2t} from the U_{2k} via the elementary/complete symmetric function
// convolution:
// U*_{2t} = (-1)^t sum_{(1^{m1},...,t^{mt}) |- t}
//           (-1)^{sum m} multinomial(sum m; m_1..m_t) prod U_{2k}^{m_k}.
inline TruncatedSeries u_star_from_u(std::size_t t, std::size_t order) {
    if (t == 0) return series_one(order);
    std::vector<TruncatedSeries> u_pow;  // U_{2k} for k = 0..t
    u_pow.reserve(t + 1);
    for (std::size_t k = 0; k <= t; ++k) u_pow.push_back(macmahon_u(k, order));

    TruncatedSeries acc = series_zero(order);
    std::vector<unsigned long> mult(t + 1, 0);
    const std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t k,
                                                                    unsigned long left) {
        if (left == 0) {
            unsigned long total = 0;
            for (std::size_t j = 1; j <= t; ++j) total += mult[j];
            Integer coeff = factorial(total);
            for (std::size_t j = 1; j <= t; ++j) coeff /= factorial(mult[j]);
            if (total % 2 == 1) coeff = -coeff;
            TruncatedSeries term = series_one(order);
            for (std::size_t j = 1; j <= t; ++j)
                if (mult[j] > 0) term = mul(term, pow(u_pow[j], mult[j]));
            acc = add(acc, scale(term, Rational(coeff)));
            return;
        }
        if (k == 0) return;
        for (unsigned long m = 0; m * k <= left; ++m) {
            mult[k] = m;
            rec(k - 1, left - m * k);
        }
        mult[k] = 0;
    };
    rec(t, t);
    if (t % 2 == 1) acc = negate(acc);
    return acc;
}

namespace detail {

// Smallest T whose family member starts above the truncation order, making
// the infinite family sum exact at finite order.
inline std::size_t family_cutoff(MacFamily family, std::size_t order) {
    switch (family) {
        case MacFamily::u_star:
            return order + 1;  // U*_{2t} starts at q^t
        case MacFamily::c: {
            std::size_t t = 0;
            while (t * t <= order) ++t;  // C_{2t} starts at q^{t^2}
            return t;
        }
        default: {
            std::size_t t = 0;
            while (t * (t + 1) / 2 <= order) ++t;  // starts at q^{t(t+1)/2}
            return t;
        }
    }
}

}  // namespace detail

// sum_{t>=0} of the family, exact at the given order.
inline TruncatedSeries family_sum(MacFamily family, std::size_t order) {
    const std::size_t cutoff = detail::family_cutoff(family, order);
    if (family == MacFamily::u_two) {
        TruncatedSeries sums = series_zero(order);
        for (std::size_t t = 0; t <= cutoff; ++t)
            sums = add(sums, detail::u_two_binomial_sum(t, order));
        return mul(detail::u_two_prefactor(order), sums);
    }
    const MarkedSeries all = macmahon_components(family, cutoff, order);
    TruncatedSeries acc = series_zero(order);
    for (std::size_t t = 0; t <= cutoff; ++t) acc = add(acc, all.component(t));
    return acc;
}

// Dense univariate polynomial product, for umbral expressions.
inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Umbral evaluation: S^m becomes the Lambert series S_m after expansion,
// the constant term stays a constant.
inline TruncatedSeries umbral_eval(const std::vector<Rational>& poly, std::size_t order) {
    TruncatedSeries acc = series_zero(order);
    for (std::size_t m = 0; m < poly.size(); ++m) {
        if (poly[m] == 0) continue;
        if (m == 0)
            acc = add(acc, scale(series_one(order), poly[0]));
        else
            acc = add(acc, scale(lambert(m, order), poly[m]));
    }
    return acc;
}

}  // namespace qmf
