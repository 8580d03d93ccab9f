#pragma once

#include <qmf/generators.hpp>
#include <qmf/series.hpp>

#include <compare>
#include <functional>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmf {

// E:     E2^a E4^b E6^c            weight 2a+4b+6c
// Theta: E2^a Theta_{b,c}          weight 2(a+b+c), canonical keys b <= c
// G:     E2^a G2^b E4^c            weight 2a+2b+4c
// XY:    E2^a X^b Y^c              weight 2(a+b+c), X = theta2^4, Y = theta3^4
enum class Basis { E, Theta, G, XY };

struct MonomialKey {
    int a = 0;
    int b = 0;
    int c = 0;
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

inline int monomial_weight(Basis basis, const MonomialKey& k) {
    switch (basis) {
        case Basis::E: return 2 * k.a + 4 * k.b + 6 * k.c;
        case Basis::G: return 2 * k.a + 2 * k.b + 4 * k.c;
        default: return 2 * (k.a + k.b + k.c);
    }
}

// Sparse exponent-triple -> rational map in one graded monomial basis.
// Zero coefficients are never stored; Theta keys are kept canonical
// (Theta_{b,c} = Theta_{c,b}, so incoming keys are sorted).
class GradedPoly {
public:
    explicit GradedPoly(Basis basis) : basis_(basis) {}

    Basis basis() const { return basis_; }
    const std::map<MonomialKey, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(MonomialKey key, const Rational& coeff) {
        if (coeff == 0) return;
        if (key.a < 0 || key.b < 0 || key.c < 0)
            throw std::invalid_argument("GradedPoly: negative exponent");
        if (basis_ == Basis::Theta && key.b > key.c) std::swap(key.b, key.c);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const MonomialKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int max_weight() const {
        int w = 0;
        for (const auto& [k, v] : terms_) w = std::max(w, monomial_weight(basis_, k));
        return w;
    }

    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

private:
    Basis basis_;
    std::map<MonomialKey, Rational> terms_;
};

inline GradedPoly poly_monomial(Basis basis, MonomialKey key, const Rational& coeff) {
    GradedPoly p(basis);
    p.add_term(key, coeff);
    return p;
}

inline GradedPoly add(const GradedPoly& p, const GradedPoly& q) {
    if (p.basis() != q.basis()) throw std::invalid_argument("GradedPoly add: basis mismatch");
    GradedPoly out = p;
    for (const auto& [k, v] : q.terms()) out.add_term(k, v);
    return out;
}

inline GradedPoly scale(const GradedPoly& p, const Rational& c) {
    GradedPoly out(p.basis());
    if (c == 0) return out;
    for (const auto& [k, v] : p.terms()) out.add_term(k, v * c);
    return out;
}

inline GradedPoly sub(const GradedPoly& p, const GradedPoly& q) {
    return add(p, scale(q, -1));
}

// Theta_{b,c} -> X^b Y^c + X^c Y^b; the diagonal becomes one monomial
// under plain and twice the monomial under doubled.
inline GradedPoly theta_to_xy(const GradedPoly& p,
                              DiagConvention diag = DiagConvention::plain) {
    if (p.basis() != Basis::Theta) throw std::invalid_argument("theta_to_xy: expected Theta basis");
    GradedPoly out(Basis::XY);
    for (const auto& [k, v] : p.terms()) {
        if (k.b == k.c) {
            out.add_term(k, diag == DiagConvention::doubled ? v * 2 : v);
        } else {
            out.add_term(k, v);
            out.add_term({k.a, k.c, k.b}, v);
        }
    }
    return out;
}

inline GradedPoly xy_to_theta(const GradedPoly& p,
                              DiagConvention diag = DiagConvention::plain) {
    if (p.basis() != Basis::XY) throw std::invalid_argument("xy_to_theta: expected XY basis");
    GradedPoly out(Basis::Theta);
    for (const auto& [k, v] : p.terms()) {
        if (k.b == k.c) {
            out.add_term(k, diag == DiagConvention::doubled ? v / 2 : v);
            continue;
        }
        if (p.coeff({k.a, k.c, k.b}) != v)
            throw std::invalid_argument("xy_to_theta: term map not symmetric");
        if (k.b < k.c) out.add_term(k, v);  // the mirrored key contributes the same term
    }
    return out;
}

// Shared power-cached evaluator for a basis at a fixed order. Theta keys
// evaluate through XY with the plain (single-monomial) diagonal.
class BasisEvaluator {
public:
    BasisEvaluator(Basis basis, std::size_t order) : basis_(basis), order_(order) {
        switch (basis) {
            case Basis::E:
                gen_a_ = eisenstein(1, order);
                gen_b_ = eisenstein(2, order);
                gen_c_ = eisenstein(3, order);
                break;
            case Basis::G:
                gen_a_ = eisenstein(1, order);
                gen_b_ = g2(order);
                gen_c_ = eisenstein(2, order);
                break;
            default:  // Theta and XY both run on E2, X, Y
                gen_a_ = eisenstein(1, order);
                gen_b_ = theta(ThetaKind::two_pow4, order);
                gen_c_ = pow(theta(ThetaKind::three, order), 4);
                break;
        }
        pow_a_.push_back(series_one(order));
        pow_b_.push_back(series_one(order));
        pow_c_.push_back(series_one(order));
    }

    std::size_t order() const { return order_; }

    TruncatedSeries eval(const MonomialKey& k) const {
        if (basis_ == Basis::Theta) {
            TruncatedSeries s = mul(power(pow_b_, gen_b_, k.b), power(pow_c_, gen_c_, k.c));
            if (k.b != k.c)
                s = add(s, mul(power(pow_b_, gen_b_, k.c), power(pow_c_, gen_c_, k.b)));
            return mul(power(pow_a_, gen_a_, k.a), s);
        }
        return mul(power(pow_a_, gen_a_, k.a),
                   mul(power(pow_b_, gen_b_, k.b), power(pow_c_, gen_c_, k.c)));
    }

private:
    const TruncatedSeries& power(std::vector<TruncatedSeries>& cache,
                                 const TruncatedSeries& base, int e) const {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(mul(cache.back(), base));
        return cache[static_cast<std::size_t>(e)];
    }

    Basis basis_;
    std::size_t order_;
    TruncatedSeries gen_a_, gen_b_, gen_c_;
    mutable std::vector<TruncatedSeries> pow_a_, pow_b_, pow_c_;
};

inline TruncatedSeries eval_poly(const GradedPoly& p, std::size_t order) {
    BasisEvaluator ev(p.basis(), order);
    TruncatedSeries acc = series_zero(order);
    for (const auto& [k, v] : p.terms()) acc = add(acc, scale(ev.eval(k), v));
    return acc;
}

// Formal derivative in the E basis, extending
// D(E2) = (E2^2-E4)/12, D(E4) = (E2 E4-E6)/3, D(E6) = (E2 E6-E4^2)/2.
inline GradedPoly d_e_basis(const GradedPoly& p) {
    if (p.basis() != Basis::E) throw std::invalid_argument("d_e_basis: expected E basis");
    GradedPoly out(Basis::E);
    for (const auto& [k, v] : p.terms()) {
        out.add_term({k.a + 1, k.b, k.c},
                     v * (make_rational(k.a, 12) + make_rational(k.b, 3) + make_rational(k.c, 2)));
        if (k.a > 0) out.add_term({k.a - 1, k.b + 1, k.c}, -v * make_rational(k.a, 12));
        if (k.b > 0) out.add_term({k.a, k.b - 1, k.c + 1}, -v * make_rational(k.b, 3));
        if (k.c > 0) out.add_term({k.a, k.b + 2, k.c - 1}, -v * make_rational(k.c, 2));
    }
    return out;
}

// Formal derivative in the G basis, extending
// D(G2) = (E2 G2 - 2 G2^2 + E4)/6, D(E4) = (E2 E4 - 4 G2^3 + 3 G2 E4)/3.
inline GradedPoly d_g_basis(const GradedPoly& p) {
    if (p.basis() != Basis::G) throw std::invalid_argument("d_g_basis: expected G basis");
    GradedPoly out(Basis::G);
    for (const auto& [k, v] : p.terms()) {
        out.add_term({k.a + 1, k.b, k.c},
                     v * (make_rational(k.a, 12) + make_rational(k.b, 6) + make_rational(k.c, 3)));
        if (k.a > 0) out.add_term({k.a - 1, k.b, k.c + 1}, -v * make_rational(k.a, 12));
        if (k.b > 0) {
            out.add_term({k.a, k.b + 1, k.c}, -v * make_rational(k.b, 3));
            out.add_term({k.a, k.b - 1, k.c + 1}, v * make_rational(k.b, 6));
        }
        if (k.c > 0) {
            out.add_term({k.a, k.b + 1, k.c}, v * k.c);
            out.add_term({k.a, k.b + 3, k.c - 1}, -v * make_rational(4 * k.c, 3));
        }
    }
    return out;
}

namespace detail {

// Derivative on E2^a X^r Y^s using the fourth-power theta rules
// D(X) = X(E2-X+5Y)/6, D(Y) = Y(E2+5X-Y)/6 and D(E2) = (E2^2-E4)/12
// with E4 = X^2+14XY+Y^2.
inline GradedPoly d_xy(const GradedPoly& p) {
    GradedPoly out(Basis::XY);
    for (const auto& [k, v] : p.terms()) {
        const int a = k.a, r = k.b, s = k.c;
        out.add_term({a + 1, r, s}, v * (make_rational(a, 12) + make_rational(r + s, 6)));
        if (a > 0) {
            out.add_term({a - 1, r + 2, s}, -v * make_rational(a, 12));
            out.add_term({a - 1, r + 1, s + 1}, -v * make_rational(7 * a, 6));
            out.add_term({a - 1, r, s + 2}, -v * make_rational(a, 12));
        }
        if (r > 0) {
            out.add_term({a, r + 1, s}, -v * make_rational(r, 6));
            out.add_term({a, r, s + 1}, v * make_rational(5 * r, 6));
        }
        if (s > 0) {
            out.add_term({a, r + 1, s}, v * make_rational(5 * s, 6));
            out.add_term({a, r, s + 1}, -v * make_rational(s, 6));
        }
    }
    return out;
}

}  // namespace detail

// Formal derivative for Theta or XY polynomials. All the algebra happens in
// XY form; Theta in/out goes through the stated diagonal convention.
inline GradedPoly d_theta_basis(const GradedPoly& p,
                                DiagConvention diag = DiagConvention::plain) {
    if (p.basis() == Basis::XY) return detail::d_xy(p);
    if (p.basis() != Basis::Theta)
        throw std::invalid_argument("d_theta_basis: expected Theta or XY basis");
    return xy_to_theta(detail::d_xy(theta_to_xy(p, diag)), diag);
}

// Partial derivative with respect to E2, the other generators held fixed.
inline GradedPoly partial_e2(const GradedPoly& p) {
    if (p.basis() != Basis::E) throw std::invalid_argument("partial_e2: expected E basis");
    GradedPoly out(Basis::E);
    for (const auto& [k, v] : p.terms())
        if (k.a > 0) out.add_term({k.a - 1, k.b, k.c}, v * k.a);
    return out;
}

enum class EisensteinSign { plus, minus };

// Partition Eisenstein series: sum over partitions (1^{m_1},...,t^{m_t}) of t
// of prod_s (1/m_s!) (sign * B_{2s} E_{2s} / ((2s) (2s)!))^{m_s}.
inline TruncatedSeries partition_eisenstein(std::size_t t, EisensteinSign sign,
                                            std::size_t order) {
    std::vector<TruncatedSeries> factor;  // index s-1
    factor.reserve(t);
    for (std::size_t s = 1; s <= t; ++s) {
        Rational c = bernoulli(2 * s) / (Rational(2 * s) * Rational(factorial(2 * s)));
        if (sign == EisensteinSign::minus) c = -c;
        factor.push_back(scale(eisenstein(static_cast<unsigned>(s), order), c));
    }
    TruncatedSeries acc = series_zero(order);
    std::vector<unsigned long> mult(t + 1, 0);
    const std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t s,
                                                                    unsigned long left) {
        if (left == 0) {
            TruncatedSeries term = series_one(order);
            Rational c = 1;
            for (std::size_t j = 1; j <= t; ++j) {
                if (mult[j] == 0) continue;
                term = mul(term, pow(factor[j - 1], mult[j]));
                c /= Rational(factorial(mult[j]));
            }
            acc = add(acc, scale(term, c));
            return;
        }
        if (s == 0) return;
        for (unsigned long m = 0; m * s <= left; ++m) {
            mult[s] = m;
            rec(s - 1, left - m * s);
        }
        mult[s] = 0;
    };
    if (t == 0) return series_one(order);
    rec(t, t);
    return acc;
}

}  // namespace qmf
