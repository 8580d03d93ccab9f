#pragma once

#include <qmf/basis_solve.hpp>
#include <qmf/partition_series.hpp>
#include <qmf/recursions.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmf {

enum class Status { pass, fail, recorded_discrepancy };

inline std::string status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "recorded-discrepancy";
    }
}

struct Mismatch {
    std::size_t n;
    std::string lhs;
    std::string rhs;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

// Outcome of one identity check. `note` carries the resolved reading when
// a printed formula needed correcting (status recorded-discrepancy).
struct VerificationReport {
    std::string identity_id;
    std::size_t order = 0;
    Status status = Status::pass;
    std::optional<Mismatch> first_mismatch;
    std::int64_t elapsed_ms = 0;
    std::string note;
};

enum class OracleMethod { conjugated, quotient };

// Ramanujan's U_{2t}. The conjugated method iterates
// r_{k+1} = 8 D(r_k) + E2 r_k from r_0 = 1: conjugating D by the q^{1/8}
// prefactor of psi = eta^3 turns 8^t D^t(psi)/psi into a recurrence on
// integer-exponent series. The quotient method divides the odd-square
// theta sums directly.
inline TruncatedSeries ramanujan_u(std::size_t t, std::size_t order, OracleMethod method) {
    if (method == OracleMethod::conjugated) {
        const TruncatedSeries e2 = eisenstein(1, order);
        TruncatedSeries r = series_one(order);
        for (std::size_t k = 0; k < t; ++k) r = add(scale(derive(r), 8), mul(e2, r));
        return r;
    }
    std::vector<Rational> num(order + 1), den(order + 1);
    for (unsigned long n = 0; n * (n + 1) / 2 <= order; ++n) {
        const long sign = (n % 2 == 0) ? 1 : -1;
        const Integer w = int_pow(2 * n + 1, 2 * t + 1) * sign;
        num[n * (n + 1) / 2] += Rational(w);
        den[n * (n + 1) / 2] += Rational(Integer(static_cast<long>(2 * n + 1) * sign));
    }
    return mul(TruncatedSeries(std::move(num)), invert(TruncatedSeries(std::move(den))));
}

// Ramanujan's V_{2t} = 24^t D^t(eta)/eta; same conjugation device with the
// q^{1/24} prefactor, so r_{k+1} = 24 D(r_k) + E2 r_k. The quotient method
// uses the pentagonal sum with weights (6n-1)^{2t} over the denominator
// (q)_infinity.
inline TruncatedSeries ramanujan_v(std::size_t t, std::size_t order, OracleMethod method) {
    if (method == OracleMethod::conjugated) {
        const TruncatedSeries e2 = eisenstein(1, order);
        TruncatedSeries r = series_one(order);
        for (std::size_t k = 0; k < t; ++k) r = add(scale(derive(r), 24), mul(e2, r));
        return r;
    }
    std::vector<Rational> num(order + 1);
    num[0] = 1;  // n = 0 term
    for (unsigned long j = 1;; ++j) {
        const unsigned long e_pos = j * (3 * j - 1) / 2;
        const unsigned long e_neg = j * (3 * j + 1) / 2;
        if (e_pos > order && e_neg > order) break;
        const long sign = (j % 2 == 0) ? 1 : -1;
        if (e_pos <= order) num[e_pos] += Rational(int_pow(6 * j - 1, 2 * t) * sign);
        if (e_neg <= order) num[e_neg] += Rational(int_pow(6 * j + 1, 2 * t) * sign);
    }
    return mul(TruncatedSeries(std::move(num)), invert(euler_product(1, order)));
}

// D^t(theta4)/theta4 by iterating r_{k+1} = D(r_k) + (D(theta4)/theta4) r_k;
// theta4 has integer exponents, so no conjugation is needed.
inline TruncatedSeries dtheta4_ratio(std::size_t t, std::size_t order) {
    const TruncatedSeries t4 = theta(ThetaKind::four, order);
    const TruncatedSeries w = mul(derive(t4), invert(t4));
    TruncatedSeries r = series_one(order);
    for (std::size_t k = 0; k < t; ++k) r = add(derive(r), mul(w, r));
    return r;
}

// C_{2t} = sum_{k=1}^t (-1)^k v_t(k)/(2t)! * D^k(theta4)/theta4.
inline TruncatedSeries c_from_dtheta(std::size_t t, std::size_t order) {
    if (t == 0) throw std::invalid_argument("c_from_dtheta: t must be >= 1");
    const auto v = v_weights(t);
    const Rational fact = Rational(factorial(2 * t));
    const TruncatedSeries t4 = theta(ThetaKind::four, order);
    const TruncatedSeries w = mul(derive(t4), invert(t4));
    TruncatedSeries r = series_one(order);
    TruncatedSeries acc = series_zero(order);
    for (std::size_t k = 1; k <= t; ++k) {
        r = add(derive(r), mul(w, r));  // r = D^k(theta4)/theta4
        Rational c = v[k - 1] / fact;
        if (k % 2 == 1) c = -c;
        acc = add(acc, scale(r, c));
    }
    return acc;
}

// Andrews-Rose step: C_{2t} from C_{2t-2} as
// (1/(2t(2t-1))) [(2 C_2 + (t-1)^2) C_{2t-2} - D(C_{2t-2})].
// The printed relation names "C_1", which does not exist under even-index
// naming; the step is instantiated with C_2, the reading under which it
// reproduces the marker-product family.
inline TruncatedSeries c_recurrence_step(const TruncatedSeries& prev, std::size_t t) {
    if (t < 2) throw std::invalid_argument("c_recurrence_step: t must be >= 2");
    const std::size_t order = prev.order();
    const TruncatedSeries c2 = macmahon_c(1, order);
    const Rational shift(static_cast<long>((t - 1) * (t - 1)));
    TruncatedSeries bracket =
        sub(mul(add(scale(c2, 2), scale(series_one(order), shift)), prev), derive(prev));
    return scale(bracket, make_rational(1, static_cast<long>(2 * t * (2 * t - 1))));
}

// #{(r,s) in Z^2 : r^2 + s^2 = n} by bounded enumeration.
inline long count_two_squares(unsigned long n) {
    long count = 0;
    for (long r = 0; static_cast<unsigned long>(r) * r <= n; ++r) {
        const unsigned long rest = n - static_cast<unsigned long>(r) * r;
        unsigned long s = 0;
        while (s * s < rest) ++s;
        if (s * s != rest) continue;
        const long reps_r = (r == 0) ? 1 : 2;
        const long reps_s = (s == 0) ? 1 : 2;
        count += reps_r * reps_s;
    }
    return count;
}

namespace detail {

inline std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename Body>
VerificationReport timed_check(const std::string& id, std::size_t order, Body&& body) {
    VerificationReport rep;
    rep.identity_id = id;
    rep.order = order;
    const std::int64_t start = now_ms();
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.status = Status::fail;
        rep.note = std::string("exception: ") + e.what();
    }
    rep.elapsed_ms = now_ms() - start;
    return rep;
}

inline void compare_series(VerificationReport& rep, const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs, const std::string& context = "") {
    if (rep.status == Status::fail) return;
    if (const auto n = first_mismatch(lhs, rhs)) {
        rep.status = Status::fail;
        rep.first_mismatch = Mismatch{*n, rational_str(lhs[*n]), rational_str(rhs[*n])};
        if (!context.empty()) rep.note = context;
    }
}

// sum_{k>=1} q^{tk}/(1-q^k)^e, the shape appearing in the umbral identities.
inline TruncatedSeries tail_power_sum(unsigned long t, unsigned long e, std::size_t order) {
    TruncatedSeries acc = series_zero(order);
    for (unsigned long k = 1; t * k <= order; ++k) {
        std::vector<Rational> base(order + 1);
        base[0] = 1;
        if (k <= order) base[k] = -1;
        acc = add(acc, mul(monomial(1, t * k, order), invert(pow(TruncatedSeries(std::move(base)), e))));
    }
    return acc;
}

}  // namespace detail

// --- single-identity checks ---------------------------------------------

// V_{2t} equals the weight-t slice of the c_v table.
inline VerificationReport theorem2_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("theorem2", order, [&](VerificationReport& rep) {
        const CoeffTable table = cv_table(static_cast<int>(t_max));
        BasisEvaluator ev(Basis::E, order);
        for (std::size_t t = 0; t <= t_max && rep.status == Status::pass; ++t) {
            TruncatedSeries lhs = series_zero(order);
            for (const auto& [k, v] : table.entries)
                if (k.a + 2 * k.b + 3 * k.c == static_cast<int>(t))
                    lhs = add(lhs, scale(ev.eval(k), v));
            detail::compare_series(rep, lhs, ramanujan_v(t, order, OracleMethod::quotient),
                                   "t=" + std::to_string(t));
        }
    });
}

// D^t(theta4)/theta4 equals the level-t slice of the c_c table, evaluated
// with canonical Theta keys and the plain diagonal.
inline VerificationReport theorem3_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("theorem3", order, [&](VerificationReport& rep) {
        const CoeffTable table = cc_table(static_cast<int>(t_max));
        BasisEvaluator ev(Basis::Theta, order);
        for (std::size_t t = 1; t <= t_max && rep.status == Status::pass; ++t) {
            TruncatedSeries lhs = series_zero(order);
            for (const auto& [k, v] : table.entries)
                if (k.a + k.b + k.c == static_cast<int>(t)) lhs = add(lhs, scale(ev.eval(k), v));
            detail::compare_series(rep, lhs, dtheta4_ratio(t, order), "t=" + std::to_string(t));
        }
    });
}

// Same object in the E2/G2/E4 ring: level slices of the c~_c table.
inline VerificationReport g_basis_theorem_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("sec5_g_basis", order, [&](VerificationReport& rep) {
        const CoeffTable table = cc_tilde_table(static_cast<int>(t_max));
        BasisEvaluator ev(Basis::G, order);
        for (std::size_t t = 1; t <= t_max && rep.status == Status::pass; ++t) {
            TruncatedSeries lhs = series_zero(order);
            for (const auto& [k, v] : table.entries)
                if (k.a + k.b + 2 * k.c == static_cast<int>(t)) lhs = add(lhs, scale(ev.eval(k), v));
            detail::compare_series(rep, lhs, dtheta4_ratio(t, order), "t=" + std::to_string(t));
        }
    });
}

// C_{2t} via the weighted D^k(theta4)/theta4 sums against the marker product.
inline VerificationReport theorem5_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("theorem5_1", order, [&](VerificationReport& rep) {
        for (std::size_t t = 1; t <= t_max && rep.status == Status::pass; ++t)
            detail::compare_series(rep, c_from_dtheta(t, order), macmahon_c(t, order),
                                   "t=" + std::to_string(t));
    });
}

// MacMahon's U_{2t} as a signed w_a(t)-combination of Ramanujan's U_{2a}.
// The printed all-plus combination fails already at the constant term for
// t = 1; the sign pattern is solved for exactly and recorded.
inline VerificationReport weight_decomposition_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("weight_decomposition_u", order, [&](VerificationReport& rep) {
        rep.status = Status::recorded_discrepancy;
        std::string pattern;
        for (std::size_t t = 1; t <= t_max; ++t) {
            const TruncatedSeries target = macmahon_u(t, order);
            const auto w = w_weights(t);
            std::vector<TruncatedSeries> scaled;
            for (std::size_t a = 0; a <= t; ++a)
                scaled.push_back(scale(ramanujan_u(a, order, OracleMethod::conjugated), w[a]));
            std::vector<unsigned long> matches;
            for (unsigned long bits = 0; bits < (1UL << (t + 1)); ++bits) {
                TruncatedSeries sum = series_zero(order);
                for (std::size_t a = 0; a <= t; ++a)
                    sum = add(sum, (bits >> a) & 1 ? negate(scaled[a]) : scaled[a]);
                if (!first_mismatch(sum, target)) matches.push_back(bits);
            }
            // expected unique resolution: epsilon_a = (-1)^a, bits = 0b1010...
            unsigned long alternating = 0;
            for (std::size_t a = 1; a <= t; a += 2) alternating |= 1UL << a;
            if (matches.size() != 1 || matches[0] != alternating) {
                rep.status = Status::fail;
                rep.note = "sign pattern resolution failed at t=" + std::to_string(t);
                return;
            }
            pattern = "epsilon_a = (-1)^a";
        }
        rep.note = "printed all-plus decomposition fails; resolved " + pattern;
    });
}

// D(E_{2t-2}) = t(2t+1) E_{2t} - 3 E_2 E_{2t-2} for partition Eisenstein
// series (the generalization of Ramanujan's derivative rules).
inline VerificationReport sec4_derivative_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("sec4_derivative_theorem", order, [&](VerificationReport& rep) {
        std::vector<TruncatedSeries> pe;
        for (std::size_t t = 0; t <= t_max; ++t)
            pe.push_back(partition_eisenstein(t, EisensteinSign::plus, order));
        for (std::size_t t = 2; t <= t_max && rep.status == Status::pass; ++t) {
            const TruncatedSeries lhs = derive(pe[t - 1]);
            const TruncatedSeries rhs =
                sub(scale(pe[t], Rational(static_cast<long>(t * (2 * t + 1)))),
                    scale(mul(pe[1], pe[t - 1]), 3));
            detail::compare_series(rep, lhs, rhs, "t=" + std::to_string(t));
        }
    });
}

namespace detail {

// Resolve the sign vector (s_1..s_t) in
//   partial_E2 P_t = (1/12) sum_j s_j P_{t-j} / (j^2 C(2j,j))
// by exact search; returns std::nullopt if no vector matches.
inline std::optional<unsigned long> resolve_partial_e2_signs(
    const std::vector<GradedPoly>& p, std::size_t t) {
    const GradedPoly lhs = partial_e2(p[t]);
    for (unsigned long bits = 0; bits < (1UL << t); ++bits) {
        GradedPoly rhs(Basis::E);
        for (std::size_t j = 1; j <= t; ++j) {
            Rational c = make_rational(1, 12) /
                         (Rational(static_cast<long>(j * j)) * Rational(binomial(2 * j, j)));
            if ((bits >> (j - 1)) & 1) c = -c;
            rhs = add(rhs, scale(p[t - j], c));
        }
        if (lhs == rhs) return bits;
    }
    return std::nullopt;
}

}  // namespace detail

// The partial-E2 reduction of the MacMahon families. The displayed
// proposition and its proof disagree on the sign of the U* sum; both
// families are resolved by exact computation and the result recorded.
inline VerificationReport sec4_partial_e2_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("sec4_partial_e2", order, [&](VerificationReport& rep) {
        std::vector<GradedPoly> pu, pus;
        for (std::size_t t = 0; t <= t_max; ++t) {
            pu.push_back(express_in_basis(macmahon_u(t, order), static_cast<int>(t), Basis::E));
            pus.push_back(
                express_in_basis(macmahon_u_star(t, order), static_cast<int>(t), Basis::E));
        }
        std::string resolved_u, resolved_us;
        for (std::size_t t = 1; t <= t_max; ++t) {
            const auto su = detail::resolve_partial_e2_signs(pu, t);
            const auto sus = detail::resolve_partial_e2_signs(pus, t);
            // expected: all-minus for U (bits all ones), (-1)^j for U*
            unsigned long all_minus = (1UL << t) - 1;
            unsigned long alternating = 0;
            for (std::size_t j = 1; j <= t; j += 2) alternating |= 1UL << (j - 1);
            if (!su || *su != all_minus) {
                rep.status = Status::fail;
                rep.note = "U-family sign resolution failed at t=" + std::to_string(t);
                return;
            }
            if (!sus || *sus != alternating) {
                rep.status = Status::fail;
                rep.note = "U*-family sign resolution failed at t=" + std::to_string(t);
                return;
            }
        }
        rep.status = Status::recorded_discrepancy;
        rep.note =
            "resolved signs: partial_E2 U_{2t} = -(1/12) sum_j U_{2t-2j}/(j^2 C(2j,j)) "
            "(as displayed); partial_E2 U*_{2t} = (1/12) sum_j (-1)^j U*_{2t-2j}/(j^2 C(2j,j)) "
            "(the proof's signed form; the displayed unsigned variant fails)";
    });
}

// (2r-1)! H_r = S(S^2-1^2)...(S^2-(r-1)^2) under the umbral convention.
inline VerificationReport umbral_hr_check(std::size_t r_max, std::size_t order) {
    return detail::timed_check("umbral_hr", order, [&](VerificationReport& rep) {
        for (std::size_t r = 1; r <= r_max && rep.status == Status::pass; ++r) {
            std::vector<Rational> poly{0, 1};  // S
            for (std::size_t s = 1; s < r; ++s)
                poly = poly_mul(poly, {Rational(-static_cast<long>(s * s)), 0, 1});
            const TruncatedSeries lhs = scale(h_series(r, order), Rational(factorial(2 * r - 1)));
            detail::compare_series(rep, lhs, umbral_eval(poly, order), "r=" + std::to_string(r));
        }
    });
}

// The generalization (beta t - 1)! sum_k q^{tk}/(1-q^k)^{beta t}
// = prod_{s=1}^{beta t - 1} (S - t + s), checked for (beta,t) = (3,1), (2,2).
inline VerificationReport umbral_remark_check(std::size_t /*t_max*/, std::size_t order) {
    return detail::timed_check("umbral_remark", order, [&](VerificationReport& rep) {
        for (const auto& [beta, t] : std::vector<std::pair<unsigned long, unsigned long>>{
                 {3, 1}, {2, 2}}) {
            const unsigned long deg = beta * t - 1;
            std::vector<Rational> poly{1};
            for (unsigned long s = 1; s <= deg; ++s)
                poly = poly_mul(poly, {Rational(-static_cast<long>(t) + static_cast<long>(s)), 1});
            const TruncatedSeries lhs =
                scale(detail::tail_power_sum(t, beta * t, order), Rational(factorial(deg)));
            detail::compare_series(rep, lhs, umbral_eval(poly, order),
                                   "beta=" + std::to_string(beta) + ",t=" + std::to_string(t));
            if (rep.status != Status::pass) return;
        }
    });
}

// sum_t U_{2t} = (q^6)inf / ((q)inf (q^2)inf (q^3)inf).
inline VerificationReport prop5_3_u_check(std::size_t order) {
    return detail::timed_check("prop5_3_u", order, [&](VerificationReport& rep) {
        const TruncatedSeries rhs =
            mul(euler_product(6, order),
                invert(mul(euler_product(1, order),
                           mul(euler_product(2, order), euler_product(3, order)))));
        detail::compare_series(rep, family_sum(MacFamily::u, order), rhs);
    });
}

// sum_t C_{2t} = (q^4)inf (q^6)inf^2 / ((q)inf (q^3)inf (q^12)inf).
inline VerificationReport prop5_3_c_check(std::size_t order) {
    return detail::timed_check("prop5_3_c", order, [&](VerificationReport& rep) {
        const TruncatedSeries rhs =
            mul(mul(euler_product(4, order), pow(euler_product(6, order), 2)),
                invert(mul(euler_product(1, order),
                           mul(euler_product(3, order), euler_product(12, order)))));
        detail::compare_series(rep, family_sum(MacFamily::c, order), rhs);
    });
}

// sum_t U*_{2t} = sum_{n>=1} (-1)^{n-1}(1-q^n)(1-q^{2n}) q^{C(n,2)}
//                 / (1 - 3q^n + q^{2n}).
inline VerificationReport prop5_3_ustar_check(std::size_t order) {
    return detail::timed_check("prop5_3_ustar", order, [&](VerificationReport& rep) {
        TruncatedSeries rhs = series_zero(order);
        for (unsigned long n = 1; n * (n - 1) / 2 <= order; ++n) {
            std::vector<Rational> numer(order + 1), denom(order + 1);
            const unsigned long base = n * (n - 1) / 2;
            const long sign = (n % 2 == 1) ? 1 : -1;
            // (1-q^n)(1-q^{2n}) q^{C(n,2)} = q^b - q^{b+n} - q^{b+2n} + q^{b+3n}
            const auto put = [&](unsigned long e, long v) {
                if (e <= order) numer[e] += v;
            };
            put(base, sign);
            put(base + n, -sign);
            put(base + 2 * n, -sign);
            put(base + 3 * n, sign);
            denom[0] = 1;
            if (n <= order) denom[n] -= 3;
            if (2 * n <= order) denom[2 * n] += 1;
            rhs = add(rhs, mul(TruncatedSeries(std::move(numer)),
                               invert(TruncatedSeries(std::move(denom)))));
        }
        detail::compare_series(rep, family_sum(MacFamily::u_star, order), rhs);
    });
}

enum class CongruenceKind { u_mod3, kappa_mod3, fibo_mod5 };

// Residue scans over the family sums: u(3n+2) = 0 mod 3,
// kappa(9n+6) = 0 mod 3, and y(n) = (-1)^n r_2(n) mod 5 where the last also
// pins sum_t U_{2t}(2;q) = theta4^2 mod 5 and theta4^2's exact coefficients.
inline VerificationReport congruence_scan(CongruenceKind which, std::size_t n_max) {
    const std::string id = which == CongruenceKind::u_mod3     ? "cong_u_mod3"
                           : which == CongruenceKind::kappa_mod3 ? "cong_kappa_mod3"
                                                                 : "fibo_mod5";
    return detail::timed_check(id, n_max, [&](VerificationReport& rep) {
        if (which == CongruenceKind::u_mod3 || which == CongruenceKind::kappa_mod3) {
            const MacFamily fam =
                which == CongruenceKind::u_mod3 ? MacFamily::u : MacFamily::c;
            const ModSeries m = reduce_mod(family_sum(fam, n_max), 3);
            const std::size_t step = which == CongruenceKind::u_mod3 ? 3 : 9;
            const std::size_t offset = which == CongruenceKind::u_mod3 ? 2 : 6;
            for (std::size_t n = offset; n <= n_max; n += step) {
                if (m[n] != 0) {
                    rep.status = Status::fail;
                    rep.first_mismatch = Mismatch{n, std::to_string(m[n]), "0"};
                    return;
                }
            }
            return;
        }
        const TruncatedSeries theta4_sq = pow(theta(ThetaKind::four, n_max), 2);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const long expect = (n % 2 == 0 ? 1 : -1) * count_two_squares(n);
            if (theta4_sq[n] != expect) {
                rep.status = Status::fail;
                rep.first_mismatch =
                    Mismatch{n, rational_str(theta4_sq[n]), std::to_string(expect)};
                rep.note = "theta4^2 coefficient != (-1)^n r_2(n)";
                return;
            }
        }
        const ModSeries y = reduce_mod(family_sum(MacFamily::u_two, n_max), 5);
        const ModSeries t4 = reduce_mod(theta4_sq, 5);
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (y[n] != t4[n]) {
                rep.status = Status::fail;
                rep.first_mismatch = Mismatch{n, std::to_string(y[n]), std::to_string(t4[n])};
                return;
            }
        }
    });
}

// Pochhammer closed form for c_v(a,b,c)/c_v(0,b,c), all table entries up to
// the level bound; also pins the integrality of every c_v entry.
inline VerificationReport vary_alpha_check(std::size_t level_max) {
    return detail::timed_check("vary_alpha", level_max, [&](VerificationReport& rep) {
        const CoeffTable table = cv_table(static_cast<int>(level_max));
        for (const auto& [k, v] : table.entries) {
            if (v.get_den() != 1) {
                rep.status = Status::fail;
                rep.note = "non-integer c_v entry";
                return;
            }
            const Rational base = table.lookup(0, k.b, k.c);
            if (base == 0) continue;
            const Rational expect = cv_closed_ratio(k.a, k.b, k.c);
            if (v / base != expect) {
                rep.status = Status::fail;
                rep.first_mismatch =
                    Mismatch{static_cast<std::size_t>(k.a), rational_str(v / base),
                             rational_str(expect)};
                return;
            }
        }
    });
}

// The eta-quotient prefactor of V_{2t}: the printed 24^{2t} fails already
// at t = 1 (it would give 24 E_2); 24^t matches the quotient oracle.
inline VerificationReport v_prefactor_check(std::size_t t_max, std::size_t order) {
    return detail::timed_check("v_eta_prefactor", order, [&](VerificationReport& rep) {
        for (std::size_t t = 0; t <= t_max; ++t) {
            detail::compare_series(rep, ramanujan_v(t, order, OracleMethod::conjugated),
                                   ramanujan_v(t, order, OracleMethod::quotient),
                                   "t=" + std::to_string(t));
            if (rep.status == Status::fail) return;
        }
        // literal 24^{2t} reading at t = 1 must NOT match
        const TruncatedSeries literal =
            scale(ramanujan_v(1, order, OracleMethod::conjugated), 24);
        if (!first_mismatch(literal, ramanujan_v(1, order, OracleMethod::quotient))) {
            rep.status = Status::fail;
            rep.note = "literal 24^{2t} prefactor unexpectedly matched";
            return;
        }
        rep.status = Status::recorded_discrepancy;
        rep.note = "printed prefactor 24^{2t} corrected to 24^t (24^t reproduces V_2 = E_2)";
    });
}

// G_2 = Theta_{0,1}; fixes the reading of the printed argument "E_2(2)".
inline VerificationReport g2_theta01_check(std::size_t order) {
    return detail::timed_check("g2_theta01", order, [&](VerificationReport& rep) {
        detail::compare_series(rep, g2(order), big_theta(0, 1, order));
        if (rep.status == Status::pass) {
            rep.status = Status::recorded_discrepancy;
            rep.note = "printed G_2(q) := 2E_2(q^2) - E_2(2) read as 2E_2(q^2) - E_2(q); "
                       "confirmed by G_2 = Theta_{0,1}";
        }
    });
}

// The two diagonal conventions for Theta_{r,r}: E4 = Theta_{0,2}+7Theta_{1,1}
// needs the doubled diagonal, the weight-4 expansion of D^2(theta4)/theta4
// needs the plain one. Both readings are checked and recorded.
inline VerificationReport theta_diagonal_check(std::size_t order) {
    return detail::timed_check("theta_diagonal_convention", order, [&](VerificationReport& rep) {
        const TruncatedSeries e4 = eisenstein(2, order);
        const TruncatedSeries with_doubled =
            add(big_theta(0, 2, order),
                scale(big_theta(1, 1, order, DiagConvention::doubled), 7));
        detail::compare_series(rep, e4, with_doubled, "E4 vs doubled diagonal");
        if (rep.status == Status::fail) return;
        const TruncatedSeries with_plain =
            add(big_theta(0, 2, order), scale(big_theta(1, 1, order), 7));
        if (!first_mismatch(e4, with_plain)) {
            rep.status = Status::fail;
            rep.note = "plain diagonal unexpectedly satisfied the E4 relation";
            return;
        }
        GradedPoly example(Basis::Theta);
        example.add_term({2, 0, 0}, make_rational(1, 192));
        example.add_term({1, 0, 1}, make_rational(-1, 96));
        example.add_term({0, 0, 2}, make_rational(1, 192));
        example.add_term({0, 1, 1}, make_rational(-11, 96));
        detail::compare_series(rep, eval_poly(example, order), dtheta4_ratio(2, order),
                               "weight-4 expansion, plain diagonal");
        if (rep.status == Status::fail) return;
        rep.status = Status::recorded_discrepancy;
        rep.note = "Theta_{1,1} is doubled in the E4 relation but plain in the weight-4 "
                   "expansion; formulas are checked under the convention each satisfies";
    });
}

// Andrews-Rose recurrence steps reproduce the marker-product family, with
// C_2 standing in the printed "C_1" slot.
inline VerificationReport andrews_rose_check(std::size_t order) {
    return detail::timed_check("andrews_rose_step", order, [&](VerificationReport& rep) {
        TruncatedSeries prev = macmahon_c(1, order);
        for (std::size_t t = 2; t <= 3; ++t) {
            prev = c_recurrence_step(prev, t);
            detail::compare_series(rep, prev, macmahon_c(t, order), "t=" + std::to_string(t));
            if (rep.status == Status::fail) return;
        }
        rep.status = Status::recorded_discrepancy;
        rep.note = "printed step names C_1, which has no referent under even-index naming; "
                   "instantiated with C_2, which reproduces the marker-product family";
    });
}

// --- suite ----------------------------------------------------------------

struct CheckDef {
    std::string id;
    std::size_t default_order;
    std::size_t default_t;
    std::function<VerificationReport(std::size_t order, std::size_t t_max)> run;
};

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = {
        {"theorem2", 60, 8,
         [](std::size_t o, std::size_t t) { return theorem2_check(t, o); }},
        {"theorem3", 60, 6,
         [](std::size_t o, std::size_t t) { return theorem3_check(t, o); }},
        {"sec5_g_basis", 60, 6,
         [](std::size_t o, std::size_t t) { return g_basis_theorem_check(t, o); }},
        {"theorem5_1", 60, 4,
         [](std::size_t o, std::size_t t) { return theorem5_check(t, o); }},
        {"weight_decomposition_u", 60, 5,
         [](std::size_t o, std::size_t t) { return weight_decomposition_check(t, o); }},
        {"sec4_derivative_theorem", 60, 6,
         [](std::size_t o, std::size_t t) { return sec4_derivative_check(t, o); }},
        {"sec4_partial_e2", 60, 5,
         [](std::size_t o, std::size_t t) {
             // the basis solver needs order >= monomial count + 16
             const std::size_t keys = basis_monomials(Basis::E, static_cast<int>(t)).size();
             return sec4_partial_e2_check(t, std::max(o, keys + 16));
         }},
        {"umbral_hr", 80, 6,
         [](std::size_t o, std::size_t t) { return umbral_hr_check(t, o); }},
        {"umbral_remark", 40, 2,
         [](std::size_t o, std::size_t t) { return umbral_remark_check(t, o); }},
        {"prop5_3_u", 200, 0,
         [](std::size_t o, std::size_t) { return prop5_3_u_check(o); }},
        {"prop5_3_c", 200, 0,
         [](std::size_t o, std::size_t) { return prop5_3_c_check(o); }},
        {"prop5_3_ustar", 200, 0,
         [](std::size_t o, std::size_t) { return prop5_3_ustar_check(o); }},
        {"cong_u_mod3", 500, 0,
         [](std::size_t o, std::size_t) { return congruence_scan(CongruenceKind::u_mod3, o); }},
        {"cong_kappa_mod3", 999, 0,
         [](std::size_t o, std::size_t) {
             return congruence_scan(CongruenceKind::kappa_mod3, o);
         }},
        {"fibo_mod5", 2000, 0,
         [](std::size_t o, std::size_t) { return congruence_scan(CongruenceKind::fibo_mod5, o); }},
        {"vary_alpha", 10, 10,
         [](std::size_t, std::size_t t) { return vary_alpha_check(t); }},
        {"v_eta_prefactor", 60, 8,
         [](std::size_t o, std::size_t t) { return v_prefactor_check(t, o); }},
        {"g2_theta01", 200, 0,
         [](std::size_t o, std::size_t) { return g2_theta01_check(o); }},
        {"theta_diagonal_convention", 100, 0,
         [](std::size_t o, std::size_t) { return theta_diagonal_check(o); }},
        {"andrews_rose_step", 40, 3,
         [](std::size_t o, std::size_t) { return andrews_rose_check(o); }},
    };
    return defs;
}

// Uniform-parameter run; each check caps t at its own registered bound.
inline std::vector<VerificationReport> run_suite(std::size_t order, std::size_t t_max) {
    std::vector<VerificationReport> reports;
    for (const auto& def : check_registry())
        reports.push_back(def.run(order, std::min(t_max, def.default_t)));
    return reports;
}

// Full-strength run at every check's registered default parameters.
inline std::vector<VerificationReport> run_suite_defaults() {
    std::vector<VerificationReport> reports;
    for (const auto& def : check_registry())
        reports.push_back(def.run(def.default_order, def.default_t));
    return reports;
}

inline VerificationReport run_check(const std::string& id, std::size_t order, std::size_t t) {
    for (const auto& def : check_registry())
        if (def.id == id) return def.run(order, t);
    throw std::invalid_argument("run_check: unknown identity id '" + id + "'");
}

}  // namespace qmf
