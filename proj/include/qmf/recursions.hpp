#pragma once

#include <qmf/graded_poly.hpp>
#include <qmf/rational.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmf {

enum class RecursionId { cv, cc, cc_tilde };

// Triple-indexed coefficient table filled level by level in the recursion's
// grading; absent keys (including anything with a negative index) read as 0.
struct CoeffTable {
    RecursionId recursion_id;
    std::map<MonomialKey, Rational> entries;
    int max_level = 0;  // grading bound the table was built to (weight = 2*level)

    Rational lookup(int a, int b, int c) const {
        if (a < 0 || b < 0 || c < 0) return 0;
        MonomialKey k{a, b, c};
        if (recursion_id == RecursionId::cc && k.b > k.c) std::swap(k.b, k.c);
        auto it = entries.find(k);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

// c_v: grading a+2b+3c, integer-valued.
// c_v(a,b,c) = (2a+8b+12c-1) c_v(a-1,b,c) - 2(a+1) c_v(a+1,b-1,c)
//              - 8(b+1) c_v(a,b+1,c-1) - 12(c+1) c_v(a,b-2,c+1)
inline CoeffTable cv_table(int level_max) {
    CoeffTable t{RecursionId::cv, {}, level_max};
    t.entries[{0, 0, 0}] = 1;
    for (int level = 1; level <= level_max; ++level) {
        for (int c = 0; 3 * c <= level; ++c)
            for (int b = 0; 2 * b + 3 * c <= level; ++b) {
                const int a = level - 2 * b - 3 * c;
                Rational v = Rational(2 * a + 8 * b + 12 * c - 1) * t.lookup(a - 1, b, c);
                v -= Rational(2 * (a + 1)) * t.lookup(a + 1, b - 1, c);
                v -= Rational(8 * (b + 1)) * t.lookup(a, b + 1, c - 1);
                v -= Rational(12 * (c + 1)) * t.lookup(a, b - 2, c + 1);
                if (v != 0) t.entries[{a, b, c}] = v;
            }
    }
    return t;
}

// c_c: grading a+b+c, canonical keys b <= c. Every right-side index is
// canonicalized (last two indices sorted) before lookup; this is the
// reading under which the recursion reproduces the weight-4 expansion of
// D^2(theta4)/theta4.
inline CoeffTable cc_table(int level_max) {
    CoeffTable t{RecursionId::cc, {}, level_max};
    t.entries[{0, 0, 0}] = 1;
    for (int level = 1; level <= level_max; ++level) {
        for (int a = 0; a <= level; ++a)
            for (int b = 0; a + b <= level; ++b) {
                const int c = level - a - b;
                if (b > c) continue;
                Rational v = make_rational(2 * a + 4 * b + 4 * c - 1, 24) * t.lookup(a - 1, b, c);
                v += make_rational(20 * c - 4 * b + 3, 24) * t.lookup(a, b - 1, c);
                v += make_rational(20 * b - 4 * c + 3, 24) * t.lookup(a, b, c - 1);
                v -= make_rational(7 * (a + 1), 6) * t.lookup(a + 1, b - 1, c - 1);
                v -= make_rational(a + 1, 12) * t.lookup(a + 1, b - 2, c);
                v -= make_rational(a + 1, 12) * t.lookup(a + 1, b, c - 2);
                if (v != 0) t.entries[{a, b, c}] = v;
            }
    }
    return t;
}

// c~_c: grading a+b+2c (E2^a G2^b E4^c).
inline CoeffTable cc_tilde_table(int level_max) {
    CoeffTable t{RecursionId::cc_tilde, {}, level_max};
    t.entries[{0, 0, 0}] = 1;
    for (int level = 1; level <= level_max; ++level) {
        for (int c = 0; 2 * c <= level; ++c)
            for (int b = 0; b + 2 * c <= level; ++b) {
                const int a = level - b - 2 * c;
                Rational v = make_rational(2 * a + 4 * b + 8 * c - 1, 24) * t.lookup(a - 1, b, c);
                v += make_rational(8 * c - 8 * b + 7, 24) * t.lookup(a, b - 1, c);
                v -= make_rational(a + 1, 12) * t.lookup(a + 1, b, c - 1);
                v += make_rational(b + 1, 6) * t.lookup(a, b + 1, c - 1);
                v -= make_rational(4 * (c + 1), 3) * t.lookup(a, b - 3, c + 1);
                if (v != 0) t.entries[{a, b, c}] = v;
            }
    }
    return t;
}

// Elementary symmetric function e_k by the standard one-pass recurrence.
inline Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t k) {
    if (k > values.size())
        throw std::invalid_argument("elementary_symmetric: k exceeds value count");
    std::vector<Rational> e(k + 1);
    e[0] = 1;
    for (const auto& x : values)
        for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

// v_t(k) = e_{t-k}(0^2, 1^2, ..., (t-1)^2) for k = 1..t, computed both by
// the closed form and by the recurrence v_t(k) = (t-1)^2 v_{t-1}(k) +
// v_{t-1}(k-1); the two routes must agree.
inline std::vector<Rational> v_weights(std::size_t t) {
    if (t == 0) throw std::invalid_argument("v_weights: t must be >= 1");
    std::vector<Rational> squares;
    for (std::size_t i = 0; i < t; ++i)
        squares.push_back(Rational(static_cast<long>(i * i)));
    std::vector<Rational> closed(t);
    for (std::size_t k = 1; k <= t; ++k) closed[k - 1] = elementary_symmetric(squares, t - k);

    // recurrence route, v_1 = (1); index 0 of row holds v_t(1)
    std::vector<Rational> row{1};
    for (std::size_t s = 2; s <= t; ++s) {
        const Rational f(static_cast<long>((s - 1) * (s - 1)));
        std::vector<Rational> next(s);
        for (std::size_t k = 1; k <= s; ++k) {
            Rational v = (k <= s - 1) ? f * row[k - 1] : Rational(0);
            if (k >= 2) v += row[k - 2];
            next[k - 1] = v;
        }
        row = std::move(next);
    }
    if (row != closed) throw std::logic_error("v_weights: closed form and recurrence disagree");
    return closed;
}

// w_a(t) = C(2t,t)/(16^t (2t+1)) * e_a(1/1^2, 1/3^2, ..., 1/(2t-1)^2),
// for a = 0..t.
inline std::vector<Rational> w_weights(std::size_t t) {
    const Rational prefactor =
        make_rational(binomial(2 * t, t), int_pow(16, t) * Integer(2 * t + 1));
    std::vector<Rational> inv_squares;
    for (std::size_t l = 0; l < t; ++l)
        inv_squares.push_back(make_rational(1, static_cast<long>((2 * l + 1) * (2 * l + 1))));
    std::vector<Rational> w(t + 1);
    for (std::size_t a = 0; a <= t; ++a)
        w[a] = prefactor * elementary_symmetric(inv_squares, a);
    return w;
}

// Closed form for c_v(a,b,c)/c_v(0,b,c): (1+4b+6c)_{2a} / (2^a a!).
inline Rational cv_closed_ratio(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("cv_closed_ratio: negative index");
    return make_rational(pochhammer(1 + 4 * b + 6 * c, 2 * static_cast<unsigned long>(a)),
                         int_pow(2, a) * factorial(a));
}

// CSV export, header `alpha,beta,gamma,num,den`, rows in lexicographic key order.
inline std::string table_csv(const CoeffTable& t) {
    std::string out = "alpha,beta,gamma,num,den\n";
    for (const auto& [k, v] : t.entries) {
        out += std::to_string(k.a) + "," + std::to_string(k.b) + "," + std::to_string(k.c) +
               "," + v.get_num().get_str() + "," + v.get_den().get_str() + "\n";
    }
    return out;
}

// CSV for index -> rational sequences (v and w weights).
inline std::string weights_csv(const std::vector<Rational>& w, std::size_t first_index) {
    std::string out = "index,num,den\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += std::to_string(first_index + i) + "," + w[i].get_num().get_str() + "," +
               w[i].get_den().get_str() + "\n";
    }
    return out;
}

}  // namespace qmf
