#pragma once

#include <qmf/graded_poly.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmf {

// Thrown when a series is not in the span of the requested basis monomials;
// carries the first q-coefficient index where the best fit fails.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& msg, std::size_t index)
        : std::runtime_error(msg + " (first failing coefficient index " +
                             std::to_string(index) + ")"),
          mismatch_index(index) {}

    std::size_t mismatch_index;
};

// All basis monomials of weight <= 2t, ascending lexicographic in (a,b,c).
inline std::vector<MonomialKey> basis_monomials(Basis basis, int t) {
    if (t < 0) throw std::invalid_argument("basis_monomials: negative weight bound");
    std::vector<MonomialKey> keys;
    for (int a = 0; a <= t; ++a)
        for (int b = 0; 2 * b <= 2 * t; ++b)
            for (int c = 0; 3 * c <= 3 * t; ++c) {
                const MonomialKey k{a, b, c};
                if (basis == Basis::Theta && b > c) continue;
                if (monomial_weight(basis, k) <= 2 * t) keys.push_back(k);
            }
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Exact linear fit of f against the basis monomials of weight <= 2t:
// Gaussian elimination over the rationals on the first M+16 coefficients
// (M = monomial count), then a full residual check to f's order. The
// 16-row guard band keeps accidental low-order matches from passing.
inline GradedPoly express_in_basis(const TruncatedSeries& f, int t, Basis basis) {
    if (basis == Basis::XY)
        throw std::invalid_argument("express_in_basis: XY is an internal form");
    const std::vector<MonomialKey> keys = basis_monomials(basis, t);
    const std::size_t m = keys.size();
    const std::size_t rows = m + 16;
    if (f.order() < rows)
        throw std::invalid_argument("express_in_basis: series order must be >= " +
                                    std::to_string(rows));

    BasisEvaluator ev(basis, rows - 1);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m));
    for (std::size_t j = 0; j < m; ++j) {
        const TruncatedSeries col = ev.eval(keys[j]);
        for (std::size_t r = 0; r < rows; ++r) a[r][j] = col[r];
    }
    std::vector<Rational> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) rhs[r] = f[r];

    // Row echelon with earliest-row pivoting; pivot_row[j] records where
    // column j was eliminated (forced zero if the column is degenerate in
    // the band, which the residual check will expose).
    std::vector<long> pivot_row(m, -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m && rank < rows; ++j) {
        std::size_t p = rank;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(rhs[p], rhs[rank]);
        const Rational inv = 1 / a[rank][j];
        for (std::size_t jj = j; jj < m; ++jj) a[rank][jj] *= inv;
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][j] == 0) continue;
            const Rational factor = a[r][j];
            for (std::size_t jj = j; jj < m; ++jj) a[r][jj] -= factor * a[rank][jj];
            rhs[r] -= factor * rhs[rank];
        }
        pivot_row[j] = static_cast<long>(rank);
        ++rank;
    }

    GradedPoly out(basis);
    for (std::size_t j = 0; j < m; ++j)
        if (pivot_row[j] >= 0) out.add_term(keys[j], rhs[static_cast<std::size_t>(pivot_row[j])]);

    const TruncatedSeries recon = eval_poly(out, f.order());
    if (const auto bad = first_mismatch(recon, f))
        throw SolveError("express_in_basis: series not in basis span", *bad);
    return out;
}

}  // namespace qmf
