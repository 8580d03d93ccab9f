#include <qmf/basis_solve.hpp>
#include <qmf/graded_poly.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace qmf;

namespace {

std::mt19937 rng(987654);

GradedPoly random_poly(Basis basis, int t) {
    const auto keys = basis_monomials(basis, t);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    GradedPoly p(basis);
    for (int i = 0; i < 4; ++i) {
        long n = num(rng);
        if (n == 0) n = 1;
        p.add_term(keys[pick(rng)], make_rational(n, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("term map basics") {
    GradedPoly p(Basis::E);
    p.add_term({1, 0, 0}, 3);
    p.add_term({1, 0, 0}, -3);
    REQUIRE(p.empty());
    p.add_term({0, 1, 0}, make_rational(1, 2));
    REQUIRE(p.coeff({0, 1, 0}) == make_rational(1, 2));
    REQUIRE(p.coeff({5, 5, 5}) == 0);
    REQUIRE_THROWS_AS(p.add_term({-1, 0, 0}, 1), std::invalid_argument);

    GradedPoly th(Basis::Theta);
    th.add_term({0, 2, 1}, 1);  // canonicalized to (0,1,2)
    REQUIRE(th.coeff({0, 1, 2}) == 1);
}

TEST_CASE("monomial weights") {
    REQUIRE(monomial_weight(Basis::E, {1, 1, 1}) == 12);
    REQUIRE(monomial_weight(Basis::Theta, {1, 1, 1}) == 6);
    REQUIRE(monomial_weight(Basis::G, {1, 1, 1}) == 8);
    REQUIRE(monomial_weight(Basis::XY, {0, 2, 1}) == 6);
}

TEST_CASE("eval_poly") {
    const auto e2_poly = poly_monomial(Basis::E, {1, 0, 0}, 1);
    REQUIRE(eval_poly(e2_poly, 20) == eisenstein(1, 20));

    GradedPoly v4(Basis::E);  // 3 E2^2 - 2 E4
    v4.add_term({2, 0, 0}, 3);
    v4.add_term({0, 1, 0}, -2);
    REQUIRE(eval_poly(v4, 1) == make_series({1, -624}, 1));
    REQUIRE(eval_poly(v4, 2) == make_series({1, -624, -3024}, 2));

    REQUIRE(eval_poly(GradedPoly(Basis::G), 8).is_zero());
}

TEST_CASE("eval_poly in the G and Theta bases") {
    GradedPoly g(Basis::G);
    g.add_term({0, 1, 0}, 1);
    REQUIRE(eval_poly(g, 30) == g2(30));

    GradedPoly th(Basis::Theta);
    th.add_term({0, 0, 1}, 1);
    REQUIRE(eval_poly(th, 30) == big_theta(0, 1, 30));

    // plain diagonal on evaluation
    GradedPoly diag(Basis::Theta);
    diag.add_term({0, 1, 1}, 1);
    REQUIRE(eval_poly(diag, 30) == big_theta(1, 1, 30, DiagConvention::plain));
}

TEST_CASE("d_e_basis") {
    const auto de2 = d_e_basis(poly_monomial(Basis::E, {1, 0, 0}, 1));
    REQUIRE(de2.coeff({2, 0, 0}) == make_rational(1, 12));
    REQUIRE(de2.coeff({0, 1, 0}) == make_rational(-1, 12));
    REQUIRE(de2.terms().size() == 2);

    REQUIRE(d_e_basis(poly_monomial(Basis::E, {0, 0, 0}, 5)).empty());

    // product rule on E2 E4
    const auto d = d_e_basis(poly_monomial(Basis::E, {1, 1, 0}, 1));
    REQUIRE(d.coeff({2, 1, 0}) == make_rational(1, 12) + make_rational(1, 3));
    REQUIRE(d.coeff({0, 2, 0}) == make_rational(-1, 12));
    REQUIRE(d.coeff({1, 0, 1}) == make_rational(-1, 3));

    REQUIRE_THROWS_AS(d_e_basis(GradedPoly(Basis::G)), std::invalid_argument);
}

TEST_CASE("d_g_basis") {
    const auto dg2 = d_g_basis(poly_monomial(Basis::G, {0, 1, 0}, 1));
    REQUIRE(dg2.coeff({1, 1, 0}) == make_rational(1, 6));
    REQUIRE(dg2.coeff({0, 2, 0}) == make_rational(-1, 3));
    REQUIRE(dg2.coeff({0, 0, 1}) == make_rational(1, 6));

    const auto de4 = d_g_basis(poly_monomial(Basis::G, {0, 0, 1}, 1));
    REQUIRE(de4.coeff({1, 0, 1}) == make_rational(1, 3));
    REQUIRE(de4.coeff({0, 3, 0}) == make_rational(-4, 3));
    REQUIRE(de4.coeff({0, 1, 1}) == 1);

    REQUIRE(d_g_basis(poly_monomial(Basis::G, {0, 0, 0}, 7)).empty());
}

TEST_CASE("d_theta_basis in XY form") {
    // D(X + Y) = (E2 (X+Y) - X^2 - Y^2 + 10 XY)/6
    GradedPoly xy(Basis::XY);
    xy.add_term({0, 1, 0}, 1);
    xy.add_term({0, 0, 1}, 1);
    const auto d = d_theta_basis(xy);
    REQUIRE(d.coeff({1, 1, 0}) == make_rational(1, 6));
    REQUIRE(d.coeff({1, 0, 1}) == make_rational(1, 6));
    REQUIRE(d.coeff({0, 2, 0}) == make_rational(-1, 6));
    REQUIRE(d.coeff({0, 0, 2}) == make_rational(-1, 6));
    REQUIRE(d.coeff({0, 1, 1}) == make_rational(10, 6));

    REQUIRE(d_theta_basis(GradedPoly(Basis::Theta)).empty());
    REQUIRE_THROWS_AS(d_theta_basis(GradedPoly(Basis::E)), std::invalid_argument);
}

TEST_CASE("theta/XY round trips") {
    for (int i = 0; i < 20; ++i) {
        const GradedPoly p = random_poly(Basis::Theta, 5);
        for (auto conv : {DiagConvention::plain, DiagConvention::doubled})
            REQUIRE(xy_to_theta(theta_to_xy(p, conv), conv) == p);
    }
    GradedPoly bad(Basis::XY);
    bad.add_term({0, 1, 0}, 1);  // X alone is not symmetric
    REQUIRE_THROWS_AS(xy_to_theta(bad), std::invalid_argument);
}

TEST_CASE("derivations commute with evaluation") {
    const std::size_t order = 24;
    for (int i = 0; i < 12; ++i) {
        const GradedPoly pe = random_poly(Basis::E, 6);
        REQUIRE(eval_poly(d_e_basis(pe), order) == derive(eval_poly(pe, order)));

        const GradedPoly pg = random_poly(Basis::G, 6);
        REQUIRE(eval_poly(d_g_basis(pg), order) == derive(eval_poly(pg, order)));

        const GradedPoly pt = random_poly(Basis::Theta, 6);
        REQUIRE(eval_poly(d_theta_basis(pt), order) == derive(eval_poly(pt, order)));
    }
}

TEST_CASE("partial_e2") {
    const auto d = partial_e2(poly_monomial(Basis::E, {2, 0, 0}, 1));
    REQUIRE(d.coeff({1, 0, 0}) == 2);
    REQUIRE(partial_e2(poly_monomial(Basis::E, {0, 1, 0}, 1)).empty());

    GradedPoly u4(Basis::E);  // (5 E2^2 - 2 E4)/3
    u4.add_term({2, 0, 0}, make_rational(5, 3));
    u4.add_term({0, 1, 0}, make_rational(-2, 3));
    const auto du4 = partial_e2(u4);
    REQUIRE(du4.coeff({1, 0, 0}) == make_rational(10, 3));
    REQUIRE(du4.terms().size() == 1);
}

TEST_CASE("basis monomial enumeration") {
    const auto keys_e = basis_monomials(Basis::E, 2);
    REQUIRE(keys_e.size() == 4);  // 1, E4, E2, E2^2
    REQUIRE(std::is_sorted(keys_e.begin(), keys_e.end()));
    for (const auto& k : basis_monomials(Basis::Theta, 4)) REQUIRE(k.b <= k.c);
}

TEST_CASE("express_in_basis recovers polynomials") {
    GradedPoly v4(Basis::E);
    v4.add_term({2, 0, 0}, 3);
    v4.add_term({0, 1, 0}, -2);
    const auto fit = express_in_basis(eval_poly(v4, 40), 2, Basis::E);
    REQUIRE(fit == v4);

    const auto one_fit = express_in_basis(series_one(40), 1, Basis::E);
    REQUIRE(one_fit == poly_monomial(Basis::E, {0, 0, 0}, 1));

    REQUIRE_THROWS_AS(express_in_basis(series_one(10), 3, Basis::E), std::invalid_argument);
    REQUIRE_THROWS_AS(express_in_basis(eisenstein(1, 60), 2, Basis::XY), std::invalid_argument);
}

TEST_CASE("express_in_basis rejects series outside the span") {
    // theta3 is not a level-1 quasimodular form of weight <= 4
    bool threw = false;
    try {
        express_in_basis(theta(ThetaKind::three, 60), 2, Basis::E);
    } catch (const SolveError& e) {
        threw = true;
        REQUIRE(e.mismatch_index > 0);
    }
    REQUIRE(threw);
}

TEST_CASE("solver round trip on random polynomials") {
    for (auto basis : {Basis::E, Basis::Theta, Basis::G}) {
        for (int i = 0; i < 8; ++i) {
            const GradedPoly p = random_poly(basis, 6);
            const std::size_t need = basis_monomials(basis, 6).size() + 16;
            const auto fit = express_in_basis(eval_poly(p, need + 4), 6, basis);
            REQUIRE(fit == p);
        }
    }
}

TEST_CASE("partition eisenstein series") {
    REQUIRE(partition_eisenstein(0, EisensteinSign::plus, 10) == series_one(10));
    REQUIRE(partition_eisenstein(1, EisensteinSign::plus, 20) ==
            scale(eisenstein(1, 20), make_rational(1, 24)));
    REQUIRE(partition_eisenstein(1, EisensteinSign::minus, 20) ==
            scale(eisenstein(1, 20), make_rational(-1, 24)));

    GradedPoly expect(Basis::E);  // E2^2/1152 - E4/2880
    expect.add_term({2, 0, 0}, make_rational(1, 1152));
    expect.add_term({0, 1, 0}, make_rational(-1, 2880));
    REQUIRE(partition_eisenstein(2, EisensteinSign::plus, 30) == eval_poly(expect, 30));
}
