#include <qmf/partition_series.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qmf;

TEST_CASE("macmahon U") {
    REQUIRE(macmahon_u(1, 4) == make_series({0, 1, 3, 4, 7}, 4));
    REQUIRE(macmahon_u(2, 4).lowest_nonzero() == std::optional<std::size_t>{3});
    REQUIRE(macmahon_u(2, 4)[3] == 1);
    REQUIRE(macmahon_u(0, 10) == series_one(10));
    REQUIRE(macmahon_u(1, 30) == lambert(1, 30));
}

TEST_CASE("macmahon U*") {
    REQUIRE(truncate(macmahon_u_star(1, 2), 2) == make_series({0, 1, 3}, 2));
    REQUIRE(macmahon_u_star(2, 2) == make_series({0, 0, 1}, 2));
    REQUIRE(macmahon_u_star(0, 8) == series_one(8));
}

TEST_CASE("macmahon C") {
    REQUIRE(macmahon_c(1, 5) == make_series({0, 1, 2, 4, 4, 6}, 5));
    REQUIRE(macmahon_c(2, 4) == make_series({0, 0, 0, 0, 1}, 4));
    // below q^{t^2} the family member vanishes
    REQUIRE(macmahon_c(3, 8).is_zero());
    REQUIRE(macmahon_c(2, 3).is_zero());
}

TEST_CASE("marked series components are consistent") {
    const MarkedSeries all = macmahon_components(MacFamily::u, 3, 20);
    REQUIRE(all.marker_bound() == 3);
    REQUIRE(all.order() == 20);
    for (std::size_t t = 0; t <= 3; ++t) REQUIRE(all.component(t) == macmahon_u(t, 20));
    REQUIRE_THROWS_AS(macmahon_components(MacFamily::u_two, 2, 10), std::invalid_argument);
}

TEST_CASE("macmahon U(2;q)") {
    // Gauss: sum q^{n(n+1)/2} = (q^2;q^2)^2/(q;q), so the prefactor cancels
    REQUIRE(macmahon_u_two(0, 40) == series_one(40));
    for (std::size_t t = 1; t <= 5; ++t) {
        const auto low = macmahon_u_two(t, 40).lowest_nonzero();
        REQUIRE(low == std::optional<std::size_t>{t * (t + 1) / 2});
    }
}

TEST_CASE("U* single sum") {
    REQUIRE(u_star_single_sum(1, 5) == make_series({0, 1, 3, 4, 7, 6}, 5));
    REQUIRE(u_star_single_sum(2, 1).is_zero());
    for (std::size_t t = 1; t <= 4; ++t)
        REQUIRE(u_star_single_sum(t, 60) == macmahon_u_star(t, 60));
    REQUIRE_THROWS_AS(u_star_single_sum(0, 5), std::invalid_argument);
}

TEST_CASE("multiplicity oracle") {
    REQUIRE(multiplicity_oracle(1, 3, PartsClass::odd) == 4);
    REQUIRE(multiplicity_oracle(2, 4, PartsClass::odd) == 1);
    REQUIRE(multiplicity_oracle(0, 0, PartsClass::all) == 1);
    REQUIRE(multiplicity_oracle(0, 0, PartsClass::odd) == 1);
    REQUIRE(multiplicity_oracle(0, 3, PartsClass::all) == 0);
    REQUIRE_THROWS_AS(multiplicity_oracle(1, 81, PartsClass::all), std::invalid_argument);
}

TEST_CASE("marker products match the enumeration oracle") {
    const std::size_t n_max = 40;
    std::vector<TruncatedSeries> u, c;
    for (std::size_t t = 0; t <= 4; ++t) {
        u.push_back(macmahon_u(t, n_max));
        c.push_back(macmahon_c(t, n_max));
    }
    for (std::size_t t = 0; t <= 4; ++t)
        for (std::size_t n = 0; n <= n_max; ++n) {
            REQUIRE(u[t][n] == Rational(multiplicity_oracle(t, n, PartsClass::all)));
            REQUIRE(c[t][n] == Rational(multiplicity_oracle(t, n, PartsClass::odd)));
        }
}

TEST_CASE("lowest exponent laws") {
    for (std::size_t t = 1; t <= 6; ++t) {
        REQUIRE(macmahon_u(t, 40).lowest_nonzero() ==
                std::optional<std::size_t>{t * (t + 1) / 2});
        REQUIRE(macmahon_u_star(t, 40).lowest_nonzero() == std::optional<std::size_t>{t});
    }
    for (std::size_t t = 1; t <= 5; ++t)
        REQUIRE(macmahon_c(t, 40).lowest_nonzero() == std::optional<std::size_t>{t * t});
}

TEST_CASE("U* from U via the symmetric function convolution") {
    REQUIRE(u_star_from_u(0, 20) == series_one(20));
    REQUIRE(u_star_from_u(1, 30) == macmahon_u(1, 30));
    for (std::size_t t = 2; t <= 5; ++t)
        REQUIRE(u_star_from_u(t, 60) == macmahon_u_star(t, 60));
}

TEST_CASE("family sums") {
    REQUIRE(family_sum(MacFamily::u, 2) == make_series({1, 1, 3}, 2));
    REQUIRE(family_sum(MacFamily::u_star, 2) == make_series({1, 1, 4}, 2));
    REQUIRE(family_sum(MacFamily::c, 3) == make_series({1, 1, 2, 4}, 3));

    // sum of members computed one by one agrees with the single sweep
    const std::size_t n = 25;
    TruncatedSeries direct = series_zero(n);
    for (std::size_t t = 0; t * (t + 1) / 2 <= n; ++t) direct = add(direct, macmahon_u(t, n));
    REQUIRE(family_sum(MacFamily::u, n) == direct);

    TruncatedSeries direct_u2 = series_zero(n);
    for (std::size_t t = 0; t * (t + 1) / 2 <= n; ++t)
        direct_u2 = add(direct_u2, macmahon_u_two(t, n));
    REQUIRE(family_sum(MacFamily::u_two, n) == direct_u2);
}

TEST_CASE("umbral evaluation") {
    REQUIRE(umbral_eval({0, 1}, 12) == lambert(1, 12));
    // S(S^2-1)/3! = H_2
    const auto poly = poly_mul({0, 1}, {-1, 0, 1});
    REQUIRE(scale(umbral_eval(poly, 4), make_rational(1, 6)) ==
            make_series({0, 0, 1, 4, 11}, 4));
    REQUIRE(umbral_eval({5}, 6) == scale(series_one(6), 5));
    REQUIRE(umbral_eval({}, 6).is_zero());
}
