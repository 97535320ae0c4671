#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <random>

#include "hertzwave/core_model.hpp"

using namespace hertzwave;

namespace {

// direct quotient in extended precision
long double quotient_ld(long double n, long double a, long double b) {
    return (std::pow(a, n) - std::pow(b, n)) / (a - b);
}

// f[b, b, a] for x^n in extended precision
long double d2_ld(long double n, long double a, long double b) {
    const long double h = a - b;
    return (std::pow(a, n) - std::pow(b, n) - n * std::pow(b, n - 1) * h) / (h * h);
}

}  // namespace

TEST_SUITE("core_model") {

TEST_CASE("s_n closed values") {
    CHECK(s_n(3.0, 2.0, 2.0) == doctest::Approx(12.0).epsilon(1e-15));
    CHECK(s_n(2.0, 3.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(s_n(2.0, 3.0, 1.0) == s_n(2.0, 1.0, 3.0));
    CHECK(s_n(2.0, 0.0, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("s_n near coincident arguments") {
    // exact value is 2.5 * m^{1.5} with m close to 1, i.e. about 2.4999981
    const double v = s_n(2.5, 1.0, 0.999999);
    CHECK(std::fabs(v - 2.5) < 2e-6);
    CHECK(std::fabs(v - static_cast<double>(quotient_ld(2.5L, 1.0L, 0.999999L))) < 1e-11);
    // the stable form agrees with the extended precision quotient across the switch
    for (double rel : {3e-8, 9.9e-8, 1.01e-7, 5e-7, 1e-4, 0.3}) {
        for (double n : {0.5, 1.5, 2.5, 4.0, 7.0}) {
            const double a = 1.3, b = a * (1.0 - rel);
            const long double ref = quotient_ld(n, a, static_cast<long double>(b));
            // the reference itself loses about eps_ld / rel
            const double tol = std::fabs(static_cast<double>(ref)) * (1e-13 + 1e-18 / rel);
            CHECK(std::fabs(s_n(n, a, b) - static_cast<double>(ref)) < tol);
        }
    }
}

TEST_CASE("s_n continuity at the switch and symmetry") {
    const double a = 0.7;
    const double bb = a * (1.0 - 0.999e-7), ba = a * (1.0 - 1.001e-7);
    const double below = s_n(3.5, a, bb);
    const double above = s_n(3.5, a, ba);
    // the step across the switch is the true change of S_n, not a jump
    const double step = static_cast<double>(quotient_ld(3.5L, a, static_cast<long double>(bb)) -
                                            quotient_ld(3.5L, a, static_cast<long double>(ba)));
    CHECK(std::fabs((below - above) - step) < 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 3.0), nn(0.1, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng), y = u(rng), n = nn(rng);
        CHECK(s_n(n, x, y) == s_n(n, y, x));
    }
}

TEST_CASE("s_n domain") {
    CHECK_THROWS_AS(s_n(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(s_n(0.5, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(s_n(-1.0, 1.0, 2.0), std::domain_error);
    CHECK(s_n(2.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("s_n inequality and monotonicity") {
    // both properties rest on convexity of x^n, so they need n >= 1 (n > 1 for strict order)
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.01, 3.0), nn(1.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng), b = u(rng), n = nn(rng);
        CHECK(s_n(n, a, b) <= n * (std::pow(a, n) + std::pow(b, n)) / (a + b) * (1.0 + 1e-14));
        double x[3] = {u(rng), u(rng), u(rng)};
        std::sort(x, x + 3);
        if (x[2] > x[1] && x[1] > x[0] && n > 1.0) {
            CHECK(s_n(n, x[2], x[1]) > s_n(n, x[2], x[0]));
            CHECK(s_n(n, x[2], x[0]) > 0.0);
        }
    }
}

TEST_CASE("s_n below n = 1 reverses both properties") {
    // x^{1/2} is concave: (1 - 0)/(1 - 0) = 1 exceeds 0.5 (1 + 0)/(1 + 0)
    CHECK(s_n(0.5, 1.0, 0.0) > 0.5 * (1.0 + 0.0) / 1.0);
    CHECK(s_n(0.5, 2.0, 1.0) < s_n(0.5, 2.0, 0.5));
}

TEST_CASE("second divided difference of a power") {
    for (double n : {1.5, 2.0, 2.5, 3.0, 4.0, 6.5})
        for (double a : {0.05, 0.4, 1.2, 2.5})
            for (double b : {0.1, 0.3, 1.0}) {
                if (std::fabs(a - b) < 0.02) continue;
                const double ref = static_cast<double>(d2_ld(n, a, b));
                CHECK(d2_power(n, a, b) == doctest::Approx(ref).epsilon(1e-11));
            }
    // coincident limit n(n-1)/2 b^{n-2}
    CHECK(d2_power(3.0, 0.5, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(d2_power(2.5, 0.8, 0.8 * (1 + 1e-9)) == doctest::Approx(2.5 * 1.5 / 2 * std::pow(0.8, 0.5)).epsilon(1e-8));
}

TEST_CASE("potential values") {
    CHECK(potential({2.0, 0.0, 0.0}, 1.0) == doctest::Approx(0.0));
    CHECK(potential({2.0, 0.5, 0.0}, 2.0) == doctest::Approx(3.0));
    const DimensionlessWave w{1.5, -0.2, 0.0};
    const double h = 1e-9;
    CHECK(std::fabs(potential(w, h)) < 1e-9);
    CHECK(potential(w, h) / h == doctest::Approx(0.2).epsilon(1e-4));
}

TEST_CASE("potential derivatives against finite differences") {
    CHECK(potential_derivs({2.0, 0.0, 0.0}, 1.0).first == doctest::Approx(1.0));
    for (double k : {1.5, 2.0, 3.0, 5.0}) CHECK(std::fabs(potential_derivs({k, 0.1, 0.0}, g_star(k)).second) < 1e-13);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uk(1.1, 6.0), uc(-1.0, 1.0), ug(0.05, 2.0);
    for (int i = 0; i < 100; ++i) {
        const DimensionlessWave w{uk(rng), uc(rng), 0.0};
        const double g = ug(rng), h = 1e-5 * g;
        const double fd1 = (potential(w, g + h) - potential(w, g - h)) / (2 * h);
        const double fd2 = (potential(w, g + h) - 2 * potential(w, g) + potential(w, g - h)) / (h * h);
        const auto d = potential_derivs(w, g);
        CHECK(d.first == doctest::Approx(fd1).epsilon(1e-6).scale(1.0));
        CHECK(d.second == doctest::Approx(fd2).epsilon(1e-3).scale(1.0));
        // second derivative by differencing the exact first derivative
        const double fd2b = (potential_derivs(w, g + h).first - potential_derivs(w, g - h).first) / (2 * h);
        CHECK(d.second == doctest::Approx(fd2b).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("G and V satisfy G g^{k-1} + V - E = 0") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uk(1.1, 6.0), uc(-1.0, 1.0), ue(-0.5, 0.5), ug(0.05, 2.0);
    for (int i = 0; i < 500; ++i) {
        const DimensionlessWave w{uk(rng), uc(rng), ue(rng)};
        const double g = ug(rng);
        const double V = potential(w, g);
        const double lhs = reduced_rhs(w, g) * std::pow(g, w.k - 1.0) + V - w.E;
        CHECK(std::fabs(lhs) <= 1e-13 * (std::fabs(V) + std::fabs(w.E) + 1.0));
    }
}

TEST_CASE("reduced_rhs_derivative against finite differences") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> uk(1.1, 6.0), uc(-1.0, 1.0), ue(-0.5, 0.5), ug(0.1, 2.0);
    for (int i = 0; i < 100; ++i) {
        const DimensionlessWave w{uk(rng), uc(rng), ue(rng)};
        const double g = ug(rng), h = 1e-5 * g;
        const double fd = (reduced_rhs(w, g + h) - reduced_rhs(w, g - h)) / (2 * h);
        CHECK(reduced_rhs_derivative(w, g) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("critical data") {
    CHECK(g_star(2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(g_star(3.0) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));
    CHECK(C1_star(2.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(sigma(3.0) == doctest::Approx(std::sqrt(6.0)));
    for (double k : {1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 7.0}) {
        const double gs = g_star(k), cs = C1_star(k);
        CHECK(gs > 0.0);
        CHECK(gs < 1.0);
        CHECK(cs < 0.0);
        struct Case {
            double C1;
            std::size_t count;
        };
        for (auto [C1, count] : {Case{0.3, 1}, Case{0.0, 1}, Case{0.5 * cs, 2}, Case{cs, 1}, Case{1.5 * cs, 0}}) {
            const auto cd = critical_data(k, C1);
            REQUIRE(cd.critical_points.size() == count);
            for (const auto& cp : cd.critical_points)
                CHECK(std::fabs(potential_derivs({k, C1, 0.0}, cp.g).first) < 1e-10);
            if (count == 2) {
                CHECK(cd.critical_points[0].kind == CriticalKind::local_max);
                CHECK(cd.critical_points[1].kind == CriticalKind::local_min);
                CHECK(cd.critical_points[0].g < gs);
                CHECK(cd.critical_points[1].g > gs);
            } else if (count == 1 && C1 == cs) {
                CHECK(cd.critical_points[0].kind == CriticalKind::inflection);
                CHECK(cd.critical_points[0].g == doctest::Approx(gs));
            } else if (count == 1) {
                CHECK(cd.critical_points[0].kind == CriticalKind::local_min);
                CHECK(cd.critical_points[0].g > gs);
            }
        }
    }
}

TEST_CASE("scaling maps") {
    PhysicalParams p{3.0, 1.0, 2.0, 2.0};
    CHECK(scaling(p).lambda == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    PhysicalParams q{2.0, 1.0, 1.0, 0.7};
    CHECK(scaling(q).omega == doctest::Approx(1.0).epsilon(1e-15));
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> uk(1.1, 6.0), ur(0.1, 10.0), uv(-3.0, 3.0), ug(0.0, 2.0), ux(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        PhysicalParams r{uk(rng), ur(rng), ur(rng), uv(rng)};
        if (r.V_wave == 0.0) continue;
        const double g = ug(rng), xi = ux(rng);
        const auto ph = to_physical(r, g, xi);
        CHECK(to_dimensionless(r, ph.strain) == doctest::Approx(g).epsilon(1e-14));
        CHECK(xi_to_dimensionless(r, ph.x_shift) == doctest::Approx(xi).epsilon(1e-14));
    }
    CHECK_THROWS(PhysicalParams{1.0, 1.0, 1.0, 1.0}.validate());
    CHECK_THROWS(PhysicalParams{2.0, 0.0, 1.0, 1.0}.validate());
    CHECK_THROWS(PhysicalParams{2.0, 1.0, 1.0, 0.0}.validate());
    CHECK_THROWS(require_valid_k(1.0));
}

}  // TEST_SUITE
