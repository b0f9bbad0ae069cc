#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kppcyl/dispersion.hpp"
#include "oracles.hpp"

using namespace kppcyl;

namespace {

Params unit_params() { return Params{1.0, 1.0, 1.0, 1.0, 1.0, 1, 1.0}; }

// N=1, d=mu=nu=R=1 closed form: chi1 = b sin b / (cos b - b sin b).
double chi1_closed(double b) {
    return b * std::sin(b) / (std::cos(b) - b * std::sin(b));
}

} // namespace

TEST_CASE("beta_bar against the N=1 closed form") {
    const Dispersion cv(unit_params());
    // root of cos r - r sin r
    const double ref = oracles::bisect(
        [](double r) { return std::cos(r) - r * std::sin(r); }, 0.5, 1.5);
    CHECK(cv.beta_bar() == doctest::Approx(ref).epsilon(1e-11));
    CHECK(cv.beta_bar() == doctest::Approx(0.86033358901938).epsilon(1e-9));
    CHECK(cv.beta_bar() < cv.r1() / cv.params().R);

    SUBCASE("R=2 scaling") {
        // closed form of d r psi1'(rR) + nu psi1(rR): cos 2r - r sin 2r
        Params p = unit_params();
        p.R = 2.0;
        const Dispersion cv2(p);
        const double ref2 = oracles::bisect(
            [](double r) { return std::cos(2.0 * r) - r * std::sin(2.0 * r); },
            0.25, 0.75);
        CHECK(cv2.beta_bar() == doctest::Approx(ref2).epsilon(1e-11));
    }

    SUBCASE("large nu pushes beta_bar toward R1/R") {
        Params p = unit_params();
        p.nu = 1e6;
        const Dispersion cv3(p);
        CHECK(cv3.beta_bar() < cv3.r1() / p.R);
        CHECK(cv3.beta_bar() == doctest::Approx(cv3.r1() / p.R).epsilon(1e-4));
    }
}

TEST_CASE("chi1: anchors, closed form, divergence at beta_bar") {
    const Dispersion cv(unit_params());
    CHECK(cv.chi1(0.0) == 0.0);
    CHECK(cv.chi1(0.5) == doctest::Approx(chi1_closed(0.5)).epsilon(1e-12));
    // divergence at the pole
    const double bb = cv.beta_bar();
    CHECK(cv.chi1((1.0 - 1e-4) * bb) > 1e3);
    CHECK(cv.chi1((1.0 - 1e-4) * bb) > cv.chi1((1.0 - 1e-3) * bb));
    CHECK_THROWS_AS(cv.chi1(bb * 1.01), std::domain_error);
    CHECK_THROWS_AS(cv.chi1(-0.1), std::domain_error);

    SUBCASE("strictly increasing on (0, beta_bar)") {
        double prev = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double b = bb * (1.0 - 1e-6) * i / 200.0;
            const double v = cv.chi1(b);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("chi2: anchors, closed form, -mu limit") {
    const Dispersion cv(unit_params());
    CHECK(cv.chi2(0.0) == 0.0);
    // N=1 closed form at beta=-1: -sinh1/(sinh1+cosh1)
    const double ref = -std::sinh(1.0) / (std::sinh(1.0) + std::cosh(1.0));
    CHECK(cv.chi2(-1.0) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(ref == doctest::Approx(-0.432332).epsilon(1e-5));
    // approach to -mu: the finite-|beta| error is ~ nu/(d |beta|)
    CHECK(std::abs(cv.chi2(-1e4) + 1.0) < 2e-4);
    CHECK(std::abs(cv.chi2(-1e8) + 1.0) < 1e-6);
    CHECK_THROWS_AS(cv.chi2(0.1), std::domain_error);

    SUBCASE("strictly increasing on [-20, 0]") {
        double prev = cv.chi2(-20.0);
        for (int i = 1; i <= 200; ++i) {
            const double b = -20.0 + 20.0 * i / 200.0;
            const double v = cv.chi2(b);
            CHECK(v > prev);
            CHECK(v <= 0.0);
            prev = v;
        }
    }
}

TEST_CASE("alpha_D_interval anchors") {
    const Dispersion cv(unit_params());
    const Params& p = cv.params();

    SUBCASE("beta = 0 gives [0, c/D]") {
        for (double c : {0.5, 1.0, 3.0}) {
            const auto iv = cv.alpha_D_interval(c, 0.0);
            REQUIRE(iv.has_value());
            CHECK(iv->lo == doctest::Approx(0.0));
            CHECK(iv->hi == doctest::Approx(c / p.D));
        }
    }

    SUBCASE("degenerate at beta_tilde") {
        const double c = 1.0;
        const double bt = cv.beta_tilde(c);
        // bt carries ~1e-12 bisection error; probe just inside.
        const auto iv = cv.alpha_D_interval(c, bt - 1e-8);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == doctest::Approx(c / (2.0 * p.D)).epsilon(1e-3));
        CHECK(iv->hi == doctest::Approx(c / (2.0 * p.D)).epsilon(1e-3));
        CHECK_FALSE(cv.alpha_D_interval(c, bt + 1e-6).has_value());
        CHECK_FALSE(cv.alpha_D_interval(c, bt * 1.01).has_value());
    }

    SUBCASE("beta < 0 is clipped to [0, hi] with the chi2 oracle") {
        const double chi2 = -std::sinh(1.0) / (std::sinh(1.0) + std::cosh(1.0));
        const auto iv = cv.alpha_D_interval(1.0, -1.0);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == 0.0);
        CHECK(iv->hi ==
              doctest::Approx(0.5 * (1.0 + std::sqrt(1.0 - 4.0 * chi2))).epsilon(1e-12));
    }
}

TEST_CASE("alpha_d_interval anchors") {
    Params p = unit_params();
    const Dispersion cv(p);
    const double ck = p.c_kpp();

    SUBCASE("degenerate lines at c = c_KPP") {
        for (double b : {0.0, 0.3, 1.0}) {
            const auto iv = cv.alpha_d_interval(ck, b);
            REQUIRE(iv.has_value());
            CHECK(iv->lo == doctest::Approx(std::max(ck / 2.0 - b, 0.0)).epsilon(1e-12));
            CHECK(iv->hi == doctest::Approx(ck / 2.0 + b).epsilon(1e-12));
        }
    }

    SUBCASE("beta = 0 limits for c > c_KPP") {
        const double c = 3.0;
        const auto iv = cv.alpha_d_interval(c, 0.0);
        REQUIRE(iv.has_value());
        const double s = std::sqrt(c * c - ck * ck);
        CHECK(iv->lo == doctest::Approx((c - s) / 2.0).epsilon(1e-14));
        CHECK(iv->hi == doctest::Approx((c + s) / 2.0).epsilon(1e-14));
    }

    SUBCASE("degenerate point at beta_hat for c < c_KPP") {
        const double c = 1.0;
        const double bh = cv.beta_hat(c);
        CHECK(bh == doctest::Approx(std::sqrt(ck * ck - 1.0) / 2.0).epsilon(1e-14));
        const auto iv = cv.alpha_d_interval(c, bh);
        REQUIRE(iv.has_value());
        CHECK(iv->lo == doctest::Approx(c / 2.0).epsilon(1e-6));
        CHECK(iv->hi == doctest::Approx(c / 2.0).epsilon(1e-6));
        CHECK_FALSE(cv.alpha_d_interval(c, bh * 0.98).has_value());
    }

    SUBCASE("half-disk chord for beta < 0") {
        const double c = 3.0;
        const double rho = cv.rho(c);
        CHECK_FALSE(cv.alpha_d_interval(c, -1.01 * rho).has_value());
        const auto iv = cv.alpha_d_interval(c, -0.5 * rho);
        REQUIRE(iv.has_value());
        const double t = std::sqrt(rho * rho - 0.25 * rho * rho);
        CHECK(iv->lo == doctest::Approx(c / 2.0 - t).epsilon(1e-14));
        CHECK(iv->hi == doctest::Approx(c / 2.0 + t).epsilon(1e-14));
        CHECK_FALSE(cv.alpha_d_interval(1.9, -0.01).has_value());  // c < c_KPP
    }
}

TEST_CASE("beta_tilde limits and closed-form root") {
    const Dispersion cv(unit_params());
    CHECK(cv.beta_tilde(1e-8) < 1e-3);
    CHECK(cv.beta_tilde(1e8) == doctest::Approx(cv.beta_bar()).epsilon(1e-9));
    // root of 4 chi1(b) = 1 via the tan-form closed oracle
    const double ref = oracles::bisect(
        [](double b) { return 4.0 * chi1_closed(b) - 1.0; }, 1e-6, 0.8);
    CHECK(cv.beta_tilde(1.0) == doctest::Approx(ref).epsilon(1e-10));
    SUBCASE("monotone in c") {
        double prev = 0.0;
        for (double c : {0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
            const double bt = cv.beta_tilde(c);
            CHECK(bt > prev);
            prev = bt;
        }
    }
}

TEST_CASE("gamma_coef anchors") {
    const Dispersion cv(unit_params());
    CHECK(cv.gamma_coef(0.0) == doctest::Approx(1.0).epsilon(1e-14));  // mu/nu
    CHECK(cv.gamma_coef(0.5) ==
          doctest::Approx(1.0 / (std::cos(0.5) - 0.5 * std::sin(0.5))).epsilon(1e-13));
    CHECK(cv.gamma_coef(-1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(cv.gamma_coef(cv.beta_bar() * 1.01), std::domain_error);
    SUBCASE("positive on the stated domain") {
        for (int i = 0; i < 40; ++i) {
            const double b = -4.0 + i * (4.0 + cv.beta_bar() * 0.999) / 40.0;
            CHECK(cv.gamma_coef(b) > 0.0);
        }
    }
    SUBCASE("mu/nu scaling at beta = 0") {
        Params p = unit_params();
        p.mu = 3.0;
        p.nu = 7.0;
        CHECK(Dispersion(p).gamma_coef(0.0) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
    }
}

TEST_CASE("interval endpoints satisfy the scalar dispersion equations") {
    const Dispersion cv(unit_params());
    const Params& p = cv.params();
    const double c = 2.5;  // rho(c) = 0.75
    for (double b : {-0.6, -0.2, 0.1, 0.4}) {
        const auto Di = cv.alpha_D_interval(c, b);
        REQUIRE(Di.has_value());
        const double chi = b >= 0.0 ? cv.chi1(b) : cv.chi2(b);
        // hi endpoint always lies on the boundary curve
        CHECK(std::abs(-p.D * Di->hi * Di->hi + c * Di->hi - chi) < 1e-10);
        if (b >= 0.0)
            CHECK(std::abs(-p.D * Di->lo * Di->lo + c * Di->lo - chi) < 1e-10);

        const auto di = cv.alpha_d_interval(c, b);
        REQUIRE(di.has_value());
        const double sign = b >= 0.0 ? 1.0 : -1.0;
        for (double a : {di->lo, di->hi})
            CHECK(std::abs(-p.d * a * a + sign * p.d * b * b + c * a - p.f0) < 1e-10);
    }
}

TEST_CASE("region slices are nested monotonically in c") {
    const Dispersion cv(unit_params());
    const double c1 = 2.2, c2 = 2.6;
    for (int i = 0; i <= 50; ++i) {
        const double b = -0.4 + 0.9 * i / 50.0;
        const auto d1 = cv.alpha_d_interval(c1, b), d2 = cv.alpha_d_interval(c2, b);
        if (d1 && d2) {
            CHECK(d2->lo <= d1->lo + 1e-12);
            CHECK(d2->hi >= d1->hi - 1e-12);
        }
        const auto D1 = cv.alpha_D_interval(c1, b), D2 = cv.alpha_D_interval(c2, b);
        if (D1 && D2) {
            CHECK(D2->lo <= D1->lo + 1e-12);
            CHECK(D2->hi >= D1->hi - 1e-12);
        }
    }
}

TEST_CASE("monotonicity of the boundary slice in D and R") {
    Params p = unit_params();
    const double c = 1.4;

    SUBCASE("in D at fixed (c, beta)") {
        Params p2 = p;
        p2.D = 2.0;
        const Dispersion a(p), b(p2);
        for (double beta : {-0.5, 0.1, 0.3}) {
            const auto ia = a.alpha_D_interval(c, beta);
            const auto ib = b.alpha_D_interval(c, beta);
            if (!ia || !ib) continue;
            CHECK(ib->hi < ia->hi);
            if (beta > 0.0) CHECK(ib->lo > ia->lo);
        }
    }

    SUBCASE("in R at fixed (c, beta)") {
        Params p2 = p;
        p2.R = 1.5;
        const Dispersion a(p), b(p2);
        for (double beta : {0.1, 0.3}) {
            const auto ia = a.alpha_D_interval(c, beta);
            const auto ib = b.alpha_D_interval(c, beta);
            if (!ia || !ib) continue;
            CHECK(ib->hi < ia->hi);
        }
        for (double beta : {-1.5, -0.5}) {
            const auto ia = a.alpha_D_interval(c, beta);
            const auto ib = b.alpha_D_interval(c, beta);
            REQUIRE((ia && ib));
            CHECK(ib->hi > ia->hi);
        }
    }
}

TEST_CASE("assembled curves are continuous across beta = 0") {
    for (double c : {1.0, 2.0, 3.0}) {
        const Dispersion cv(unit_params());
        const auto Dm = cv.alpha_D_interval(c, -1e-6);
        const auto Dp = cv.alpha_D_interval(c, 1e-6);
        REQUIRE((Dm && Dp));
        CHECK(std::abs(Dm->hi - Dp->hi) < 1e-8);
        CHECK(std::abs(Dm->lo - Dp->lo) < 1e-8);
        if (c > cv.params().c_kpp()) {
            const auto dm = cv.alpha_d_interval(c, -1e-6);
            const auto dp = cv.alpha_d_interval(c, 1e-6);
            REQUIRE((dm && dp));
            CHECK(std::abs(dm->hi - dp->hi) < 1e-8);
            CHECK(std::abs(dm->lo - dp->lo) < 1e-8);
        }
    }
}

TEST_CASE("both upper branches are flat to second order at beta = 0") {
    // the beta-derivatives of alpha_D^+ and alpha_d^+- vanish at 0
    const Dispersion cv(unit_params());
    const double c = 3.0;
    const double h = 1e-3;
    const double Dhi0 = cv.alpha_D_interval(c, 0.0)->hi;
    const double dhi0 = cv.alpha_d_interval(c, 0.0)->hi;
    const double dlo0 = cv.alpha_d_interval(c, 0.0)->lo;
    for (double b : {-h, h}) {
        CHECK(std::abs(cv.alpha_D_interval(c, b)->hi - Dhi0) < 10.0 * h * h);
        CHECK(std::abs(cv.alpha_d_interval(c, b)->hi - dhi0) < 10.0 * h * h);
        CHECK(std::abs(cv.alpha_d_interval(c, b)->lo - dlo0) < 10.0 * h * h);
    }
}

TEST_CASE("sample_curves") {
    const Dispersion cv(unit_params());
    SUBCASE("empty grid") { CHECK(cv.sample_curves(1.0, {}).empty()); }
    SUBCASE("grid = {0} carries the D-interval [0, c/D]") {
        const std::vector<double> grid{0.0};
        const auto rows = cv.sample_curves(2.0, grid);
        REQUIRE(rows.size() == 1);
        REQUIRE(rows[0].D_interval.has_value());
        CHECK(rows[0].D_interval->hi == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("full span defined for c > c_KPP") {
        const double c = 2.5;
        const double lo = -cv.rho(c) * 0.999, hi = cv.beta_tilde(c) * 0.999;
        std::vector<double> grid;
        for (int i = 0; i <= 32; ++i) grid.push_back(lo + (hi - lo) * i / 32.0);
        for (const auto& s : cv.sample_curves(c, grid)) {
            CHECK(s.d_interval.has_value());
            CHECK(s.D_interval.has_value());
        }
    }
    SUBCASE("non-increasing grid is rejected") {
        const std::vector<double> bad{0.0, 0.0};
        CHECK_THROWS_AS(cv.sample_curves(1.0, bad), std::invalid_argument);
    }
}

TEST_CASE("dispersion_residual vanishes on constructed plane waves") {
    const Dispersion cv(unit_params());
    const Params& p = cv.params();
    const double c = 2.5;
    for (double b : {-0.6, 0.35}) {
        const auto Di = cv.alpha_D_interval(c, b);
        REQUIRE(Di.has_value());
        const double a = Di->hi;  // on the boundary curve
        // complete alpha to also satisfy the field equation: pick the c'
        // that puts (a, b) on the field curve too -- instead check only
        // the boundary + flux rows by building gamma from the flux law.
        const double g = cv.gamma_coef(b);
        const double res = dispersion_residual(p, c, a, b, g);
        // field row is generically nonzero here; boundary and flux rows
        // must hold, so compare against the field residual alone.
        const double sign = b >= 0.0 ? 1.0 : -1.0;
        const double field = -p.d * a * a + sign * p.d * b * b + c * a - p.f0;
        CHECK(res == doctest::Approx(std::abs(field)).epsilon(1e-9));
    }
}

TEST_CASE("Params validation") {
    Params p = unit_params();
    p.d = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = unit_params();
    p.N = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK(unit_params().c_kpp() == doctest::Approx(2.0));
}
