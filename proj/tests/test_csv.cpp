#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "kppcyl/csv.hpp"

using namespace kppcyl;

TEST_CASE("field formatting round-trips at 17 significant digits") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        const double x = mant(rng) * std::pow(10.0, expo(rng));
        const std::string s = csv::field(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(std::strtod(csv::field(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
}

TEST_CASE("record headers and rows") {
    CHECK(csv::speed_header() ==
          "d,D,mu,nu,R,N,f0,c_star,beta_star,alpha_star,gamma_star,type");
    const Params p{1.0, 4.0, 1.0, 1.0, 2.0, 1, 1.0};
    const TangencyResult r{2.5, 0.0, 0.625, 1.0, TangencyType::Mixed, 1e-12};
    const std::string row = csv::speed_row(p, r);
    CHECK(row.find("2.5") != std::string::npos);
    CHECK(row.substr(row.size() - 5) == "mixed");

    CurveSample s;
    s.beta = -0.25;
    s.D_interval = AlphaInterval{0.0, 1.5};
    CHECK(csv::curves_header() == "beta,d_lo,d_hi,D_lo,D_hi");
    CHECK(csv::curves_row(s) == "-0.25,,,0,1.5");
}
