#pragma once

#include <span>
#include <string>

#include "kppcyl/params.hpp"
#include "kppcyl/speed.hpp"

namespace kppcyl::csv {

/// One double formatted with 17 significant digits (round-trip exact).
std::string field(double x);

std::string speed_header();
std::string speed_row(const Params& p, const TangencyResult& r);

std::string curves_header();
std::string curves_row(const CurveSample& s);

} // namespace kppcyl::csv
