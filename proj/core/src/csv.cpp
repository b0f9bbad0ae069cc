#include "kppcyl/csv.hpp"

#include <cstdio>

namespace kppcyl::csv {

std::string field(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string speed_header() {
    return "d,D,mu,nu,R,N,f0,c_star,beta_star,alpha_star,gamma_star,type";
}

std::string speed_row(const Params& p, const TangencyResult& r) {
    std::string row;
    row += field(p.d) + ',' + field(p.D) + ',' + field(p.mu) + ',' + field(p.nu) +
           ',' + field(p.R) + ',' + std::to_string(p.N) + ',' + field(p.f0);
    row += ',' + field(r.c_star) + ',' + field(r.beta_star) + ',' +
           field(r.alpha_star) + ',' + field(r.gamma_star) + ',' +
           to_string(r.type);
    return row;
}

std::string curves_header() { return "beta,d_lo,d_hi,D_lo,D_hi"; }

std::string curves_row(const CurveSample& s) {
    std::string row = field(s.beta);
    if (s.d_interval)
        row += ',' + field(s.d_interval->lo) + ',' + field(s.d_interval->hi);
    else
        row += ",,";
    if (s.D_interval)
        row += ',' + field(s.D_interval->lo) + ',' + field(s.D_interval->hi);
    else
        row += ",,";
    return row;
}

} // namespace kppcyl::csv
