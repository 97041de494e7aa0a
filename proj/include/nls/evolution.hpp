#pragma once

#include <vector>

#include "nls/asymptotics.hpp"

namespace nls {

struct EvolutionConfig {
    double L_left = 300.0;
    double L_right = 400.0;
    double dx = 0.05;
    double t_end = 40.0;
    std::vector<double> record_times;  // ascending; t_end appended if missing
    double dt_factor = 0.25;           // dt = dt_factor * dx^2
    bool periodic = false;             // wrap-around variant for exact-solution tests
    double cone_speed = 0.0;           // 0 = heuristic 4*K_eff
};

struct EvolutionState {
    std::vector<double> x;
    std::vector<cplx> u;
    double t = 0.0;
    double dx = 0.0;
    double dt = 0.0;
    double cone_speed = 0.0;
    Params boundary_model{};

    cplx sample(double xq) const;             // cubic interpolation
    bool contaminated(double xq) const;       // inside an edge influence cone
};

// Method of lines for i u_t + u_xx - 2|u|^2 u = 0: 4th-order central u_xx,
// classical RK4, Dirichlet edges pinned to the exact background/zero models
// at every stage. Records snapshots at the requested times.
std::vector<EvolutionState> evolve(const InitialDatum& u0, const Params& p,
                                   const EvolutionConfig& cfg);

// trapezoid of |u|^2 - alpha^2 1_{x<0}
double renormalized_mass(const EvolutionState& s);

struct CompareRow {
    double xi = 0.0;
    double t = 0.0;
    Sector sector = Sector::Middle;
    cplx u_num, u_lead, u_full;
    double res_lead = 0.0;        // |u_num - leading|
    double res_full = 0.0;        // |u_num - (leading + correction)|
    bool cone_warning = false;    // inside an edge influence cone (heuristic)
};

struct CompareTable {
    std::vector<CompareRow> rows;
    // fitted residual decay exponents per xi (needs >= 2 recorded times)
    std::vector<double> xis;
    std::vector<double> exp_lead, exp_full;
};

CompareTable compare_asymptotics(const std::vector<EvolutionState>& states,
                                 const Params& p, const ScatteringData& r,
                                 const std::vector<double>& xis);

}  // namespace nls
