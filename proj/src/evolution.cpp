#include "nls/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nls {

static const cplx I_UNIT(0.0, 1.0);

cplx EvolutionState::sample(double xq) const {
    const size_t n = x.size();
    if (xq <= x.front() || xq >= x.back())
        throw std::invalid_argument("EvolutionState::sample: x outside the grid");
    const double fi = (xq - x.front()) / dx;
    size_t i = static_cast<size_t>(fi);
    i = std::min(std::max<size_t>(i, 1), n - 3);
    const double t = fi - i;
    // 4-point Lagrange on nodes i-1..i+2
    const double c0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double c1 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double c2 = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double c3 = (t + 1.0) * t * (t - 1.0) / 6.0;
    return c0 * u[i - 1] + c1 * u[i] + c2 * u[i + 1] + c3 * u[i + 2];
}

bool EvolutionState::contaminated(double xq) const {
    const double reach = cone_speed * t;
    return xq < x.front() + reach || xq > x.back() - reach;
}

static void rhs_interior(const std::vector<cplx>& y, std::vector<cplx>& out, double inv12dx2,
                         size_t n) {
    // nodes live at indices 2..n+1; ghosts at 0,1 and n+2,n+3
    for (size_t i = 2; i < n + 2; ++i) {
        const cplx lap = (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] -
                          y[i + 2]) *
                         inv12dx2;
        out[i] = I_UNIT * (lap - 2.0 * std::norm(y[i]) * y[i]);
    }
}

std::vector<EvolutionState> evolve(const InitialDatum& u0, const Params& p,
                                   const EvolutionConfig& cfg) {
    if (!(cfg.dx > 0.0) || !(cfg.t_end > 0.0))
        throw std::invalid_argument("evolve: dx and t_end must be positive");
    const double dx_bound =
        0.2 / std::max({1.0, std::fabs(p.beta), std::sqrt(std::fabs(p.omega))});
    if (cfg.dx > dx_bound)
        throw std::invalid_argument("evolve: dx too coarse for the 2 beta oscillation");
    if (cfg.dt_factor > 0.5)
        throw std::invalid_argument("evolve: dt_factor violates the RK4 stability bound");
    if (!cfg.periodic) {
        if (std::abs(u0.profile(-cfg.L_left) - plane_wave(p, -cfg.L_left, 0.0)) >
                10.0 * std::max(u0.tail_tol, 1e-9) ||
            std::abs(u0.profile(cfg.L_right)) > 10.0 * std::max(u0.tail_tol, 1e-9))
            throw std::invalid_argument("evolve: datum not settled at the domain edges");
    }

    const size_t n = static_cast<size_t>(std::lround((cfg.L_left + cfg.L_right) / cfg.dx)) + 1;
    const double x0 = -cfg.L_left;
    const double dt0 = cfg.dt_factor * cfg.dx * cfg.dx;
    const double inv12dx2 = 1.0 / (12.0 * cfg.dx * cfg.dx);

    std::vector<double> times = cfg.record_times;
    if (times.empty() || times.back() < cfg.t_end) times.push_back(cfg.t_end);
    for (size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("evolve: record_times must be ascending");

    const double cone =
        (cfg.cone_speed > 0.0) ? cfg.cone_speed : 4.0 * std::max(1.0, 2.0 * std::fabs(p.beta) + 1.0);

    std::vector<cplx> y(n + 4), k1(n + 4), k2(n + 4), k3(n + 4), k4(n + 4), tmp(n + 4);
    for (size_t i = 0; i < n; ++i) y[i + 2] = u0.profile(x0 + i * cfg.dx);

    auto set_ghosts = [&](std::vector<cplx>& v, double t) {
        if (cfg.periodic) {
            // period n*dx: node index wraps mod n
            v[0] = v[n];
            v[1] = v[n + 1];
            v[n + 2] = v[2];
            v[n + 3] = v[3];
        } else {
            v[0] = plane_wave(p, x0 - 2.0 * cfg.dx, t);
            v[1] = plane_wave(p, x0 - cfg.dx, t);
            v[2] = plane_wave(p, x0, t);  // pinned edge
            v[n + 1] = 0.0;
            v[n + 2] = 0.0;
            v[n + 3] = 0.0;
        }
    };

    auto make_state = [&](double t) {
        EvolutionState s;
        s.x.resize(n);
        s.u.resize(n);
        for (size_t i = 0; i < n; ++i) {
            s.x[i] = x0 + i * cfg.dx;
            s.u[i] = y[i + 2];
        }
        s.t = t;
        s.dx = cfg.dx;
        s.dt = dt0;
        s.cone_speed = cone;
        s.boundary_model = p;
        return s;
    };

    std::vector<EvolutionState> out;
    double t = 0.0;
    size_t next_rec = 0;
    while (next_rec < times.size() && times[next_rec] <= 1e-14) {
        out.push_back(make_state(t));
        ++next_rec;
    }

    while (next_rec < times.size()) {
        const double target = times[next_rec];
        double dt = dt0;
        const double remain = target - t;
        const long steps = std::max(1L, std::lround(std::ceil(remain / dt0)));
        dt = remain / steps;
        for (long s = 0; s < steps; ++s) {
            set_ghosts(y, t);
            rhs_interior(y, k1, inv12dx2, n);

            for (size_t i = 2; i < n + 2; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
            set_ghosts(tmp, t + 0.5 * dt);
            rhs_interior(tmp, k2, inv12dx2, n);

            for (size_t i = 2; i < n + 2; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
            set_ghosts(tmp, t + 0.5 * dt);
            rhs_interior(tmp, k3, inv12dx2, n);

            for (size_t i = 2; i < n + 2; ++i) tmp[i] = y[i] + dt * k3[i];
            set_ghosts(tmp, t + dt);
            rhs_interior(tmp, k4, inv12dx2, n);

            for (size_t i = 2; i < n + 2; ++i)
                y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            t += dt;
        }
        t = target;
        set_ghosts(y, t);
        out.push_back(make_state(t));
        ++next_rec;
    }
    return out;
}

double renormalized_mass(const EvolutionState& s) {
    const double a2 = s.boundary_model.alpha * s.boundary_model.alpha;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < s.x.size(); ++i) {
        auto f = [&](size_t j) {
            return std::norm(s.u[j]) - (s.x[j] < 0.0 ? a2 : 0.0);
        };
        acc += 0.5 * s.dx * (f(i) + f(i + 1));
    }
    return acc;
}

CompareTable compare_asymptotics(const std::vector<EvolutionState>& states,
                                 const Params& p, const ScatteringData& r,
                                 const std::vector<double>& xis) {
    CompareTable tab;
    for (double xi : xis) {
        std::vector<double> ts, rl, rf;
        for (const auto& st : states) {
            if (st.t <= 0.0) continue;
            const double x = xi * st.t;
            if (x <= st.x.front() || x >= st.x.back()) continue;
            const Sector sec = classify_sector(p, x, st.t);
            if (sec == Sector::TransitionLM || sec == Sector::TransitionMR) continue;

            CompareRow row;
            row.xi = xi;
            row.t = st.t;
            row.sector = sec;
            row.u_num = st.sample(x);
            row.cone_warning = st.contaminated(x);
            UValue ua;
            if (sec == Sector::Middle)
                ua = u_middle(p, r, x, st.t);
            else if (sec == Sector::Left)
                ua = u_left(p, r, x, st.t);
            else
                ua = {u_right(p, r, x, st.t), 0.0};
            row.u_lead = ua.leading;
            row.u_full = ua.total();
            row.res_lead = std::abs(row.u_num - row.u_lead);
            row.res_full = std::abs(row.u_num - row.u_full);
            tab.rows.push_back(row);
            ts.push_back(st.t);
            rl.push_back(row.res_lead);
            rf.push_back(row.res_full);
        }
        if (ts.size() >= 2) {
            const size_t i = 0, j = ts.size() - 1;
            const double dlt = std::log(ts[j] / ts[i]);
            tab.xis.push_back(xi);
            tab.exp_lead.push_back(std::log(rl[j] / rl[i]) / dlt);
            tab.exp_full.push_back(std::log(rf[j] / rf[i]) / dlt);
        }
    }
    return tab;
}

}  // namespace nls
