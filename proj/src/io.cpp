#include "nls/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace nls::io {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

static std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // '\n' endings everywhere
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

void write_scatter_csv(const std::string& path, const ScatteringData& sd) {
    auto f = open_out(path);
    f << "k,re_r,im_r,abs_r,re_a,im_a\n";
    for (size_t i = 0; i < sd.kgrid.size(); ++i) {
        const cplx r = sd.r_samples[i], a = sd.a_samples[i];
        f << fmt17(sd.kgrid[i]) << ',' << fmt17(r.real()) << ',' << fmt17(r.imag()) << ','
          << fmt17(std::abs(r)) << ',' << fmt17(a.real()) << ',' << fmt17(a.imag())
          << '\n';
    }
}

void write_scatter_json(const std::string& path, const ScatteringData& sd) {
    json j;
    j["k_max"] = sd.K_max;
    j["grid"] = {{"uniform_step", sd.grid.uniform_step},
                 {"refine_floor", sd.grid.refine_floor},
                 {"fit_window", sd.grid.fit_window},
                 {"fit_order", sd.qfit.order},
                 {"samples", sd.kgrid.size()}};
    j["ode"] = {{"step_factor", sd.ode.step_factor}, {"max_step", sd.ode.max_step}};
    for (int b = 0; b < 2; ++b) {
        json qs = json::array();
        for (const cplx& q : sd.qfit.q[b]) qs.push_back({q.real(), q.imag()});
        const char* name = b == 0 ? "q1" : "q2";
        j["branch_fit"][name] = {{"coeffs", qs},
                                 {"residual", sd.qfit.residual[b]},
                                 {"condition", sd.qfit.condition[b]}};
    }
    j["diagnostics"] = {{"max_cut_unimodularity", sd.diag.max_cut_unimodularity},
                        {"max_offcut_r", sd.diag.max_offcut_r},
                        {"max_det_violation", sd.diag.max_det_violation},
                        {"min_abs_a", sd.diag.min_abs_a},
                        {"worst_k", sd.diag.worst_k},
                        {"pass", sd.diag.pass}};
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    auto f = open_out(path);
    f << "xi,t,re_u,im_u,abs_u,re_sub,im_sub,sector\n";
    for (const auto& r : rows) {
        f << fmt17(r.xi) << ',' << fmt17(r.t) << ',' << fmt17(r.u.real()) << ','
          << fmt17(r.u.imag()) << ',' << fmt17(std::abs(r.u)) << ','
          << fmt17(r.sub.real()) << ',' << fmt17(r.sub.imag()) << ','
          << sector_name(r.sector) << '\n';
    }
}

void write_trajectory(const std::string& dir, const std::vector<EvolutionState>& states,
                      std::vector<std::string>& files_out) {
    for (size_t s = 0; s < states.size(); ++s) {
        char name[64];
        std::snprintf(name, sizeof(name), "trajectory_%03zu.csv", s);
        files_out.push_back(name);
        auto f = open_out(dir + "/" + name);
        f << "x,re_u,im_u\n";
        for (size_t i = 0; i < states[s].x.size(); ++i)
            f << fmt17(states[s].x[i]) << ',' << fmt17(states[s].u[i].real()) << ','
              << fmt17(states[s].u[i].imag()) << '\n';
    }
}

void write_manifest(const std::string& path, const std::vector<EvolutionState>& states,
                    const std::vector<std::string>& files) {
    json j;
    j["snapshots"] = json::array();
    for (size_t s = 0; s < states.size(); ++s) {
        j["snapshots"].push_back({{"file", files[s]},
                                  {"t", states[s].t},
                                  {"renormalized_mass", renormalized_mass(states[s])}});
    }
    if (!states.empty()) {
        j["grid"] = {{"x_min", states[0].x.front()},
                     {"x_max", states[0].x.back()},
                     {"dx", states[0].dx},
                     {"dt", states[0].dt},
                     {"cone_speed", states[0].cone_speed}};
    }
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

void write_compare_csv(const std::string& path, const CompareTable& tab) {
    auto f = open_out(path);
    f << "xi,t,sector,re_unum,im_unum,abs_unum,res_lead,res_full\n";
    for (const auto& r : tab.rows) {
        f << fmt17(r.xi) << ',' << fmt17(r.t) << ',' << sector_name(r.sector) << ','
          << fmt17(r.u_num.real()) << ',' << fmt17(r.u_num.imag()) << ','
          << fmt17(std::abs(r.u_num)) << ',' << fmt17(r.res_lead) << ','
          << fmt17(r.res_full) << '\n';
    }
}

}  // namespace nls::io
