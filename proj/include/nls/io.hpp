#pragma once

#include <string>
#include <vector>

#include "nls/evolution.hpp"

namespace nls {

struct SweepRow {
    double xi = 0.0, t = 0.0;
    cplx u, sub;
    Sector sector = Sector::Middle;
};

namespace io {

// 17 significant digits, locale-independent; the CSV determinism contract.
std::string fmt17(double v);

void write_scatter_csv(const std::string& path, const ScatteringData& sd);
void write_scatter_json(const std::string& path, const ScatteringData& sd);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

void write_trajectory(const std::string& dir, const std::vector<EvolutionState>& states,
                      std::vector<std::string>& files_out);
void write_manifest(const std::string& path, const std::vector<EvolutionState>& states,
                    const std::vector<std::string>& files);

void write_compare_csv(const std::string& path, const CompareTable& tab);

}  // namespace io
}  // namespace nls
