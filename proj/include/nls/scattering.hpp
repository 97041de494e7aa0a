#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nls/datum.hpp"

namespace nls {

struct OdeConfig {
    double step_factor = 0.1;  // dx <= step_factor / max(1, |k|, |X(k)|)
    double max_step = 0.1;
};

// Jost solution mu2 of mu2_x + ik [sigma3, mu2] = U0 mu2, normalized mu2 -> I
// as x -> +inf; marched down from the settled tail. det mu2 = 1.
Mat2 solve_mu2(const InitialDatum& u0, cplx k, double x_eval, const OdeConfig& cfg = {});

// Jost solution mu1 of mu1_x + ik sigma3 mu1 - i(X(k)-beta) mu1 sigma3 = U0 mu1,
// normalized mu1 ~ e^{i beta x sigma3-hat} s^b(k) as x -> -inf; marched up.
// For k on the open cut, side selects the boundary values of X and s^b.
Mat2 solve_mu1(const Params& p, const InitialDatum& u0, cplx k, double x_eval,
               Side side = Side::interior, const OdeConfig& cfg = {});

// s(k) = mu2(0,k)^{-1} mu1(0,k); on the cut the plus boundary values are used.
Mat2 scattering_matrix(const Params& p, const InitialDatum& u0, double k,
                       const OdeConfig& cfg = {});

// a(k) = s11, b(k) = -s12; also valid for upper-half k via the column
// determinant a = det([mu1]_1, [mu2]_2).
cplx a_coefficient(const Params& p, const InitialDatum& u0, cplx k,
                   const OdeConfig& cfg = {});

// Reflection coefficient r(k) = conj(b)/a off [E1,E2], -conj(a)/a on the cut.
cplx reflection(const Params& p, const InitialDatum& u0, double k,
                const OdeConfig& cfg = {});

struct BranchFit {
    // q[j][l]: j = 0 for E1, j = 1 for E2; l = 0..L
    std::array<std::vector<cplx>, 2> q;
    std::array<double, 2> residual{0.0, 0.0};
    std::array<double, 2> condition{0.0, 0.0};
    int order = 0;
};

// Least-squares fit of the one-sided sqrt expansions of r near E_j from
// samples (k_i, r_i) in a window on both sides, excluding E_j itself.
BranchFit branch_coeffs(const Params& p, const std::vector<double>& ks,
                        const std::vector<cplx>& rs, int L, double window);

struct LargeKCoeffs {
    cplx a1;
    std::optional<cplx> a2, a3;  // extended mode only
};

// Trace coefficients of a(k) = 1 + a1/k + ... from tail integrals of the datum.
LargeKCoeffs large_k_coeffs(const Params& p, const InitialDatum& u0,
                            bool extended = false);

struct GridConfig {
    double k_max = 0.0;          // 0 = auto from the fitted decay of r
    double uniform_step = 0.04;  // spacing away from the branch points
    double refine_floor = 1e-4;  // closest sample distance to E1, E2
    double fit_window = 0.0;     // 0 = 0.1 (E2 - E1)
    int fit_order = -1;          // -1 = min(N1 - 1, 4)
    int threads = 1;
};

struct ScatterDiagnostics {
    double max_cut_unimodularity = 0.0;   // max | |conj(b)/a| - 1 | on cut samples
    double max_cut_ab_identity = 0.0;     // max |a + b| / |a| on the cut
    double max_offcut_r = 0.0;            // max |r| off the cut
    double max_det_violation = 0.0;       // max | |a|^2-|b|^2 - 1 | off cut
    double min_abs_a = 0.0;               // min |a| off cut
    double worst_k = 0.0;
    bool pass = true;
};

// Sampled scattering data plus a live evaluator for arbitrary k, used by the
// asymptotics quadratures. Pure-const access is thread-safe.
class ScatteringData {
  public:
    Params p{};
    std::vector<double> kgrid;
    std::vector<cplx> a_samples, b_samples, r_samples;
    BranchFit qfit;
    double K_max = 0.0;
    GridConfig grid;
    OdeConfig ode;
    ScatterDiagnostics diag;

    ScatteringData() = default;
    ScatteringData(const Params& pp, const InitialDatum& u0, const OdeConfig& oc)
        : p(pp), ode(oc), datum_(std::make_shared<InitialDatum>(u0)) {}

    bool on_cut(double k) const { return k > p.E1 && k < p.E2; }

    // r at arbitrary real k (plus boundary value on the cut); cached.
    cplx r_at(double k) const;
    cplx a_at(double k) const;
    double log1m_r2(double k) const;        // log(1 - |r|^2), k off [E1,E2]
    double argr_unwrapped(double s) const;  // continuous on [E1,E2], principal at E1

    const InitialDatum& datum() const { return *datum_; }
    void build_unwrap_table();

  private:
    struct Cache {
        std::map<double, cplx> values;
        std::mutex mtx;
    };
    std::shared_ptr<const InitialDatum> datum_;
    std::vector<double> cut_s_, cut_theta_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Full pipeline: sample r over the structured grid, fit branch coefficients,
// run the invariant checks. Violations are recorded in diag, not thrown.
ScatteringData build_scattering_data(const Params& p, const InitialDatum& u0,
                                     const GridConfig& gc = {}, const OdeConfig& oc = {});

}  // namespace nls
