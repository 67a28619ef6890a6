#pragma once

#include <string>
#include <vector>

#include "rcsim/graph.hpp"

namespace rcsim {

// Spreading and forgetting rates. beta1/beta2 drive uncertain->rumor and
// truth->rumor transitions along the rumor network; gamma1/gamma2 drive
// uncertain->truth and rumor->truth transitions along the truth network;
// delta is the common forgetting rate back to uncertain.
struct URTUParams {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double delta = 0.0;

    void validate() const;  // throws std::domain_error
};

// Per-node probabilities of the rumor-believing (R) and truth-believing (T)
// states. The uncertain probability is 1 - R_i - T_i and is never stored.
struct ExpectedState {
    std::vector<double> R;
    std::vector<double> T;

    static ExpectedState uniform(int n, double r, double t);

    int n() const { return static_cast<int>(R.size()); }
    void validate() const;  // throws std::domain_error
};

// Time derivative of the augmented system: state derivatives plus the two
// effectiveness integrands (without their gamma prefactors).
struct Derivative {
    std::vector<double> dR;
    std::vector<double> dT;
    double dAccU = 0.0;  // sum_i (1-R_i-T_i) * sum_j b_ji T_j
    double dAccR = 0.0;  // sum_i R_i * sum_j b_ji T_j
};

Derivative derivative(const ExpectedState& state, const URTUParams& params,
                      const DirectedGraph& gR, const DirectedGraph& gT);

// Dense record of one integration: states and running integrals at t=0 and
// after every step. accumU/accumR match times index-for-index.
struct Trajectory {
    std::vector<double> times;
    std::vector<ExpectedState> states;
    std::vector<double> accumU;
    std::vector<double> accumR;

    double final_accum_u() const { return accumU.back(); }
    double final_accum_r() const { return accumR.back(); }
};

// End state of an integration without the per-step record.
struct FinalState {
    ExpectedState state;
    double accumU = 0.0;
    double accumR = 0.0;
};

// Classical fixed-step RK4 on the augmented 2n+2 system. The final sample
// lands exactly on `horizon` (the last step is shortened when horizon/dt is
// not integral). States drifting outside [0,1] by at most 1e-9 are clamped;
// larger violations raise IntegrationError with the offending time.
Trajectory integrate(const ExpectedState& init, const URTUParams& params,
                     const DirectedGraph& gR, const DirectedGraph& gT,
                     double horizon, double dt);

// Same stepping, keeps only the end state. Bit-identical to integrate().
FinalState integrate_final(const ExpectedState& init, const URTUParams& params,
                           const DirectedGraph& gR, const DirectedGraph& gT,
                           double horizon, double dt);

// Step-size policy used whenever a caller does not pin dt.
double default_dt(double horizon);

// CSV with header t,R_0..R_{n-1},T_0..T_{n-1},accU,accR; 17 significant
// digits. meta_lines, if any, are emitted first as '#' comments.
std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<std::string>& meta_lines = {});
void save_trajectory_csv(const Trajectory& traj, const std::string& path,
                         const std::vector<std::string>& meta_lines = {});

}  // namespace rcsim
