#include "rcsim/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "rcsim/errors.hpp"

namespace rcsim {

namespace {

constexpr double kStateTol = 1e-9;  // clamp-vs-error threshold

void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error(std::string(name) + " must be finite and nonnegative");
}

// Right-hand side of the augmented ODE. In-neighbor sums run j-ascending so
// results do not depend on thread count or evaluation order.
class UrtuSystem {
public:
    UrtuSystem(const URTUParams& p, const DirectedGraph& gR, const DirectedGraph& gT)
        : n_(gR.n()), p_(p) {
        if (gR.n() != gT.n())
            throw std::domain_error("rumor and truth networks must share the node set");
        build_csr(gR, rumor_in_, rumor_off_);
        build_csr(gT, truth_in_, truth_off_);
    }

    int n() const { return n_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(n_) + 2; }

    // y, dy: [R_0..R_{n-1}, T_0..T_{n-1}, accU, accR]
    void eval(const double* y, double* dy) const {
        const std::size_t n = static_cast<std::size_t>(n_);
        const double* R = y;
        const double* T = y + n;
        double accU = 0.0;
        double accR = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double rumor_in = 0.0;  // sum_j a_ji R_j
            for (std::size_t k = rumor_off_[i]; k < rumor_off_[i + 1]; ++k)
                rumor_in += R[rumor_in_[k]];
            double truth_in = 0.0;  // sum_j b_ji T_j
            for (std::size_t k = truth_off_[i]; k < truth_off_[i + 1]; ++k)
                truth_in += T[truth_in_[k]];

            const double Ri = R[i];
            const double Ti = T[i];
            const double Ui = 1.0 - Ri - Ti;
            dy[i] = p_.beta1 * Ui * rumor_in + p_.beta2 * Ti * rumor_in -
                    p_.gamma2 * Ri * truth_in - p_.delta * Ri;
            dy[n + i] = p_.gamma1 * Ui * truth_in + p_.gamma2 * Ri * truth_in -
                        p_.beta2 * Ti * rumor_in - p_.delta * Ti;
            accU += Ui * truth_in;
            accR += Ri * truth_in;
        }
        dy[2 * n] = accU;
        dy[2 * n + 1] = accR;
    }

private:
    static void build_csr(const DirectedGraph& g, std::vector<std::int32_t>& idx,
                          std::vector<std::size_t>& off) {
        const auto lists = g.in_lists();
        off.assign(lists.size() + 1, 0);
        for (std::size_t i = 0; i < lists.size(); ++i)
            off[i + 1] = off[i] + lists[i].size();
        idx.reserve(off.back());
        for (const auto& l : lists) idx.insert(idx.end(), l.begin(), l.end());
    }

    int n_;
    URTUParams p_;
    std::vector<std::int32_t> rumor_in_, truth_in_;
    std::vector<std::size_t> rumor_off_, truth_off_;
};

// One RK4 step of size h from y into ynext, using the caller's scratch
// buffers (k1..k4, mid), each of length dim.
void rk4_step(const UrtuSystem& sys, const double* y, double h, double* ynext,
              double* k1, double* k2, double* k3, double* k4, double* mid) {
    const std::size_t dim = sys.dim();
    sys.eval(y, k1);
    for (std::size_t i = 0; i < dim; ++i) mid[i] = y[i] + 0.5 * h * k1[i];
    sys.eval(mid, k2);
    for (std::size_t i = 0; i < dim; ++i) mid[i] = y[i] + 0.5 * h * k2[i];
    sys.eval(mid, k3);
    for (std::size_t i = 0; i < dim; ++i) mid[i] = y[i] + h * k3[i];
    sys.eval(mid, k4);
    for (std::size_t i = 0; i < dim; ++i)
        ynext[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

// Clamp roundoff-scale excursions outside [0,1]; anything larger means the
// step size is inadequate for the rates at hand.
void enforce_state_bounds(double* y, int n, double t) {
    for (int i = 0; i < 2 * n; ++i) {
        double& v = y[i];
        if (v < 0.0) {
            if (v < -kStateTol)
                throw IntegrationError(t, "state component " + std::to_string(i) +
                                              " = " + std::to_string(v) +
                                              " below 0 beyond tolerance (reduce dt)");
            v = 0.0;
        } else if (v > 1.0) {
            if (v > 1.0 + kStateTol)
                throw IntegrationError(t, "state component " + std::to_string(i) +
                                              " = " + std::to_string(v) +
                                              " above 1 beyond tolerance (reduce dt)");
            v = 1.0;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (y[i] + y[n + i] > 1.0 + kStateTol)
            throw IntegrationError(t, "R+T exceeds 1 beyond tolerance at node " +
                                          std::to_string(i) + " (reduce dt)");
    }
}

// Drives the stepper and hands (t, y) to the sink at t=0 and after every
// step. Both integrate() and integrate_final() go through here, so their
// arithmetic is identical.
template <typename Sink>
void run_integration(const ExpectedState& init, const URTUParams& params,
                     const DirectedGraph& gR, const DirectedGraph& gT, double horizon,
                     double dt, Sink&& sink) {
    params.validate();
    init.validate();
    if (init.n() != gR.n())
        throw std::domain_error("initial state dimension does not match the networks");
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::domain_error("horizon must be positive and finite");
    if (!(dt > 0.0) || dt > horizon)
        throw std::domain_error("dt must satisfy 0 < dt <= horizon");

    const UrtuSystem sys(params, gR, gT);
    const std::size_t dim = sys.dim();
    const int n = sys.n();

    std::vector<double> y(dim, 0.0), ynext(dim), k1(dim), k2(dim), k3(dim), k4(dim),
        mid(dim);
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = init.R[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(n + i)] = init.T[static_cast<std::size_t>(i)];

    sink(0.0, y.data());

    // Split [0, horizon] into whole steps plus a short tail. When horizon/dt
    // is integral to within roundoff the tail is dropped.
    const double ratio = horizon / dt;
    long long whole = static_cast<long long>(std::llround(ratio));
    bool integral = whole >= 1 &&
                    std::abs(static_cast<double>(whole) * dt - horizon) <=
                        1e-9 * std::max(1.0, horizon);
    if (!integral) whole = static_cast<long long>(std::floor(ratio));

    for (long long s = 0; s < whole; ++s) {
        const double t_next =
            (s + 1 == whole && integral) ? horizon : static_cast<double>(s + 1) * dt;
        rk4_step(sys, y.data(), dt, ynext.data(), k1.data(), k2.data(), k3.data(),
                 k4.data(), mid.data());
        y.swap(ynext);
        enforce_state_bounds(y.data(), n, t_next);
        sink(t_next, y.data());
    }
    if (!integral) {
        const double tail = horizon - static_cast<double>(whole) * dt;
        if (tail > 0.0) {
            rk4_step(sys, y.data(), tail, ynext.data(), k1.data(), k2.data(), k3.data(),
                     k4.data(), mid.data());
            y.swap(ynext);
            enforce_state_bounds(y.data(), n, horizon);
            sink(horizon, y.data());
        }
    }
}

}  // namespace

void URTUParams::validate() const {
    require_finite_nonneg(beta1, "beta1");
    require_finite_nonneg(beta2, "beta2");
    require_finite_nonneg(gamma1, "gamma1");
    require_finite_nonneg(gamma2, "gamma2");
    require_finite_nonneg(delta, "delta");
}

ExpectedState ExpectedState::uniform(int n, double r, double t) {
    if (n < 1) throw std::domain_error("state needs at least one node");
    ExpectedState s;
    s.R.assign(static_cast<std::size_t>(n), r);
    s.T.assign(static_cast<std::size_t>(n), t);
    s.validate();
    return s;
}

void ExpectedState::validate() const {
    if (R.size() != T.size()) throw std::domain_error("R and T must have equal length");
    if (R.empty()) throw std::domain_error("state must not be empty");
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (!std::isfinite(R[i]) || !std::isfinite(T[i]))
            throw std::domain_error("state entries must be finite");
        if (R[i] < 0.0 || T[i] < 0.0 || R[i] + T[i] > 1.0)
            throw std::domain_error("state must satisfy 0 <= R_i, T_i and R_i+T_i <= 1 at node " +
                                    std::to_string(i));
    }
}

Derivative derivative(const ExpectedState& state, const URTUParams& params,
                      const DirectedGraph& gR, const DirectedGraph& gT) {
    params.validate();
    state.validate();
    if (state.n() != gR.n() || gR.n() != gT.n())
        throw std::domain_error("state and network dimensions must agree");

    const UrtuSystem sys(params, gR, gT);
    const std::size_t n = static_cast<std::size_t>(sys.n());
    std::vector<double> y(sys.dim(), 0.0), dy(sys.dim());
    for (std::size_t i = 0; i < n; ++i) y[i] = state.R[i];
    for (std::size_t i = 0; i < n; ++i) y[n + i] = state.T[i];
    sys.eval(y.data(), dy.data());

    Derivative d;
    d.dR.assign(dy.begin(), dy.begin() + static_cast<std::ptrdiff_t>(n));
    d.dT.assign(dy.begin() + static_cast<std::ptrdiff_t>(n),
                dy.begin() + static_cast<std::ptrdiff_t>(2 * n));
    d.dAccU = dy[2 * n];
    d.dAccR = dy[2 * n + 1];
    return d;
}

Trajectory integrate(const ExpectedState& init, const URTUParams& params,
                     const DirectedGraph& gR, const DirectedGraph& gT, double horizon,
                     double dt) {
    Trajectory traj;
    const std::size_t n = static_cast<std::size_t>(init.n());
    run_integration(init, params, gR, gT, horizon, dt, [&](double t, const double* y) {
        traj.times.push_back(t);
        ExpectedState s;
        s.R.assign(y, y + n);
        s.T.assign(y + n, y + 2 * n);
        traj.states.push_back(std::move(s));
        traj.accumU.push_back(y[2 * n]);
        traj.accumR.push_back(y[2 * n + 1]);
    });
    return traj;
}

FinalState integrate_final(const ExpectedState& init, const URTUParams& params,
                           const DirectedGraph& gR, const DirectedGraph& gT,
                           double horizon, double dt) {
    const std::size_t n = static_cast<std::size_t>(init.n());
    FinalState out;
    std::vector<double> y_last;
    run_integration(init, params, gR, gT, horizon, dt, [&](double, const double* y) {
        y_last.assign(y, y + 2 * n + 2);
    });
    out.state.R.assign(y_last.begin(), y_last.begin() + static_cast<std::ptrdiff_t>(n));
    out.state.T.assign(y_last.begin() + static_cast<std::ptrdiff_t>(n),
                       y_last.begin() + static_cast<std::ptrdiff_t>(2 * n));
    out.accumU = y_last[2 * n];
    out.accumR = y_last[2 * n + 1];
    return out;
}

double default_dt(double horizon) {
    if (!(horizon > 0.0)) throw std::domain_error("horizon must be positive");
    return std::min(0.01, horizon / 1000.0);
}

std::string trajectory_csv(const Trajectory& traj, const std::vector<std::string>& meta_lines) {
    if (traj.times.empty()) throw std::domain_error("empty trajectory");
    const int n = traj.states.front().n();

    std::string out;
    for (const auto& m : meta_lines) out += "# " + m + "\n";
    out += "t";
    for (int i = 0; i < n; ++i) out += ",R_" + std::to_string(i);
    for (int i = 0; i < n; ++i) out += ",T_" + std::to_string(i);
    out += ",accU,accR\n";

    char buf[64];
    auto append = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
    };
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        append(traj.times[s]);
        const ExpectedState& st = traj.states[s];
        for (int i = 0; i < n; ++i) {
            out += ',';
            append(st.R[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i < n; ++i) {
            out += ',';
            append(st.T[static_cast<std::size_t>(i)]);
        }
        out += ',';
        append(traj.accumU[s]);
        out += ',';
        append(traj.accumR[s]);
        out += '\n';
    }
    return out;
}

void save_trajectory_csv(const Trajectory& traj, const std::string& path,
                         const std::vector<std::string>& meta_lines) {
    std::ofstream f(path);
    if (!f) throw ParseError(path, 0, "cannot open file for writing");
    f << trajectory_csv(traj, meta_lines);
    if (!f) throw ParseError(path, 0, "write failed");
}

}  // namespace rcsim
