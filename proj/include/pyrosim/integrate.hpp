#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pyrosim {

/// Scratch buffers for the vector Runge-Kutta step, reusable across steps.
struct Rk4Workspace {
    std::vector<double> k1, k2, k3, k4, stage;

    void resize(std::size_t n) {
        k1.resize(n);
        k2.resize(n);
        k3.resize(n);
        k4.resize(n);
        stage.resize(n);
    }
};

/// One classical fourth-order Runge-Kutta step for dy/dt = rhs(t, y, dydt).
/// `rhs` must write the derivative of `y` into its third argument; `y` and
/// `out` may alias. Fixed step, no error control.
template <typename Rhs>
void rk4_step(std::span<const double> y, double t, double dt, std::span<double> out,
              Rhs&& rhs, Rk4Workspace& ws) {
    const std::size_t n = y.size();
    ws.resize(n);

    rhs(t, y, std::span<double>(ws.k1));
    for (std::size_t i = 0; i < n; ++i) ws.stage[i] = y[i] + 0.5 * dt * ws.k1[i];
    rhs(t + 0.5 * dt, std::span<const double>(ws.stage), std::span<double>(ws.k2));
    for (std::size_t i = 0; i < n; ++i) ws.stage[i] = y[i] + 0.5 * dt * ws.k2[i];
    rhs(t + 0.5 * dt, std::span<const double>(ws.stage), std::span<double>(ws.k3));
    for (std::size_t i = 0; i < n; ++i) ws.stage[i] = y[i] + dt * ws.k3[i];
    rhs(t + dt, std::span<const double>(ws.stage), std::span<double>(ws.k4));

    for (std::size_t i = 0; i < n; ++i) {
        out[i] = y[i] + dt / 6.0 * (ws.k1[i] + 2.0 * (ws.k2[i] + ws.k3[i]) + ws.k4[i]);
    }
}

/// Scalar convenience overload for a single first-order equation.
template <typename Rhs>
double rk4_step_scalar(double y, double t, double dt, Rhs&& rhs) {
    const double k1 = rhs(t, y);
    const double k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1);
    const double k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2);
    const double k4 = rhs(t + dt, y + dt * k3);
    return y + dt / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
}

} // namespace pyrosim
