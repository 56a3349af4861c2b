#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pyrosim/electrical.hpp"
#include "pyrosim/errors.hpp"

namespace pyrosim {

/// Measured (x, y) samples with strictly increasing x.
struct DataSet {
    std::vector<double> x;
    std::vector<double> y;
    std::string x_label;
    std::string y_label;
};

struct FitResult {
    std::vector<std::pair<std::string, double>> params;
    double residual_rms = 0.0;
    double r_squared = 1.0;

    double param(std::string_view name) const {
        for (const auto& [key, value] : params) {
            if (key == name) return value;
        }
        throw FitError("fit result has no parameter named '" + std::string(name) + "'");
    }
};

inline void validate(const DataSet& data, std::size_t min_points) {
    if (data.x.size() != data.y.size()) {
        throw FitError("dataset: x and y lengths differ");
    }
    if (data.x.size() < min_points) {
        throw FitError("dataset: needs at least " + std::to_string(min_points) +
                       " points, got " + std::to_string(data.x.size()));
    }
    for (std::size_t i = 1; i < data.x.size(); ++i) {
        if (!(data.x[i] > data.x[i - 1])) {
            throw FitError("dataset: x values must be strictly increasing");
        }
    }
}

namespace detail {

inline double sum_squares(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
}

inline void finish_fit_stats(FitResult& fit, const std::vector<double>& y,
                             const std::vector<double>& residuals) {
    const double n = static_cast<double>(y.size());
    const double sse = sum_squares(residuals);
    fit.residual_rms = std::sqrt(sse / n);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= n;
    double sst = 0.0;
    for (double v : y) sst += (v - mean) * (v - mean);
    fit.r_squared = sst > 0.0 ? 1.0 - sse / sst : 1.0;
}

/// Solve a small symmetric linear system in place by Gaussian elimination
/// with partial pivoting.
template <std::size_t N>
std::array<double, N> solve_dense(std::array<std::array<double, N>, N> a,
                                  std::array<double, N> b) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < N; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-300) {
            throw FitError("fit: singular normal equations");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < N; ++row) {
            const double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < N; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::array<double, N> x{};
    for (std::size_t i = N; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < N; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace detail

/// Ordinary least squares line y = slope*x + intercept. Exact on affine data.
inline FitResult fit_linear(const DataSet& data) {
    validate(data, 2);
    const std::size_t n = data.x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += data.x[i];
        my += data.y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (data.x[i] - mx) * (data.x[i] - mx);
        sxy += (data.x[i] - mx) * (data.y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw FitError("fit_linear: needs at least 2 distinct x values");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    FitResult fit;
    fit.params = {{"slope", slope}, {"intercept", intercept}};
    std::vector<double> residuals(n);
    for (std::size_t i = 0; i < n; ++i) {
        residuals[i] = data.y[i] - (slope * data.x[i] + intercept);
    }
    detail::finish_fit_stats(fit, data.y, residuals);
    return fit;
}

/// Saturating exponential y = a * (1 - exp(-(x - x0)/b)), fitted by damped
/// Gauss-Newton with a forward-difference Jacobian. The iteration is fully
/// pinned for reproducibility: initial guess a = max(y), x0 = min(x),
/// b = span(x)/3; relative Jacobian perturbation 1e-6; on a residual increase
/// the step is halved up to 30 times; at most 200 iterations.
inline FitResult fit_saturating_exponential(const DataSet& data) {
    validate(data, 3);
    const std::size_t n = data.x.size();

    const auto model = [](double x, const std::array<double, 3>& p) {
        return p[0] * (1.0 - std::exp(-(x - p[2]) / p[1]));
    };
    const auto residuals_of = [&](const std::array<double, 3>& p, std::vector<double>& r) {
        for (std::size_t i = 0; i < n; ++i) r[i] = data.y[i] - model(data.x[i], p);
    };

    std::array<double, 3> theta{
        *std::max_element(data.y.begin(), data.y.end()),
        (data.x.back() - data.x.front()) / 3.0,
        data.x.front(),
    };

    std::vector<double> residual(n), trial_residual(n), probe(n);
    residuals_of(theta, residual);
    double sse = detail::sum_squares(residual);

    double y_scale = 0.0;
    for (double v : data.y) y_scale = std::max(y_scale, std::abs(v));
    const double sse_floor = 1e-30 * std::max(y_scale * y_scale, 1e-300);

    constexpr int max_iterations = 200;
    constexpr int max_halvings = 30;
    constexpr double jacobian_perturbation = 1e-6;

    for (int iter = 0; iter < max_iterations; ++iter) {
        if (sse <= sse_floor) break;

        // Forward-difference Jacobian of the model, J[i][k] = d model_i / d theta_k.
        std::array<std::vector<double>, 3> jac;
        for (std::size_t k = 0; k < 3; ++k) {
            jac[k].resize(n);
            std::array<double, 3> bumped = theta;
            const double h = jacobian_perturbation * std::max(std::abs(theta[k]), 1e-12);
            bumped[k] += h;
            residuals_of(bumped, probe);
            for (std::size_t i = 0; i < n; ++i) {
                jac[k][i] = (residual[i] - probe[i]) / h; // = d model / d theta_k
            }
        }

        std::array<std::array<double, 3>, 3> jtj{};
        std::array<double, 3> jtr{};
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a; b < 3; ++b) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += jac[a][i] * jac[b][i];
                jtj[a][b] = jtj[b][a] = s;
            }
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += jac[a][i] * residual[i];
            jtr[a] = s;
        }

        const auto delta = detail::solve_dense<3>(jtj, jtr);

        double lambda = 1.0;
        bool accepted = false;
        std::array<double, 3> trial{};
        double trial_sse = 0.0;
        for (int halving = 0; halving <= max_halvings; ++halving) {
            for (std::size_t k = 0; k < 3; ++k) trial[k] = theta[k] + lambda * delta[k];
            residuals_of(trial, trial_residual);
            trial_sse = detail::sum_squares(trial_residual);
            if (std::isfinite(trial_sse) && trial_sse <= sse) {
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) {
            // No descent direction left: accept the current point as converged
            // only if the gradient already vanished, else report failure.
            double grad = 0.0;
            for (std::size_t k = 0; k < 3; ++k) grad = std::max(grad, std::abs(jtr[k]));
            if (grad <= 1e-12 * std::max(1.0, sse)) break;
            std::ostringstream msg;
            msg << "fit_saturating_exponential: no acceptable step after " << max_halvings
                << " halvings (residual rms " << std::sqrt(sse / static_cast<double>(n)) << ")";
            throw FitError(msg.str());
        }

        double step_size = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            step_size = std::max(step_size, std::abs(lambda * delta[k]) /
                                                std::max(std::abs(theta[k]), 1e-12));
        }
        theta = trial;
        residual = trial_residual;
        const double improvement = sse - trial_sse;
        sse = trial_sse;
        if (step_size < 1e-14 || improvement <= 1e-15 * std::max(sse, sse_floor)) break;

        if (iter + 1 == max_iterations) {
            std::ostringstream msg;
            msg << "fit_saturating_exponential: no convergence after " << max_iterations
                << " iterations (residual rms " << std::sqrt(sse / static_cast<double>(n))
                << ")";
            throw FitError(msg.str());
        }
    }

    FitResult fit;
    fit.params = {{"amplitude", theta[0]}, {"rate", theta[1]}, {"offset", theta[2]}};
    detail::finish_fit_stats(fit, data.y, residual);
    return fit;
}

/// Leak resistance at which the peak pyro current sustains v_max:
/// R = v_max / (p * A * dtdt_peak).
inline double infer_leak_resistance(double v_max, const CrystalSpec& crystal,
                                    double dtdt_peak) {
    if (!(dtdt_peak > 0.0)) {
        throw FitError("infer_leak_resistance: dtdt_peak must be > 0");
    }
    return v_max / pyro_current(crystal, dtdt_peak);
}

/// Quadratic actuator coefficient from one measured (displacement, voltage)
/// point: k = displacement / voltage^2.
inline double calibrate_actuator(double displacement, double voltage) {
    if (voltage == 0.0) {
        throw FitError("calibrate_actuator: voltage must be nonzero");
    }
    return displacement / (voltage * voltage);
}

} // namespace pyrosim
