// SPDX-License-Identifier: Apache-2.0
//
// irsrank - link-level simulator for IRS-aided 2x2 LoS MIMO rank improvement
// Copyright (C) 2026 irsrank contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "irsrank/geometry.hpp"
#include "irsrank/pathloss.hpp"
#include "irsrank/scene.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

// High-SNR deployment analysis: under the aligned phases the rate tends to
// log2(P_tot^2 N^2 beta_c beta_bu Upsilon / sigma^4), where Upsilon depends
// only on the two angle sums below. Upsilon = 0 means the scattered and
// direct paths are spatially indistinguishable and the rank collapses.

namespace irsrank {

struct DeploymentObjective
{
    double upsilon = 0.0;        // (1 - cos 2pi(sum)) (1 - cos 2pi(diff)), in [0, 4]
    double omega_sum_bs = 0.0;   // omega_br_slope + omega_bs, closed form
    double omega_diff_ue = 0.0;  // omega_ru_slope - omega_ue, closed form
    double rate_high_snr = 0.0;  // [bits/s/Hz]; -inf when upsilon = 0
};

inline double upsilon_value(double omega_sum_bs, double omega_diff_ue)
{
    return (1.0 - std::cos(two_pi * omega_sum_bs)) * (1.0 - std::cos(two_pi * omega_diff_ue));
}

// The high-SNR rate with every factor explicit, so sweeps can hold beta_c
// fixed while scaling N.
inline double high_snr_rate(double p_tot_w, int n_elements, double beta_c_val,
                            double beta_bu_val, double upsilon, double noise_w)
{
    const double s4 = noise_w * noise_w;
    const double arg = p_tot_w * p_tot_w * static_cast<double>(n_elements)
                     * static_cast<double>(n_elements) * beta_c_val * beta_bu_val * upsilon / s4;
    if (arg <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return std::log2(arg);
}

// Evaluates the deployment objective from the closed-form angle sums (an
// independent route from the per-index slope functions; tests cross-check
// the two).
inline DeploymentObjective deployment_rate(const SceneConfig &cfg)
{
    cfg.validate();
    const double dbr = dist_br(cfg);
    const double dru = dist_ru(cfg);
    const double dbu = dist_bu(cfg);
    const auto &b = cfg.bs_position;
    const auto &u = cfg.ue_position;
    const double h = cfg.irs_height;

    const double st_t = std::sin(cfg.theta_t), ct_t = std::cos(cfg.theta_t);
    const double sp_t = std::sin(cfg.phi_t), cp_t = std::cos(cfg.phi_t);
    const double st_r = std::sin(cfg.theta_r), ct_r = std::cos(cfg.theta_r);
    const double sp_r = std::sin(cfg.phi_r), cp_r = std::cos(cfg.phi_r);

    DeploymentObjective obj;
    obj.omega_sum_bs = cfg.d_bs * st_t * sp_t * (b[0] / dbr + (b[0] - u[0]) / dbu)
                     + cfg.d_bs * st_t * cp_t * (b[1] / dbr + (b[1] - u[1]) / dbu)
                     + cfg.d_bs * ct_t * ((b[2] - h) / dbr + (b[2] - u[2]) / dbu);
    obj.omega_diff_ue = cfg.d_ue * st_r * sp_r * (u[0] / dru - (b[0] - u[0]) / dbu)
                      + cfg.d_ue * st_r * cp_r * (u[1] / dru - (b[1] - u[1]) / dbu)
                      + cfg.d_ue * ct_r * ((u[2] - h) / dru - (b[2] - u[2]) / dbu);
    obj.upsilon = upsilon_value(obj.omega_sum_bs, obj.omega_diff_ue);
    obj.rate_high_snr = high_snr_rate(cfg.p_tot_w(), cfg.element_count(), beta_c(cfg),
                                      beta_bu(cfg), obj.upsilon, cfg.noise_w());
    return obj;
}

enum class Axis
{
    x,
    y,
    z
};

struct LinesearchResult
{
    double position = 0.0;              // argmax coordinate [m]
    double rate = 0.0;                  // deployment rate at the argmax
    std::vector<double> skipped_points; // grid points outside model validity
};

namespace detail {

inline SceneConfig with_ue_coord(const SceneConfig &cfg, Axis axis, double value)
{
    SceneConfig c = cfg;
    c.ue_position[static_cast<std::size_t>(axis)] = value;
    return c;
}

} // namespace detail

// Exhaustive grid search over one UE coordinate, then golden-section
// refinement inside the winning bracket. The deployment objective is
// multimodal through its cosine factors, so a descent method alone is not
// trusted. Grid points with d_bu < 10 m are skipped (model validity) and
// reported, not clamped. Ties break toward lo; the refined point replaces
// the grid argmax only on strict improvement.
inline LinesearchResult ue_linesearch(const SceneConfig &cfg, Axis axis, double lo, double hi,
                                      double resolution)
{
    if (!(lo < hi))
        throw std::invalid_argument("linesearch needs lo < hi");
    if (!(resolution > 0.0))
        throw std::invalid_argument("linesearch resolution must be > 0");

    const auto value_at = [&](double pos) {
        return deployment_rate(detail::with_ue_coord(cfg, axis, pos)).rate_high_snr;
    };
    const auto feasible = [&](double pos) {
        return dist_bu(detail::with_ue_coord(cfg, axis, pos)) >= 10.0;
    };

    LinesearchResult result;
    const auto count = static_cast<long long>(std::floor((hi - lo) / resolution + 1e-9)) + 1;
    bool found = false;
    double best_pos = lo;
    double best_val = -std::numeric_limits<double>::infinity();
    for (long long k = 0; k < count; ++k) {
        const double pos = lo + static_cast<double>(k) * resolution;
        if (!feasible(pos)) {
            result.skipped_points.push_back(pos);
            continue;
        }
        const double val = value_at(pos);
        if (!found || val > best_val) {
            found = true;
            best_val = val;
            best_pos = pos;
        }
    }
    if (!found)
        throw std::runtime_error("linesearch range has no feasible points (d_bu >= 10 m)");

    // golden-section on [best - resolution, best + resolution]
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(lo, best_pos - resolution);
    double b = std::min(hi, best_pos + resolution);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    const auto safe_value = [&](double pos) {
        return feasible(pos) ? value_at(pos) : -std::numeric_limits<double>::infinity();
    };
    double f1 = safe_value(x1);
    double f2 = safe_value(x2);
    for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = safe_value(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = safe_value(x1);
        }
    }
    const double refined_pos = f1 >= f2 ? x1 : x2;
    const double refined_val = std::max(f1, f2);
    if (refined_val > best_val) {
        best_val = refined_val;
        best_pos = refined_pos;
    }

    result.position = best_pos;
    result.rate = best_val;
    return result;
}

} // namespace irsrank
