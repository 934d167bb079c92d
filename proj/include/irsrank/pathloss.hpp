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
#include "irsrank/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsrank {

struct PathlossPair
{
    double beta_bu = 0.0; // direct-path power gain, linear
    double beta_c = 0.0;  // scattered-path power gain, linear
};

// Direct-path gain, UMi street-canyon LoS model:
// dB = -41.97 - 22 log10(d_bu) + G_t + G_r, valid for d_bu >= 10 m.
inline double beta_bu(const SceneConfig &cfg)
{
    const double d = dist_bu(cfg);
    if (d < 10.0)
        throw std::domain_error("direct pathloss model is defined for d_bu >= 10 m");
    const double db = -41.97 - 22.0 * std::log10(d) + cfg.gain_tx_dbi + cfg.gain_rx_dbi;
    return db_to_linear(db);
}

// Surface dimensions: a along z (n_z elements), b along y (n_y elements).
inline double surface_height_m(const SceneConfig &cfg) { return cfg.n_z * cfg.d_irs * cfg.wavelength(); }
inline double surface_width_m(const SceneConfig &cfg) { return cfg.n_y * cfg.d_irs * cfg.wavelength(); }

// Angle of arrival to the surface, measured in the xy-plane from the surface
// normal (+x). Named to avoid colliding with the per-element phases.
inline double incidence_angle(const SceneConfig &cfg)
{
    if (!(cfg.bs_position[0] > 0.0))
        throw std::domain_error("incidence angle requires the BS in front of the surface (x_b > 0)");
    return std::atan(cfg.bs_position[1] / cfg.bs_position[0]);
}

// Scattered-path gain for the full a x b aperture:
// beta_c = G_t G_r / (4 pi)^2 * (a b / (d_br d_ru))^2 * cos^2(incidence).
inline double beta_c(const SceneConfig &cfg)
{
    const double gt = db_to_linear(cfg.gain_tx_dbi);
    const double gr = db_to_linear(cfg.gain_rx_dbi);
    const double a = surface_height_m(cfg);
    const double b = surface_width_m(cfg);
    const double dbr = dist_br(cfg);
    const double dru = dist_ru(cfg);
    if (!(dbr > 0.0) || !(dru > 0.0))
        throw std::domain_error("degenerate geometry: zero propagation distance");
    const double c = std::cos(incidence_angle(cfg));
    const double aperture = a * b / (dbr * dru);
    return gt * gr / ((4.0 * std::numbers::pi) * (4.0 * std::numbers::pi)) * aperture * aperture * c * c;
}

inline PathlossPair pathloss(const SceneConfig &cfg)
{
    return {beta_bu(cfg), beta_c(cfg)};
}

// Far-field validity of the aperture model: x_b and y_b must dwarf the
// surface dimensions. Checked, not enforced; callers decide how to report.
inline bool surface_far_field_ok(const SceneConfig &cfg)
{
    const double ext = std::max(surface_height_m(cfg), surface_width_m(cfg));
    return cfg.bs_position[0] >= 10.0 * ext && cfg.bs_position[1] >= 10.0 * ext;
}

} // namespace irsrank
