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

#include "irsrank/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

// 3-D deployment geometry: antenna/element positions, the three inter-node
// distances and all dimensionless phase-slope terms (stored in cycles; a
// propagation phase is formed as 2*pi*Omega at the use site).
//
// All indices are 1-based, matching the element numbering (m, n) on the
// surface grid and the linearization i = (m-1)*n_z + n.

namespace irsrank {

// Linear element index from grid coordinates.
inline int element_index(int m, int n, int n_z) { return (m - 1) * n_z + n; }

// Grid coordinates (m, n) of linear element index i.
inline std::pair<int, int> element_grid_coords(int i, int n_z)
{
    const int m = (i - 1) / n_z + 1;
    const int n = i - (m - 1) * n_z;
    return {m, n};
}

namespace detail {

inline void check_element_index(int i, const SceneConfig &cfg)
{
    if (i < 1 || i > cfg.element_count())
        throw std::out_of_range("IRS element index out of range");
}

inline void check_antenna_index(int k)
{
    if (k < 1 || k > 2)
        throw std::out_of_range("antenna index out of range (arrays have 2 antennas)");
}

} // namespace detail

// First-element distances.
inline double dist_br(const SceneConfig &cfg)
{
    const auto &b = cfg.bs_position;
    return std::sqrt(b[0] * b[0] + b[1] * b[1] + (b[2] - cfg.irs_height) * (b[2] - cfg.irs_height));
}

inline double dist_ru(const SceneConfig &cfg)
{
    const auto &u = cfg.ue_position;
    return std::sqrt(u[0] * u[0] + u[1] * u[1] + (u[2] - cfg.irs_height) * (u[2] - cfg.irs_height));
}

inline double dist_bu(const SceneConfig &cfg)
{
    return norm3(sub3(cfg.bs_position, cfg.ue_position));
}

// Position of IRS element (m, n): (0, (m-1) d_irs lambda, h + (n-1) d_irs lambda).
inline Vec3 irs_element_position(int m, int n, const SceneConfig &cfg)
{
    if (m < 1 || m > cfg.n_y)
        throw std::out_of_range("IRS element row index m out of range");
    if (n < 1 || n > cfg.n_z)
        throw std::out_of_range("IRS element column index n out of range");
    const double pitch = cfg.d_irs * cfg.wavelength();
    return {0.0, (m - 1) * pitch, cfg.irs_height + (n - 1) * pitch};
}

// ULA offset direction set by orientation angles (theta, phi).
inline Vec3 ula_direction(double theta, double phi)
{
    return {std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), std::cos(theta)};
}

inline Vec3 bs_antenna_position(int s, const SceneConfig &cfg)
{
    detail::check_antenna_index(s);
    const Vec3 dir = ula_direction(cfg.theta_t, cfg.phi_t);
    const double step = (s - 1) * cfg.d_bs * cfg.wavelength();
    return {cfg.bs_position[0] + step * dir[0], cfg.bs_position[1] + step * dir[1],
            cfg.bs_position[2] + step * dir[2]};
}

inline Vec3 ue_antenna_position(int l, const SceneConfig &cfg)
{
    detail::check_antenna_index(l);
    const Vec3 dir = ula_direction(cfg.theta_r, cfg.phi_r);
    const double step = (l - 1) * cfg.d_ue * cfg.wavelength();
    return {cfg.ue_position[0] + step * dir[0], cfg.ue_position[1] + step * dir[1],
            cfg.ue_position[2] + step * dir[2]};
}

// BS->IRS phase slope for element i and BS antenna s. Omega_br(1,1) = 0.
inline double omega_br(int i, int s, const SceneConfig &cfg)
{
    detail::check_element_index(i, cfg);
    detail::check_antenna_index(s);
    const auto [m, n] = element_grid_coords(i, cfg.n_z);
    const auto &b = cfg.bs_position;
    const double st = std::sin(cfg.theta_t), ct = std::cos(cfg.theta_t);
    const double sp = std::sin(cfg.phi_t), cp = std::cos(cfg.phi_t);
    return ((s - 1) * b[0] * cfg.d_bs * st * sp
            + b[1] * ((s - 1) * cfg.d_bs * st * cp - (m - 1) * cfg.d_irs)
            + (b[2] - cfg.irs_height) * ((s - 1) * cfg.d_bs * ct - (n - 1) * cfg.d_irs))
           / dist_br(cfg);
}

// IRS->UE phase slope for UE antenna l and element i. Omega_ru(1,1) = 0.
inline double omega_ru(int l, int i, const SceneConfig &cfg)
{
    detail::check_antenna_index(l);
    detail::check_element_index(i, cfg);
    const auto [m, n] = element_grid_coords(i, cfg.n_z);
    const auto &u = cfg.ue_position;
    const double st = std::sin(cfg.theta_r), ct = std::cos(cfg.theta_r);
    const double sp = std::sin(cfg.phi_r), cp = std::cos(cfg.phi_r);
    return ((l - 1) * u[0] * cfg.d_ue * st * sp
            + u[1] * ((l - 1) * cfg.d_ue * st * cp - (m - 1) * cfg.d_irs)
            + (u[2] - cfg.irs_height) * ((l - 1) * cfg.d_ue * ct - (n - 1) * cfg.d_irs))
           / dist_ru(cfg);
}

// Direct-path steering slope at the BS.
inline double omega_bs(const SceneConfig &cfg)
{
    const double d = dist_bu(cfg);
    if (!(d > 0.0))
        throw std::domain_error("degenerate geometry: BS and UE coincide");
    const Vec3 delta = sub3(cfg.bs_position, cfg.ue_position);
    const double st = std::sin(cfg.theta_t), ct = std::cos(cfg.theta_t);
    const double sp = std::sin(cfg.phi_t), cp = std::cos(cfg.phi_t);
    return (delta[0] * cfg.d_bs * st * sp + delta[1] * cfg.d_bs * st * cp + delta[2] * cfg.d_bs * ct) / d;
}

// Direct-path steering slope at the UE.
inline double omega_ue(const SceneConfig &cfg)
{
    const double d = dist_bu(cfg);
    if (!(d > 0.0))
        throw std::domain_error("degenerate geometry: BS and UE coincide");
    const Vec3 delta = sub3(cfg.bs_position, cfg.ue_position);
    const double st = std::sin(cfg.theta_r), ct = std::cos(cfg.theta_r);
    const double sp = std::sin(cfg.phi_r), cp = std::cos(cfg.phi_r);
    return (delta[0] * cfg.d_ue * st * sp + delta[1] * cfg.d_ue * st * cp + delta[2] * cfg.d_ue * ct) / d;
}

// Antenna-index slope of the BS->IRS phases: omega_br(i,2) - omega_br(i,1),
// the same constant for every element i.
inline double omega_br_slope(const SceneConfig &cfg)
{
    const auto &b = cfg.bs_position;
    const double st = std::sin(cfg.theta_t), ct = std::cos(cfg.theta_t);
    const double sp = std::sin(cfg.phi_t), cp = std::cos(cfg.phi_t);
    return cfg.d_bs * (b[0] * st * sp + b[1] * st * cp + (b[2] - cfg.irs_height) * ct) / dist_br(cfg);
}

// Antenna-index slope of the IRS->UE phases: omega_ru(2,i) - omega_ru(1,i).
inline double omega_ru_slope(const SceneConfig &cfg)
{
    const auto &u = cfg.ue_position;
    const double st = std::sin(cfg.theta_r), ct = std::cos(cfg.theta_r);
    const double sp = std::sin(cfg.phi_r), cp = std::cos(cfg.phi_r);
    return cfg.d_ue * (u[0] * st * sp + u[1] * st * cp + (u[2] - cfg.irs_height) * ct) / dist_ru(cfg);
}

struct GeometrySummary
{
    double d_br = 0.0; // BS -> IRS first-element distance [m]
    double d_ru = 0.0; // IRS -> UE first-element distance [m]
    double d_bu = 0.0; // BS -> UE first-antenna distance [m]
    double omega_bs = 0.0;       // direct-path slope at the BS [cycles]
    double omega_ue = 0.0;       // direct-path slope at the UE [cycles]
    double omega_br_slope = 0.0; // BS-antenna slope of the BS->IRS phases [cycles]
    double omega_ru_slope = 0.0; // UE-antenna slope of the IRS->UE phases [cycles]
};

inline GeometrySummary summarize(const SceneConfig &cfg)
{
    cfg.validate();
    GeometrySummary g;
    g.d_br = dist_br(cfg);
    g.d_ru = dist_ru(cfg);
    g.d_bu = dist_bu(cfg);
    g.omega_bs = omega_bs(cfg);
    g.omega_ue = omega_ue(cfg);
    g.omega_br_slope = omega_br_slope(cfg);
    g.omega_ru_slope = omega_ru_slope(cfg);
    return g;
}

} // namespace irsrank
