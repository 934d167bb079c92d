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

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irsrank {

inline constexpr double speed_of_light_mps = 299792458.0;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Decibel helpers. Power quantities only.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3 &v)
{
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline Vec3 sub3(const Vec3 &a, const Vec3 &b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// Full physical scenario of one BS / IRS / UE deployment.
//
// The IRS element (1,1) sits at (0, 0, irs_height) on the yz-plane; the
// surface extends towards +y (index m, n_y elements) and +z (index n, n_z
// elements). Defaults reproduce the running example: BS (120,120,12) m,
// UE (5,-5,1.5) m, IRS at 2 m height, broadside ULAs, 5 GHz carrier,
// 10 dBm transmit power, -94 dBm noise, 3 dBi antenna gains.
struct SceneConfig
{
    Vec3 bs_position{120.0, 120.0, 12.0}; // BS antenna 1 (x_b, y_b, z_b) [m]
    Vec3 ue_position{5.0, -5.0, 1.5};     // UE antenna 1 (x_u, y_u, z_u) [m]
    double irs_height = 2.0;              // z-coordinate of IRS element (1,1) [m]

    int n_y = 10; // IRS element count along y
    int n_z = 5;  // IRS element count along z

    double d_bs = 0.5;  // BS ULA spacing [wavelengths]
    double d_ue = 0.5;  // UE ULA spacing [wavelengths]
    double d_irs = 0.25; // IRS element pitch [wavelengths]

    double theta_t = std::numbers::pi / 2.0; // BS elevation [rad]
    double phi_t = 0.0;                      // BS azimuth [rad]
    double theta_r = std::numbers::pi / 2.0; // UE elevation [rad]
    double phi_r = 0.0;                      // UE azimuth [rad]

    double carrier_hz = 5.0e9; // carrier frequency f_c [Hz]

    double p_tot_dbm = 10.0;  // total transmit power [dBm]
    double noise_dbm = -94.0; // receiver noise power [dBm]

    double gain_tx_dbi = 3.0; // BS antenna gain [dBi]
    double gain_rx_dbi = 3.0; // UE antenna gain [dBi]

    double wavelength() const { return speed_of_light_mps / carrier_hz; }
    int element_count() const { return n_y * n_z; }
    double p_tot_w() const { return dbm_to_watts(p_tot_dbm); }
    double noise_w() const { return dbm_to_watts(noise_dbm); }

    // Throws std::invalid_argument naming the offending field.
    void validate() const
    {
        if (n_y < 1)
            throw std::invalid_argument("n_y must be >= 1");
        if (n_z < 1)
            throw std::invalid_argument("n_z must be >= 1");
        if (!(d_bs > 0.0))
            throw std::invalid_argument("d_bs must be > 0");
        if (!(d_ue > 0.0))
            throw std::invalid_argument("d_ue must be > 0");
        if (!(d_irs > 0.0))
            throw std::invalid_argument("d_irs must be > 0");
        if (!(carrier_hz > 0.0))
            throw std::invalid_argument("carrier_hz must be > 0");

        const Vec3 irs_ref{0.0, 0.0, irs_height};
        if (!(norm3(sub3(bs_position, irs_ref)) > 0.0))
            throw std::invalid_argument("BS and IRS positions coincide");
        if (!(norm3(sub3(ue_position, irs_ref)) > 0.0))
            throw std::invalid_argument("UE and IRS positions coincide");
        if (!(norm3(sub3(bs_position, ue_position)) > 0.0))
            throw std::invalid_argument("BS and UE positions coincide");
    }
};

} // namespace irsrank
