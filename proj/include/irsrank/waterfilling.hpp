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

#include "irsrank/pathloss.hpp"
#include "irsrank/scene.hpp"
#include "irsrank/spectral.hpp"

#include <cmath>
#include <stdexcept>

// Waterfilling power allocation P_j = (mu - sigma^2 / lambda_j^2)^+ across
// the two eigenchannels, with mu fixed by P_1 + P_2 = P_tot, and the
// resulting spectral efficiency sum_j log2(1 + P_j lambda_j^2 / sigma^2).

namespace irsrank {

struct RateReport
{
    double p1 = 0.0;          // power on the stronger stream [W]
    double p2 = 0.0;          // power on the weaker stream [W]
    double mu = 0.0;          // water level [W]
    double rate_bps_hz = 0.0; // achieved spectral efficiency [bits/s/Hz]
    int streams_active = 0;   // 1 or 2
};

inline RateReport waterfill(const SpectralResult &sp, double p_tot_w, double sigma_sq_w)
{
    if (!(p_tot_w > 0.0) || !std::isfinite(p_tot_w))
        throw std::invalid_argument("total power must be positive and finite");
    if (!(sigma_sq_w > 0.0) || !std::isfinite(sigma_sq_w))
        throw std::invalid_argument("noise power must be positive and finite");
    const double l1 = sp.lambda1_sq;
    const double l2 = sp.lambda2_sq;
    if (!(l1 >= l2) || !(l2 >= 0.0) || !std::isfinite(l1))
        throw std::invalid_argument("eigenvalues must satisfy lambda1^2 >= lambda2^2 >= 0");
    if (l1 == 0.0)
        throw std::domain_error("zero channel: no stream can carry power");

    RateReport r;
    // Try both streams; fall back to one when the weaker stream would get
    // negative power. The all-active closed form alone fails at low SNR.
    if (l2 > 0.0) {
        const double mu = 0.5 * (p_tot_w + sigma_sq_w / l1 + sigma_sq_w / l2);
        const double p2 = mu - sigma_sq_w / l2;
        if (p2 > 0.0) {
            r.mu = mu;
            r.p1 = mu - sigma_sq_w / l1;
            r.p2 = p2;
            r.streams_active = 2;
            r.rate_bps_hz = std::log2(1.0 + r.p1 * l1 / sigma_sq_w)
                          + std::log2(1.0 + r.p2 * l2 / sigma_sq_w);
            return r;
        }
    }
    r.p1 = p_tot_w;
    r.p2 = 0.0;
    r.mu = p_tot_w + sigma_sq_w / l1;
    r.streams_active = 1;
    r.rate_bps_hz = std::log2(1.0 + p_tot_w * l1 / sigma_sq_w);
    return r;
}

// Direct transmission: the rank-1 BS->UE channel has singular values
// (2 sqrt(beta_bu), 0), so all power goes to the single stream.
inline RateReport rate_direct(const SceneConfig &cfg)
{
    SpectralResult sp;
    sp.lambda1_sq = 4.0 * beta_bu(cfg);
    sp.lambda2_sq = 0.0;
    sp.b_coef = -sp.lambda1_sq;
    sp.c_coef = 0.0;
    return waterfill(sp, cfg.p_tot_w(), cfg.noise_w());
}

// High-SNR two-stream approximation
// log2((P_tot^2 c - 2 sigma^2 P_tot b) / (4 sigma^4)); requires both
// eigenchannels to be usable.
inline double rate_high_snr(const SpectralResult &sp, double p_tot_w, double sigma_sq_w)
{
    if (!(sp.lambda2_sq > 0.0))
        throw std::domain_error("high-SNR approximation needs both eigenvalues > 0");
    const double s4 = sigma_sq_w * sigma_sq_w;
    return std::log2((p_tot_w * p_tot_w * sp.c_coef - 2.0 * sigma_sq_w * p_tot_w * sp.b_coef)
                     / (4.0 * s4));
}

} // namespace irsrank
