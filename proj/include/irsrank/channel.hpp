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
#include "irsrank/mat2.hpp"
#include "irsrank/pathloss.hpp"
#include "irsrank/scene.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace irsrank {

// Per-element reflection phases, radians in [0, 2*pi), plus the common
// scattering amplitude (1 unless overridden).
struct PhaseProfile
{
    std::vector<double> phases;
    double amplitude = 1.0;
};

// Reduce an angle into [0, 2*pi).
inline double wrap_two_pi(double x)
{
    double r = std::fmod(x, two_pi);
    if (r < 0.0)
        r += two_pi;
    if (r >= two_pi)
        r = 0.0;
    return r;
}

// Two-antenna steering vector [1, e^{j 2 pi omega}].
inline std::array<cd, 2> steering(double omega)
{
    return {cd(1.0, 0.0), std::polar(1.0, two_pi * omega)};
}

// The three LoS channel matrices of one scenario, plus the pathloss gains
// needed to compose the end-to-end channel. Immutable after construction.
struct ChannelSet
{
    int n = 0;              // number of IRS elements
    std::vector<cd> h_br;   // BS -> IRS, N x 2 row-major, unit-modulus entries
    std::vector<cd> h_ru;   // IRS -> UE, 2 x N row-major, unit-modulus entries
    Mat2 h_bu;              // direct BS -> UE channel (rank 1)
    double beta_c = 0.0;    // scattered-path gain (applied in compose())
    double beta_bu = 0.0;   // direct-path gain (already inside h_bu)

    // 1-based accessors matching the element / antenna numbering.
    const cd &br(int i, int s) const { return h_br[static_cast<std::size_t>(i - 1) * 2 + (s - 1)]; }
    const cd &ru(int l, int i) const { return h_ru[static_cast<std::size_t>(l - 1) * n + (i - 1)]; }
};

// Builds the normalized channel matrices from the deployment geometry:
// [h_br]_{i,s} = e^{j 2 pi d_br / lambda} e^{j 2 pi omega_br(i,s)},
// [h_ru]_{l,i} = e^{j 2 pi d_ru / lambda} e^{j 2 pi omega_ru(l,i)},
// h_bu = sqrt(beta_bu) e^{j 2 pi d_bu / lambda} a_ue a_bs^H.
inline ChannelSet build_channels(const SceneConfig &cfg)
{
    cfg.validate();
    const int n = cfg.element_count();
    ChannelSet ch;
    ch.n = n;
    ch.beta_c = beta_c(cfg);
    ch.beta_bu = beta_bu(cfg);

    const double lam = cfg.wavelength();
    const cd pre_br = std::polar(1.0, two_pi * dist_br(cfg) / lam);
    const cd pre_ru = std::polar(1.0, two_pi * dist_ru(cfg) / lam);

    ch.h_br.resize(static_cast<std::size_t>(n) * 2);
    ch.h_ru.resize(static_cast<std::size_t>(n) * 2);
    for (int i = 1; i <= n; ++i) {
        for (int s = 1; s <= 2; ++s)
            ch.h_br[static_cast<std::size_t>(i - 1) * 2 + (s - 1)] =
                pre_br * std::polar(1.0, two_pi * omega_br(i, s, cfg));
        for (int l = 1; l <= 2; ++l)
            ch.h_ru[static_cast<std::size_t>(l - 1) * n + (i - 1)] =
                pre_ru * std::polar(1.0, two_pi * omega_ru(l, i, cfg));
    }

    const auto a_bs = steering(omega_bs(cfg));
    const auto a_ue = steering(omega_ue(cfg));
    const cd pre_bu = std::sqrt(ch.beta_bu) * std::polar(1.0, two_pi * dist_bu(cfg) / lam);
    for (int l = 0; l < 2; ++l)
        for (int s = 0; s < 2; ++s)
            ch.h_bu(l, s) = pre_bu * a_ue[l] * std::conj(a_bs[s]);

    return ch;
}

// Effective end-to-end channel for one phase profile:
// H = sqrt(beta_c) * h_ru * diag(alpha e^{j phi_i}) * h_br + h_bu.
inline Mat2 compose(const ChannelSet &ch, const PhaseProfile &prof)
{
    if (static_cast<int>(prof.phases.size()) != ch.n)
        throw std::invalid_argument("phase profile length does not match the element count");
    if (!(prof.amplitude > 0.0) || prof.amplitude > 1.0)
        throw std::invalid_argument("scattering amplitude must lie in (0, 1]");

    const double scale = std::sqrt(ch.beta_c) * prof.amplitude;
    Mat2 h = ch.h_bu;
    for (int i = 1; i <= ch.n; ++i) {
        const cd refl = scale * std::polar(1.0, prof.phases[static_cast<std::size_t>(i - 1)]);
        for (int l = 1; l <= 2; ++l) {
            const cd left = ch.ru(l, i) * refl;
            h(l - 1, 0) += left * ch.br(i, 1);
            h(l - 1, 1) += left * ch.br(i, 2);
        }
    }
    return h;
}

} // namespace irsrank
