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

#include "irsrank/mat2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

// Closed-form spectral analysis of complex 2x2 channels. The eigenvalues of
// H H^H are the roots of x^2 + b x + c with b = -tr(H H^H) and c = |det H|^2.

namespace irsrank {

struct SpectralResult
{
    double lambda1_sq = 0.0;       // larger eigenvalue of H H^H
    double lambda2_sq = 0.0;       // smaller eigenvalue of H H^H
    double b_coef = 0.0;           // quadratic coefficient b = -(lambda1^2 + lambda2^2)
    double c_coef = 0.0;           // quadratic coefficient c = lambda1^2 * lambda2^2
    double condition_number = 1.0; // lambda1 / lambda2, +inf when rank deficient
};

inline SpectralResult analyze(const Mat2 &h)
{
    if (!h.finite())
        throw std::domain_error("channel matrix has non-finite entries");

    SpectralResult r;
    r.b_coef = -(std::norm(h(0, 0)) + std::norm(h(0, 1)) + std::norm(h(1, 0)) + std::norm(h(1, 1)));
    // |det H|^2 equals the expanded coefficient
    // |H11|^2|H22|^2 + |H12|^2|H21|^2 - 2 Re{H11 H12* H21* H22} without its
    // cancellation noise, which keeps rank-1 inputs at an exact zero root.
    r.c_coef = std::norm(h.det());

    double disc = r.b_coef * r.b_coef - 4.0 * r.c_coef;
    if (disc < 0.0)
        disc = 0.0; // rounding slack; the discriminant is (l1^2 - l2^2)^2 >= 0
    r.lambda1_sq = 0.5 * (-r.b_coef + std::sqrt(disc));
    r.lambda2_sq = r.lambda1_sq > 0.0 ? r.c_coef / r.lambda1_sq : 0.0;

    if (r.lambda1_sq == 0.0 || r.lambda2_sq < 1e-30 * r.lambda1_sq)
        r.condition_number = std::numeric_limits<double>::infinity();
    else
        r.condition_number = std::sqrt(r.lambda1_sq / r.lambda2_sq);
    return r;
}

struct Svd2
{
    Mat2 u;                                  // left singular vectors (columns)
    std::array<double, 2> singular_values{}; // descending, nonnegative
    Mat2 v;                                  // right singular vectors (columns)
};

namespace detail {

// Orthonormal complement of a unit 2-vector.
inline std::array<cd, 2> perp(const std::array<cd, 2> &v)
{
    return {-std::conj(v[1]), std::conj(v[0])};
}

} // namespace detail

// Decomposes h = U diag(s) V^H from the closed-form eigenvalues plus
// explicit 2x2 Hermitian eigenvectors of H^H H. No external solver.
inline Svd2 svd_2x2(const Mat2 &h)
{
    const SpectralResult es = analyze(h);
    const double s1 = std::sqrt(es.lambda1_sq);
    const double s2 = std::sqrt(es.lambda2_sq);

    Svd2 out;
    out.singular_values = {s1, s2};

    if (s1 == 0.0) { // zero matrix
        out.u = Mat2::identity();
        out.v = Mat2::identity();
        return out;
    }

    // Gram matrix G = H^H H (Hermitian, g12 = conj(g21)).
    const double g11 = std::norm(h(0, 0)) + std::norm(h(1, 0));
    const double g22 = std::norm(h(0, 1)) + std::norm(h(1, 1));
    const cd g12 = std::conj(h(0, 0)) * h(0, 1) + std::conj(h(1, 0)) * h(1, 1);

    // Eigenvector of G for lambda1^2: (g12, l - g11) or (l - g22, conj(g12)),
    // whichever is better conditioned. Both vanish only when G = l * I.
    const double l = es.lambda1_sq;
    std::array<cd, 2> v1;
    if (std::abs(l - g11) >= std::abs(l - g22))
        v1 = {g12, cd(l - g11)};
    else
        v1 = {cd(l - g22), std::conj(g12)};
    const double nv = std::sqrt(std::norm(v1[0]) + std::norm(v1[1]));
    if (nv > 0.0) {
        v1 = {v1[0] / nv, v1[1] / nv};
    } else {
        v1 = {cd(1.0), cd(0.0)}; // degenerate spectrum: canonical basis
    }
    const std::array<cd, 2> v2 = detail::perp(v1);

    // Left vectors u_k = H v_k / s_k; complete orthonormally past the rank.
    std::array<cd, 2> u1 = {(h(0, 0) * v1[0] + h(0, 1) * v1[1]) / s1,
                            (h(1, 0) * v1[0] + h(1, 1) * v1[1]) / s1};
    const double nu1 = std::sqrt(std::norm(u1[0]) + std::norm(u1[1]));
    u1 = {u1[0] / nu1, u1[1] / nu1};

    std::array<cd, 2> u2;
    if (s2 > 1e-15 * s1) {
        u2 = {(h(0, 0) * v2[0] + h(0, 1) * v2[1]) / s2,
              (h(1, 0) * v2[0] + h(1, 1) * v2[1]) / s2};
        // one orthogonalization pass against u1
        const cd proj = std::conj(u1[0]) * u2[0] + std::conj(u1[1]) * u2[1];
        u2 = {u2[0] - proj * u1[0], u2[1] - proj * u1[1]};
        const double nu2 = std::sqrt(std::norm(u2[0]) + std::norm(u2[1]));
        if (nu2 > 1e-7)
            u2 = {u2[0] / nu2, u2[1] / nu2};
        else
            u2 = detail::perp(u1);
    } else {
        u2 = detail::perp(u1);
    }

    out.u(0, 0) = u1[0];
    out.u(1, 0) = u1[1];
    out.u(0, 1) = u2[0];
    out.u(1, 1) = u2[1];
    out.v(0, 0) = v1[0];
    out.v(1, 0) = v1[1];
    out.v(0, 1) = v2[0];
    out.v(1, 1) = v2[1];
    return out;
}

// U diag(s) V^H, for reconstruction checks.
inline Mat2 svd_reconstruct(const Svd2 &d)
{
    Mat2 s;
    s(0, 0) = d.singular_values[0];
    s(1, 1) = d.singular_values[1];
    return d.u * s * adjoint(d.v);
}

} // namespace irsrank
