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
#include <complex>

namespace irsrank {

using cd = std::complex<double>;

// Dense complex 2x2 matrix, row-major, 0-based accessors.
struct Mat2
{
    std::array<cd, 4> e{};

    cd &operator()(int r, int c) { return e[static_cast<std::size_t>(r) * 2 + c]; }
    const cd &operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * 2 + c]; }

    cd det() const { return e[0] * e[3] - e[1] * e[2]; }

    double frobenius_sq() const
    {
        return std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]) + std::norm(e[3]);
    }

    bool finite() const
    {
        for (const cd &v : e)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                return false;
        return true;
    }

    static Mat2 identity() { return Mat2{{cd(1.0), cd(0.0), cd(0.0), cd(1.0)}}; }

    friend Mat2 operator+(const Mat2 &a, const Mat2 &b)
    {
        return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
    }

    friend Mat2 operator-(const Mat2 &a, const Mat2 &b)
    {
        return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
    }

    friend Mat2 operator*(const Mat2 &a, const Mat2 &b)
    {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        return r;
    }

    friend Mat2 operator*(const cd &s, const Mat2 &a)
    {
        return Mat2{{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
    }
};

inline Mat2 adjoint(const Mat2 &a)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = std::conj(a(j, i));
    return r;
}

inline double max_abs_diff(const Mat2 &a, const Mat2 &b)
{
    double m = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

} // namespace irsrank
