// Copyright 2026 The abcontrast authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABCONTRAST_SRC_GAUSS_LEGENDRE_HPP
#define ABCONTRAST_SRC_GAUSS_LEGENDRE_HPP

#include <array>
#include <cstddef>

namespace abcontrast::detail {

// 8-point Gauss-Legendre rule on [-1, 1]; exact for polynomials up to
// degree 15. Panels are kept short enough that the integrand is smooth and
// slowly oscillating on each one.
inline constexpr std::size_t gl_order = 8;

inline constexpr std::array<double, gl_order> gl_nodes = {
    -9.60289856497536176e-01, -7.96666477413626728e-01,
    -5.25532409916328991e-01, -1.83434642495649780e-01,
    1.83434642495649780e-01,  5.25532409916328991e-01,
    7.96666477413626728e-01,  9.60289856497536176e-01,
};

inline constexpr std::array<double, gl_order> gl_weights = {
    1.01228536290376689e-01, 2.22381034453374343e-01,
    3.13706645877887047e-01, 3.62683783378361768e-01,
    3.62683783378361768e-01, 3.13706645877887047e-01,
    2.22381034453374343e-01, 1.01228536290376689e-01,
};

}  // namespace abcontrast::detail

#endif  // ABCONTRAST_SRC_GAUSS_LEGENDRE_HPP
