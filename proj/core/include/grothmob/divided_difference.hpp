/*
   Copyright 2026 The grothmob Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GROTHMOB_DIVIDED_DIFFERENCE_HPP
#define GROTHMOB_DIVIDED_DIFFERENCE_HPP

#include <cstddef>
#include <cstdint>

#include "grothmob/sparse_poly.hpp"

namespace grothmob {

/// d_i f = (f - s_i f) / (x_i - x_{i+1}), with 1 <= i < width.
/// Throws IndexError for i out of range.
SparsePoly divided_difference(const SparsePoly& f, std::size_t i);

/// pi_i f = d_i((1 - x_{i+1}) f).
SparsePoly isobaric_divided_difference(const SparsePoly& f, std::size_t i);

/// f(1 - u_1, ..., 1 - u_n), expanded. Applying it twice returns f.
SparsePoly substitute_one_minus(const SparsePoly& f);

/// Class of the structure sheaf of a linear P^r inside P^d, as the univariate
/// polynomial sum_{i=0}^{d-r} (-1)^i C(d-r, i) z^i in z = [O(-1)]. The result
/// is checked against the expanded power (1 - z)^{d-r} before returning.
/// Throws RangeError when r > d.
SparsePoly structure_sheaf_class(std::uint32_t r, std::uint32_t d);

/// The same class in the shifted variable u = 1 - z, i.e. u^{d-r}.
SparsePoly structure_sheaf_class_shifted(std::uint32_t r, std::uint32_t d);

/// Copy of a univariate polynomial placed in variable `index` (1-based) of a
/// width-`width` ring.
SparsePoly lift_univariate(const SparsePoly& f, std::size_t width, std::size_t index);

} // namespace grothmob

#endif
