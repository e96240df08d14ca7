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

#include "grothmob/exponent_vector.hpp"

#include <numeric>

#include "grothmob/errors.hpp"

namespace grothmob {

std::uint64_t ExponentVector::total_degree() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

ExponentVector ExponentVector::padded(std::size_t width) const
{
    std::vector<value_type> out(width, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i < width)
            out[i] = entries_[i];
        else if (entries_[i] != 0)
            throw ArityError("cannot shrink " + to_string() + " to width " + std::to_string(width));
    }
    return ExponentVector(std::move(out));
}

std::string ExponentVector::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(entries_[i]);
    }
    s += ')';
    return s;
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b)
{
    if (a.width() != b.width())
        throw ArityError("componentwise comparison of vectors with different widths");
    for (std::size_t i = 0; i < a.width(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b)
{
    if (a.width() != b.width())
        throw ArityError("sum of vectors with different widths");
    ExponentVector out(a.width());
    for (std::size_t i = 0; i < a.width(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

ExponentVector unit_vector(std::size_t width, std::size_t index)
{
    ExponentVector e(width);
    e[index] = 1;
    return e;
}

} // namespace grothmob
