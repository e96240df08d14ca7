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

#include "grothmob/sparse_poly.hpp"

#include "grothmob/errors.hpp"

namespace grothmob {

TruncatedPoly truncate(const SparsePoly& f, std::uint32_t d)
{
    TruncatedPoly out(f.width(), d);
    for (const auto& [e, c] : f.terms()) {
        bool keep = true;
        for (auto a : e)
            keep = keep && a <= d;
        if (keep)
            out.base_.add_term(e, c);
    }
    return out;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other)
{
    if (degree_ != other.degree_)
        throw ArityError("truncated sum with different truncation degrees");
    base_ += other.base_;
    return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b)
{
    if (a.degree_ != b.degree_)
        throw ArityError("truncated product with different truncation degrees");
    return truncate(a.base_ * b.base_, a.degree_);
}

} // namespace grothmob
