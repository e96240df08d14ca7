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

#ifndef GROTHMOB_VECTOR_POSET_HPP
#define GROTHMOB_VECTOR_POSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grothmob/exponent_vector.hpp"
#include "grothmob/integer.hpp"

namespace grothmob {

/// The adjoined minimum. Kept distinct from the zero vector, which can be an
/// ordinary element.
struct Bottom {
    friend auto operator<=>(const Bottom&, const Bottom&) = default;
};

using PosetElement = std::variant<Bottom, ExponentVector>;

/// Union of the integer boxes [m, ceiling] over the given minimal vectors,
/// ordered componentwise, with a bottom element adjoined.
///
/// Elements are kept in lexicographic order, which coincides with the
/// mixed-radix order of the bounding grid [0, ceiling]; the grid slot table
/// gives O(1) membership and makes every q < p precede p.
class VectorPoset {
public:
    std::size_t width() const noexcept { return ceiling_.width(); }
    const ExponentVector& ceiling() const noexcept { return ceiling_; }
    const std::vector<ExponentVector>& minimals() const noexcept { return minimals_; }
    /// Elements other than the bottom.
    const std::vector<ExponentVector>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    bool contains(const ExponentVector& v) const;
    std::optional<std::size_t> index_of(const ExponentVector& v) const;

    // Bounding grid [0, ceiling].
    std::size_t grid_size() const noexcept { return slot_.size(); }
    std::size_t grid_stride(std::size_t coordinate) const { return stride_[coordinate]; }
    /// Element index stored in a grid slot, or -1.
    std::int64_t slot(std::size_t grid_index) const { return slot_[grid_index]; }
    std::size_t grid_index(const ExponentVector& v) const;

private:
    friend VectorPoset build_poset(const std::set<ExponentVector>& minimals, const ExponentVector& ceiling);

    ExponentVector ceiling_;
    std::vector<ExponentVector> minimals_;
    std::vector<ExponentVector> elements_;
    std::vector<std::size_t> stride_;
    std::vector<std::int64_t> slot_;
};

/// Throws EmptySupport for no minimals, InfeasiblePoset if some minimal is
/// not below the ceiling (or widths differ), and std::invalid_argument if
/// the minimals are not an antichain.
VectorPoset build_poset(const std::set<ExponentVector>& minimals, const ExponentVector& ceiling);

using Cover = std::pair<PosetElement, PosetElement>;

/// Hasse diagram edges (lower, upper), sorted. Covers between vectors are
/// exactly the unit steps a -> a + e_i inside the poset.
std::vector<Cover> covers(const VectorPoset& poset);

struct Labelling {
    /// One-sum labels: sum of nu(q) over q <= p equals 1 for every element p.
    std::map<ExponentVector, Integer> nu;
    /// mu(bottom, beta) = -nu(beta); mu(bottom, bottom) = 1 is implicit.
    std::map<ExponentVector, Integer> mu_from_bottom;

    Integer mu(const PosetElement& element) const;
};

/// Labels by increasing grid position: nu(p) = 1 - sum_{q < p} nu(q), where
/// the strict down-set sum comes from inclusion-exclusion over running
/// prefix sums at p - e_T.
Labelling one_sum_labelling(const VectorPoset& poset);

/// mu(bottom, beta) = -sum_{bottom <= z < beta} mu(bottom, z), computed with
/// the same prefix-sum machinery; nu is filled in as -mu.
Labelling mobius_from_bottom(const VectorPoset& poset);

/// Element names drop the last coordinate when it is zero for every element
/// and the ceiling (vectors for S_n are shown with n-1 entries).
std::size_t display_width(const VectorPoset& poset);
std::string display_name(const ExponentVector& v, std::size_t width);

/// Graphviz digraph with one edge per cover, lower -> upper.
std::string to_dot(const VectorPoset& poset, const Labelling* labels = nullptr);

/// {"ceiling": [...], "elements": [[...], ...], "nu": {...}, "mu": {...}}.
std::string to_json(const VectorPoset& poset, const Labelling& labels);

} // namespace grothmob

#endif
