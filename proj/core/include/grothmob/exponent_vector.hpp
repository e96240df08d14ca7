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

#ifndef GROTHMOB_EXPONENT_VECTOR_HPP
#define GROTHMOB_EXPONENT_VECTOR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace grothmob {

/// Fixed-width tuple of naturals. Serves both as the exponent of a monomial
/// x1^a1 ... xn^an and as an element of a vector poset.
///
/// The built-in ordering (operator<=>) is lexicographic and only used for
/// storage; the poset order is componentwise_leq().
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t width) : entries_(width, 0) {}
    ExponentVector(std::initializer_list<value_type> entries) : entries_(entries) {}
    explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}

    std::size_t width() const noexcept { return entries_.size(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    value_type& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    const std::vector<value_type>& entries() const noexcept { return entries_; }

    std::uint64_t total_degree() const noexcept;

    /// Copy extended with zeros (or truncated, if every dropped entry is zero)
    /// to the requested width.
    ExponentVector padded(std::size_t width) const;

    /// "(a1,...,an)".
    std::string to_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<value_type> entries_;
};

/// a <= b in every coordinate. Widths must agree.
bool componentwise_leq(const ExponentVector& a, const ExponentVector& b);

/// Entrywise sum.
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

/// Unit vector e_i (0-based index).
ExponentVector unit_vector(std::size_t width, std::size_t index);

} // namespace grothmob

#endif
