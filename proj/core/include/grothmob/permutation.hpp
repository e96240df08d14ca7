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

#ifndef GROTHMOB_PERMUTATION_HPP
#define GROTHMOB_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grothmob/exponent_vector.hpp"

namespace grothmob {

/// Element of S_n in one-line notation w(1) w(2) ... w(n). Positions and
/// values are 1-based throughout the public interface.
class Permutation {
public:
    using value_type = std::uint32_t;

    /// Throws MalformedPermutation unless word is a permutation of 1..n, n >= 1.
    static Permutation from_one_line(std::span<const value_type> word);
    static Permutation from_one_line(std::initializer_list<value_type> word);

    /// Accepts "143562" (one digit per entry) or "1,4,3,5,6,2".
    static Permutation parse(std::string_view text);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return word_.size(); }
    value_type operator()(std::size_t position) const { return word_[position - 1]; }
    const std::vector<value_type>& word() const noexcept { return word_; }

    Permutation inverse() const;

    /// True when w(i) > w(i+1).
    bool has_descent(std::size_t i) const;

    bool is_identity() const noexcept;

    /// Digit string when n <= 9, comma-separated list otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<value_type> word) : word_(std::move(word)) {}

    std::vector<value_type> word_;
};

/// Number of inversions.
std::size_t length(const Permutation& w);

/// Entry i counts j > i with w(j) < w(i).
ExponentVector lehmer_code(const Permutation& w);

/// n, n-1, ..., 1. Throws InvalidDegree for n == 0.
Permutation longest_element(std::size_t n);

/// w * s_i: swaps positions i and i+1. Throws IndexError unless 1 <= i < n.
Permutation right_multiply_adjacent(const Permutation& w, std::size_t i);

/// Appends fixed points n+1..m. Throws InvalidDegree when m < n.
Permutation embed(const Permutation& w, std::size_t m);

/// Lexicographic walk through S_n, one permutation at a time.
class SymmetricGroupRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using pointer = const Permutation*;
        using reference = const Permutation&;

        iterator() = default;
        explicit iterator(std::size_t n);

        const Permutation& operator*() const { return current_; }
        const Permutation* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        Permutation current_ = Permutation::identity(1);
        bool done_ = true;
    };

    explicit SymmetricGroupRange(std::size_t n);

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    std::size_t n_;
};

/// Every element of S_n exactly once, in lexicographic order of the word.
SymmetricGroupRange iterate_sn(std::size_t n);

/// iterate_sn collected into a vector.
std::vector<Permutation> all_permutations(std::size_t n);

/// One cell (row, col) of a diagram in the n x n grid, 1-based.
struct Cell {
    std::uint32_t row;
    std::uint32_t col;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Diagram {
    std::size_t n = 0;
    std::set<Cell> cells;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// {(i, j) : w(i) > j and w^{-1}(j) > i}.
Diagram rothe_diagram(const Permutation& w);

/// Columnwise upward closure: (i, j) is added whenever some (i', j) with
/// i' >= i is present.
Diagram north_closure(const Diagram& diagram);

/// Row counts, width n.
ExponentVector weight(const Diagram& diagram);

} // namespace grothmob

#endif
