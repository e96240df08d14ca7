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

#include "grothmob/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "grothmob/errors.hpp"

namespace grothmob {

Permutation Permutation::from_one_line(std::span<const value_type> word)
{
    const std::size_t n = word.size();
    if (n == 0)
        throw MalformedPermutation("empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (value_type v : word) {
        if (v < 1 || v > n)
            throw MalformedPermutation("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[v])
            throw MalformedPermutation("entry " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
    return Permutation(std::vector<value_type>(word.begin(), word.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<value_type> word)
{
    return from_one_line(std::span<const value_type>(word.begin(), word.size()));
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<value_type> word;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw MalformedPermutation("unexpected character '" + std::string(1, c) + "' in permutation");
            word.push_back(static_cast<value_type>(c - '0'));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            auto field = text.substr(start, comma - start);
            value_type v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw MalformedPermutation("bad entry '" + std::string(field) + "' in permutation");
            word.push_back(v);
            start = comma + 1;
        }
    }
    return from_one_line(word);
}

Permutation Permutation::identity(std::size_t n)
{
    if (n == 0)
        throw InvalidDegree("S_0 is not supported");
    std::vector<value_type> word(n);
    for (std::size_t i = 0; i < n; ++i)
        word[i] = static_cast<value_type>(i + 1);
    return Permutation(std::move(word));
}

Permutation Permutation::inverse() const
{
    std::vector<value_type> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        inv[word_[i] - 1] = static_cast<value_type>(i + 1);
    return Permutation(std::move(inv));
}

bool Permutation::has_descent(std::size_t i) const
{
    if (i < 1 || i >= word_.size())
        throw IndexError("descent position " + std::to_string(i) + " out of range");
    return word_[i - 1] > word_[i];
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != i + 1)
            return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::string s;
    const bool compact = word_.size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!compact && i)
            s += ',';
        s += std::to_string(word_[i]);
    }
    return s;
}

std::size_t length(const Permutation& w)
{
    std::size_t count = 0;
    const auto& word = w.word();
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            count += word[i] > word[j];
    return count;
}

ExponentVector lehmer_code(const Permutation& w)
{
    const auto& word = w.word();
    ExponentVector code(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            code[i] += word[j] < word[i];
    return code;
}

Permutation longest_element(std::size_t n)
{
    if (n == 0)
        throw InvalidDegree("longest element of S_0");
    std::vector<Permutation::value_type> word(n);
    for (std::size_t i = 0; i < n; ++i)
        word[i] = static_cast<Permutation::value_type>(n - i);
    return Permutation::from_one_line(word);
}

Permutation right_multiply_adjacent(const Permutation& w, std::size_t i)
{
    if (i < 1 || i >= w.size())
        throw IndexError("s_" + std::to_string(i) + " is not a generator of S_" + std::to_string(w.size()));
    auto word = w.word();
    std::swap(word[i - 1], word[i]);
    return Permutation::from_one_line(word);
}

Permutation embed(const Permutation& w, std::size_t m)
{
    if (m < w.size())
        throw InvalidDegree("cannot embed S_" + std::to_string(w.size()) + " into S_" + std::to_string(m));
    auto word = w.word();
    for (std::size_t v = w.size() + 1; v <= m; ++v)
        word.push_back(static_cast<Permutation::value_type>(v));
    return Permutation::from_one_line(word);
}

SymmetricGroupRange::iterator::iterator(std::size_t n) : current_(Permutation::identity(n)), done_(false) {}

SymmetricGroupRange::iterator& SymmetricGroupRange::iterator::operator++()
{
    auto word = current_.word();
    if (std::next_permutation(word.begin(), word.end()))
        current_ = Permutation::from_one_line(word);
    else
        done_ = true;
    return *this;
}

SymmetricGroupRange::SymmetricGroupRange(std::size_t n) : n_(n)
{
    if (n == 0)
        throw InvalidDegree("S_0 is not supported");
}

SymmetricGroupRange iterate_sn(std::size_t n) { return SymmetricGroupRange(n); }

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<Permutation> out;
    for (const auto& w : iterate_sn(n))
        out.push_back(w);
    return out;
}

Diagram rothe_diagram(const Permutation& w)
{
    const auto inv = w.inverse();
    Diagram d{w.size(), {}};
    for (std::uint32_t i = 1; i <= w.size(); ++i)
        for (std::uint32_t j = 1; j <= w.size(); ++j)
            if (w(i) > j && inv(j) > i)
                d.cells.insert({i, j});
    return d;
}

Diagram north_closure(const Diagram& diagram)
{
    Diagram out{diagram.n, {}};
    for (const auto& cell : diagram.cells)
        for (std::uint32_t r = 1; r <= cell.row; ++r)
            out.cells.insert({r, cell.col});
    return out;
}

ExponentVector weight(const Diagram& diagram)
{
    ExponentVector wt(diagram.n);
    for (const auto& cell : diagram.cells)
        ++wt[cell.row - 1];
    return wt;
}

} // namespace grothmob
