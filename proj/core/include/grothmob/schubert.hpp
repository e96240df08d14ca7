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

#ifndef GROTHMOB_SCHUBERT_HPP
#define GROTHMOB_SCHUBERT_HPP

#include <cstddef>
#include <map>
#include <string>

#include "grothmob/permutation.hpp"
#include "grothmob/sparse_poly.hpp"

namespace grothmob {

enum class Flavor { schubert, grothendieck };

std::string to_string(Flavor flavor);

/// x1^{n-1} x2^{n-2} ... x_{n-1}, width n. Polynomial of the longest element
/// for both flavors.
SparsePoly staircase(std::size_t n);

/// One polynomial per element of S_n, all of width n.
class PolynomialTable {
public:
    PolynomialTable(std::size_t n, Flavor flavor) : n_(n), flavor_(flavor) {}

    std::size_t n() const noexcept { return n_; }
    Flavor flavor() const noexcept { return flavor_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Throws std::out_of_range for a permutation outside S_n.
    const SparsePoly& at(const Permutation& w) const;
    bool contains(const Permutation& w) const { return entries_.contains(w); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    void insert(const Permutation& w, SparsePoly poly) { entries_.insert_or_assign(w, std::move(poly)); }

private:
    std::size_t n_;
    Flavor flavor_;
    std::map<Permutation, SparsePoly> entries_;
};

/// Descending recursion from w0 over weak order, level by level. Each entry
/// is computed from the first predecessor that reaches it.
PolynomialTable build_table(std::size_t n, Flavor flavor);

/// Applies d_i (Schubert) or pi_i (Grothendieck).
SparsePoly apply_step(Flavor flavor, const SparsePoly& f, std::size_t i);

/// Polynomial of a single permutation, computed along one reduced path
/// from w0. Width n.
SparsePoly schubert_poly(const Permutation& w);
SparsePoly grothendieck_poly(const Permutation& w);
SparsePoly polynomial(const Permutation& w, Flavor flavor);

/// Every nonzero coefficient equals 1.
bool is_multiplicity_free(const SparsePoly& f);
bool is_multiplicity_free(const Permutation& w);

/// Newline-delimited JSON: one {"w": "...", "poly": {...}} object per line,
/// in lexicographic order of w.
std::string to_json_lines(const PolynomialTable& table);

} // namespace grothmob

#endif
