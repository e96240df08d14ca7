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

#include "grothmob/schubert.hpp"

#include <stdexcept>
#include <vector>

#include "grothmob/divided_difference.hpp"

namespace grothmob {

std::string to_string(Flavor flavor)
{
    return flavor == Flavor::schubert ? "schubert" : "grothendieck";
}

SparsePoly staircase(std::size_t n)
{
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = static_cast<ExponentVector::value_type>(n - 1 - i);
    return SparsePoly::monomial(e);
}

const SparsePoly& PolynomialTable::at(const Permutation& w) const
{
    auto it = entries_.find(w);
    if (it == entries_.end())
        throw std::out_of_range("no entry for " + w.to_string() + " in table for S_" + std::to_string(n_));
    return it->second;
}

SparsePoly apply_step(Flavor flavor, const SparsePoly& f, std::size_t i)
{
    return flavor == Flavor::schubert ? divided_difference(f, i) : isobaric_divided_difference(f, i);
}

PolynomialTable build_table(std::size_t n, Flavor flavor)
{
    PolynomialTable table(n, flavor);
    const Permutation top = longest_element(n);
    table.insert(top, staircase(n));

    std::vector<Permutation> level{top};
    while (!level.empty()) {
        std::map<Permutation, SparsePoly> next;
        for (const auto& w : level) {
            const SparsePoly& f = table.at(w);
            for (std::size_t i = 1; i < n; ++i) {
                if (!w.has_descent(i))
                    continue;
                Permutation v = right_multiply_adjacent(w, i);
                if (next.contains(v))
                    continue;
                next.emplace(std::move(v), apply_step(flavor, f, i));
            }
        }
        level.clear();
        for (auto& [v, f] : next) {
            level.push_back(v);
            table.insert(v, std::move(f));
        }
    }
    return table;
}

SparsePoly polynomial(const Permutation& w, Flavor flavor)
{
    // Climb to w0 through ascents, then descend back along the same path.
    std::vector<std::size_t> path;
    Permutation u = w;
    const std::size_t n = w.size();
    while (true) {
        std::size_t ascent = 0;
        for (std::size_t i = 1; i < n && !ascent; ++i)
            if (!u.has_descent(i))
                ascent = i;
        if (!ascent)
            break;
        path.push_back(ascent);
        u = right_multiply_adjacent(u, ascent);
    }
    SparsePoly f = staircase(n);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        f = apply_step(flavor, f, *it);
    return f;
}

SparsePoly schubert_poly(const Permutation& w) { return polynomial(w, Flavor::schubert); }

SparsePoly grothendieck_poly(const Permutation& w) { return polynomial(w, Flavor::grothendieck); }

bool is_multiplicity_free(const SparsePoly& f)
{
    for (const auto& [e, c] : f.terms())
        if (c != 1)
            return false;
    return true;
}

bool is_multiplicity_free(const Permutation& w) { return is_multiplicity_free(schubert_poly(w)); }

std::string to_json_lines(const PolynomialTable& table)
{
    std::string out;
    for (const auto& [w, f] : table) {
        out += "{\"w\":\"" + w.to_string() + "\",\"poly\":" + to_json(f) + "}\n";
    }
    return out;
}

} // namespace grothmob
