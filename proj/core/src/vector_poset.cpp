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

#include "grothmob/vector_poset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "grothmob/errors.hpp"

namespace grothmob {

namespace {

constexpr std::size_t max_grid_size = std::size_t{1} << 28;

// Increments v in mixed radix bounded by ceiling, last coordinate fastest.
void advance(ExponentVector& v, const ExponentVector& ceiling)
{
    for (std::size_t j = v.width(); j-- > 0;) {
        if (v[j] < ceiling[j]) {
            ++v[j];
            return;
        }
        v[j] = 0;
    }
}

enum class LabelRoute { one_sum, mobius };

// Running down-set sums over the bounding grid. For p in the poset the new
// value is fixed by the route's defining identity; for other grid points it
// is just the inclusion-exclusion total of the elements below p.
Labelling label_grid(const VectorPoset& poset, LabelRoute route)
{
    const std::size_t width = poset.width();
    std::vector<Integer> prefix(poset.grid_size());
    Labelling out;

    ExponentVector v(width);
    std::vector<std::size_t> nonzero;
    nonzero.reserve(width);
    for (std::size_t g = 0; g < poset.grid_size(); ++g, advance(v, poset.ceiling())) {
        nonzero.clear();
        for (std::size_t j = 0; j < width; ++j)
            if (v[j] > 0)
                nonzero.push_back(j);

        Integer strict = 0;
        const std::size_t subsets = std::size_t{1} << nonzero.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::size_t offset = 0;
            int bits = 0;
            for (std::size_t b = 0; b < nonzero.size(); ++b) {
                if (mask >> b & 1) {
                    offset += poset.grid_stride(nonzero[b]);
                    ++bits;
                }
            }
            if (bits % 2)
                strict += prefix[g - offset];
            else
                strict -= prefix[g - offset];
        }

        if (poset.slot(g) < 0) {
            prefix[g] = std::move(strict);
            continue;
        }
        Integer label;
        if (route == LabelRoute::one_sum) {
            label = 1 - strict;
            out.nu.emplace(v, label);
            out.mu_from_bottom.emplace(v, -label);
        } else {
            // mu(bottom, bottom) = 1 contributes to every strict down-set.
            label = -(1 + strict);
            out.mu_from_bottom.emplace(v, label);
            out.nu.emplace(v, -label);
        }
        prefix[g] = strict + label;
    }
    return out;
}

nlohmann::ordered_json label_value(const Integer& value)
{
    if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
        return static_cast<long long>(value);
    return to_decimal(value);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string node_name(const PosetElement& e, std::size_t width)
{
    if (std::holds_alternative<Bottom>(e))
        return "bottom";
    return display_name(std::get<ExponentVector>(e), width);
}

} // namespace

std::size_t VectorPoset::grid_index(const ExponentVector& v) const
{
    std::size_t g = 0;
    for (std::size_t j = 0; j < v.width(); ++j)
        g += v[j] * stride_[j];
    return g;
}

std::optional<std::size_t> VectorPoset::index_of(const ExponentVector& v) const
{
    if (v.width() != width() || !componentwise_leq(v, ceiling_))
        return std::nullopt;
    const auto s = slot_[grid_index(v)];
    if (s < 0)
        return std::nullopt;
    return static_cast<std::size_t>(s);
}

bool VectorPoset::contains(const ExponentVector& v) const { return index_of(v).has_value(); }

VectorPoset build_poset(const std::set<ExponentVector>& minimals, const ExponentVector& ceiling)
{
    if (minimals.empty())
        throw EmptySupport("poset needs at least one minimal element");
    for (const auto& m : minimals) {
        if (m.width() != ceiling.width() || !componentwise_leq(m, ceiling))
            throw InfeasiblePoset("minimal " + m.to_string() + " is not below ceiling " + ceiling.to_string());
    }
    for (const auto& a : minimals)
        for (const auto& b : minimals)
            if (a != b && componentwise_leq(a, b))
                throw std::invalid_argument("minimals are not an antichain: " + a.to_string() + " <= " + b.to_string());

    VectorPoset p;
    p.ceiling_ = ceiling;
    p.minimals_.assign(minimals.begin(), minimals.end());

    const std::size_t width = ceiling.width();
    p.stride_.assign(width, 1);
    std::size_t grid = 1;
    for (std::size_t j = width; j-- > 0;) {
        p.stride_[j] = grid;
        grid *= std::size_t{ceiling[j]} + 1;
        if (grid > max_grid_size)
            throw RangeError("bounding grid of ceiling " + ceiling.to_string() + " is too large");
    }

    p.slot_.assign(grid, -1);
    ExponentVector v(width);
    for (std::size_t g = 0; g < grid; ++g, advance(v, ceiling)) {
        const bool member = std::any_of(p.minimals_.begin(), p.minimals_.end(),
                                        [&](const ExponentVector& m) { return componentwise_leq(m, v); });
        if (member) {
            p.slot_[g] = static_cast<std::int64_t>(p.elements_.size());
            p.elements_.push_back(v);
        }
    }
    return p;
}

std::vector<Cover> covers(const VectorPoset& poset)
{
    std::vector<Cover> out;
    for (const auto& m : poset.minimals())
        out.emplace_back(Bottom{}, m);
    for (const auto& a : poset.elements()) {
        for (std::size_t j = 0; j < poset.width(); ++j) {
            ExponentVector b = a;
            ++b[j];
            if (poset.contains(b))
                out.emplace_back(a, std::move(b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer Labelling::mu(const PosetElement& element) const
{
    if (std::holds_alternative<Bottom>(element))
        return 1;
    auto it = mu_from_bottom.find(std::get<ExponentVector>(element));
    if (it == mu_from_bottom.end())
        throw std::out_of_range("no Moebius value for " + std::get<ExponentVector>(element).to_string());
    return it->second;
}

Labelling one_sum_labelling(const VectorPoset& poset) { return label_grid(poset, LabelRoute::one_sum); }

Labelling mobius_from_bottom(const VectorPoset& poset) { return label_grid(poset, LabelRoute::mobius); }

std::size_t display_width(const VectorPoset& poset)
{
    const std::size_t w = poset.width();
    if (w < 2 || poset.ceiling()[w - 1] != 0)
        return w;
    return w - 1;
}

std::string display_name(const ExponentVector& v, std::size_t width)
{
    return v.padded(width).to_string();
}

std::string to_dot(const VectorPoset& poset, const Labelling* labels)
{
    const std::size_t width = display_width(poset);
    std::ostringstream os;
    os << "digraph poset {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    os << "  " << quoted("bottom") << " [label=\"0̂\"];\n";
    for (const auto& e : poset.elements()) {
        const auto name = display_name(e, width);
        os << "  " << quoted(name) << " [label=\"" << name;
        if (labels) {
            if (auto it = labels->nu.find(e); it != labels->nu.end())
                os << "\\n" << it->second;
        }
        os << "\"];\n";
    }
    for (const auto& [lower, upper] : covers(poset))
        os << "  " << quoted(node_name(lower, width)) << " -> " << quoted(node_name(upper, width)) << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const VectorPoset& poset, const Labelling& labels)
{
    const std::size_t width = display_width(poset);
    nlohmann::ordered_json out;
    out["ceiling"] = poset.ceiling().padded(width).entries();
    auto elements = nlohmann::ordered_json::array();
    for (const auto& e : poset.elements())
        elements.push_back(e.padded(width).entries());
    out["elements"] = std::move(elements);
    nlohmann::ordered_json nu = nlohmann::ordered_json::object();
    nlohmann::ordered_json mu = nlohmann::ordered_json::object();
    for (const auto& e : poset.elements()) {
        const auto key = display_name(e, width);
        nu[key] = label_value(labels.nu.at(e));
        mu[key] = label_value(labels.mu_from_bottom.at(e));
    }
    out["nu"] = std::move(nu);
    out["mu"] = std::move(mu);
    return out.dump();
}

} // namespace grothmob
