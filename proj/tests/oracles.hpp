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

// Test-only reference implementations. Nothing here shares code paths with
// the library routines it is used to check.
#ifndef GROTHMOB_TESTS_ORACLES_HPP
#define GROTHMOB_TESTS_ORACLES_HPP

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grothmob/sparse_poly.hpp"
#include "grothmob/vector_poset.hpp"

namespace grothmob::testing {

// (x^a y^b - x^b y^a) / (x - y) expanded monomial by monomial.
inline SparsePoly divided_difference_by_formula(const SparsePoly& f, std::size_t i)
{
    SparsePoly out(f.width());
    for (const auto& [e, c] : f.terms()) {
        const auto a = e[i - 1];
        const auto b = e[i];
        if (a == b)
            continue;
        const auto hi = a > b ? a : b;
        const auto lo = a > b ? b : a;
        const Integer sign = a > b ? 1 : -1;
        for (std::uint32_t k = 0; k < hi - lo; ++k) {
            ExponentVector m = e;
            m[i - 1] = hi - 1 - k;
            m[i] = lo + k;
            out.add_term(m, sign * c);
        }
    }
    return out;
}

inline SparsePoly random_poly(std::mt19937& rng, std::size_t width, std::uint32_t max_degree, int max_terms = 6,
                              int max_coeff = 9)
{
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_degree);
    SparsePoly f(width);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        ExponentVector e(width);
        std::uint32_t budget = exp(rng);
        for (std::size_t j = 0; j < width && budget > 0; ++j) {
            std::uniform_int_distribution<std::uint32_t> part(0, budget);
            e[j] = part(rng);
            budget -= e[j];
        }
        f.add_term(e, coeff(rng));
    }
    return f;
}

// Classical Moebius function of a finite poset given by an explicit order
// relation, with element 0 the minimum: mu(x,x) = 1 and
// mu(x,y) = -sum_{x <= z < y} mu(x,z). Returns mu(0, y) for every y.
inline std::vector<Integer> mobius_from_minimum(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq)
{
    std::vector<std::vector<std::optional<Integer>>> memo(size, std::vector<std::optional<Integer>>(size));
    std::function<Integer(std::size_t, std::size_t)> mu = [&](std::size_t x, std::size_t y) -> Integer {
        if (x == y)
            return 1;
        if (!leq(x, y))
            return 0;
        if (memo[x][y])
            return *memo[x][y];
        Integer total = 0;
        for (std::size_t z = 0; z < size; ++z)
            if (z != y && leq(x, z) && leq(z, y))
                total += mu(x, z);
        memo[x][y] = -total;
        return -total;
    };
    std::vector<Integer> out(size);
    for (std::size_t y = 0; y < size; ++y)
        out[y] = mu(0, y);
    return out;
}

// Brute-force P: all vectors in [0, ceiling] dominating some minimal.
inline std::vector<ExponentVector> enumerate_box_union(const std::set<ExponentVector>& minimals, const ExponentVector& ceiling)
{
    std::vector<ExponentVector> out;
    ExponentVector v(ceiling.width());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == ceiling.width()) {
            for (const auto& m : minimals) {
                if (componentwise_leq(m, v)) {
                    out.push_back(v);
                    return;
                }
            }
            return;
        }
        for (std::uint32_t a = 0; a <= ceiling[j]; ++a) {
            v[j] = a;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

// Cover pairs by the definition: a < b with nothing strictly between.
inline std::set<std::pair<ExponentVector, ExponentVector>> brute_force_covers(const std::vector<ExponentVector>& elements)
{
    std::set<std::pair<ExponentVector, ExponentVector>> out;
    for (const auto& a : elements)
        for (const auto& b : elements) {
            if (a == b || !componentwise_leq(a, b))
                continue;
            bool between = false;
            for (const auto& c : elements)
                between = between || (c != a && c != b && componentwise_leq(a, c) && componentwise_leq(c, b));
            if (!between)
                out.emplace(a, b);
        }
    return out;
}

// Accepts the DOT subset we emit: digraph ID { stmt* } where a statement is
// `ID = ID ;`, `node|edge|graph [attrs] ;`, `ID [attrs] ;` or `ID -> ID ;`.
// Records declared nodes and edges; returns false on any syntax error or on
// an edge touching an undeclared node.
struct DotGraph {
    std::set<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

inline std::optional<DotGraph> parse_dot(const std::string& text)
{
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"') {
                if (text[j] == '\\')
                    ++j;
                ++j;
            }
            if (j >= text.size())
                return std::nullopt;
            tokens.push_back(text.substr(i, j - i + 1));
            i = j + 1;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            tokens.push_back("->");
            i += 2;
        } else if (std::string("{}[];=,").find(c) != std::string::npos) {
            tokens.push_back(std::string(1, c));
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tokens.push_back(text.substr(i, j - i));
            i = j;
        } else {
            return std::nullopt;
        }
    }

    auto is_id = [](const std::string& t) {
        return !t.empty() && (t.front() == '"' || std::isalnum(static_cast<unsigned char>(t.front())) || t.front() == '_');
    };
    std::size_t p = 0;
    auto at = [&](std::size_t k) -> std::string { return k < tokens.size() ? tokens[k] : std::string(); };
    auto skip_attrs = [&]() -> bool {
        if (at(p) != "[")
            return true;
        ++p;
        while (at(p) != "]") {
            if (!is_id(at(p)) || at(p + 1) != "=" || !is_id(at(p + 2)))
                return false;
            p += 3;
            if (at(p) == "," || at(p) == ";")
                ++p;
        }
        ++p;
        return true;
    };

    DotGraph g;
    if (at(p++) != "digraph")
        return std::nullopt;
    if (is_id(at(p)) && at(p) != "{")
        ++p;
    if (at(p++) != "{")
        return std::nullopt;
    while (at(p) != "}") {
        const std::string head = at(p);
        if (!is_id(head))
            return std::nullopt;
        if (at(p + 1) == "=") {
            if (!is_id(at(p + 2)))
                return std::nullopt;
            p += 3;
        } else if (at(p + 1) == "->") {
            if (!is_id(at(p + 2)))
                return std::nullopt;
            g.edges.emplace_back(head, at(p + 2));
            p += 3;
            if (!skip_attrs())
                return std::nullopt;
        } else {
            ++p;
            if (!skip_attrs())
                return std::nullopt;
            if (head != "node" && head != "edge" && head != "graph")
                g.nodes.insert(head);
        }
        if (at(p++) != ";")
            return std::nullopt;
    }
    if (p + 1 != tokens.size())
        return std::nullopt;
    for (const auto& [a, b] : g.edges)
        if (!g.nodes.contains(a) || !g.nodes.contains(b))
            return std::nullopt;
    return g;
}

} // namespace grothmob::testing

#endif
