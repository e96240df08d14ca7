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

#include "grothmob/divided_difference.hpp"

#include <stdexcept>
#include <vector>

#include "grothmob/errors.hpp"

namespace grothmob {

namespace {

using Univariate = std::map<std::uint32_t, Integer>;

void check_index(const SparsePoly& f, std::size_t i)
{
    if (i < 1 || i >= f.width())
        throw IndexError("divided difference index " + std::to_string(i) + " outside 1.." +
                         std::to_string(f.width() == 0 ? 0 : f.width() - 1));
}

void accumulate(Univariate& into, std::uint32_t power, const Integer& c)
{
    auto [it, inserted] = into.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            into.erase(it);
    }
}

Integer binomial(std::uint32_t n, std::uint32_t k)
{
    Integer r = 1;
    for (std::uint32_t j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

} // namespace

SparsePoly divided_difference(const SparsePoly& f, std::size_t i)
{
    check_index(f, i);
    const std::size_t lo = i - 1;
    const std::size_t hi = i;
    const SparsePoly numerator = f - f.swapped(i);

    // Regroup as a polynomial in x_i whose coefficients are polynomials in
    // y = x_{i+1}, one group per monomial in the remaining variables.
    std::map<ExponentVector, std::map<std::uint32_t, Univariate>> groups;
    for (const auto& [e, c] : numerator.terms()) {
        ExponentVector rest = e;
        rest[lo] = 0;
        rest[hi] = 0;
        groups[rest][e[lo]][e[hi]] = c;
    }

    SparsePoly quotient(f.width());
    for (const auto& [rest, by_power] : groups) {
        // Synthetic division by (x_i - y): q_{k-1} = p_k + y q_k, remainder
        // p_0 + y q_0.
        const std::uint32_t top = by_power.rbegin()->first;
        Univariate carry;
        for (std::uint32_t k = top;; --k) {
            Univariate next;
            if (auto it = by_power.find(k); it != by_power.end())
                next = it->second;
            for (const auto& [b, c] : carry)
                accumulate(next, b + 1, c);
            if (k == 0) {
                if (!next.empty())
                    throw std::logic_error("divided difference left a nonzero remainder");
                break;
            }
            for (const auto& [b, c] : next) {
                ExponentVector e = rest;
                e[lo] = k - 1;
                e[hi] = b;
                quotient.add_term(e, c);
            }
            carry = std::move(next);
        }
    }
    return quotient;
}

SparsePoly isobaric_divided_difference(const SparsePoly& f, std::size_t i)
{
    check_index(f, i);
    const SparsePoly one_minus = SparsePoly::constant(f.width(), 1) - SparsePoly::variable(f.width(), i + 1);
    return divided_difference(one_minus * f, i);
}

SparsePoly substitute_one_minus(const SparsePoly& f)
{
    SparsePoly out(f.width());
    const std::size_t w = f.width();
    for (const auto& [e, c] : f.terms()) {
        // Walk every k <= e; the coefficient of u^k is c * prod (-1)^{k_i} C(e_i, k_i).
        ExponentVector k(w);
        while (true) {
            Integer coeff = c;
            for (std::size_t j = 0; j < w; ++j) {
                coeff *= binomial(e[j], k[j]);
                if (k[j] % 2)
                    coeff = -coeff;
            }
            out.add_term(k, coeff);
            std::size_t j = 0;
            while (j < w && k[j] == e[j])
                k[j++] = 0;
            if (j == w)
                break;
            ++k[j];
        }
    }
    return out;
}

SparsePoly structure_sheaf_class(std::uint32_t r, std::uint32_t d)
{
    if (r > d)
        throw RangeError("P^" + std::to_string(r) + " does not embed in P^" + std::to_string(d));
    const std::uint32_t codim = d - r;
    SparsePoly sum(1);
    for (std::uint32_t i = 0; i <= codim; ++i) {
        Integer c = binomial(codim, i);
        sum.add_term(ExponentVector{i}, i % 2 ? Integer(-c) : c);
    }

    const SparsePoly one_minus_z = SparsePoly::constant(1, 1) - SparsePoly::variable(1, 1);
    SparsePoly power = SparsePoly::constant(1, 1);
    for (std::uint32_t i = 0; i < codim; ++i)
        power = power * one_minus_z;
    if (sum != power)
        throw std::logic_error("alternating binomial sum disagrees with (1 - z)^" + std::to_string(codim));
    return sum;
}

SparsePoly structure_sheaf_class_shifted(std::uint32_t r, std::uint32_t d)
{
    return substitute_one_minus(structure_sheaf_class(r, d));
}

SparsePoly lift_univariate(const SparsePoly& f, std::size_t width, std::size_t index)
{
    if (f.width() != 1)
        throw ArityError("lift_univariate expects a univariate polynomial");
    if (index < 1 || index > width)
        throw IndexError("variable index " + std::to_string(index) + " outside width " + std::to_string(width));
    SparsePoly out(width);
    for (const auto& [e, c] : f.terms()) {
        ExponentVector lifted(width);
        lifted[index - 1] = e[0];
        out.add_term(lifted, c);
    }
    return out;
}

} // namespace grothmob
