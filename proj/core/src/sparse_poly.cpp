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

#include <algorithm>
#include <sstream>

#include "grothmob/errors.hpp"

namespace grothmob {

namespace {

void require_same_width(const SparsePoly& a, const SparsePoly& b, const char* what)
{
    if (a.width() != b.width())
        throw ArityError(std::string(what) + ": widths " + std::to_string(a.width()) + " and " + std::to_string(b.width()));
}

} // namespace

SparsePoly SparsePoly::constant(std::size_t width, const Integer& value)
{
    SparsePoly f(width);
    f.add_term(ExponentVector(width), value);
    return f;
}

SparsePoly SparsePoly::monomial(const ExponentVector& exponent, const Integer& coefficient)
{
    SparsePoly f(exponent.width());
    f.add_term(exponent, coefficient);
    return f;
}

SparsePoly SparsePoly::variable(std::size_t width, std::size_t i)
{
    if (i < 1 || i > width)
        throw IndexError("variable x_" + std::to_string(i) + " outside width " + std::to_string(width));
    return monomial(unit_vector(width, i - 1));
}

Integer SparsePoly::coefficient(const ExponentVector& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePoly::add_term(const ExponentVector& exponent, const Integer& c)
{
    if (exponent.width() != width_)
        throw ArityError("term " + exponent.to_string() + " in a polynomial of width " + std::to_string(width_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other)
{
    require_same_width(*this, other, "add");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other)
{
    require_same_width(*this, other, "subtract");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    require_same_width(a, b, "multiply");
    SparsePoly out(a.width());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

SparsePoly SparsePoly::swapped(std::size_t i) const
{
    if (i < 1 || i >= width_)
        throw IndexError("s_" + std::to_string(i) + " outside width " + std::to_string(width_));
    SparsePoly out(width_);
    for (const auto& [e, c] : terms_) {
        ExponentVector s = e;
        std::swap(s[i - 1], s[i]);
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

SparsePoly SparsePoly::padded(std::size_t width) const
{
    SparsePoly out(width);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e.padded(width), c);
    return out;
}

SparsePoly SparsePoly::homogeneous_component(std::uint64_t k) const
{
    SparsePoly out(width_);
    for (const auto& [e, c] : terms_)
        if (e.total_degree() == k)
            out.terms_.emplace(e, c);
    return out;
}

std::uint64_t SparsePoly::min_degree() const
{
    if (terms_.empty())
        throw UndefinedDegree("minimum degree of the zero polynomial");
    std::uint64_t m = terms_.begin()->first.total_degree();
    for (const auto& [e, c] : terms_)
        m = std::min(m, e.total_degree());
    return m;
}

bool SparsePoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const auto k = terms_.begin()->first.total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first.total_degree() == k; });
}

std::string SparsePoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool constant_term = e.total_degree() == 0;
        if (constant_term) {
            os << magnitude;
            continue;
        }
        if (magnitude != 1)
            os << magnitude << '*';
        os << "x^" << e.to_string();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) { return os << f.to_string(); }

SparsePoly add(const SparsePoly& f, const SparsePoly& g) { return f + g; }

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) { return f * g; }

std::uint64_t degree(const SparsePoly& f)
{
    if (f.is_zero())
        throw UndefinedDegree("degree of the zero polynomial");
    std::uint64_t d = 0;
    for (const auto& [e, c] : f.terms())
        d = std::max(d, e.total_degree());
    return d;
}

std::set<ExponentVector> support(const SparsePoly& f)
{
    std::set<ExponentVector> out;
    for (const auto& [e, c] : f.terms())
        out.insert(e);
    return out;
}

bool equal_up_to_width(const SparsePoly& f, const SparsePoly& g)
{
    const auto w = std::max(f.width(), g.width());
    try {
        return f.padded(w) == g.padded(w);
    } catch (const ArityError&) {
        return false;
    }
}

} // namespace grothmob
