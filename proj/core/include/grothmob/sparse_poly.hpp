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

#ifndef GROTHMOB_SPARSE_POLY_HPP
#define GROTHMOB_SPARSE_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "grothmob/exponent_vector.hpp"
#include "grothmob/integer.hpp"

namespace grothmob {

/// Polynomial in width() variables with exact integer coefficients.
///
/// Terms live in a map ordered lexicographically by exponent vector and no
/// stored coefficient is ever zero, so structural equality is polynomial
/// equality. Binary operations require equal widths and throw ArityError
/// otherwise; use padded() to harmonize first.
class SparsePoly {
public:
    using TermMap = std::map<ExponentVector, Integer>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t width) : width_(width) {}

    static SparsePoly constant(std::size_t width, const Integer& value);
    static SparsePoly monomial(const ExponentVector& exponent, const Integer& coefficient = 1);
    /// x_i, 1-based.
    static SparsePoly variable(std::size_t width, std::size_t i);

    std::size_t width() const noexcept { return width_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const ExponentVector& exponent) const;

    /// Adds c * x^exponent, dropping the term if it cancels.
    void add_term(const ExponentVector& exponent, const Integer& c);

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const Integer& scalar);

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Integer& s) { return a *= s; }
    friend SparsePoly operator*(const Integer& s, SparsePoly a) { return a *= s; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly operator-() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// Image under s_i, which swaps x_i and x_{i+1} (1-based).
    SparsePoly swapped(std::size_t i) const;

    /// Same polynomial viewed in `width` variables. Throws ArityError if a
    /// dropped variable actually occurs.
    SparsePoly padded(std::size_t width) const;

    /// Terms of total degree exactly k.
    SparsePoly homogeneous_component(std::uint64_t k) const;

    std::uint64_t min_degree() const;

    bool is_homogeneous() const;

    /// "x^(2,0,1) - 4*x^(1,1,1) + 1" style rendering; "0" for zero.
    std::string to_string() const;

private:
    std::size_t width_ = 0;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);

/// Maximum total degree. Throws UndefinedDegree for the zero polynomial.
std::uint64_t degree(const SparsePoly& f);

/// Exponent vectors carrying a nonzero coefficient.
std::set<ExponentVector> support(const SparsePoly& f);

/// f == g once both are padded to the larger width.
bool equal_up_to_width(const SparsePoly& f, const SparsePoly& g);

/// Element of Z[u_1..u_n]/(u_1^{d+1}, ..., u_n^{d+1}), represented by its
/// reduced polynomial (every exponent <= d).
class TruncatedPoly {
public:
    TruncatedPoly(std::size_t width, std::uint32_t truncation_degree)
        : base_(width), degree_(truncation_degree) {}

    const SparsePoly& base() const noexcept { return base_; }
    std::uint32_t truncation_degree() const noexcept { return degree_; }
    std::size_t width() const noexcept { return base_.width(); }

    TruncatedPoly& operator+=(const TruncatedPoly& other);
    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

private:
    friend TruncatedPoly truncate(const SparsePoly& f, std::uint32_t d);

    SparsePoly base_;
    std::uint32_t degree_;
};

/// Drops every term with an exponent above d.
TruncatedPoly truncate(const SparsePoly& f, std::uint32_t d);

/// JSON form {"width": n, "terms": [{"exp": [...], "coeff": "<decimal>"}, ...]}
/// with terms in lexicographic order of exp.
std::string to_json(const SparsePoly& f);

/// Inverse of to_json. Throws ParseError on malformed input.
SparsePoly poly_from_json(const std::string& text);

} // namespace grothmob

#endif
