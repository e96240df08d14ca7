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

#ifndef GROTHMOB_THEOREM_HPP
#define GROTHMOB_THEOREM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grothmob/permutation.hpp"
#include "grothmob/schubert.hpp"
#include "grothmob/sparse_poly.hpp"
#include "grothmob/vector_poset.hpp"

namespace grothmob {

/// Row counts of the north closure of the Rothe diagram, width n.
ExponentVector ceiling(const Permutation& w);

/// P_w built from supp(S_w) and ceiling(w).
VectorPoset poset_for(const Permutation& w, const SparsePoly& schubert);
VectorPoset poset_for(const Permutation& w);

/// G_w = sum over beta in P_w of -mu(bottom, beta) x^beta.
///
/// Throws HypothesisViolated, naming w, when S_w has a coefficient other
/// than 1. The overload taking S_w skips recomputing it.
SparsePoly grothendieck_via_mobius(const Permutation& w);
SparsePoly grothendieck_via_mobius(const Permutation& w, const SparsePoly& schubert);

/// The Moebius sum without the multiplicity-free gate. Only meaningful for
/// diagnostics on permutations outside the theorem's hypothesis.
SparsePoly mobius_sum_unchecked(const Permutation& w, const SparsePoly& schubert);

struct VerificationReport {
    std::size_t n = 0;
    std::size_t total = 0;
    std::size_t multiplicity_free = 0;
    std::size_t matches = 0;
    std::vector<Permutation> mismatches;
    /// Permutations outside the hypothesis.
    std::vector<Permutation> skipped;
    /// Skipped permutations for which the Moebius sum happens to agree anyway.
    std::vector<Permutation> coincidences;
    double elapsed_ms = 0.0;

    bool ok() const noexcept { return mismatches.empty() && matches == multiplicity_free; }
};

struct VerifyOptions {
    std::size_t jobs = 1;
    std::size_t max_n = 7;
};

/// Compares grothendieck_via_mobius against the pi-recursion for every
/// multiplicity-free w in S_n. Mismatches are collected, never thrown.
/// Throws InvalidDegree for n == 0 or n > options.max_n.
VerificationReport verify_theorem(std::size_t n, const VerifyOptions& options = {});

/// {"n":..., "total":..., "multiplicity_free":..., "matches":...,
///  "mismatches":[...], "elapsed_ms":...}; skipped/coincidences optional.
std::string to_json(const VerificationReport& report, bool include_skipped = false);

struct ProofCheckResult {
    std::uint32_t d = 0;
    std::size_t enlarged_size = 0;  ///< |P'| without bottom
    bool vanishing = false;         ///< nu'(b) == 0 whenever b is not below ceiling(w)
    bool identity = false;          ///< G_w(u) == sum nu'(b) u^b mod u_i^{d+1}
    bool restriction = false;       ///< P' cut at ceiling(w) equals P_w minus bottom
    bool labels_agree = false;      ///< nu' on that cut equals the labels of P_w

    bool holds() const noexcept { return vanishing && identity && restriction && labels_agree; }
};

/// Replays the K-theoretic argument in the truncated ring: builds P' with
/// ceiling (d,...,d), labels it, and checks the vanishing bound, the
/// expansion identity through the structure-sheaf classes, and the
/// identification of P'' with P_w. d defaults to deg G_w.
///
/// Throws HypothesisViolated as above and TruncationDegreeError if d < deg G_w.
ProofCheckResult proof_identity_check(const Permutation& w, std::optional<std::uint32_t> d = std::nullopt);

std::string to_json(const Permutation& w, const ProofCheckResult& result);

} // namespace grothmob

#endif
