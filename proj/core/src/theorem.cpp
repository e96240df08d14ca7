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

#include "grothmob/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "grothmob/divided_difference.hpp"
#include "grothmob/errors.hpp"

namespace grothmob {

namespace {

void require_multiplicity_free(const Permutation& w, const SparsePoly& schubert)
{
    for (const auto& [e, c] : schubert.terms()) {
        if (c != 1)
            throw HypothesisViolated("Schubert polynomial of " + w.to_string() + " has coefficient " + to_decimal(c) +
                                     " at x^" + e.to_string() + "; the Moebius formula requires all coefficients to be 1");
    }
}

nlohmann::ordered_json permutation_list(const std::vector<Permutation>& ws)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& w : ws)
        out.push_back(w.to_string());
    return out;
}

struct WorkerTally {
    std::size_t multiplicity_free = 0;
    std::size_t matches = 0;
    std::vector<Permutation> mismatches;
    std::vector<Permutation> skipped;
    std::vector<Permutation> coincidences;
};

} // namespace

ExponentVector ceiling(const Permutation& w) { return weight(north_closure(rothe_diagram(w))); }

VectorPoset poset_for(const Permutation& w, const SparsePoly& schubert)
{
    return build_poset(support(schubert), ceiling(w));
}

VectorPoset poset_for(const Permutation& w) { return poset_for(w, schubert_poly(w)); }

SparsePoly mobius_sum_unchecked(const Permutation& w, const SparsePoly& schubert)
{
    const VectorPoset poset = poset_for(w, schubert);
    const Labelling labels = mobius_from_bottom(poset);
    SparsePoly out(w.size());
    for (const auto& [beta, mu] : labels.mu_from_bottom)
        out.add_term(beta, -mu);
    return out;
}

SparsePoly grothendieck_via_mobius(const Permutation& w, const SparsePoly& schubert)
{
    require_multiplicity_free(w, schubert);
    return mobius_sum_unchecked(w, schubert);
}

SparsePoly grothendieck_via_mobius(const Permutation& w) { return grothendieck_via_mobius(w, schubert_poly(w)); }

VerificationReport verify_theorem(std::size_t n, const VerifyOptions& options)
{
    if (n == 0 || n > options.max_n)
        throw InvalidDegree("verify supports 1 <= n <= " + std::to_string(options.max_n) + ", got " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();

    const PolynomialTable schubert = build_table(n, Flavor::schubert);
    const PolynomialTable grothendieck = build_table(n, Flavor::grothendieck);
    std::vector<Permutation> perms;
    perms.reserve(schubert.size());
    for (const auto& [w, f] : schubert)
        perms.push_back(w);

    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, perms.size());
    std::vector<WorkerTally> tallies(jobs);
    auto work = [&](std::size_t worker) {
        WorkerTally& t = tallies[worker];
        for (std::size_t k = worker; k < perms.size(); k += jobs) {
            const Permutation& w = perms[k];
            const SparsePoly& s = schubert.at(w);
            const SparsePoly& g = grothendieck.at(w);
            if (!is_multiplicity_free(s)) {
                t.skipped.push_back(w);
                try {
                    if (mobius_sum_unchecked(w, s) == g)
                        t.coincidences.push_back(w);
                } catch (const Error&) {
                }
                continue;
            }
            ++t.multiplicity_free;
            bool match = false;
            try {
                match = grothendieck_via_mobius(w, s) == g;
            } catch (const Error&) {
            }
            if (match)
                ++t.matches;
            else
                t.mismatches.push_back(w);
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t j = 0; j < jobs; ++j)
            threads.emplace_back(work, j);
    }

    VerificationReport report;
    report.n = n;
    report.total = perms.size();
    for (auto& t : tallies) {
        report.multiplicity_free += t.multiplicity_free;
        report.matches += t.matches;
        report.mismatches.insert(report.mismatches.end(), t.mismatches.begin(), t.mismatches.end());
        report.skipped.insert(report.skipped.end(), t.skipped.begin(), t.skipped.end());
        report.coincidences.insert(report.coincidences.end(), t.coincidences.begin(), t.coincidences.end());
    }
    std::sort(report.mismatches.begin(), report.mismatches.end());
    std::sort(report.skipped.begin(), report.skipped.end());
    std::sort(report.coincidences.begin(), report.coincidences.end());
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const VerificationReport& report, bool include_skipped)
{
    nlohmann::ordered_json out;
    out["n"] = report.n;
    out["total"] = report.total;
    out["multiplicity_free"] = report.multiplicity_free;
    out["matches"] = report.matches;
    out["mismatches"] = permutation_list(report.mismatches);
    if (include_skipped) {
        out["skipped"] = permutation_list(report.skipped);
        out["coincidences"] = permutation_list(report.coincidences);
    }
    out["elapsed_ms"] = report.elapsed_ms;
    return out.dump();
}

ProofCheckResult proof_identity_check(const Permutation& w, std::optional<std::uint32_t> d)
{
    const SparsePoly schubert = schubert_poly(w);
    require_multiplicity_free(w, schubert);
    const SparsePoly groth = grothendieck_poly(w);
    const auto groth_degree = static_cast<std::uint32_t>(degree(groth));
    if (!d)
        d = groth_degree;
    else if (*d < groth_degree)
        throw TruncationDegreeError("truncation degree " + std::to_string(*d) + " is below deg G_" + w.to_string() + " = " +
                                    std::to_string(groth_degree));

    // x_n never occurs for w in S_n, so the product of projective spaces is
    // taken over the first n-1 factors.
    const std::size_t n = w.size() > 1 ? w.size() - 1 : 1;
    const SparsePoly schubert_n = schubert.padded(n);
    const SparsePoly groth_n = groth.padded(n);
    ExponentVector top(n);
    for (std::size_t i = 0; i < n; ++i)
        top[i] = *d;
    const VectorPoset enlarged = build_poset(support(schubert_n), top);
    const Labelling enlarged_labels = one_sum_labelling(enlarged);
    const ExponentVector gamma = ceiling(w).padded(n);

    ProofCheckResult result;
    result.d = *d;
    result.enlarged_size = enlarged.size();

    result.vanishing = std::all_of(enlarged_labels.nu.begin(), enlarged_labels.nu.end(), [&](const auto& entry) {
        return componentwise_leq(entry.first, gamma) || entry.second == 0;
    });

    // G_w(1 - z) against sum nu'(b) prod_i [O_{P^{d - b_i}}], both moved to
    // u = 1 - z and reduced modulo u_i^{d+1}.
    const SparsePoly lhs_z = substitute_one_minus(groth_n);
    SparsePoly rhs_z(n);
    for (const auto& [b, label] : enlarged_labels.nu) {
        if (label == 0)
            continue;
        SparsePoly term = SparsePoly::constant(n, label);
        for (std::size_t i = 0; i < n; ++i)
            term = term * lift_univariate(structure_sheaf_class(*d - b[i], *d), n, i + 1);
        rhs_z += term;
    }
    result.identity = truncate(substitute_one_minus(lhs_z), *d) == truncate(substitute_one_minus(rhs_z), *d);

    const VectorPoset original = build_poset(support(schubert_n), gamma);
    const Labelling original_labels = one_sum_labelling(original);
    std::vector<ExponentVector> cut;
    std::map<ExponentVector, Integer> cut_labels;
    for (const auto& b : enlarged.elements()) {
        if (componentwise_leq(b, gamma)) {
            cut.push_back(b);
            cut_labels.emplace(b, enlarged_labels.nu.at(b));
        }
    }
    result.restriction = cut == original.elements();
    result.labels_agree = cut_labels == original_labels.nu;
    return result;
}

std::string to_json(const Permutation& w, const ProofCheckResult& result)
{
    nlohmann::ordered_json out;
    out["w"] = w.to_string();
    out["d"] = result.d;
    out["enlarged_size"] = result.enlarged_size;
    out["vanishing"] = result.vanishing;
    out["identity"] = result.identity;
    out["restriction"] = result.restriction;
    out["labels_agree"] = result.labels_agree;
    out["holds"] = result.holds();
    return out.dump();
}

} // namespace grothmob
