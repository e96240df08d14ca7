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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "cli.hpp"
#include "golden.hpp"
#include "grothmob/divided_difference.hpp"
#include "grothmob/errors.hpp"
#include "grothmob/schubert.hpp"
#include "grothmob/theorem.hpp"
#include "grothmob/vector_poset.hpp"
#include "oracles.hpp"

using namespace grothmob;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> check;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool golden_schubert(std::string& detail)
{
    const auto start = std::chrono::steady_clock::now();
    const auto out = cli::run({"schubert", "143562"});
    const double t = seconds_since(start);
    const auto f = poly_from_json(out.out);
    detail = std::to_string(f.size()) + " terms, " + std::to_string(t) + " s";
    return out.status == 0 && f == golden::schubert_143562() && is_multiplicity_free(f) && t < 1.0;
}

bool golden_ceiling(std::string& detail)
{
    const auto c = ceiling(golden::w143562());
    detail = c.to_string();
    return c.padded(5) == golden::ceiling_143562();
}

bool golden_poset(std::string& detail)
{
    const auto p = poset_for(golden::w143562());
    const auto labels = one_sum_labelling(p);
    bool ok = p.size() == 15 && labels.nu.size() == 15;
    for (const auto& m : golden::schubert_support_143562())
        ok = ok && labels.nu.at(m.padded(6)) == 1;
    for (const auto& [e, label] : golden::upper_labels_143562())
        ok = ok && labels.nu.at(e.padded(6)) == label;
    detail = std::to_string(p.size()) + " elements";
    return ok;
}

bool golden_theorem(std::string& detail)
{
    const auto start = std::chrono::steady_clock::now();
    const auto via_mobius = grothendieck_via_mobius(golden::w143562());
    const double t = seconds_since(start);
    const auto oracle = grothendieck_poly(golden::w143562());
    detail = std::to_string(via_mobius.size()) + " terms, " + std::to_string(t) + " s";
    return via_mobius == golden::grothendieck_143562() && via_mobius == oracle && t < 1.0;
}

bool exhaustive_sweep(std::string& detail)
{
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = verify_theorem(n, {.jobs = 1});
        const double t = seconds_since(start);
        detail += "n=" + std::to_string(n) + ": " + std::to_string(report.matches) + "/" +
                  std::to_string(report.multiplicity_free) + " ";
        ok = ok && report.ok() && report.mismatches.empty();
        if (n == 6) {
            detail += "(" + std::to_string(t) + " s)";
            ok = ok && t < 60.0;
        }
    }
    return ok;
}

bool proof_reenactment(std::string& detail)
{
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (const auto& w : iterate_sn(5)) {
        if (!is_multiplicity_free(w))
            continue;
        const auto base = proof_identity_check(w);
        const auto raised = proof_identity_check(w, base.d + 1);
        for (const auto& r : {base, raised}) {
            ++checked;
            failures += !r.holds();
        }
    }
    detail = std::to_string(checked) + " checks, " + std::to_string(failures) + " failures";
    return checked == 230 && failures == 0;
}

bool operator_laws(std::string& detail)
{
    std::mt19937 rng(5);
    std::size_t failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t width = 1 + trial % 5;
        const auto f = testing::random_poly(rng, width, 6, 8, 9);
        for (std::size_t i = 1; i < width; ++i) {
            failures += !divided_difference(divided_difference(f, i), i).is_zero();
            const auto p = isobaric_divided_difference(f, i);
            failures += !(isobaric_divided_difference(p, i) == p);
        }
        failures += !(substitute_one_minus(substitute_one_minus(f)) == f);
    }
    detail = "1000 polynomials, " + std::to_string(failures) + " failures";
    return failures == 0;
}

bool structure_sheaf(std::string& detail)
{
    const SparsePoly one = SparsePoly::constant(1, 1);
    const SparsePoly one_minus_z = one - SparsePoly::variable(1, 1);
    std::size_t pairs = 0;
    bool ok = true;
    for (std::uint32_t d = 0; d <= 12; ++d) {
        SparsePoly power = one;
        for (std::uint32_t r = d + 1; r-- > 0;) {
            ok = ok && structure_sheaf_class(r, d) == power;
            power = power * one_minus_z;
            ++pairs;
        }
    }
    detail = std::to_string(pairs) + " pairs (r, d)";
    return ok && pairs == 91;
}

bool oracle_structure(std::string& detail)
{
    std::size_t perms = 0;
    std::size_t failures = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto s = build_table(n, Flavor::schubert);
        const auto g = build_table(n, Flavor::grothendieck);
        for (const auto& [w, gw] : g) {
            ++perms;
            const auto l = length(w);
            failures += !(gw.homogeneous_component(l) == s.at(w)) || gw.min_degree() != l;
            for (const auto& [e, c] : gw.terms()) {
                const bool odd = (e.total_degree() - l) % 2;
                failures += odd ? c >= 0 : c <= 0;
            }
        }
    }
    detail = std::to_string(perms) + " permutations, " + std::to_string(failures) + " failures";
    return perms == 873 && failures == 0;
}

bool hypothesis_gating(std::string& detail)
{
    std::size_t violators = 0;
    std::size_t silent = 0;
    for (const auto& w : iterate_sn(5)) {
        if (is_multiplicity_free(w))
            continue;
        ++violators;
        try {
            grothendieck_via_mobius(w);
            ++silent;
        } catch (const HypothesisViolated&) {
        }
        silent += cli::run({"grothendieck", w.to_string(), "--method", "mobius"}).status != cli::exit_domain_error;
    }
    detail = std::to_string(violators) + " violators, " + std::to_string(silent) + " silent successes";
    return violators == 5 && silent == 0;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "worked example: Schubert polynomial of 143562", golden_schubert},
        {2, "worked example: ceiling of 143562", golden_ceiling},
        {3, "worked example: poset and one-sum labels", golden_poset},
        {4, "worked example: Moebius formula equals expansion and recursion", golden_theorem},
        {5, "exhaustive sweep n = 1..6", exhaustive_sweep},
        {6, "truncated-ring proof replay over S_5 at d and d+1", proof_reenactment},
        {7, "operator laws on random polynomials", operator_laws},
        {8, "structure sheaf binomial identity 0 <= r <= d <= 12", structure_sheaf},
        {9, "lowest-degree component and sign alternation, n <= 6", oracle_structure},
        {10, "hypothesis gating over S_5", hypothesis_gating},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        failed += !ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name << " -- " << detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
