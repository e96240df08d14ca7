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

#include <doctest.h>

#include "golden.hpp"
#include "grothmob/errors.hpp"
#include "grothmob/theorem.hpp"

using namespace grothmob;

namespace {

Permutation P(std::initializer_list<Permutation::value_type> w) { return Permutation::from_one_line(w); }

} // namespace

TEST_CASE("ceiling examples")
{
    CHECK(ceiling(Permutation::identity(4)) == ExponentVector(4));
    CHECK(ceiling(P({1, 3, 2})) == ExponentVector{1, 1, 0});
    CHECK(ceiling(golden::w143562()) == golden::ceiling_143562().padded(6));
}

TEST_CASE("Moebius formula examples")
{
    CHECK(grothendieck_via_mobius(Permutation::identity(1)) == SparsePoly::constant(1, 1));
    CHECK(grothendieck_via_mobius(Permutation::identity(5)) == SparsePoly::constant(5, 1));
    CHECK(grothendieck_via_mobius(golden::w143562()) == golden::grothendieck_143562());
    const auto w = P({3, 5, 1, 6, 2, 4});
    CHECK(grothendieck_via_mobius(w) == grothendieck_poly(w));
}

TEST_CASE("hypothesis gate")
{
    for (const auto& w : iterate_sn(5)) {
        if (is_multiplicity_free(w))
            continue;
        CHECK_THROWS_AS(grothendieck_via_mobius(w), HypothesisViolated);
        CHECK_THROWS_AS(proof_identity_check(w), HypothesisViolated);
    }
    try {
        grothendieck_via_mobius(P({1, 5, 3, 2, 6, 4}));
        FAIL("expected HypothesisViolated");
    } catch (const HypothesisViolated& e) {
        CHECK(std::string(e.what()).find("153264") != std::string::npos);
    }
}

TEST_CASE("support sandwich and ceiling bounds")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto schubert = build_table(n, Flavor::schubert);
        const auto groth = build_table(n, Flavor::grothendieck);
        for (const auto& [w, s] : schubert) {
            const auto gamma = ceiling(w);
            CHECK(componentwise_leq(lehmer_code(w), gamma));
            if (!is_multiplicity_free(s))
                continue;
            const auto g_support = support(groth.at(w));
            const auto p = poset_for(w, s);
            for (const auto& e : support(s))
                CHECK(g_support.contains(e));
            for (const auto& e : g_support) {
                CHECK(p.contains(e));
                CHECK(componentwise_leq(e, gamma));
            }
        }
    }
}

TEST_CASE("verify_theorem")
{
    const auto r1 = verify_theorem(1);
    CHECK(r1.total == 1);
    CHECK(r1.multiplicity_free == 1);
    CHECK(r1.matches == 1);
    CHECK(r1.ok());

    const auto r4 = verify_theorem(4);
    CHECK(r4.total == 24);
    CHECK(r4.mismatches.empty());

    const auto r5 = verify_theorem(5, {.jobs = 3});
    CHECK(r5.total == 120);
    CHECK(r5.multiplicity_free == 115);
    CHECK(r5.matches == 115);
    CHECK(r5.skipped.size() == 5);
    const auto r5_serial = verify_theorem(5);
    CHECK(r5_serial.matches == r5.matches);
    CHECK(r5_serial.skipped == r5.skipped);
    CHECK(r5_serial.coincidences == r5.coincidences);

    CHECK_THROWS_AS(verify_theorem(0), InvalidDegree);
    CHECK_THROWS_AS(verify_theorem(8), InvalidDegree);
}

TEST_CASE("verification report JSON")
{
    VerificationReport r;
    r.n = 2;
    r.total = 2;
    r.multiplicity_free = 2;
    r.matches = 2;
    r.elapsed_ms = 1.5;
    CHECK(to_json(r) == R"({"n":2,"total":2,"multiplicity_free":2,"matches":2,"mismatches":[],"elapsed_ms":1.5})");
    r.skipped.push_back(P({2, 1}));
    CHECK(to_json(r, true) ==
          R"({"n":2,"total":2,"multiplicity_free":2,"matches":2,"mismatches":[],"skipped":["21"],"coincidences":[],"elapsed_ms":1.5})");
}

TEST_CASE("proof identity check examples")
{
    const auto r132 = proof_identity_check(P({1, 3, 2}), 2);
    CHECK(r132.enlarged_size == 8);
    CHECK(r132.holds());

    // The enlarged poset for 132 directly: only the diamond carries labels.
    const auto enlarged = build_poset({{1, 0}, {0, 1}}, {2, 2});
    CHECK(enlarged.size() == 8);
    for (const auto& [b, label] : one_sum_labelling(enlarged).nu) {
        if (b == ExponentVector{1, 1})
            CHECK(label == -1);
        else if (b == ExponentVector{1, 0} || b == ExponentVector{0, 1})
            CHECK(label == 1);
        else
            CHECK(label == 0);
    }

    CHECK(proof_identity_check(Permutation::identity(1), 0).holds());

    const auto r = proof_identity_check(golden::w143562(), 7);
    CHECK(r.d == 7);
    CHECK(r.vanishing);
    CHECK(r.identity);
    CHECK(r.restriction);
    CHECK(r.labels_agree);

    CHECK(proof_identity_check(golden::w143562()).d == 7);
    CHECK_THROWS_AS(proof_identity_check(golden::w143562(), 6), TruncationDegreeError);
}

TEST_CASE("proof identity check across S_4 at two truncation degrees")
{
    for (const auto& w : iterate_sn(4)) {
        const auto base = proof_identity_check(w);
        CHECK(base.holds());
        CHECK(proof_identity_check(w, base.d + 1).holds());
    }
}

TEST_CASE("proof check JSON")
{
    const auto w = P({1, 3, 2});
    CHECK(to_json(w, proof_identity_check(w, 2)) ==
          R"({"w":"132","d":2,"enlarged_size":8,"vanishing":true,"identity":true,"restriction":true,"labels_agree":true,"holds":true})");
}
