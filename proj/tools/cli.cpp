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

#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grothmob/errors.hpp"
#include "grothmob/permutation.hpp"
#include "grothmob/schubert.hpp"
#include "grothmob/theorem.hpp"
#include "grothmob/vector_poset.hpp"

namespace grothmob::cli {

namespace {

struct Options {
    std::string w;
    std::string format = "json";
    std::string method = "mobius";
    std::string flavor = "schubert";
    bool labels = false;
    bool closure = false;
    bool list_skipped = false;
    std::size_t n = 0;
    std::size_t jobs = 1;
    std::optional<std::uint32_t> d;
};

std::string render(const SparsePoly& f, const std::string& format)
{
    return format == "text" ? f.to_string() : to_json(f);
}

std::string diagram_json(const Permutation& w, bool closure)
{
    Diagram d = rothe_diagram(w);
    if (closure)
        d = north_closure(d);
    nlohmann::ordered_json out;
    out["w"] = w.to_string();
    out["n"] = w.size();
    out["closure"] = closure;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : d.cells)
        cells.push_back({c.row, c.col});
    out["cells"] = std::move(cells);
    out["weight"] = weight(d).entries();
    return out.dump();
}

} // namespace

Outcome run(const std::vector<std::string>& args)
{
    CLI::App app{"Grothendieck polynomials from multiplicity-free Schubert polynomials by Moebius inversion", "grothmob"};
    app.require_subcommand(1);
    Options opt;

    auto* schubert = app.add_subcommand("schubert", "Schubert polynomial by divided differences");
    schubert->add_option("w", opt.w, "permutation, e.g. 143562 or 1,4,3,5,6,2")->required();
    schubert->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

    auto* groth = app.add_subcommand("grothendieck", "Grothendieck polynomial");
    groth->add_option("w", opt.w, "permutation")->required();
    groth->add_option("--method", opt.method, "mobius (poset inversion) or recursion (isobaric divided differences)")
        ->check(CLI::IsMember({"mobius", "recursion"}));
    groth->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

    auto* poset = app.add_subcommand("poset", "The poset P_w with its one-sum labels");
    poset->add_option("w", opt.w, "permutation")->required();
    poset->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));
    poset->add_flag("--labels", opt.labels, "annotate DOT nodes with their labels");

    auto* diagram = app.add_subcommand("diagram", "Rothe diagram and its weight");
    diagram->add_option("w", opt.w, "permutation")->required();
    diagram->add_flag("--closure", opt.closure, "take the columnwise north closure");

    auto* verify = app.add_subcommand("verify", "Check the Moebius formula against the recursion on all of S_n");
    verify->add_option("--n", opt.n)->required()->check(CLI::Range(1, 7));
    verify->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
    verify->add_flag("--list-skipped", opt.list_skipped, "also list permutations outside the hypothesis");

    auto* proof = app.add_subcommand("proofcheck", "Replay the truncated-ring identities for one permutation");
    proof->add_option("w", opt.w, "permutation")->required();
    proof->add_option("--d", opt.d, "truncation degree (default: deg G_w)");

    auto* table = app.add_subcommand("table", "Export a whole table as JSON lines");
    table->add_option("--n", opt.n)->required()->check(CLI::Range(1, 8));
    table->add_option("--flavor", opt.flavor)->check(CLI::IsMember({"schubert", "grothendieck"}));

    std::vector<const char*> argv{"grothmob"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    Outcome outcome;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        outcome.out = app.help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.status = exit_usage_error;
        outcome.err = std::string(e.what()) + "\n" + app.help();
        return outcome;
    }

    try {
        if (*schubert) {
            const auto w = Permutation::parse(opt.w);
            outcome.out = render(schubert_poly(w), opt.format) + "\n";
        } else if (*groth) {
            const auto w = Permutation::parse(opt.w);
            const SparsePoly f = opt.method == "mobius" ? grothendieck_via_mobius(w) : grothendieck_poly(w);
            outcome.out = render(f, opt.format) + "\n";
        } else if (*poset) {
            const auto w = Permutation::parse(opt.w);
            const VectorPoset p = poset_for(w);
            const Labelling labels = one_sum_labelling(p);
            outcome.out = opt.format == "dot" ? to_dot(p, opt.labels ? &labels : nullptr) : to_json(p, labels) + "\n";
        } else if (*diagram) {
            outcome.out = diagram_json(Permutation::parse(opt.w), opt.closure) + "\n";
        } else if (*verify) {
            const auto report = verify_theorem(opt.n, {.jobs = opt.jobs});
            outcome.out = to_json(report, opt.list_skipped) + "\n";
            if (!report.ok())
                outcome.status = exit_domain_error;
        } else if (*proof) {
            const auto w = Permutation::parse(opt.w);
            const auto result = proof_identity_check(w, opt.d);
            outcome.out = to_json(w, result) + "\n";
            if (!result.holds())
                outcome.status = exit_domain_error;
        } else if (*table) {
            const Flavor flavor = opt.flavor == "schubert" ? Flavor::schubert : Flavor::grothendieck;
            outcome.out = to_json_lines(build_table(opt.n, flavor));
        }
    } catch (const MalformedPermutation& e) {
        outcome.status = exit_usage_error;
        outcome.err = std::string("error: ") + e.what() + "\n";
    } catch (const Error& e) {
        outcome.status = exit_domain_error;
        outcome.err = std::string("error: ") + e.what() + "\n";
    }
    return outcome;
}

} // namespace grothmob::cli
