/*
 * Copyright 2026 The trifermion contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "trifermion/canonical.hpp"
#include "trifermion/classify.hpp"
#include "trifermion/invariants.hpp"
#include "trifermion/oracle.hpp"

namespace trifermion::cli {

namespace {

using nlohmann::json;

struct Globals {
    std::string mode;
    bool json_output = false;
    std::uint64_t seed = 1;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

AltTensor apply_mode(const AltTensor& p, const Globals& g)
{
    if (g.mode.empty() || g.mode == mode_name(p.mode()) || (g.mode == "exact" && p.mode() == Mode::exact)) {
        return p;
    }
    if (g.mode == "float") {
        return p.as_mode(Mode::floating);
    }
    throw InputError("a float state cannot be converted to exact arithmetic");
}

void write_state(const AltTensor& p, const std::string& path, const Globals& g, std::ostream& out)
{
    const json doc = state_to_json(p);
    if (!path.empty()) {
        std::ofstream file(path);
        if (!file) {
            throw InputError("cannot write " + path);
        }
        emit(file, doc);
    }
    if (path.empty() || g.json_output) {
        emit(out, doc);
    }
}

std::vector<mpq_class> parse_params(const std::string& text)
{
    std::vector<mpq_class> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(Scalar::parse(item, "0", Mode::exact).re());
        } catch (const std::exception&) {
            throw InputError("field params has an invalid entry: " + item);
        }
    }
    return out;
}

int cmd_classify(const std::vector<std::string>& inputs, bool real, const Globals& g, std::ostream& out,
                 std::ostream& err)
{
    json reports = json::array();
    int code = exit_ok;
    for (const auto& path : inputs) {
        const AltTensor p = apply_mode(load_state(path).state, g);
        json report = classify_report(p, real, path);
        const std::string label = report["class"]["label"];
        err << path << ": " << label << '\n';
        if (label == ClassLabel::unclassified) {
            code = exit_unclassified;
        }
        reports.push_back(std::move(report));
    }
    emit(out, reports.size() == 1 ? reports[0] : reports);
    return code;
}

int cmd_canonical(int dim, const std::string& label, const std::string& params, const std::string& path,
                  const Globals& g, std::ostream& out, std::ostream& err)
{
    AltTensor p(dim, 3, Mode::exact);
    try {
        p = canonical_state(dim, label, parse_params(params));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    const bool real = is_real_label(label);
    const std::string expected = classified_label(dim, label, real);
    const std::string found = classify(p, real).label;
    if (found != expected) {
        err << "canonical " << label << " classifies as " << found << '\n';
        return exit_unclassified;
    }
    write_state(apply_mode(p, g), path, g, out);
    return exit_ok;
}

int cmd_random(int dim, const std::string& slocc_of, const std::string& path, const Globals& g, std::ostream& out)
{
    AltTensor p(6, 3, Mode::exact);
    if (!slocc_of.empty()) {
        const StateFile source = load_state(slocc_of);
        p = slocc_apply(random_invertible(source.dimension, g.seed, source.mode), source.state);
    } else {
        if (dim < 6 || dim > 9) {
            throw InputError("field dim must be in 6..9");
        }
        p = random_state(dim, 3, g.seed);
    }
    write_state(apply_mode(p, g), path, g, out);
    return exit_ok;
}

int cmd_embed(const std::string& type, const std::string& input, const std::string& path, const Globals& g,
              std::ostream& out, std::ostream& err)
{
    const std::vector<Scalar> psi = load_amplitudes(input);
    AltTensor p(6, 3, Mode::exact);
    json report;
    if (type == "qubit3") {
        if (psi.size() != 8) {
            throw InputError("field amplitudes must hold 8 entries for three qubits");
        }
        p = embed_three_qubits(psi);
    } else {
        if (psi.size() != 27) {
            throw InputError("field amplitudes must hold 27 entries for three qutrits");
        }
        p = embed_qudits(psi, 3, 3);
        const QutritVerdicts v = qutrit_verdicts(psi);
        report["qutrit"] = {{"d36_nonzero", v.d36_nonzero},
                            {"d24_nonzero", v.d24_nonzero},
                            {"d21_nonzero", v.d21_nonzero},
                            {"all_invariants_zero", v.all_invariants_zero},
                            {"family", v.family}};
    }
    p = apply_mode(p, g);
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot write " + path);
    }
    emit(file, state_to_json(p));
    report["embedding"] = type;
    report["state"] = classify_report(p, false, input);
    err << input << ": " << report["state"]["class"]["label"].get<std::string>() << '\n';
    emit(out, report);
    return exit_ok;
}

int cmd_rdm(const std::string& input, const Globals& g, std::ostream& out)
{
    const AltTensor p = apply_mode(load_state(input).state, g);
    if (p.dimension() > 7) {
        throw InputError("field dimension must be 6 or 7 for occupation constraints");
    }
    if (p.is_zero()) {
        throw InputError("field amplitudes describes the zero state");
    }
    json report = {{"tool_version", tool_version},
                   {"arithmetic", mode_name(p.mode())},
                   {"input", {{"source", input}, {"dimension", p.dimension()}}},
                   {"pinning", pinning_report(p)}};
    emit(out, report);
    return exit_ok;
}

json selfcheck_report(bool& all_pass)
{
    json checks = json::array();
    auto record = [&](const std::string& name, std::size_t passed, std::size_t total) {
        checks.push_back({{"name", name}, {"passed", passed}, {"total", total}});
        all_pass = all_pass && passed == total;
    };
    std::size_t ok = 0;
    const std::size_t cases = 40;
    for (std::uint64_t s = 1; s <= cases; ++s) {
        const int n = 3 + static_cast<int>(s % 4);
        const AltTensor a = random_state(n, 1, s).with_variance(Variance::vector);
        const AltTensor p = random_state(n, 3, s + 1000);
        ok += interior(a, p) == brute_interior(FullTensor::from_alt(a), FullTensor::from_alt(p)).to_alt();
    }
    record("interior product", ok, cases);
    ok = 0;
    for (std::uint64_t s = 1; s <= cases; ++s) {
        const int n = 4 + static_cast<int>(s % 3);
        const AltTensor a = random_state(n, 2, s);
        const AltTensor b = random_state(n, 1 + static_cast<int>(s % 2), s + 1000);
        ok += wedge(a, b) == brute_wedge(FullTensor::from_alt(a), FullTensor::from_alt(b)).to_alt();
    }
    record("wedge product", ok, cases);
    ok = 0;
    for (std::uint64_t s = 1; s <= cases; ++s) {
        const int n = 3 + static_cast<int>(s % 4);
        const AltTensor r = random_state(n, 1 + static_cast<int>(s % 3), s);
        ok += star(r).coefficients() == brute_star(FullTensor::from_alt(r)).to_alt().coefficients();
    }
    record("star", ok, cases);
    ok = 0;
    const std::size_t quads = 5;
    for (std::uint64_t s = 1; s <= quads; ++s) {
        const std::vector<mpq_class> v = {mpq_class(static_cast<long>(s)), mpq_class(1, static_cast<long>(s + 1)),
                                          mpq_class(-2, 3), mpq_class(static_cast<long>(s % 3))};
        const NineJs direct = nine_js(semisimple_state(v[0], v[1], v[2], v[3]));
        const NineJs closed = closed_form_js(v[0], v[1], v[2], v[3]);
        ok += direct.j12 == closed.j12 && direct.j18 == closed.j18 && direct.j24 == closed.j24 &&
              direct.j30 == closed.j30;
    }
    record("nine-mode closed forms", ok, quads);
    ok = 0;
    for (std::uint64_t s = 1; s <= cases; ++s) {
        const AltTensor p = random_state(6, 3, s);
        const Scalar d = quartic_d(p);
        ok += d == quartic_d(p, QuarticRoute::freudenthal_block) && d == quartic_d(p, QuarticRoute::pairing);
    }
    record("quartic invariant routes", ok, cases);
    ok = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;
    for (int n = 6; n <= 8; ++n) {
        for (const auto& label : canonical_labels(n)) {
            ++total;
            const AltTensor p = slocc_apply(random_invertible(n, total), canonical_state(n, label));
            const bool real = is_real_label(label);
            const std::string found = classify(p, real).label;
            if (found == classified_label(n, label, real)) {
                ++ok;
            } else {
                failures.push_back(std::to_string(n) + " " + label + " -> " + found);
            }
        }
    }
    record("canonical round trip", ok, total);
    checks.back()["failures"] = failures;
    return {{"tool_version", tool_version}, {"checks", checks}, {"pass", all_pass}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Classification of three-fermion states on six to nine modes"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--mode", g.mode, "Arithmetic: exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_flag("--json", g.json_output, "Also print produced state files on standard output");
    app.add_option("--seed", g.seed, "Seed for random states and transforms");

    std::vector<std::string> inputs;
    bool real = false;
    auto* classify_cmd = app.add_subcommand("classify", "Classify states and report invariants");
    classify_cmd->add_option("--input", inputs, "State files")->required();
    classify_cmd->add_flag("--real", real, "Use the real classification");

    int dim = 0;
    std::string label;
    std::string params;
    std::string out_path;
    auto* canonical_cmd = app.add_subcommand("canonical", "Write a canonical representative");
    canonical_cmd->add_option("--dim", dim, "Number of modes")->required();
    canonical_cmd->add_option("--class", label, "Class or family label")->required();
    canonical_cmd->add_option("--params", params, "Comma separated family parameters");
    canonical_cmd->add_option("--out", out_path, "Output state file");

    std::string slocc_of;
    auto* random_cmd = app.add_subcommand("random", "Write a random state or a random transform of a state");
    random_cmd->add_option("--dim", dim, "Number of modes");
    random_cmd->add_option("--seed", g.seed, "Seed");
    random_cmd->add_option("--slocc-of", slocc_of, "State file to transform");
    random_cmd->add_option("--out", out_path, "Output state file");

    std::string type;
    std::string input;
    auto* embed_cmd = app.add_subcommand("embed", "Embed three qubits or three qutrits");
    embed_cmd->add_option("--type", type, "qubit3 or qutrit3")->required()->check(CLI::IsMember({"qubit3", "qutrit3"}));
    embed_cmd->add_option("--input", input, "Amplitude file")->required();
    embed_cmd->add_option("--out", out_path, "Output state file")->required();

    auto* rdm_cmd = app.add_subcommand("rdm", "Occupation spectrum and pinning analysis");
    rdm_cmd->add_option("--input", input, "State file")->required();

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Compare fast routines with literal oracles");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        const int code = app.exit(e, help, err);
        out << help.str();
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*classify_cmd) {
            return cmd_classify(inputs, real, g, out, err);
        }
        if (*canonical_cmd) {
            return cmd_canonical(dim, label, params, out_path, g, out, err);
        }
        if (*random_cmd) {
            if (slocc_of.empty() && dim == 0) {
                throw InputError("random needs --dim or --slocc-of");
            }
            return cmd_random(dim, slocc_of, out_path, g, out);
        }
        if (*embed_cmd) {
            return cmd_embed(type, input, out_path, g, out, err);
        }
        if (*rdm_cmd) {
            return cmd_rdm(input, g, out);
        }
        if (*selfcheck_cmd) {
            bool pass = true;
            emit(out, selfcheck_report(pass));
            return pass ? exit_ok : 1;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return exit_input_error;
}

}  // namespace trifermion::cli
