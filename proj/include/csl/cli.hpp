#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csl/census.hpp"
#include "csl/planar.hpp"
#include "csl/serialize.hpp"

// Batch CLI over the library. Exit codes are exactly three: 0 for
// mathematical acceptance, 1 for a clean mathematical rejection, 2 for
// input or usage errors. Structured (JSON) output is the default; human
// output renders the same report line by line, so both modes carry
// identical content.

namespace csl {

namespace cli_detail {

inline std::string json_scalar_to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

inline bool is_scalar_array(const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
}

inline void render_human(const json& doc, std::ostream& out, const std::string& indent = "") {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_human(value, out, indent + "  ");
        } else if (value.is_array() && !value.empty() && !is_scalar_array(value)) {
            out << indent << key << ":\n";
            std::size_t i = 0;
            for (const json& elem : value) {
                if (elem.is_array() && is_scalar_array(elem)) {
                    out << indent << "  ";
                    for (std::size_t j = 0; j < elem.size(); ++j)
                        out << (j ? " " : "") << json_scalar_to_text(elem[j]);
                    out << "\n";
                } else {
                    out << indent << "  " << key << "[" << i << "]:\n";
                    render_human(elem, out, indent + "    ");
                }
                ++i;
            }
        } else if (value.is_array()) {
            out << indent << key << ":";
            for (const json& elem : value) out << " " << json_scalar_to_text(elem);
            out << "\n";
        } else {
            out << indent << key << ": " << json_scalar_to_text(value) << "\n";
        }
    }
}

inline void emit(const json& report, const std::string& mode, std::ostream& out) {
    if (mode == "human")
        render_human(report, out);
    else
        out << report.dump(2) << "\n";
}

inline json witness_to_json(const IrrationalWitness& w) {
    json doc;
    doc["row"] = to_text(Int(w.row));
    doc["col"] = to_text(Int(w.col));
    doc["value"] = to_text(w.value);
    return doc;
}

// Shared by `check` and its sigma-only alias `index`.
inline int run_check(const std::string& lattice_path, const std::string& matrix_path,
                     const std::string& mode, bool sigma_only, std::ostream& out) {
    Lattice lattice(read_matrix_file(lattice_path));
    ExactMatrix t = read_matrix_file(matrix_path);

    bool orthogonal = t.is_square() && t.rows() == lattice.dimension() && is_orthogonal(t);
    MembershipResult res = csg_member(lattice, t);
    bool csg = res.accepted();
    bool oc = csg && orthogonal;

    json report;
    report["command"] = sigma_only ? "index" : "check";
    if (!sigma_only) {
        report["n"] = to_text(Int(lattice.dimension()));
        if (lattice.context().is_quadratic()) report["d"] = lattice.context().radicand();
        report["commensurate"] = csg;
        report["csg_member"] = csg;
        report["orthogonal"] = orthogonal;
        report["oc_member"] = oc;
    }
    if (csg) {
        if (sigma_only)
            report["sigma"] = to_text(res.certificate->sigma);
        else
            report["certificate"] = certificate_to_json(*res.certificate);
    } else {
        report["result"] = "not_coincidence";
        report["witness"] = witness_to_json(*res.witness);
    }
    emit(report, mode, out);
    return oc ? 0 : 1;
}

inline int run_decompose(const std::string& lattice_path, const std::string& matrix_path,
                         const std::string& mode, std::ostream& out) {
    Lattice lattice(read_matrix_file(lattice_path));
    ExactMatrix r = read_matrix_file(matrix_path);

    json report;
    report["command"] = "decompose";

    ReflectivityReport refl = reflectivity(lattice);
    if (!refl.reflective) {
        const ReflectivityWitness& w = *refl.witness;
        report["result"] = "not_reflective_lattice";
        json wj;
        wj["i"] = to_text(Int(w.i));
        wj["j"] = to_text(Int(w.j));
        wj["k"] = to_text(Int(w.k));
        wj["ratio"] = to_text(w.ratio);
        report["witness"] = std::move(wj);
        emit(report, mode, out);
        return 1;
    }
    MembershipResult res = oc_member(lattice, r);
    if (!res.accepted()) {
        report["result"] = res.status == Membership::not_orthogonal ? "not_orthogonal"
                                                                    : "not_coincidence";
        if (res.witness) report["witness"] = witness_to_json(*res.witness);
        emit(report, mode, out);
        return 1;
    }

    ReflectionSequence seq = decompose(lattice, r);
    bool verified = verify(seq, lattice);
    report["k"] = to_text(Int(seq.vectors.size()));
    json vectors = json::array();
    json steps = json::array();
    for (const PrimitiveLatticeVector& v : seq.vectors) {
        json coords = json::array();
        for (const Int& c : v.coords) coords.push_back(to_text(c));
        vectors.push_back(std::move(coords));
        steps.push_back(matrix_to_json(reflection_matrix(v.ambient)));
    }
    report["vectors"] = std::move(vectors);
    report["reflections"] = std::move(steps);
    report["verified"] = verified;
    report["sigma"] = to_text(res.certificate->sigma);
    emit(report, mode, out);
    return verified ? 0 : 1;
}

inline int run_classify2d(const std::string& a_text, const std::string& b2_text, long long d,
                          int spot_trials, const std::string& mode, std::ostream& out) {
    FieldContext ctx = d == 0 ? FieldContext::rationals() : FieldContext::quadratic(d);
    FieldElement a = parse_scalar(a_text);
    FieldElement b2 = parse_scalar(b2_text);
    a = a.coerced(unify(a.context(), ctx));
    b2 = b2.coerced(unify(b2.context(), ctx));
    PlanarFamilyParams params(std::move(a), std::move(b2)); // throws invalid_params

    PlanarClassification cls = classify(params);
    json report;
    report["command"] = "classify2d";
    report["case"] = to_text(Int(static_cast<int>(cls.which)));
    switch (cls.which) {
    case PlanarCase::reflection_generated:
        report["case_name"] = "reflection_generated";
        report["group"] = "generated by the coincidence reflections of lattice vectors";
        break;
    case PlanarCase::z2xz2_fix_a1:
        report["case_name"] = "z2xz2_fix_a1";
        report["group"] = "{I, -I, R1, -R1} = Z2 x Z2, R1 the reflection by a1";
        break;
    case PlanarCase::z2xz2_fix_a2:
        report["case_name"] = "z2xz2_fix_a2";
        report["group"] = "{I, -I, R2, -R2} = Z2 x Z2, R2 the reflection by a2";
        break;
    case PlanarCase::center_only:
        report["case_name"] = "center_only";
        report["group"] = "{I, -I} = Z2";
        break;
    }
    json gens = json::array();
    for (const ExactMatrix& g : cls.generators) gens.push_back(matrix_to_json(g)["rows"]);
    report["generators"] = std::move(gens);

    if (spot_trials > 0) {
        SpotCheckReport sc = spot_check(params, spot_trials); // throws unrepresentable_b
        json scj;
        scj["trials"] = to_text(Int(sc.trials));
        scj["reflective_vectors"] = to_text(Int(sc.reflective_vectors));
        scj["predicted_reflective"] = to_text(Int(sc.predicted_reflective));
        scj["rotations_tested"] = to_text(Int(sc.rotations_tested));
        scj["rotations_accepted"] = to_text(Int(sc.rotations_accepted));
        scj["consistent"] = sc.consistent;
        report["spot_check"] = std::move(scj);
    }
    emit(report, mode, out);
    return 0;
}

inline int run_census(int rounds, const std::string& mode, std::ostream& out) {
    std::vector<CensusRound> rows = growth_run(rounds);
    json report;
    report["command"] = "census";
    json rounds_json = json::array();
    for (const CensusRound& row : rows) {
        json rj;
        json budget = json::array();
        for (const Int& p : row.budget.primes) budget.push_back(to_text(p));
        rj["budget"] = std::move(budget);
        rj["y"] = to_text(row.witness.y);
        rj["new_prime"] = to_text(row.witness.prime);
        rj["reflection"] = matrix_to_json(row.reflection)["rows"];
        rounds_json.push_back(std::move(rj));
    }
    report["rounds"] = std::move(rounds_json);
    emit(report, mode, out);
    return 0;
}

} // namespace cli_detail

// args exclude the program name. Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact coincidence-symmetry toolkit for n-dimensional lattices"};
    app.require_subcommand(1);

    std::string lattice_path, matrix_path;
    std::string mode = "structured";
    std::string a_text, b2_text;
    long long radicand = 0;
    int spot_trials = 0;
    int rounds = 0;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", mode, "output mode")
            ->check(CLI::IsMember({"structured", "human"}));
    };
    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--lattice", lattice_path, "lattice file (matrix document)")->required();
        cmd->add_option("--matrix", matrix_path, "candidate map file")->required();
        add_output(cmd);
    };

    CLI::App* check = app.add_subcommand("check", "decide membership and the coincidence index");
    add_pair(check);
    CLI::App* index = app.add_subcommand("index", "report the coincidence index only");
    add_pair(index);
    CLI::App* decomp =
        app.add_subcommand("decompose", "factor a coincidence isometry into lattice reflections");
    add_pair(decomp);
    CLI::App* classify =
        app.add_subcommand("classify2d", "classify OC(L) for the planar family [[a,1],[0,b]]");
    classify->add_option("--a", a_text, "parameter a (SCALAR)")->required();
    classify->add_option("--b2", b2_text, "parameter b^2 (SCALAR)")->required();
    classify->add_option("--d", radicand, "quadratic radicand (0 = rational)");
    classify->add_option("--spot-check", spot_trials, "sample N vectors/rotations");
    add_output(classify);
    CLI::App* census = app.add_subcommand("census", "prime-budget growth rounds");
    census->add_option("--rounds", rounds, "number of rounds")->required();
    add_output(census);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(check))
            return cli_detail::run_check(lattice_path, matrix_path, mode, false, out);
        if (app.got_subcommand(index))
            return cli_detail::run_check(lattice_path, matrix_path, mode, true, out);
        if (app.got_subcommand(decomp))
            return cli_detail::run_decompose(lattice_path, matrix_path, mode, out);
        if (app.got_subcommand(classify))
            return cli_detail::run_classify2d(a_text, b2_text, radicand, spot_trials, mode, out);
        if (app.got_subcommand(census)) {
            if (rounds < 1) {
                err << "error: --rounds must be >= 1\n";
                return 2;
            }
            return cli_detail::run_census(rounds, mode, out);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace csl
