#pragma once

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsemi/apery.hpp"
#include "numsemi/core.hpp"
#include "numsemi/enumerator.hpp"
#include "numsemi/generators.hpp"

namespace numsemi::cli {

enum class output_format { text, json };

namespace detail {

// Comma-separated naturals, no whitespace; the empty string is the empty list.
inline std::vector<nat> parse_csv(const std::string& text) {
    std::vector<nat> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        const std::string_view token(text.data() + pos, end - pos);
        nat value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw validation_error("expected a natural number, got '" + std::string(token) +
                                   "' in list '" + text + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Dispatches one invocation. Success output goes to `out` as a whole once
/// the command has finished, diagnostics go to `err`. Exit code 0 on
/// success, 2 for rejected input (usage or validation), 1 for anything else.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical semigroup invariants and constructions"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string generators_csv;
    std::string gaps_csv;
    std::string algorithm = "direct";
    nat n_value = 0;
    nat a_value = 0;
    nat x_value = 0;
    nat index_bound = 0;
    nat count = 0;
    std::optional<nat> max_iterations;

    auto* gaps_cmd =
        app.add_subcommand("gaps", "gaps list and invariants of the semigroup generated by a set");
    gaps_cmd->add_option("--generators", generators_csv, "comma-separated positive generators")
        ->required();

    auto* invariants_cmd =
        app.add_subcommand("invariants", "invariant report of the semigroup with the given gaps");
    invariants_cmd->add_option("--gaps", gaps_csv, "comma-separated gaps list")->required();

    auto* apery_cmd = app.add_subcommand("apery", "Apéry set with respect to n");
    apery_cmd->add_option("--gaps", gaps_csv, "comma-separated gaps list")->required();
    apery_cmd->add_option("-n", n_value, "modulus")->required();
    apery_cmd->add_option("--algorithm", algorithm, "direct (gap shifting) or residue (per class)")
        ->check(CLI::IsMember({"direct", "residue"}))
        ->capture_default_str();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "write member a as k*n + w with w in the Apéry set of n");
    decompose_cmd->add_option("--gaps", gaps_csv, "comma-separated gaps list")->required();
    decompose_cmd->add_option("-n", n_value, "nonzero member to decompose over")->required();
    decompose_cmd->add_option("-a", a_value, "member to decompose")->required();

    auto* member_cmd = app.add_subcommand("member", "test membership of x");
    member_cmd->add_option("--gaps", gaps_csv, "comma-separated gaps list")->required();
    member_cmd->add_option("-x", x_value, "value to test")->required();

    auto* small_cmd =
        app.add_subcommand("small-elements", "small elements of the semigroup generated by a set");
    small_cmd->add_option("--generators", generators_csv, "comma-separated positive generators")
        ->required();
    small_cmd->add_option("--max-iterations", max_iterations, "cap on search iterations");

    auto* enum_cmd = app.add_subcommand("enum-lists", "first multiplicity index lists for bound m");
    enum_cmd->add_option("-m", index_bound, "index bound")->required();
    enum_cmd->add_option("--count", count, "how many lists to emit")->required();

    auto* mgen_cmd = app.add_subcommand("mgen", "first linear combinations of the generators");
    mgen_cmd->add_option("--generators", generators_csv, "comma-separated positive generators")
        ->required();
    mgen_cmd->add_option("--count", count, "how many values to emit")->required();

    auto* genset_cmd =
        app.add_subcommand("generating-set", "generating set recovered through the Apéry set");
    genset_cmd->add_option("--gaps", gaps_csv, "comma-separated gaps list")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const output_format fmt =
        format_name == "json" ? output_format::json : output_format::text;
    using ordered_json = nlohmann::ordered_json;
    std::ostringstream body;

    try {
        if (app.got_subcommand(gaps_cmd)) {
            const generator_list gen = normalize_generators(detail::parse_csv(generators_csv), true);
            const gaps_list g = gaps_from_generators(gen);
            const invariant_report rep = compute_invariants(g);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["generators"] = gen.values();
                doc["gaps"] = g.values();
                doc["conductor"] = rep.conductor;
                doc["multiplicity"] = rep.multiplicity;
                doc["genus"] = rep.genus;
                doc["small_elements"] = rep.small_els.values();
                body << doc.dump() << '\n';
            } else {
                body << "gaps: " << format_semicolon_list(g.values()) << '\n'
                     << "conductor: " << rep.conductor << '\n'
                     << "multiplicity: " << rep.multiplicity << '\n'
                     << "genus: " << rep.genus << '\n'
                     << "small_elements: " << format_semicolon_list(rep.small_els.values()) << '\n';
            }
        } else if (app.got_subcommand(invariants_cmd)) {
            const gaps_list g = validate_gaps(detail::parse_csv(gaps_csv));
            const invariant_report rep = compute_invariants(g);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["gaps"] = g.values();
                doc["multiplicity"] = rep.multiplicity;
                doc["conductor"] = rep.conductor;
                if (rep.frobenius) doc["frobenius"] = *rep.frobenius;
                doc["genus"] = rep.genus;
                doc["small_elements"] = rep.small_els.values();
                body << doc.dump() << '\n';
            } else {
                body << "multiplicity: " << rep.multiplicity << '\n'
                     << "conductor: " << rep.conductor << '\n';
                if (rep.frobenius)
                    body << "frobenius: " << *rep.frobenius << '\n';
                else
                    body << "frobenius: none\n";
                body << "genus: " << rep.genus << '\n'
                     << "small_elements: " << format_semicolon_list(rep.small_els.values()) << '\n';
            }
        } else if (app.got_subcommand(apery_cmd)) {
            const gaps_list g = validate_gaps(detail::parse_csv(gaps_csv));
            const apery_list ap = algorithm == "residue"
                                      ? apery_residue(small_elements_from_gaps(g), n_value)
                                      : apery(g, n_value);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["gaps"] = g.values();
                doc["n"] = ap.modulus;
                doc["algorithm"] = algorithm;
                doc["apery"] = ap.elements;
                body << doc.dump() << '\n';
            } else {
                body << format_semicolon_list(ap.elements) << '\n';
            }
        } else if (app.got_subcommand(decompose_cmd)) {
            const gaps_list g = validate_gaps(detail::parse_csv(gaps_csv));
            const apery_decomposition d = apery_decompose(g, n_value, a_value);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["gaps"] = g.values();
                doc["n"] = n_value;
                doc["a"] = a_value;
                doc["k"] = d.k;
                doc["w"] = d.w;
                body << doc.dump() << '\n';
            } else {
                body << "k: " << d.k << '\n' << "w: " << d.w << '\n';
            }
        } else if (app.got_subcommand(member_cmd)) {
            const gaps_list g = validate_gaps(detail::parse_csv(gaps_csv));
            const bool member = is_member(g, x_value);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["gaps"] = g.values();
                doc["x"] = x_value;
                doc["member"] = member;
                body << doc.dump() << '\n';
            } else {
                body << (member ? "true" : "false") << '\n';
            }
        } else if (app.got_subcommand(small_cmd)) {
            const generator_list gen = normalize_generators(detail::parse_csv(generators_csv), true);
            const small_elements se = small_elements_from_generators(gen, max_iterations);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["generators"] = gen.values();
                doc["small_elements"] = se.values();
                body << doc.dump() << '\n';
            } else {
                body << format_semicolon_list(se.values()) << '\n';
            }
        } else if (app.got_subcommand(enum_cmd)) {
            lgen_stream cursor(index_bound);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["m"] = index_bound;
                doc["count"] = count;
                auto lists = ordered_json::array();
                for (nat k = 0; k < count; ++k) {
                    lists.push_back(cursor.current().indices());
                    cursor.advance();
                }
                doc["lists"] = std::move(lists);
                body << doc.dump() << '\n';
            } else {
                for (nat k = 0; k < count; ++k) {
                    body << cursor.current() << '\n';
                    cursor.advance();
                }
            }
        } else if (app.got_subcommand(mgen_cmd)) {
            const generator_list gen = normalize_generators(detail::parse_csv(generators_csv), false);
            lgen_stream cursor(gen.size() - 1);
            std::vector<nat> values;
            values.reserve(static_cast<std::size_t>(count));
            for (nat k = 0; k < count; ++k) {
                values.push_back(combination_value(gen, cursor.current()));
                cursor.advance();
            }
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["generators"] = gen.values();
                doc["count"] = count;
                doc["values"] = values;
                body << doc.dump() << '\n';
            } else {
                for (nat v : values) body << v << '\n';
            }
        } else if (app.got_subcommand(genset_cmd)) {
            const gaps_list g = validate_gaps(detail::parse_csv(gaps_csv));
            const generator_list gen = generating_set_from_gaps(g);
            if (fmt == output_format::json) {
                ordered_json doc;
                doc["gaps"] = g.values();
                doc["generators"] = gen.values();
                body << doc.dump() << '\n';
            } else {
                body << format_semicolon_list(gen.values()) << '\n';
            }
        }
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }

    out << body.str();
    return 0;
}

}  // namespace numsemi::cli
