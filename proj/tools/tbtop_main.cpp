// tbtop: exact character arithmetic, convergence certificates, and a finite
// abelian group lab over one JSON-reporting command line.

#include "tbtop/budget.hpp"
#include "tbtop/errors.hpp"
#include "tbtop/ops.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using tbtop::InputError;
using tbtop::json;

json parse_json_arg(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(field + ": invalid JSON (" + e.what() + ")");
  }
}

std::uint64_t parse_u64_arg(const std::string& text, const std::string& field) {
  if (text.empty()) throw InputError(field + ": empty integer");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw InputError(field + ": invalid integer '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (...) {
    throw InputError(field + ": integer out of range '" + text + "'");
  }
}

/// "dsum2" -> constant order schema; raw JSON passes through.
json parse_ambient_arg(const std::string& text) {
  if (!text.empty() && text[0] == '{') return parse_json_arg(text, "ambient");
  if (text.rfind("dsum", 0) == 0) {
    json schema;
    schema["kind"] = "constant";
    schema["p"] = parse_u64_arg(text.substr(4), "ambient");
    schema["r"] = 1;
    return schema;
  }
  throw InputError("ambient: expected dsum<p>, cyclic<n>, int, pruefer<p>, "
                   "or an order-schema JSON object");
}

std::vector<std::uint64_t> split_u64_list(const std::string& text,
                                          const std::string& field) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    out.push_back(parse_u64_arg(item, field));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Compact index-set grammar: "fac:all", "fac:members:1,2,6",
/// "fac:congruence:m,r", "finite:1,3", "s:arith:a,d:<rule>",
/// "s:factorials:<rule>", "s:naturals:<rule>"; raw JSON passes through.
json parse_index_set_arg(const std::string& text) {
  if (!text.empty() && text[0] == '{') return parse_json_arg(text, "index-set");

  auto rule_from = [](const std::string& spec) {
    json rule;
    if (spec == "all") {
      rule["kind"] = "all";
    } else if (spec.rfind("congruence:", 0) == 0) {
      auto parts = split_u64_list(spec.substr(11), "index-set rule");
      if (parts.size() != 2)
        throw InputError("index-set: congruence needs modulus,residue");
      rule["kind"] = "congruence";
      rule["mod"] = parts[0];
      rule["residue"] = parts[1];
    } else if (spec.rfind("members:", 0) == 0) {
      rule["kind"] = "members";
      rule["members"] = split_u64_list(spec.substr(8), "index-set members");
    } else {
      throw InputError("index-set: unknown rule '" + spec + "'");
    }
    return rule;
  };

  json set;
  if (text.rfind("finite:", 0) == 0) {
    set["kind"] = "finite";
    set["members"] = text.size() > 7
                         ? split_u64_list(text.substr(7), "index-set members")
                         : std::vector<std::uint64_t>{};
    return set;
  }
  if (text.rfind("fac:", 0) == 0) {
    set["kind"] = "subsetOfFac";
    set["rule"] = rule_from(text.substr(4));
    return set;
  }
  if (text.rfind("s:", 0) == 0) {
    std::string rest = text.substr(2);
    json base;
    std::string rule_spec;
    if (rest.rfind("arith:", 0) == 0) {
      std::size_t colon = rest.find(':', 6);
      if (colon == std::string::npos)
        throw InputError("index-set: s:arith:a,d needs a rule suffix");
      auto parts = split_u64_list(rest.substr(6, colon - 6), "index-set S");
      if (parts.size() != 2)
        throw InputError("index-set: s:arith needs first,step");
      base["kind"] = "arith";
      base["first"] = parts[0];
      base["step"] = parts[1];
      rule_spec = rest.substr(colon + 1);
    } else if (rest.rfind("factorials:", 0) == 0) {
      base["kind"] = "factorials";
      rule_spec = rest.substr(11);
    } else if (rest.rfind("naturals:", 0) == 0) {
      base["kind"] = "naturals";
      rule_spec = rest.substr(9);
    } else {
      throw InputError("index-set: unknown base set in '" + text + "'");
    }
    set["kind"] = "subsetOfS";
    set["S"] = std::move(base);
    set["rule"] = rule_from(rule_spec);
    return set;
  }
  throw InputError("index-set: cannot parse '" + text + "'");
}

/// Sequence digit rules: "const:v", "periodic:v1,v2,...", "alt" (1, p-1).
json parse_seq_digits_arg(const std::string& text, std::uint64_t p) {
  json digits;
  if (text.rfind("const:", 0) == 0) {
    digits["kind"] = "const";
    digits["v"] = parse_u64_arg(text.substr(6), "digits");
    return digits;
  }
  if (text.rfind("periodic:", 0) == 0) {
    digits["kind"] = "periodic";
    digits["values"] = split_u64_list(text.substr(9), "digits");
    return digits;
  }
  if (text == "alt") {
    digits["kind"] = "periodic";
    digits["values"] = std::vector<std::uint64_t>{1, p - 1};
    return digits;
  }
  if (!text.empty() && text[0] == '{') return parse_json_arg(text, "digits");
  throw InputError("digits: expected const:<v>, periodic:<v,..>, or alt");
}

/// Element argument against a declared ambient: support maps for direct
/// sums, integers for Z, a/p^n rationals for Pruefer groups, k for cyclic.
json parse_element_arg(const std::string& text, const std::string& ambient) {
  if (!text.empty() && text[0] == '{') {
    json parsed = parse_json_arg(text, "element");
    if (parsed.contains("kind")) return parsed;
    // A bare support map needs the ambient flag.
    if (ambient.empty())
      throw InputError("element: support maps need --ambient");
    json element;
    element["kind"] = "dsum";
    element["orders"] = parse_ambient_arg(ambient);
    element["support"] = std::move(parsed);
    return element;
  }
  if (ambient == "int" || ambient.empty()) {
    json element;
    element["kind"] = "int";
    element["v"] = text;
    return element;
  }
  if (ambient.rfind("pruefer", 0) == 0) {
    std::uint64_t p = parse_u64_arg(ambient.substr(7), "ambient");
    auto slash = text.find('/');
    json element;
    element["kind"] = "pruefer";
    element["p"] = p;
    if (slash == std::string::npos) {
      element["a"] = text;
      element["n"] = 0;
      return element;
    }
    tbtop::BigInt den =
        tbtop::parse_bigint(text.substr(slash + 1), "element");
    std::uint64_t n = 0;
    while (den > 1 && den % p == 0) {
      den /= p;
      ++n;
    }
    if (den != 1)
      throw InputError("element: denominator is not a power of p");
    element["a"] = text.substr(0, slash);
    element["n"] = n;
    return element;
  }
  if (ambient.rfind("cyclic", 0) == 0) {
    json element;
    element["kind"] = "cyclic";
    element["k"] = text;
    element["n"] = ambient.substr(6);
    return element;
  }
  throw InputError("element: cannot parse '" + text + "' for ambient '" +
                   ambient + "'");
}

void print_human(const json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        std::cout << prefix << it.key() << ":\n";
        print_human(it.value(), prefix + "  ");
      } else {
        std::cout << prefix << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_object() || item.is_array()) {
        std::cout << prefix << "-\n";
        print_human(item, prefix + "  ");
      } else {
        std::cout << prefix << "- " << item.dump() << "\n";
      }
    }
  } else {
    std::cout << prefix << value.dump() << "\n";
  }
}

int emit_and_exit_code(const std::string& command, const json& params,
                       bool as_json, bool require_certified) {
  json report = tbtop::ops::run_report(command, params);
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    print_human(report["outputs"], "");

  const json& outputs = report["outputs"];
  if (outputs.contains("certificate")) {
    std::string verdict = outputs["certificate"]["verdict"].get<std::string>();
    if (verdict == "refuted") return 2;
    if (verdict == "evidence_only" && require_certified) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters, certified convergence, and finite abelian "
               "group computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tbtop::ops::kVersion);

  bool as_json = false;
  bool require_certified = false;
  app.add_flag("--json", as_json, "emit the full JSON run report");
  app.add_flag("--require-certified", require_certified,
               "exit 3 when the verdict is evidence_only");

  std::string arg_character, arg_element, arg_precision, arg_sequence;
  std::string arg_theorem, arg_digits, arg_index_set, arg_terms;
  std::string arg_thresholds, arg_bound, arg_ambient, arg_x, arg_y;
  std::string arg_h1, arg_h2, arg_matrix, arg_relations, arg_orders;
  std::string arg_subgroup, arg_images, arg_characters, arg_set, arg_S;
  std::string arg_conditions;
  std::uint64_t arg_p = 2, arg_n_max = 7, arg_window = 8, arg_count = 8;
  std::uint64_t arg_prefix = 16, arg_generators = 0;
  std::uint64_t arg_search_bound = tbtop::budget();
  std::uint64_t arg_scan_n_max = 12;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a character on an element");
  eval_cmd->add_option("--character", arg_character, "character JSON")->required();
  eval_cmd->add_option("--element", arg_element, "element JSON")->required();
  eval_cmd->add_option("--precision", arg_precision,
                       "interval radius for series rotations");

  auto* certify_cmd =
      app.add_subcommand("certify", "produce a convergence certificate");
  certify_cmd->add_option("--theorem", arg_theorem, "5.1 | 5.2 | comb | scan")
      ->required();
  certify_cmd->add_option("--p", arg_p, "prime for 5.2 shorthand inputs");
  certify_cmd->add_option("--digits", arg_digits,
                          "sequence digit rule (const:v | periodic:.. | alt)");
  certify_cmd->add_option("--index-set", arg_index_set,
                          "character index set (fac:all, finite:1,3, ...)");
  certify_cmd->add_option("--character", arg_character, "character JSON");
  certify_cmd->add_option("--sequence", arg_sequence, "sequence JSON");
  certify_cmd->add_option("--n-max", arg_n_max, "last checked index");
  certify_cmd->add_option("--window", arg_window,
                          "verification window for 5.1");
  certify_cmd->add_option("--terms", arg_terms,
                          "combination terms JSON [{m, character}, ...]");
  certify_cmd->add_option("--thresholds", arg_thresholds,
                          "scan thresholds JSON [{from, bound}, ...]");
  certify_cmd->add_option("--bound", arg_bound,
                          "scan shorthand: single declared bound");
  certify_cmd->add_option("--precision", arg_precision,
                          "scan precision for series rotations");

  auto* separate_cmd =
      app.add_subcommand("separate", "find a character separating two points");
  separate_cmd->add_option("--ambient", arg_ambient,
                           "dsum<p> | int | pruefer<p> | cyclic<n> | JSON");
  separate_cmd->add_option("--x", arg_x, "first element")->required();
  separate_cmd->add_option("--y", arg_y, "second element")->required();

  auto* distinguish_cmd = app.add_subcommand(
      "distinguish", "find an element separating two sum characters");
  distinguish_cmd->add_option("--h1", arg_h1, "first character JSON")->required();
  distinguish_cmd->add_option("--h2", arg_h2, "second character JSON")->required();
  distinguish_cmd->add_option("--bound", arg_search_bound,
                              "index search bound");

  auto* generate_cmd =
      app.add_subcommand("generate", "generate a sequence prefix");
  generate_cmd->add_option("--sequence", arg_sequence, "sequence JSON")
      ->required();
  generate_cmd->add_option("--count", arg_count, "number of terms");

  auto* validate_cmd = app.add_subcommand(
      "validate", "validate sequence hypotheses (5.1 conditions or growth)");
  validate_cmd->add_option("--conditions", arg_conditions, "5.1 | growth")
      ->required();
  validate_cmd->add_option("--sequence", arg_sequence, "sequence JSON")
      ->required();
  validate_cmd->add_option("--set", arg_set, "index set for 5.1");
  validate_cmd->add_option("--S", arg_S, "countable set JSON for 5.1");
  validate_cmd->add_option("--prefix", arg_prefix, "terms to inspect");

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix");
  snf_cmd->add_option("--matrix", arg_matrix, "matrix JSON")->required();

  auto* quotient_cmd = app.add_subcommand(
      "quotient", "invariant factors of Z^g modulo integer relations");
  quotient_cmd->add_option("--generators", arg_generators, "generator count")
      ->required();
  quotient_cmd->add_option("--relations", arg_relations, "relations matrix JSON");
  quotient_cmd->add_option("--p", arg_p, "also report the p-component");

  auto* subgroups_cmd = app.add_subcommand(
      "subgroups", "enumerate subgroups between H and K");
  subgroups_cmd->add_option("--orders", arg_orders, "cyclic orders JSON")
      ->required();
  subgroups_cmd->add_option("--subgroup", arg_subgroup,
                            "generators of H (JSON tuples)");

  auto* thm17_cmd = app.add_subcommand(
      "thm17", "subgroup family from the cyclic factors of K/H");
  thm17_cmd->add_option("--orders", arg_orders, "cyclic orders JSON")->required();
  thm17_cmd->add_option("--subgroup", arg_subgroup,
                        "generators of H (JSON tuples)");

  auto* extend_cmd = app.add_subcommand(
      "extend", "extend a subgroup character to the whole group");
  extend_cmd->add_option("--orders", arg_orders, "cyclic orders JSON")->required();
  extend_cmd->add_option("--subgroup", arg_subgroup,
                         "generators of A (JSON tuples)")->required();
  extend_cmd->add_option("--images", arg_images,
                         "character images on the generators")->required();

  auto* dualcheck_cmd = app.add_subcommand(
      "dualcheck", "point separation vs dual generation for a finite group");
  dualcheck_cmd->add_option("--orders", arg_orders, "cyclic orders JSON")
      ->required();
  dualcheck_cmd->add_option("--characters", arg_characters,
                            "family of characters (image arrays)")->required();

  // Keep --n-max available on certify for scans as well.
  certify_cmd->add_option("--scan-n-max", arg_scan_n_max,
                          "last scanned index (scan theorem)");

  CLI11_PARSE(app, argc, argv);

  try {
    json params;
    std::string command;

    if (app.got_subcommand(eval_cmd)) {
      command = "eval";
      params["character"] = parse_json_arg(arg_character, "character");
      params["element"] = parse_json_arg(arg_element, "element");
      if (!arg_precision.empty()) params["precision"] = arg_precision;
    } else if (app.got_subcommand(certify_cmd)) {
      command = "certify";
      params["theorem"] = arg_theorem;
      if (arg_theorem == "5.2") {
        if (!arg_character.empty()) {
          params["character"] = parse_json_arg(arg_character, "character");
        } else {
          json character;
          character["kind"] = "padic";
          character["p"] = arg_p;
          json digits;
          digits["kind"] = "indicator";
          digits["set"] = parse_index_set_arg(
              arg_index_set.empty() ? "fac:all" : arg_index_set);
          character["digits"] = std::move(digits);
          params["character"] = std::move(character);
        }
        if (!arg_sequence.empty()) {
          params["sequence"] = parse_json_arg(arg_sequence, "sequence");
        } else {
          json sequence;
          sequence["kind"] = "factorialPruefer";
          sequence["p"] = arg_p;
          sequence["digits"] = parse_seq_digits_arg(
              arg_digits.empty() ? "const:1" : arg_digits, arg_p);
          params["sequence"] = std::move(sequence);
        }
        params["nMax"] = arg_n_max;
      } else if (arg_theorem == "5.1") {
        params["character"] = parse_json_arg(arg_character, "character");
        params["sequence"] = parse_json_arg(arg_sequence, "sequence");
        params["window"] = arg_window;
      } else if (arg_theorem == "comb") {
        params["sequence"] = parse_json_arg(arg_sequence, "sequence");
        params["terms"] = parse_json_arg(arg_terms, "terms");
        params["nMax"] = arg_n_max;
        params["window"] = arg_window;
      } else if (arg_theorem == "scan") {
        params["character"] = parse_json_arg(arg_character, "character");
        params["sequence"] = parse_json_arg(arg_sequence, "sequence");
        params["nMax"] = arg_scan_n_max;
        if (!arg_thresholds.empty())
          params["thresholds"] = parse_json_arg(arg_thresholds, "thresholds");
        else if (!arg_bound.empty()) {
          json step;
          step["from"] = 0;
          step["bound"] = arg_bound;
          params["thresholds"] = json::array({step});
        }
        if (!arg_precision.empty()) params["precision"] = arg_precision;
      } else {
        throw InputError("theorem: expected one of 5.1, 5.2, comb, scan");
      }
    } else if (app.got_subcommand(separate_cmd)) {
      command = "separate";
      params["x"] = parse_element_arg(arg_x, arg_ambient);
      params["y"] = parse_element_arg(arg_y, arg_ambient);
    } else if (app.got_subcommand(distinguish_cmd)) {
      command = "distinguish";
      params["h1"] = parse_json_arg(arg_h1, "h1");
      params["h2"] = parse_json_arg(arg_h2, "h2");
      params["bound"] = arg_search_bound;
    } else if (app.got_subcommand(generate_cmd)) {
      command = "generate";
      params["sequence"] = parse_json_arg(arg_sequence, "sequence");
      params["count"] = arg_count;
    } else if (app.got_subcommand(validate_cmd)) {
      command = "validate";
      params["conditions"] = arg_conditions;
      params["sequence"] = parse_json_arg(arg_sequence, "sequence");
      if (!arg_set.empty()) params["set"] = parse_index_set_arg(arg_set);
      if (!arg_S.empty()) params["S"] = parse_json_arg(arg_S, "S");
      params["prefix"] = arg_prefix;
    } else if (app.got_subcommand(snf_cmd)) {
      command = "snf";
      params["matrix"] = parse_json_arg(arg_matrix, "matrix");
    } else if (app.got_subcommand(quotient_cmd)) {
      command = "quotient";
      params["generators"] = arg_generators;
      if (!arg_relations.empty())
        params["relations"] = parse_json_arg(arg_relations, "relations");
      if (quotient_cmd->count("--p") > 0) params["p"] = arg_p;
    } else if (app.got_subcommand(subgroups_cmd)) {
      command = "subgroups";
      params["orders"] = parse_json_arg(arg_orders, "orders");
      if (!arg_subgroup.empty())
        params["subgroup"] = parse_json_arg(arg_subgroup, "subgroup");
    } else if (app.got_subcommand(thm17_cmd)) {
      command = "thm17";
      params["orders"] = parse_json_arg(arg_orders, "orders");
      if (!arg_subgroup.empty())
        params["subgroup"] = parse_json_arg(arg_subgroup, "subgroup");
    } else if (app.got_subcommand(extend_cmd)) {
      command = "extend";
      params["orders"] = parse_json_arg(arg_orders, "orders");
      params["subgroup"] = parse_json_arg(arg_subgroup, "subgroup");
      params["images"] = parse_json_arg(arg_images, "images");
    } else if (app.got_subcommand(dualcheck_cmd)) {
      command = "dualcheck";
      params["orders"] = parse_json_arg(arg_orders, "orders");
      params["characters"] = parse_json_arg(arg_characters, "characters");
    }

    return emit_and_exit_code(command, params, as_json, require_certified);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tbtop::OpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
