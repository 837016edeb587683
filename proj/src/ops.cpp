#include "tbtop/ops.hpp"

#include "tbtop/budget.hpp"
#include "tbtop/errors.hpp"

namespace tbtop::ops {

namespace {

Rational param_rational(const json& params, const char* key,
                        const Rational& fallback) {
  if (!params.contains(key)) return fallback;
  const json& j = params[key];
  if (j.is_string()) return parse_rational(j.get<std::string>(), key);
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError(std::string(key) + ": expected a rational string");
}

std::uint64_t param_u64(const json& params, const char* key,
                        std::uint64_t fallback) {
  if (!params.contains(key)) return fallback;
  return get_u64(params[key], key);
}

FiniteGroup parse_finite_group(const json& params) {
  const json& arr = require_field(params, "orders", "params");
  if (!arr.is_array())
    throw InputError("orders: expected an array of cyclic orders");
  std::vector<std::uint64_t> orders;
  for (const auto& d : arr) orders.push_back(get_u64(d, "orders"));
  return FiniteGroup(std::move(orders));
}

Tuple parse_tuple(const json& j, const FiniteGroup& G,
                  const std::string& field) {
  if (!j.is_array() || j.size() != G.rank())
    throw InputError(field + ": expected a tuple of " +
                     std::to_string(G.rank()) + " coordinates");
  Tuple t;
  for (const auto& c : j) t.push_back(get_u64(c, field));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= G.orders()[i])
      throw InputError(field + ": coordinate " + std::to_string(i) +
                       " out of range");
  return t;
}

Subgroup parse_subgroup(const json& params, const FiniteGroup& G) {
  if (!params.contains("subgroup")) return trivial_subgroup(G);
  const json& arr = params["subgroup"];
  if (!arr.is_array())
    throw InputError("subgroup: expected an array of generator tuples");
  std::vector<Tuple> gens;
  for (const auto& g : arr) gens.push_back(parse_tuple(g, G, "subgroup"));
  return span(G, gens);
}

json eval_result_to_json(const EvalResult& value) {
  json out;
  if (const auto* exact = std::get_if<CirclePoint>(&value)) {
    out["value"] = exact->str();
    out["num"] = exact->num().str();
    out["den"] = exact->den().str();
    out["dist"] = to_string(exact->dist_to_zero());
  } else {
    const auto& interval = std::get<CircleInterval>(value);
    out["value"] = interval.center.str();
    out["radius"] = to_string(interval.radius);
    out["distUpper"] = to_string(interval.dist_upper());
    out["distLower"] = to_string(interval.dist_lower());
  }
  return out;
}

}  // namespace

json eval(const json& params) {
  AnyCharacter h = parse_character(require_field(params, "character", "params"));
  GroupElement x = parse_group_element(require_field(params, "element", "params"));
  Rational precision =
      param_rational(params, "precision", Rational(1, 1000000));
  return eval_result_to_json(eval_character(h, x, precision));
}

json certify(const json& params) {
  std::string theorem =
      require_field(params, "theorem", "params").get<std::string>();
  json out;
  if (theorem == "5.1") {
    AnyCharacter h =
        parse_character(require_field(params, "character", "params"));
    const auto* sum = std::get_if<SumCharacter>(&h);
    if (sum == nullptr)
      throw InputError("character: certify 5.1 needs a coordinate-sum "
                       "character");
    SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
    std::uint64_t window = param_u64(params, "window", 8);
    out["certificate"] = certificate_to_json(certify_thm51(*sum, seq, window));
    return out;
  }
  if (theorem == "5.2") {
    AnyCharacter h =
        parse_character(require_field(params, "character", "params"));
    const auto* padic = std::get_if<PadicCharacter>(&h);
    if (padic == nullptr)
      throw InputError("character: certify 5.2 needs a p-adic character");
    SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
    const auto* fac = std::get_if<FactorialPruefer>(&seq);
    if (fac == nullptr)
      throw InputError("sequence: certify 5.2 needs a factorialPruefer "
                       "sequence");
    std::uint64_t n_max = param_u64(params, "nMax", 7);
    out["certificate"] = certificate_to_json(certify_thm52(*padic, *fac, n_max));
    return out;
  }
  if (theorem == "comb") {
    SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
    const json& terms = require_field(params, "terms", "params");
    if (!terms.is_array() || terms.empty())
      throw InputError("terms: expected a nonempty array of {m, character}");
    std::uint64_t n_max = param_u64(params, "nMax", 7);
    std::uint64_t window = param_u64(params, "window", 8);
    std::vector<std::pair<BigInt, ConvergenceCertificate>> inputs;
    for (const auto& term : terms) {
      BigInt m = get_bigint(require_field(term, "m", "terms"), "terms.m");
      AnyCharacter h =
          parse_character(require_field(term, "character", "terms"));
      if (const auto* padic = std::get_if<PadicCharacter>(&h)) {
        const auto* fac = std::get_if<FactorialPruefer>(&seq);
        if (fac == nullptr)
          throw InputError("sequence: p-adic combination terms need a "
                           "factorialPruefer sequence");
        inputs.emplace_back(m, certify_thm52(*padic, *fac, n_max));
      } else if (const auto* sum = std::get_if<SumCharacter>(&h)) {
        inputs.emplace_back(m, certify_thm51(*sum, seq, window));
      } else {
        throw InputError("terms.character: combination terms must be sum or "
                         "p-adic characters");
      }
    }
    out["certificate"] = certificate_to_json(certify_combination(inputs));
    return out;
  }
  if (theorem == "scan") {
    AnyCharacter h =
        parse_character(require_field(params, "character", "params"));
    SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
    std::uint64_t n_max = param_u64(params, "nMax", 12);
    std::vector<ThresholdStep> thresholds;
    if (params.contains("thresholds"))
      thresholds = parse_thresholds(params["thresholds"]);
    Rational precision =
        param_rational(params, "precision", Rational(1, 1000000));
    out["certificate"] = certificate_to_json(
        empirical_scan(h, seq, n_max, std::move(thresholds), precision));
    return out;
  }
  throw InputError("theorem: expected one of 5.1, 5.2, comb, scan");
}

json separate(const json& params) {
  GroupElement x = parse_group_element(require_field(params, "x", "params"));
  GroupElement y = parse_group_element(require_field(params, "y", "params"));
  Character witness = separate_points(x, y);
  AnyCharacter h = std::visit(
      [](const auto& c) { return AnyCharacter(c); }, witness);
  json out;
  out["witness"] = character_to_json(h);
  out["valueAtX"] = eval_exact(h, x).str();
  out["valueAtY"] = eval_exact(h, y).str();
  return out;
}

json distinguish(const json& params) {
  AnyCharacter h1 = parse_character(require_field(params, "h1", "params"));
  AnyCharacter h2 = parse_character(require_field(params, "h2", "params"));
  const auto* s1 = std::get_if<SumCharacter>(&h1);
  const auto* s2 = std::get_if<SumCharacter>(&h2);
  if (s1 == nullptr || s2 == nullptr)
    throw InputError("h1/h2: distinguish works on coordinate-sum characters");
  std::uint64_t bound = param_u64(params, "bound", budget());
  DirectSumElement witness = distinguish_characters(*s1, *s2, bound);
  json out;
  out["witness"] = group_element_to_json(witness);
  out["valueUnderH1"] = eval_sum_character(*s1, witness).str();
  out["valueUnderH2"] = eval_sum_character(*s2, witness).str();
  return out;
}

json generate(const json& params) {
  SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
  std::uint64_t count = param_u64(params, "count", 8);
  json terms = json::array();
  for (const auto& e : tbtop::generate(seq, count))
    terms.push_back(group_element_to_json(e));
  json out;
  out["firstIndex"] = first_index(seq);
  out["terms"] = std::move(terms);
  return out;
}

json validate(const json& params) {
  std::string conditions =
      require_field(params, "conditions", "params").get<std::string>();
  SequenceSchema seq = parse_sequence(require_field(params, "sequence", "params"));
  std::uint64_t prefix = param_u64(params, "prefix", 16);
  json out;
  if (conditions == "5.1") {
    IndexSet S = params.contains("set")
                     ? parse_index_set(params["set"])
                     : IndexSet::subset_of(
                           parse_countable_set(
                               require_field(params, "S", "params")),
                           SubRule::all());
    Thm51Validation v = validate_thm51(seq, S, prefix);
    out["structural"] = v.structural;
    out["prefixVerified"] = v.prefix_verified;
    return out;
  }
  if (conditions == "growth") {
    GrowthClassification g = classify_growth(seq, prefix);
    out["raczkowski"] = g.raczkowski;
    out["barbieri"] = g.barbieri;
    out["ruleCertifiedRaczkowski"] = g.rule_certified_raczkowski;
    out["ruleCertifiedBarbieri"] = g.rule_certified_barbieri;
    return out;
  }
  throw InputError("conditions: expected 5.1 or growth");
}

json snf(const json& params) {
  IntMatrix m = parse_matrix(require_field(params, "matrix", "params"), "matrix");
  SnfResult result = smith_normal_form(m);
  json out;
  out["D"] = matrix_to_json(result.D);
  out["U"] = matrix_to_json(result.U);
  out["V"] = matrix_to_json(result.V);
  json diag = json::array();
  for (const auto& d : result.diagonal()) diag.push_back(d.str());
  out["diagonal"] = std::move(diag);
  return out;
}

json quotient(const json& params) {
  std::uint64_t generators =
      get_u64(require_field(params, "generators", "params"), "generators");
  FiniteAbelianPresentation pres;
  pres.generators = static_cast<std::size_t>(generators);
  if (params.contains("relations") && !params["relations"].empty())
    pres.relations = parse_matrix(params["relations"], "relations");
  InvariantFactors f = quotient_decomposition(pres);
  json out;
  out["factors"] = invariant_factors_to_json(f);
  try {
    RankProfile profile = ranks(f);
    json r;
    r["r0"] = profile.free_rank;
    json per_prime = json::object();
    for (const auto& [p, count] : profile.p_ranks)
      per_prime[p.str()] = count;
    r["rp"] = std::move(per_prime);
    r["total"] = profile.total;
    out["ranks"] = std::move(r);
  } catch (const OpError&) {
    // Factorization beyond the trial-division budget: ranks omitted.
  }
  if (params.contains("p")) {
    BigInt p = get_bigint(params["p"], "p");
    out["pComponent"] =
        invariant_factors_to_json(p_component(f, p));
  }
  return out;
}

json subgroups(const json& params) {
  FiniteGroup K = parse_finite_group(params);
  Subgroup H = parse_subgroup(params, K);
  std::vector<Subgroup> found = enumerate_intermediate_subgroups(K, H);
  json out;
  out["count"] = found.size();
  json list = json::array();
  for (const auto& s : found) list.push_back(subgroup_to_json(s));
  out["subgroups"] = std::move(list);
  return out;
}

json thm17(const json& params) {
  FiniteGroup K = parse_finite_group(params);
  Subgroup H = parse_subgroup(params, K);
  QuotientDecomposition q = quotient_of(K, H);
  std::vector<Subgroup> family = thm17_injection(K, H);
  json out;
  json factors = json::array();
  for (const auto& d : q.factor_orders) factors.push_back(d.str());
  out["quotientFactors"] = std::move(factors);
  out["count"] = family.size();
  json list = json::array();
  for (const auto& s : family) list.push_back(subgroup_to_json(s));
  out["family"] = std::move(list);
  return out;
}

json extend(const json& params) {
  FiniteGroup G = parse_finite_group(params);
  Subgroup A = parse_subgroup(params, G);
  const json& arr = require_field(params, "images", "params");
  if (!arr.is_array())
    throw InputError("images: expected an array of circle points");
  std::vector<CirclePoint> images;
  for (const auto& v : arr)
    images.push_back(parse_circle_point(v, "images"));
  std::vector<FiniteCharacter> lifts = all_extensions(G, A, images);
  if (lifts.empty())
    throw std::logic_error("no lift exists; the circle is divisible");
  json out;
  out["character"] = finite_character_to_json(lifts.front());
  out["liftCount"] = lifts.size();
  return out;
}

json dualcheck(const json& params) {
  FiniteGroup G = parse_finite_group(params);
  const json& arr = require_field(params, "characters", "params");
  if (!arr.is_array())
    throw InputError("characters: expected an array of image arrays");
  std::vector<FiniteCharacter> family;
  for (const auto& c : arr) {
    if (!c.is_array() || c.size() != G.rank())
      throw InputError("characters: each entry needs one image per generator");
    std::vector<CirclePoint> images;
    for (const auto& v : c) images.push_back(parse_circle_point(v, "characters"));
    family.push_back(make_finite_character(G, std::move(images)));
  }
  SeparationDensity result = separation_is_density_check(G, family);
  json out;
  out["separates"] = result.separates;
  out["equalsDual"] = result.equals_dual;
  std::vector<BigInt> orders;
  for (std::uint64_t d : G.orders()) orders.emplace_back(d);
  out["dual"] = invariant_factors_to_json(
      dual_group(invariant_factors_of_cyclic_orders(orders)));
  return out;
}

json run_op(const std::string& command, const json& params) {
  if (command == "eval") return eval(params);
  if (command == "certify") return certify(params);
  if (command == "separate") return separate(params);
  if (command == "distinguish") return distinguish(params);
  if (command == "generate") return generate(params);
  if (command == "validate") return validate(params);
  if (command == "snf") return snf(params);
  if (command == "quotient") return quotient(params);
  if (command == "subgroups") return subgroups(params);
  if (command == "thm17") return thm17(params);
  if (command == "extend") return extend(params);
  if (command == "dualcheck") return dualcheck(params);
  throw InputError("unknown command '" + command + "'");
}

json run_report(const std::string& command, const json& params) {
  json report;
  report["command"] = command;
  report["version"] = kVersion;
  report["inputs"] = params;
  report["outputs"] = run_op(command, params);
  return report;
}

}  // namespace tbtop::ops
