#include "tbtop/json_io.hpp"

#include "tbtop/errors.hpp"

namespace tbtop {

BigInt get_bigint(const json& j, const std::string& field) {
  if (j.is_string()) return parse_bigint(j.get<std::string>(), field);
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  throw InputError(field + ": expected an integer or decimal string");
}

std::uint64_t get_u64(const json& j, const std::string& field) {
  BigInt v = get_bigint(j, field);
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw InputError(field + ": value out of range");
  return v.convert_to<std::uint64_t>();
}

std::uint32_t get_u32(const json& j, const std::string& field) {
  std::uint64_t v = get_u64(j, field);
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw InputError(field + ": value out of range");
  return static_cast<std::uint32_t>(v);
}

std::uint64_t parse_index_key(const std::string& key,
                              const std::string& field) {
  if (key.empty())
    throw InputError(field + ": empty index key");
  for (char c : key) {
    if (c < '0' || c > '9')
      throw InputError(field + ": non-numeric index '" + key + "'");
  }
  BigInt v(key);
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw InputError(field + ": index out of range");
  return v.convert_to<std::uint64_t>();
}

const json& require_field(const json& j, const char* key,
                          const std::string& context) {
  if (!j.is_object())
    throw InputError(context + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(context + ": missing field '" + key + "'");
  return *it;
}

namespace {

std::string require_kind(const json& j, const std::string& context) {
  return require_field(j, "kind", context).get<std::string>();
}

Rational get_rational(const json& j, const std::string& field) {
  if (j.is_string()) return parse_rational(j.get<std::string>(), field);
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  throw InputError(field + ": expected a rational as 'a/b' or integer");
}

PrimePower parse_prime_power(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw InputError(field + ": expected [p, r]");
  std::uint32_t r = get_u32(j[1], field + "[1]");
  if (r > 10000) throw InputError(field + "[1]: exponent out of range");
  return PrimePower{get_u64(j[0], field + "[0]"), r};
}

json prime_power_to_json(const PrimePower& pp) {
  return json::array({pp.p, pp.r});
}

}  // namespace

CirclePoint parse_circle_point(const json& j, const std::string& field) {
  if (j.is_string()) return CirclePoint::parse(j.get<std::string>(), field);
  if (j.is_object()) {
    BigInt num = get_bigint(require_field(j, "num", field), field + ".num");
    BigInt den = get_bigint(require_field(j, "den", field), field + ".den");
    if (den <= 0) throw InputError(field + ".den: must be positive");
    return CirclePoint::normalized(num, den);
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return CirclePoint::normalized(get_bigint(j, field), BigInt(1));
  throw InputError(field + ": expected \"num/den\" or {num, den}");
}

OrderSchema parse_order_schema(const json& j) {
  const std::string context = "orders";
  std::string kind = require_kind(j, context);
  if (kind == "constant") {
    std::uint32_t r = j.contains("r") ? get_u32(j["r"], "orders.r") : 1;
    if (r > 10000) throw InputError("orders.r: exponent out of range");
    return OrderSchema::constant(
        PrimePower{get_u64(require_field(j, "p", context), "orders.p"), r});
  }
  if (kind == "periodic") {
    const json& arr = require_field(j, "orders", context);
    if (!arr.is_array() || arr.empty())
      throw InputError("orders.orders: expected a nonempty array of [p, r]");
    std::vector<PrimePower> cycle;
    for (std::size_t i = 0; i < arr.size(); ++i)
      cycle.push_back(parse_prime_power(arr[i], "orders.orders"));
    return OrderSchema::periodic(std::move(cycle));
  }
  if (kind == "prefix") {
    const json& arr = require_field(j, "prefix", context);
    if (!arr.is_array())
      throw InputError("orders.prefix: expected an array of [p, r]");
    std::vector<PrimePower> prefix;
    for (std::size_t i = 0; i < arr.size(); ++i)
      prefix.push_back(parse_prime_power(arr[i], "orders.prefix"));
    PrimePower dflt =
        parse_prime_power(require_field(j, "default", context), "orders.default");
    return OrderSchema::prefix_then(std::move(prefix), dflt);
  }
  throw InputError("orders.kind: unknown value '" + kind + "'");
}

json order_schema_to_json(const OrderSchema& s) {
  json j;
  if (s.prefix().empty() && s.cycle().size() == 1) {
    j["kind"] = "constant";
    j["p"] = s.cycle()[0].p;
    j["r"] = s.cycle()[0].r;
    return j;
  }
  if (s.prefix().empty()) {
    j["kind"] = "periodic";
    json arr = json::array();
    for (const auto& pp : s.cycle()) arr.push_back(prime_power_to_json(pp));
    j["orders"] = std::move(arr);
    return j;
  }
  // Factory-built schemas with a nonempty prefix always have a single
  // repeating default.
  j["kind"] = "prefix";
  json arr = json::array();
  for (const auto& pp : s.prefix()) arr.push_back(prime_power_to_json(pp));
  j["prefix"] = std::move(arr);
  j["default"] = prime_power_to_json(s.cycle()[0]);
  return j;
}

GroupElement parse_group_element(const json& j) {
  const std::string context = "element";
  std::string kind = require_kind(j, context);
  if (kind == "int")
    return IntegerElement{get_bigint(require_field(j, "v", context),
                                     "element.v")};
  if (kind == "cyclic") {
    BigInt k = get_bigint(require_field(j, "k", context), "element.k");
    BigInt n = get_bigint(require_field(j, "n", context), "element.n");
    return CyclicElement::make(k, n);
  }
  if (kind == "pruefer") {
    std::uint64_t p = get_u64(require_field(j, "p", context), "element.p");
    BigInt a = get_bigint(require_field(j, "a", context), "element.a");
    std::uint64_t n = get_u64(require_field(j, "n", context), "element.n");
    if (n > 0xffffffffull) throw InputError("element.n: out of range");
    return canonicalize_pruefer(p, a, static_cast<std::uint32_t>(n));
  }
  if (kind == "dsum") {
    OrderSchema schema = parse_order_schema(require_field(j, "orders", context));
    DirectSumElement e(schema);
    const json& support = require_field(j, "support", context);
    if (!support.is_object())
      throw InputError("element.support: expected an object index -> [value, order]");
    for (auto it = support.begin(); it != support.end(); ++it) {
      std::uint64_t k = parse_index_key(it.key(), "element.support");
      const json& entry = it.value();
      BigInt value;
      if (entry.is_array()) {
        if (entry.empty() || entry.size() > 2)
          throw InputError("element.support." + it.key() +
                           ": expected [value] or [value, order]");
        value = get_bigint(entry[0], "element.support." + it.key());
        if (entry.size() == 2) {
          BigInt declared = get_bigint(entry[1], "element.support." + it.key());
          if (declared != schema.order_at(k))
            throw InputError("element.support." + it.key() +
                             ": declared order " + declared.str() +
                             " does not match the ambient order " +
                             schema.order_at(k).str());
        }
      } else {
        value = get_bigint(entry, "element.support." + it.key());
      }
      e.set_coordinate(k, value);
    }
    return e;
  }
  throw InputError("element.kind: unknown value '" + kind + "'");
}

json group_element_to_json(const GroupElement& e) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        json j;
        if constexpr (std::is_same_v<T, IntegerElement>) {
          j["kind"] = "int";
          j["v"] = x.value.str();
        } else if constexpr (std::is_same_v<T, CyclicElement>) {
          j["kind"] = "cyclic";
          j["k"] = x.value.str();
          j["n"] = x.modulus.str();
        } else if constexpr (std::is_same_v<T, PrueferElement>) {
          j["kind"] = "pruefer";
          j["p"] = x.p;
          j["a"] = x.a.str();
          j["n"] = x.n;
        } else {
          j["kind"] = "dsum";
          j["orders"] = order_schema_to_json(x.ambient());
          json support = json::object();
          for (const auto& [k, v] : x.support())
            support[std::to_string(k)] =
                json::array({v.str(), x.ambient().order_at(k).str()});
          j["support"] = std::move(support);
        }
        return j;
      },
      e);
}

CountableSet parse_countable_set(const json& j) {
  std::string kind = require_kind(j, "S");
  if (kind == "naturals") return CountableSet::naturals();
  if (kind == "arith")
    return CountableSet::arithmetic(
        get_u64(require_field(j, "first", "S"), "S.first"),
        get_u64(require_field(j, "step", "S"), "S.step"));
  if (kind == "factorials") return CountableSet::factorials();
  throw InputError("S.kind: unknown value '" + kind + "'");
}

json countable_set_to_json(const CountableSet& s) {
  json j;
  switch (s.kind()) {
    case CountableSet::Kind::Naturals:
      j["kind"] = "naturals";
      break;
    case CountableSet::Kind::Arithmetic:
      j["kind"] = "arith";
      j["first"] = s.first();
      j["step"] = s.step();
      break;
    case CountableSet::Kind::Factorials:
      j["kind"] = "factorials";
      break;
  }
  return j;
}

SubRule parse_sub_rule(const json& j) {
  std::string kind = require_kind(j, "rule");
  if (kind == "all") return SubRule::all();
  if (kind == "congruence")
    return SubRule::congruence(
        get_u64(require_field(j, "mod", "rule"), "rule.mod"),
        get_u64(require_field(j, "residue", "rule"), "rule.residue"));
  if (kind == "members" || kind == "exclude") {
    const json& arr = require_field(j, "members", "rule");
    if (!arr.is_array())
      throw InputError("rule.members: expected an array");
    std::vector<std::uint64_t> members;
    for (const auto& m : arr) members.push_back(get_u64(m, "rule.members"));
    return kind == "members" ? SubRule::explicit_members(std::move(members))
                             : SubRule::excluding(std::move(members));
  }
  throw InputError("rule.kind: unknown value '" + kind + "'");
}

json sub_rule_to_json(const SubRule& r) {
  json j;
  switch (r.kind) {
    case SubRule::Kind::All:
      j["kind"] = "all";
      break;
    case SubRule::Kind::Congruence:
      j["kind"] = "congruence";
      j["mod"] = r.modulus;
      j["residue"] = r.residue;
      break;
    case SubRule::Kind::Members:
      j["kind"] = "members";
      j["members"] = r.members;
      break;
    case SubRule::Kind::ExcludeMembers:
      j["kind"] = "exclude";
      j["members"] = r.members;
      break;
  }
  return j;
}

IndexSet parse_index_set(const json& j) {
  std::string kind = require_kind(j, "indexSet");
  if (kind == "finite") {
    const json& arr = require_field(j, "members", "indexSet");
    if (!arr.is_array())
      throw InputError("indexSet.members: expected an array");
    std::vector<std::uint64_t> members;
    for (const auto& m : arr)
      members.push_back(get_u64(m, "indexSet.members"));
    return IndexSet::finite(std::move(members));
  }
  if (kind == "subsetOfS")
    return IndexSet::subset_of(
        parse_countable_set(require_field(j, "S", "indexSet")),
        parse_sub_rule(require_field(j, "rule", "indexSet")));
  if (kind == "subsetOfFac")
    return IndexSet::subset_of_fac(
        parse_sub_rule(require_field(j, "rule", "indexSet")));
  throw InputError("indexSet.kind: unknown value '" + kind + "'");
}

json index_set_to_json(const IndexSet& s) {
  json j;
  switch (s.kind()) {
    case IndexSet::Kind::Finite:
      j["kind"] = "finite";
      j["members"] = s.finite_members();
      break;
    case IndexSet::Kind::SubsetOfS:
      j["kind"] = "subsetOfS";
      j["S"] = countable_set_to_json(s.base());
      j["rule"] = sub_rule_to_json(s.rule());
      break;
    case IndexSet::Kind::SubsetOfFac:
      j["kind"] = "subsetOfFac";
      j["rule"] = sub_rule_to_json(s.rule());
      break;
  }
  return j;
}

DigitRule parse_digit_rule(const json& j) {
  std::string kind = require_kind(j, "digits");
  if (kind == "support") {
    const json& obj = require_field(j, "digits", "digits");
    if (!obj.is_object())
      throw InputError("digits.digits: expected an object index -> digit");
    std::map<std::uint64_t, std::uint32_t> support;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      std::uint64_t k = parse_index_key(it.key(), "digits.digits");
      support[k] = get_u32(it.value(), "digits.digits." + it.key());
    }
    return DigitRule::support(std::move(support));
  }
  if (kind == "indicator")
    return DigitRule::indicator(
        parse_index_set(require_field(j, "set", "digits")));
  if (kind == "prefix") {
    const json& arr = require_field(j, "digits", "digits");
    if (!arr.is_array())
      throw InputError("digits.digits: expected an array of digits");
    std::vector<std::uint32_t> prefix;
    for (const auto& d : arr) prefix.push_back(get_u32(d, "digits.digits"));
    std::uint32_t dflt = 0;
    if (j.contains("default")) dflt = get_u32(j["default"], "digits.default");
    return DigitRule::prefix(std::move(prefix), dflt);
  }
  throw InputError("digits.kind: unknown value '" + kind + "'");
}

json digit_rule_to_json(const DigitRule& r) {
  json j;
  switch (r.kind()) {
    case DigitRule::Kind::Support: {
      j["kind"] = "support";
      json digits = json::object();
      for (const auto& [k, d] : r.support_digits())
        digits[std::to_string(k)] = d;
      j["digits"] = std::move(digits);
      break;
    }
    case DigitRule::Kind::Indicator:
      j["kind"] = "indicator";
      j["set"] = index_set_to_json(r.indicator_set());
      break;
    case DigitRule::Kind::Prefix:
      j["kind"] = "prefix";
      j["digits"] = r.prefix_digits();
      j["default"] = r.default_digit();
      break;
  }
  return j;
}

namespace {

TermRule parse_term_rule(const json& j) {
  std::string kind = require_kind(j, "terms");
  if (kind == "zero") return TermRule::zero();
  if (kind == "power")
    return TermRule::power(
        get_rational(require_field(j, "coeff", "terms"), "terms.coeff"),
        get_rational(require_field(j, "ratio", "terms"), "terms.ratio"),
        j.contains("start") ? get_u64(j["start"], "terms.start") : 0);
  if (kind == "finite") {
    const json& arr = require_field(j, "terms", "terms");
    if (!arr.is_array()) throw InputError("terms.terms: expected an array");
    std::vector<Rational> terms;
    for (const auto& t : arr) terms.push_back(get_rational(t, "terms.terms"));
    return TermRule::finite(std::move(terms));
  }
  throw InputError("terms.kind: unknown value '" + kind + "'");
}

json term_rule_to_json(const TermRule& r) {
  json j;
  switch (r.kind()) {
    case TermRule::Kind::Zero:
      j["kind"] = "zero";
      break;
    case TermRule::Kind::Power:
      j["kind"] = "power";
      j["coeff"] = to_string(r.coeff());
      j["ratio"] = to_string(r.ratio());
      j["start"] = r.start();
      break;
    case TermRule::Kind::Finite: {
      j["kind"] = "finite";
      json arr = json::array();
      for (const auto& t : r.finite_terms()) arr.push_back(to_string(t));
      j["terms"] = std::move(arr);
      break;
    }
  }
  return j;
}

}  // namespace

AnyCharacter parse_character(const json& j) {
  std::string kind = require_kind(j, "character");
  if (kind == "sum")
    return SumCharacter{
        parse_order_schema(require_field(j, "orders", "character")),
        parse_index_set(require_field(j, "indexSet", "character"))};
  if (kind == "padic")
    return make_padic_character(
        get_u64(require_field(j, "p", "character"), "character.p"),
        parse_digit_rule(require_field(j, "digits", "character")));
  if (kind == "rotation")
    return RotationCharacter::exact(
        parse_circle_point(require_field(j, "t", "character"), "character.t"));
  if (kind == "rotationSeries") {
    const json& tail = require_field(j, "tail", "character");
    return RotationCharacter::series(
        parse_term_rule(require_field(j, "terms", "character")),
        GeometricTail{
            get_rational(require_field(tail, "coeff", "character.tail"),
                         "character.tail.coeff"),
            get_rational(require_field(tail, "ratio", "character.tail"),
                         "character.tail.ratio")});
  }
  if (kind == "combination") {
    const json& arr = require_field(j, "terms", "character");
    if (!arr.is_array() || arr.empty())
      throw InputError("character.terms: expected a nonempty array");
    CombinationCharacter combo;
    for (const auto& term : arr) {
      BigInt m = get_bigint(require_field(term, "m", "character.terms"),
                            "character.terms.m");
      AnyCharacter base =
          parse_character(require_field(term, "character", "character.terms"));
      std::visit(
          [&](auto&& primitive) {
            using H = std::decay_t<decltype(primitive)>;
            if constexpr (std::is_same_v<H, CombinationCharacter>) {
              for (auto& [inner_m, inner] : primitive.terms)
                combo.terms.emplace_back(m * inner_m, std::move(inner));
            } else {
              combo.terms.emplace_back(m, Character(std::move(primitive)));
            }
          },
          std::move(base));
    }
    return combo;
  }
  throw InputError("character.kind: unknown value '" + kind + "'");
}

json character_to_json(const AnyCharacter& h) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        json j;
        if constexpr (std::is_same_v<T, SumCharacter>) {
          j["kind"] = "sum";
          j["orders"] = order_schema_to_json(c.ambient);
          j["indexSet"] = index_set_to_json(c.index_set);
        } else if constexpr (std::is_same_v<T, PadicCharacter>) {
          j["kind"] = "padic";
          j["p"] = c.p;
          j["digits"] = digit_rule_to_json(c.digits);
        } else if constexpr (std::is_same_v<T, RotationCharacter>) {
          if (c.kind() == RotationCharacter::Kind::Exact) {
            j["kind"] = "rotation";
            j["t"] = c.exact_angle().str();
          } else {
            j["kind"] = "rotationSeries";
            j["terms"] = term_rule_to_json(c.terms());
            json tail;
            tail["coeff"] = to_string(c.tail().coeff);
            tail["ratio"] = to_string(c.tail().ratio);
            j["tail"] = std::move(tail);
          }
        } else {
          j["kind"] = "combination";
          json arr = json::array();
          for (const auto& [m, base] : c.terms) {
            json term;
            term["m"] = m.str();
            term["character"] = std::visit(
                [](const auto& prim) {
                  return character_to_json(AnyCharacter(prim));
                },
                base);
            arr.push_back(std::move(term));
          }
          j["terms"] = std::move(arr);
        }
        return j;
      },
      h);
}

SequenceSchema parse_sequence(const json& j) {
  std::string kind = require_kind(j, "sequence");
  if (kind == "factorialPruefer") {
    std::uint64_t p = get_u64(require_field(j, "p", "sequence"), "sequence.p");
    const json& digits = require_field(j, "digits", "sequence");
    std::string dkind = require_kind(digits, "sequence.digits");
    DigitSeqRule rule;
    if (dkind == "const") {
      rule = DigitSeqRule::constant(get_u32(
          require_field(digits, "v", "sequence.digits"), "sequence.digits.v"));
    } else if (dkind == "periodic") {
      const json& arr = require_field(digits, "values", "sequence.digits");
      if (!arr.is_array() || arr.empty())
        throw InputError("sequence.digits.values: expected a nonempty array");
      std::vector<std::uint32_t> values;
      for (const auto& v : arr)
        values.push_back(get_u32(v, "sequence.digits.values"));
      rule = DigitSeqRule::periodic(std::move(values));
    } else {
      throw InputError("sequence.digits.kind: unknown value '" + dkind + "'");
    }
    return make_factorial_pruefer(p, std::move(rule));
  }
  if (kind == "basisDsum") {
    BasisDirectSum s{
        parse_order_schema(require_field(j, "orders", "sequence")),
        AffineSupportRule{
            get_u64(require_field(j, "stride", "sequence"), "sequence.stride"),
            get_u64(require_field(j, "offset", "sequence"), "sequence.offset")},
        j.contains("value") ? get_bigint(j["value"], "sequence.value")
                            : BigInt(1),
        parse_countable_set(require_field(j, "avoid", "sequence"))};
    if (s.rule.stride == 0)
      throw InputError("sequence.stride: must be >= 1");
    if (!affine_avoids(s.rule, s.avoided))
      throw InputError("sequence: the support rule can land in the avoided "
                       "set");
    return s;
  }
  if (kind == "intGrowth") {
    const json& rule = require_field(j, "rule", "sequence");
    std::string name = rule.is_string()
                           ? rule.get<std::string>()
                           : require_kind(rule, "sequence.rule");
    IntegerGrowth s;
    if (name == "factorial") {
      s.rule = IntegerGrowth::Rule::Factorial;
    } else if (name == "geometric") {
      s.rule = IntegerGrowth::Rule::Geometric;
      s.base = get_bigint(require_field(j, "base", "sequence"), "sequence.base");
    } else if (name == "superexpSquare") {
      s.rule = IntegerGrowth::Rule::SuperExpSquare;
      s.base = get_bigint(require_field(j, "base", "sequence"), "sequence.base");
    } else if (name == "explicit") {
      s.rule = IntegerGrowth::Rule::ExplicitRatio;
      const json& arr = require_field(j, "terms", "sequence");
      if (!arr.is_array() || arr.empty())
        throw InputError("sequence.terms: expected a nonempty array");
      for (const auto& t : arr)
        s.terms.push_back(get_bigint(t, "sequence.terms"));
      std::string promise =
          j.contains("promise") ? j["promise"].get<std::string>() : "none";
      if (promise == "none") s.promise = IntegerGrowth::Promise::None;
      else if (promise == "raczkowski") s.promise = IntegerGrowth::Promise::Raczkowski;
      else if (promise == "barbieri") s.promise = IntegerGrowth::Promise::Barbieri;
      else if (promise == "both") s.promise = IntegerGrowth::Promise::Both;
      else throw InputError("sequence.promise: unknown value '" + promise + "'");
    } else {
      throw InputError("sequence.rule: unknown value '" + name + "'");
    }
    return s;
  }
  if (kind == "explicit") {
    const json& arr = require_field(j, "terms", "sequence");
    if (!arr.is_array() || arr.empty())
      throw InputError("sequence.terms: expected a nonempty array");
    ExplicitPrefix s;
    for (const auto& t : arr) s.terms.push_back(parse_group_element(t));
    return s;
  }
  throw InputError("sequence.kind: unknown value '" + kind + "'");
}

json sequence_to_json(const SequenceSchema& s) {
  return std::visit(
      [](const auto& seq) -> json {
        using T = std::decay_t<decltype(seq)>;
        json j;
        if constexpr (std::is_same_v<T, FactorialPruefer>) {
          j["kind"] = "factorialPruefer";
          j["p"] = seq.p;
          json digits;
          if (seq.digits.kind == DigitSeqRule::Kind::Const) {
            digits["kind"] = "const";
            digits["v"] = seq.digits.values[0];
          } else {
            digits["kind"] = "periodic";
            digits["values"] = seq.digits.values;
          }
          j["digits"] = std::move(digits);
        } else if constexpr (std::is_same_v<T, BasisDirectSum>) {
          j["kind"] = "basisDsum";
          j["orders"] = order_schema_to_json(seq.ambient);
          j["stride"] = seq.rule.stride;
          j["offset"] = seq.rule.offset;
          j["value"] = seq.value.str();
          j["avoid"] = countable_set_to_json(seq.avoided);
        } else if constexpr (std::is_same_v<T, IntegerGrowth>) {
          j["kind"] = "intGrowth";
          switch (seq.rule) {
            case IntegerGrowth::Rule::Factorial:
              j["rule"] = "factorial";
              break;
            case IntegerGrowth::Rule::Geometric:
              j["rule"] = "geometric";
              j["base"] = seq.base.str();
              break;
            case IntegerGrowth::Rule::SuperExpSquare:
              j["rule"] = "superexpSquare";
              j["base"] = seq.base.str();
              break;
            case IntegerGrowth::Rule::ExplicitRatio: {
              j["rule"] = "explicit";
              json arr = json::array();
              for (const auto& t : seq.terms) arr.push_back(t.str());
              j["terms"] = std::move(arr);
              switch (seq.promise) {
                case IntegerGrowth::Promise::None: j["promise"] = "none"; break;
                case IntegerGrowth::Promise::Raczkowski:
                  j["promise"] = "raczkowski";
                  break;
                case IntegerGrowth::Promise::Barbieri:
                  j["promise"] = "barbieri";
                  break;
                case IntegerGrowth::Promise::Both: j["promise"] = "both"; break;
              }
              break;
            }
          }
        } else {
          j["kind"] = "explicit";
          json arr = json::array();
          for (const auto& t : seq.terms) arr.push_back(group_element_to_json(t));
          j["terms"] = std::move(arr);
        }
        return j;
      },
      s);
}

json certificate_to_json(const ConvergenceCertificate& c) {
  json j;
  j["theorem"] = to_string(c.tag);
  if (c.tag == TheoremTag::T52_finite || c.tag == TheoremTag::T52_subsetFac) {
    if (const auto* h = std::get_if<PadicCharacter>(&c.character))
      j["p"] = h->p;
  }
  j["character"] = character_to_json(c.character);
  j["sequence"] = sequence_to_json(c.sequence);
  j["range"] = json::array({c.n_lo, c.n_hi});
  json values = json::array();
  for (const auto& v : c.values) {
    json entry;
    entry["n"] = v.n;
    entry["value"] = v.value.str();
    entry["bound"] = to_string(v.bound);
    if (v.radius != 0) entry["radius"] = to_string(v.radius);
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  j["tail"] = c.tail_argument;
  if (c.tail_zero_from) j["tailZeroFrom"] = *c.tail_zero_from;
  j["verdict"] = to_string(c.verdict);
  if (c.counterexample) {
    json ce;
    ce["n"] = c.counterexample->n;
    ce["value"] = c.counterexample->value.str();
    ce["bound"] = to_string(c.counterexample->bound);
    j["counterexample"] = std::move(ce);
  }
  return j;
}

IntMatrix parse_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw InputError(field + ": expected a nonempty array of rows");
  IntMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.empty())
      throw InputError(field + "[" + std::to_string(i) +
                       "]: expected a nonempty row");
    std::vector<BigInt> r;
    for (std::size_t k = 0; k < row.size(); ++k)
      r.push_back(get_bigint(row[k], field + "[" + std::to_string(i) + "][" +
                                         std::to_string(k) + "]"));
    m.push_back(std::move(r));
  }
  return m;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

json invariant_factors_to_json(const InvariantFactors& f) {
  json j;
  json torsion = json::array();
  for (const auto& d : f.torsion) torsion.push_back(d.str());
  j["torsion"] = std::move(torsion);
  j["freeRank"] = f.free_rank;
  return j;
}

json subgroup_to_json(const Subgroup& s) {
  json j;
  j["order"] = s.elements.size();
  json gens = json::array();
  for (const auto& g : s.generators) gens.push_back(g);
  j["generators"] = std::move(gens);
  return j;
}

json finite_character_to_json(const FiniteCharacter& chi) {
  json images = json::array();
  for (const auto& v : chi.images) images.push_back(v.str());
  return images;
}

std::vector<ThresholdStep> parse_thresholds(const json& j) {
  if (!j.is_array()) throw InputError("thresholds: expected an array");
  std::vector<ThresholdStep> steps;
  for (const auto& s : j) {
    ThresholdStep step;
    step.from_n = s.contains("from") ? get_u64(s["from"], "thresholds.from") : 0;
    step.bound = get_rational(require_field(s, "bound", "thresholds"),
                              "thresholds.bound");
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace tbtop
