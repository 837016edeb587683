#pragma once

#include "tbtop/certify.hpp"
#include "tbtop/characters.hpp"
#include "tbtop/elements.hpp"
#include "tbtop/finlab.hpp"
#include "tbtop/sequences.hpp"

#include <json.hpp>

#include <string>

namespace tbtop {

/// Reports use insertion-ordered JSON so identical inputs serialize to
/// identical bytes. Unbounded values (element values, matrix entries,
/// bounds) travel as decimal strings; small structural integers (primes,
/// exponents, indices, counts) as JSON numbers. Parsers accept both.
using json = nlohmann::ordered_json;

// Parsing. Every function throws InputError naming the offending field.
BigInt get_bigint(const json& j, const std::string& field);
std::uint64_t get_u64(const json& j, const std::string& field);
const json& require_field(const json& j, const char* key,
                          const std::string& context);

CirclePoint parse_circle_point(const json& j, const std::string& field);
OrderSchema parse_order_schema(const json& j);
GroupElement parse_group_element(const json& j);
CountableSet parse_countable_set(const json& j);
SubRule parse_sub_rule(const json& j);
IndexSet parse_index_set(const json& j);
DigitRule parse_digit_rule(const json& j);
AnyCharacter parse_character(const json& j);
SequenceSchema parse_sequence(const json& j);
IntMatrix parse_matrix(const json& j, const std::string& field);
std::vector<ThresholdStep> parse_thresholds(const json& j);

// Emission. Circle points embed as "num/den" strings.
json order_schema_to_json(const OrderSchema& s);
json group_element_to_json(const GroupElement& e);
json countable_set_to_json(const CountableSet& s);
json sub_rule_to_json(const SubRule& r);
json index_set_to_json(const IndexSet& s);
json digit_rule_to_json(const DigitRule& r);
json character_to_json(const AnyCharacter& h);
json sequence_to_json(const SequenceSchema& s);
json certificate_to_json(const ConvergenceCertificate& c);
json matrix_to_json(const IntMatrix& m);
json invariant_factors_to_json(const InvariantFactors& f);
json subgroup_to_json(const Subgroup& s);
json finite_character_to_json(const FiniteCharacter& chi);

}  // namespace tbtop
