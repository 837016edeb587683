#pragma once

#include "tbtop/elements.hpp"
#include "tbtop/index_set.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace tbtop {

/// Digit rule n -> a_n with 1 <= a_n <= p-1 (n is the 1-based term index).
/// Excluding 0 keeps the factorial sequence faithfully indexed.
struct DigitSeqRule {
  enum class Kind { Const, Periodic };

  Kind kind = Kind::Const;
  std::vector<std::uint32_t> values{1};

  static DigitSeqRule constant(std::uint32_t v);
  static DigitSeqRule periodic(std::vector<std::uint32_t> values);

  std::uint32_t at(std::uint64_t n) const {
    return values[(n - 1) % values.size()];
  }
  bool operator==(const DigitSeqRule&) const = default;
};

/// x_n = a_n / p^{n!} in Z(p^infinity), n = 1, 2, 3, ...
/// Faithfully indexed: denominators p^{n!} are strictly increasing and the
/// digit rule never produces 0.
struct FactorialPruefer {
  std::uint64_t p = 2;
  DigitSeqRule digits;
  bool operator==(const FactorialPruefer&) const = default;
};

FactorialPruefer make_factorial_pruefer(std::uint64_t p, DigitSeqRule digits);

/// k_n = stride*n + offset, n = 0, 1, 2, ... (stride >= 1, so injective).
struct AffineSupportRule {
  std::uint64_t stride = 1;
  std::uint64_t offset = 0;

  std::uint64_t index_at(std::uint64_t n) const { return stride * n + offset; }
  bool operator==(const AffineSupportRule&) const = default;
};

/// x_n = value * e_{k_n} in the direct sum: singleton support moving along
/// an injective affine index rule, never touching the avoided set.
struct BasisDirectSum {
  OrderSchema ambient;
  AffineSupportRule rule;
  BigInt value = 1;
  CountableSet avoided = CountableSet::arithmetic(0, 2);
  bool operator==(const BasisDirectSum&) const = default;
};

/// True when no index stride*n + offset (n >= 0) can ever land in `avoided`:
/// the structural form of the avoidance condition.
bool affine_avoids(const AffineSupportRule& rule, const CountableSet& avoided);

/// Strictly positive integer sequence given by a closed form or an explicit
/// list with a promised ratio property; terms are x_1, x_2, ...
struct IntegerGrowth {
  enum class Rule { Factorial, Geometric, SuperExpSquare, ExplicitRatio };
  enum class Promise { None, Raczkowski, Barbieri, Both };

  Rule rule = Rule::Factorial;
  BigInt base = 2;                // Geometric: base^n; SuperExpSquare: base^{n^2}
  std::vector<BigInt> terms;      // ExplicitRatio
  Promise promise = Promise::None;

  bool operator==(const IntegerGrowth&) const = default;
};

/// Finite list of explicit elements (indexed from 0), with no structural
/// guarantees beyond what direct inspection shows.
struct ExplicitPrefix {
  std::vector<GroupElement> terms;
  bool operator==(const ExplicitPrefix&) const = default;
};

using SequenceSchema =
    std::variant<FactorialPruefer, BasisDirectSum, IntegerGrowth,
                 ExplicitPrefix>;

/// Index of the first term the schema generates (0 or 1).
std::uint64_t first_index(const SequenceSchema& seq);

/// Term x_n for a schema index n >= first_index.
GroupElement term_at(const SequenceSchema& seq, std::uint64_t n);

/// First `count` terms in canonical form; deterministic, prefix-coherent.
/// Detects schema invariant violations (zero basis value, broken ratio
/// promise, out-of-range digits) and rejects them.
std::vector<GroupElement> generate(const SequenceSchema& seq,
                                   std::uint64_t count);

struct Thm51Validation {
  bool structural = false;       // schema metadata guarantees (i) and (ii) for all n
  bool prefix_verified = false;  // the inspected prefix satisfies both
};

/// Validates the two hypotheses a direct-sum sequence needs before its
/// coordinate-sum characters converge: (i) every term vanishes on S, and
/// (ii) each coordinate is hit only finitely often. `structural` is decided
/// from schema metadata alone; the prefix check inspects `prefix` terms
/// directly ((ii) checked in the strong single-hit form the schemas
/// guarantee: no coordinate is hit by two different terms).
Thm51Validation validate_thm51(const SequenceSchema& seq, const IndexSet& S,
                               std::uint64_t prefix);

struct GrowthClassification {
  bool raczkowski = false;  // ratios x_{n+1}/x_n >= n+1
  bool barbieri = false;    // ratios x_{n+1}/x_n -> infinity
  // Whether each verdict is certified by the closed form (vs. prefix
  // evidence only, for explicit lists).
  bool rule_certified_raczkowski = false;
  bool rule_certified_barbieri = false;
};

/// Checks the two growth criteria under which the integers admit a totally
/// bounded topology making the sequence converge. Requires strictly
/// positive integer terms.
GrowthClassification classify_growth(const SequenceSchema& seq,
                                     std::uint64_t prefix);

}  // namespace tbtop
