#pragma once

#include "tbtop/circle.hpp"
#include "tbtop/elements.hpp"
#include "tbtop/index_set.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tbtop {

/// Coordinate-sum character on a direct sum: x -> sum of x(k) over the
/// indices k in the index set, landing in the circle group. Evaluation on a
/// finite-support element touches finitely many indices.
struct SumCharacter {
  OrderSchema ambient;
  IndexSet index_set;
  bool operator==(const SumCharacter&) const = default;
};

/// Digit rule k -> h(k) in {0, ..., p-1}: the coordinates of a p-adic
/// integer, i.e. an element of the dual of the Pruefer group.
class DigitRule {
 public:
  enum class Kind { Support, Indicator, Prefix };

  /// Finitely many nonzero digits, given as k -> digit.
  static DigitRule support(std::map<std::uint64_t, std::uint32_t> digits);
  /// Indicator of an index set: digit 1 on members, 0 elsewhere.
  static DigitRule indicator(IndexSet set);
  /// Explicit leading digits, then a constant default.
  static DigitRule prefix(std::vector<std::uint32_t> digits,
                          std::uint32_t default_digit);

  Kind kind() const { return kind_; }
  std::uint32_t digit(std::uint64_t k) const;

  /// Largest digit value this rule can produce (for range validation).
  std::uint32_t max_digit() const;

  /// True when only finitely many digits are nonzero; then bound() is an
  /// exclusive upper bound on the nonzero positions.
  bool finite_support() const;
  std::uint64_t finite_support_bound() const;

  const std::map<std::uint64_t, std::uint32_t>& support_digits() const {
    return support_;
  }
  const IndexSet& indicator_set() const { return indicator_; }
  const std::vector<std::uint32_t>& prefix_digits() const { return prefix_; }
  std::uint32_t default_digit() const { return default_; }

  bool operator==(const DigitRule&) const = default;

 private:
  DigitRule() : indicator_(IndexSet::finite({})) {}

  Kind kind_ = Kind::Support;
  std::map<std::uint64_t, std::uint32_t> support_;
  IndexSet indicator_;
  std::vector<std::uint32_t> prefix_;
  std::uint32_t default_ = 0;
};

/// Character of the Pruefer group Z(p^infinity), identified with a p-adic
/// digit sequence: h(a/p^n) = (a/p^n) * sum_{k<n} h(k) p^k mod 1.
struct PadicCharacter {
  std::uint64_t p;
  DigitRule digits;
  bool operator==(const PadicCharacter&) const = default;
};

/// Validating constructor: p prime, all digits <= p-1.
PadicCharacter make_padic_character(std::uint64_t p, DigitRule digits);

/// Rational term rule n -> c_n of a described series.
class TermRule {
 public:
  enum class Kind { Zero, Power, Finite };

  static TermRule zero();
  /// c_n = coeff * ratio^n for n >= start, else 0.
  static TermRule power(Rational coeff, Rational ratio, std::uint64_t start);
  /// c_n = terms[n] for n < terms.size(), else 0.
  static TermRule finite(std::vector<Rational> terms);

  Kind kind() const { return kind_; }
  Rational term(std::uint64_t n) const;

  const Rational& coeff() const { return coeff_; }
  const Rational& ratio() const { return ratio_; }
  std::uint64_t start() const { return start_; }
  const std::vector<Rational>& finite_terms() const { return terms_; }

  bool operator==(const TermRule&) const = default;

 private:
  Kind kind_ = Kind::Zero;
  Rational coeff_;
  Rational ratio_;
  std::uint64_t start_ = 0;
  std::vector<Rational> terms_;
};

/// Caller-certified geometric tail bound B(N) = coeff * ratio^{N+1} with
/// 0 <= ratio < 1, so B is non-increasing and tends to 0.
struct GeometricTail {
  Rational coeff;
  Rational ratio;

  Rational at(std::uint64_t n_cutoff) const;
  bool operator==(const GeometricTail&) const = default;
};

/// Character of the integers m -> t*m, with t either an exact rational
/// point of the circle or a series-described real carrying a certified
/// tail bound.
class RotationCharacter {
 public:
  enum class Kind { Exact, Series };

  static RotationCharacter exact(CirclePoint t);
  static RotationCharacter series(TermRule terms, GeometricTail tail);

  Kind kind() const { return kind_; }
  const CirclePoint& exact_angle() const { return t_; }
  const TermRule& terms() const { return terms_; }
  const GeometricTail& tail() const { return tail_; }

  bool operator==(const RotationCharacter&) const = default;

 private:
  RotationCharacter() = default;

  Kind kind_ = Kind::Exact;
  CirclePoint t_;
  TermRule terms_;
  GeometricTail tail_;
};

using Character = std::variant<SumCharacter, PadicCharacter, RotationCharacter>;

/// Integer combination of primitive characters (the closure that turns a
/// convergent family into a convergent subgroup). Combinations of
/// combinations flatten, so one level suffices.
struct CombinationCharacter {
  std::vector<std::pair<BigInt, Character>> terms;
  bool operator==(const CombinationCharacter&) const = default;
};

using AnyCharacter =
    std::variant<SumCharacter, PadicCharacter, RotationCharacter,
                 CombinationCharacter>;

/// Certified enclosure of a circle value: the true value lies within
/// `radius` of `center` along the circle metric. radius = 0 means exact.
struct CircleInterval {
  CirclePoint center;
  Rational radius;

  /// Exact bounds on the distance of the enclosed value to 0.
  Rational dist_upper() const;
  Rational dist_lower() const;
};

using EvalResult = std::variant<CirclePoint, CircleInterval>;

CirclePoint eval_sum_character(const SumCharacter& h,
                               const DirectSumElement& x);

CirclePoint eval_padic_character(const PadicCharacter& h,
                                 const PrueferElement& x);

/// Exact for the Exact variant. For Series, returns an interval of radius
/// |m| * B(N) <= precision around the truncated sum; throws OpError when no
/// cutoff within the budget reaches the precision.
EvalResult eval_rotation_character(const RotationCharacter& h,
                                   const IntegerElement& m,
                                   const Rational& precision);

/// Evaluates any character variant on a matching element. Series rotations
/// (directly or inside combinations) use `precision` and may return an
/// interval; everything else is exact.
EvalResult eval_character(const AnyCharacter& h, const GroupElement& x,
                          const Rational& precision = Rational(1, 1000000));

/// Convenience for exact character kinds; throws InputError if evaluation
/// produced an interval.
CirclePoint eval_exact(const AnyCharacter& h, const GroupElement& x);

/// Singleton-support element witnessing that two coordinate-sum characters
/// differ, found by scanning the symmetric difference below `search_bound`.
/// Throws OpError when no separating index below the bound exists.
DirectSumElement distinguish_characters(const SumCharacter& h,
                                        const SumCharacter& h2,
                                        std::uint64_t search_bound);

/// A character taking different values on x and x2: a singleton-index sum
/// character on direct sums, a finite-support p-adic character on Pruefer
/// groups, an exact rotation on the integers. Throws InputError when
/// x == x2 or the ambient group is unsupported.
Character separate_points(const GroupElement& x, const GroupElement& x2);

/// Described generating family of characters plus its declared weight.
class TopologySpec {
 public:
  enum class Kind { Explicit, AllSubsetsOfS, AllSubsetsOfFac };

  static TopologySpec explicit_family(std::vector<AnyCharacter> family,
                                      std::string declared_weight);
  /// The family of all coordinate sums over subsets of S (weight c).
  static TopologySpec all_subsets_of_s(OrderSchema ambient, CountableSet S);
  /// The family of all Fac-subset indicator characters of Z(p^inf).
  static TopologySpec all_subsets_of_fac(std::uint64_t p);

  Kind kind() const { return kind_; }
  const std::string& declared_weight() const { return declared_weight_; }
  const std::vector<AnyCharacter>& family() const { return family_; }

  /// Canonical first members of the family (singleton index sets for the
  /// schema-indexed kinds).
  std::vector<AnyCharacter> family_prefix(std::size_t count) const;

 private:
  TopologySpec() = default;

  Kind kind_ = Kind::Explicit;
  std::vector<AnyCharacter> family_;
  std::optional<OrderSchema> ambient_;
  std::optional<CountableSet> S_;
  std::uint64_t p_ = 2;
  std::string declared_weight_;
};

/// True iff dist_to_zero(h(x)) < eps for every h in F (the basic
/// neighborhood of 0 cut out by F and eps contains x). Series rotations are
/// decided through certified intervals; throws OpError when the available
/// precision cannot decide a comparison.
bool basic_nbhd_contains(const TopologySpec& spec,
                         const std::vector<AnyCharacter>& F,
                         const Rational& eps, const GroupElement& x);

}  // namespace tbtop
