#pragma once

#include "tbtop/bigint.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tbtop {

/// Finitely described infinite set of non-negative integers with decidable
/// membership and bounded enumeration. These play the role of the set S a
/// sequence avoids and of the base sets carved up into character index sets.
class CountableSet {
 public:
  enum class Kind { Naturals, Arithmetic, Factorials };

  static CountableSet naturals();
  /// {first + step*i : i >= 0}, step >= 1.
  static CountableSet arithmetic(std::uint64_t first, std::uint64_t step);
  /// {n! : n >= 1} = {1, 2, 6, 24, ...} (0! = 1! collapsed).
  static CountableSet factorials();

  Kind kind() const { return kind_; }
  std::uint64_t first() const { return first_; }
  std::uint64_t step() const { return step_; }

  bool contains(std::uint64_t k) const;

  /// Position of k in the increasing enumeration, when k is a member.
  std::optional<std::uint64_t> position_of(std::uint64_t k) const;

  /// The member at enumeration position i (unbounded growth for factorials).
  BigInt member_at(std::uint64_t i) const;

  /// All members strictly below `bound`, increasing.
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;

  bool operator==(const CountableSet&) const = default;

 private:
  CountableSet(Kind kind, std::uint64_t first, std::uint64_t step)
      : kind_(kind), first_(first), step_(step) {}

  Kind kind_;
  std::uint64_t first_ = 0;
  std::uint64_t step_ = 1;
};

/// Selects a subset of a described base set.
struct SubRule {
  enum class Kind { All, Congruence, Members, ExcludeMembers };

  Kind kind = Kind::All;
  // Congruence: keep the members whose position i satisfies
  // i = residue (mod modulus).
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  // Members: explicit member values (each must belong to the base set).
  // ExcludeMembers: everything in the base set except these.
  std::vector<std::uint64_t> members;

  static SubRule all() { return SubRule{}; }
  static SubRule congruence(std::uint64_t modulus, std::uint64_t residue);
  static SubRule explicit_members(std::vector<std::uint64_t> members);
  static SubRule excluding(std::vector<std::uint64_t> members);

  bool operator==(const SubRule&) const = default;
};

/// Index set of a coordinate-sum character: an explicit finite set, a
/// described subset of a described infinite set S, or a described subset of
/// the factorials. Membership is decidable and members below any bound are
/// enumerable.
class IndexSet {
 public:
  enum class Kind { Finite, SubsetOfS, SubsetOfFac };

  static IndexSet finite(std::vector<std::uint64_t> members);
  static IndexSet subset_of(CountableSet base, SubRule rule);
  static IndexSet subset_of_fac(SubRule rule);

  Kind kind() const { return kind_; }
  const CountableSet& base() const { return base_; }
  const SubRule& rule() const { return rule_; }

  bool contains(std::uint64_t k) const;
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;

  /// True when the set is an explicit finite set (Finite kind, or a Members
  /// sub-rule over a described base).
  bool is_finite() const;
  /// Members of a finite set, increasing. Only valid when is_finite().
  const std::vector<std::uint64_t>& finite_members() const;

  bool operator==(const IndexSet&) const = default;

 private:
  IndexSet(Kind kind, CountableSet base, SubRule rule,
           std::vector<std::uint64_t> members)
      : kind_(kind),
        base_(std::move(base)),
        rule_(std::move(rule)),
        members_(std::move(members)) {}

  Kind kind_;
  CountableSet base_;
  SubRule rule_;
  std::vector<std::uint64_t> members_;  // Finite kind only
};

/// True when every member of `set` is provably a member of `cover`.
/// Decides the cases the certifiers need: finite sets by membership,
/// described subsets by base-set comparison (equal descriptors, or an
/// arithmetic base contained in an arithmetic cover).
bool set_covers(const CountableSet& cover, const IndexSet& set);

}  // namespace tbtop
