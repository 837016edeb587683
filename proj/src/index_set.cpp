#include "tbtop/index_set.hpp"

#include "tbtop/errors.hpp"

#include <algorithm>

namespace tbtop {

CountableSet CountableSet::naturals() {
  return CountableSet(Kind::Naturals, 0, 1);
}

CountableSet CountableSet::arithmetic(std::uint64_t first,
                                      std::uint64_t step) {
  if (step == 0) throw InputError("arithmetic set step must be >= 1");
  return CountableSet(Kind::Arithmetic, first, step);
}

CountableSet CountableSet::factorials() {
  return CountableSet(Kind::Factorials, 0, 1);
}

bool CountableSet::contains(std::uint64_t k) const {
  return position_of(k).has_value();
}

std::optional<std::uint64_t> CountableSet::position_of(std::uint64_t k) const {
  switch (kind_) {
    case Kind::Naturals:
      return k;
    case Kind::Arithmetic:
      if (k < first_ || (k - first_) % step_ != 0) return std::nullopt;
      return (k - first_) / step_;
    case Kind::Factorials: {
      // k = m! iff repeatedly dividing by 2, 3, ... exhausts it.
      if (k == 0) return std::nullopt;
      if (k == 1) return 0;  // 1 = 1!
      std::uint64_t value = k;
      std::uint64_t divisor = 2;
      while (value % divisor == 0) {
        value /= divisor;
        if (value == 1) return divisor - 1;  // k = divisor!, position m-1
        ++divisor;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

BigInt CountableSet::member_at(std::uint64_t i) const {
  switch (kind_) {
    case Kind::Naturals:
      return BigInt(i);
    case Kind::Arithmetic:
      return BigInt(first_) + BigInt(step_) * i;
    case Kind::Factorials:
      return factorial(i + 1);
  }
  return BigInt(0);
}

std::vector<std::uint64_t> CountableSet::members_below(
    std::uint64_t bound) const {
  std::vector<std::uint64_t> result;
  for (std::uint64_t i = 0;; ++i) {
    BigInt m = member_at(i);
    if (m >= bound) break;
    result.push_back(m.convert_to<std::uint64_t>());
  }
  return result;
}

SubRule SubRule::congruence(std::uint64_t modulus, std::uint64_t residue) {
  if (modulus == 0) throw InputError("sub-rule congruence modulus must be >= 1");
  if (residue >= modulus)
    throw InputError("sub-rule congruence residue must be < modulus");
  SubRule rule;
  rule.kind = Kind::Congruence;
  rule.modulus = modulus;
  rule.residue = residue;
  return rule;
}

SubRule SubRule::explicit_members(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubRule rule;
  rule.kind = Kind::Members;
  rule.members = std::move(members);
  return rule;
}

SubRule SubRule::excluding(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubRule rule;
  rule.kind = Kind::ExcludeMembers;
  rule.members = std::move(members);
  return rule;
}

IndexSet IndexSet::finite(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return IndexSet(Kind::Finite, CountableSet::naturals(), SubRule::all(),
                  std::move(members));
}

IndexSet IndexSet::subset_of(CountableSet base, SubRule rule) {
  if (rule.kind == SubRule::Kind::Members) {
    for (std::uint64_t m : rule.members) {
      if (!base.contains(m))
        throw InputError("sub-rule member " + std::to_string(m) +
                         " does not belong to the base set");
    }
  }
  return IndexSet(Kind::SubsetOfS, std::move(base), std::move(rule), {});
}

IndexSet IndexSet::subset_of_fac(SubRule rule) {
  if (rule.kind == SubRule::Kind::Members) {
    for (std::uint64_t m : rule.members) {
      if (!CountableSet::factorials().contains(m))
        throw InputError("sub-rule member " + std::to_string(m) +
                         " is not a factorial");
    }
  }
  return IndexSet(Kind::SubsetOfFac, CountableSet::factorials(),
                  std::move(rule), {});
}

bool IndexSet::contains(std::uint64_t k) const {
  if (kind_ == Kind::Finite)
    return std::binary_search(members_.begin(), members_.end(), k);
  auto pos = base_.position_of(k);
  if (!pos.has_value()) return false;
  switch (rule_.kind) {
    case SubRule::Kind::All:
      return true;
    case SubRule::Kind::Congruence:
      return *pos % rule_.modulus == rule_.residue;
    case SubRule::Kind::Members:
      return std::binary_search(rule_.members.begin(), rule_.members.end(), k);
    case SubRule::Kind::ExcludeMembers:
      return !std::binary_search(rule_.members.begin(), rule_.members.end(),
                                 k);
  }
  return false;
}

std::vector<std::uint64_t> IndexSet::members_below(std::uint64_t bound) const {
  if (kind_ == Kind::Finite) {
    std::vector<std::uint64_t> result;
    for (std::uint64_t m : members_)
      if (m < bound) result.push_back(m);
    return result;
  }
  std::vector<std::uint64_t> result;
  for (std::uint64_t m : base_.members_below(bound))
    if (contains(m)) result.push_back(m);
  return result;
}

bool IndexSet::is_finite() const {
  return kind_ == Kind::Finite || rule_.kind == SubRule::Kind::Members;
}

const std::vector<std::uint64_t>& IndexSet::finite_members() const {
  if (kind_ == Kind::Finite) return members_;
  if (rule_.kind == SubRule::Kind::Members) return rule_.members;
  throw InputError("index set is not finite");
}

bool set_covers(const CountableSet& cover, const IndexSet& set) {
  if (set.is_finite()) {
    for (std::uint64_t m : set.finite_members())
      if (!cover.contains(m)) return false;
    return true;
  }
  const CountableSet& base = set.base();
  if (base == cover) return true;
  if (cover.kind() == CountableSet::Kind::Naturals) return true;
  if (base.kind() == CountableSet::Kind::Arithmetic &&
      cover.kind() == CountableSet::Kind::Arithmetic) {
    // {b + s*i} is contained in {B + S*j} iff S | s and b hits the cover.
    return base.first() >= cover.first() &&
           (base.first() - cover.first()) % cover.step() == 0 &&
           base.step() % cover.step() == 0;
  }
  return false;
}

}  // namespace tbtop
