#include "tbtop/elements.hpp"

#include "tbtop/errors.hpp"

#include <algorithm>

namespace tbtop {

namespace {

void check_prime_power(const PrimePower& pp) {
  if (!is_prime(pp.p))
    throw InputError("coordinate order base " + std::to_string(pp.p) +
                     " is not prime");
  if (pp.r < 1) throw InputError("coordinate order exponent must be >= 1");
}

/// Smallest period of the cycle under rotation-free repetition.
std::vector<PrimePower> minimal_period(std::vector<PrimePower> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool periodic = true;
    for (std::size_t i = len; i < n && periodic; ++i)
      periodic = cycle[i] == cycle[i % len];
    if (periodic) {
      cycle.resize(len);
      return cycle;
    }
  }
  return cycle;
}

}  // namespace

OrderSchema::OrderSchema(std::vector<PrimePower> prefix,
                         std::vector<PrimePower> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InputError("order schema needs a repeating part");
  for (const auto& pp : prefix_) check_prime_power(pp);
  for (const auto& pp : cycle_) check_prime_power(pp);
  cycle_ = minimal_period(std::move(cycle_));
  // A prefix entry equal to a length-1 cycle is redundant.
  while (!prefix_.empty() && cycle_.size() == 1 && prefix_.back() == cycle_[0])
    prefix_.pop_back();
}

OrderSchema OrderSchema::constant(PrimePower pp) {
  return OrderSchema({}, {pp});
}

OrderSchema OrderSchema::periodic(std::vector<PrimePower> cycle) {
  return OrderSchema({}, std::move(cycle));
}

OrderSchema OrderSchema::prefix_then(std::vector<PrimePower> prefix,
                                     PrimePower dflt) {
  return OrderSchema(std::move(prefix), {dflt});
}

const PrimePower& OrderSchema::at(std::uint64_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  return cycle_[(k - prefix_.size()) % cycle_.size()];
}

CyclicElement CyclicElement::make(const BigInt& k, const BigInt& n) {
  if (n < 2) throw InputError("cyclic modulus must be >= 2, got " + n.str());
  return CyclicElement{mod_floor(k, n), n};
}

BigInt DirectSumElement::coordinate(std::uint64_t k) const {
  auto it = support_.find(k);
  return it == support_.end() ? BigInt(0) : it->second;
}

void DirectSumElement::set_coordinate(std::uint64_t k, const BigInt& v) {
  BigInt reduced = mod_floor(v, ambient_.order_at(k));
  if (reduced == 0)
    support_.erase(k);
  else
    support_[k] = reduced;
}

PrueferElement canonicalize_pruefer(std::uint64_t p, const BigInt& a,
                                    std::uint32_t n) {
  if (!is_prime(p))
    throw InputError("pruefer base " + std::to_string(p) + " is not prime");
  BigInt reduced = mod_floor(a, pow_big(BigInt(p), n));
  if (reduced == 0) return PrueferElement{p, 0, BigInt(0)};
  std::uint32_t level = n;
  while (reduced % p == 0) {
    reduced /= p;
    --level;
  }
  return PrueferElement{p, level, reduced};
}

CirclePoint embed_cyclic(const CyclicElement& e) {
  return CirclePoint::normalized(e.value, e.modulus);
}

namespace {

GroupElement add_impl(const IntegerElement& x, const IntegerElement& y) {
  return IntegerElement{x.value + y.value};
}

GroupElement add_impl(const CyclicElement& x, const CyclicElement& y) {
  if (x.modulus != y.modulus)
    throw InputError("cyclic ambient mismatch: Z(" + x.modulus.str() +
                     ") vs Z(" + y.modulus.str() + ")");
  return CyclicElement::make(x.value + y.value, x.modulus);
}

GroupElement add_impl(const DirectSumElement& x, const DirectSumElement& y) {
  if (!(x.ambient() == y.ambient()))
    throw InputError("direct-sum ambient mismatch");
  DirectSumElement sum = x;
  for (const auto& [k, v] : y.support())
    sum.set_coordinate(k, sum.coordinate(k) + v);
  return sum;
}

GroupElement add_impl(const PrueferElement& x, const PrueferElement& y) {
  if (x.p != y.p)
    throw InputError("pruefer ambient mismatch: p=" + std::to_string(x.p) +
                     " vs p=" + std::to_string(y.p));
  std::uint32_t n = std::max(x.n, y.n);
  BigInt base(x.p);
  BigInt a = x.a * pow_big(base, n - x.n) + y.a * pow_big(base, n - y.n);
  return canonicalize_pruefer(x.p, a, n);
}

}  // namespace

GroupElement group_add(const GroupElement& x, const GroupElement& y) {
  return std::visit(
      [](const auto& a, const auto& b) -> GroupElement {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                     std::decay_t<decltype(b)>>) {
          return add_impl(a, b);
        } else {
          throw InputError("cannot add elements of different ambient groups");
        }
      },
      x, y);
}

GroupElement group_neg(const GroupElement& x) {
  return std::visit(
      [](const auto& e) -> GroupElement {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, IntegerElement>) {
          return IntegerElement{-e.value};
        } else if constexpr (std::is_same_v<T, CyclicElement>) {
          return CyclicElement::make(-e.value, e.modulus);
        } else if constexpr (std::is_same_v<T, DirectSumElement>) {
          DirectSumElement neg(e.ambient());
          for (const auto& [k, v] : e.support()) neg.set_coordinate(k, -v);
          return neg;
        } else {
          return canonicalize_pruefer(e.p, -e.a, e.n);
        }
      },
      x);
}

bool is_zero(const GroupElement& x) {
  return std::visit(
      [](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, IntegerElement>) {
          return e.value == 0;
        } else if constexpr (std::is_same_v<T, CyclicElement>) {
          return e.value == 0;
        } else if constexpr (std::is_same_v<T, DirectSumElement>) {
          return e.is_zero();
        } else {
          return e.is_zero();
        }
      },
      x);
}

}  // namespace tbtop
