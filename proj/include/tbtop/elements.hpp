#pragma once

#include "tbtop/bigint.hpp"
#include "tbtop/circle.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace tbtop {

/// One cyclic coordinate order p^r (p prime, r >= 1).
struct PrimePower {
  std::uint64_t p = 2;
  std::uint32_t r = 1;

  BigInt order() const { return pow_big(BigInt(p), r); }
  bool operator==(const PrimePower&) const = default;
};

/// Finitely described rule k -> p_k^{r_k} for the coordinate orders of an
/// infinite direct sum: an explicit prefix followed by a repeating cycle.
/// Constant and periodic schemas are the prefix-free special cases.
/// Construction canonicalizes (minimal cycle period, absorbed prefix tail),
/// so operator== decides extensional equality for schemas built from the
/// factory functions.
class OrderSchema {
 public:
  static OrderSchema constant(PrimePower pp);
  static OrderSchema periodic(std::vector<PrimePower> cycle);
  static OrderSchema prefix_then(std::vector<PrimePower> prefix,
                                 PrimePower dflt);

  const PrimePower& at(std::uint64_t k) const;
  BigInt order_at(std::uint64_t k) const { return at(k).order(); }

  const std::vector<PrimePower>& prefix() const { return prefix_; }
  const std::vector<PrimePower>& cycle() const { return cycle_; }

  bool operator==(const OrderSchema&) const = default;

 private:
  OrderSchema(std::vector<PrimePower> prefix, std::vector<PrimePower> cycle);

  std::vector<PrimePower> prefix_;
  std::vector<PrimePower> cycle_;
};

/// Element k of Z(n), 0 <= k < n, n >= 2.
struct CyclicElement {
  BigInt value;
  BigInt modulus;

  /// Canonicalizing constructor: reduces k mod n; rejects n < 2.
  static CyclicElement make(const BigInt& k, const BigInt& n);
  bool operator==(const CyclicElement&) const = default;
};

/// Finite-support element of the direct sum described by `ambient`.
/// Supported values are nonzero and reduced mod their coordinate order.
class DirectSumElement {
 public:
  explicit DirectSumElement(OrderSchema ambient)
      : ambient_(std::move(ambient)) {}

  const OrderSchema& ambient() const { return ambient_; }
  const std::map<std::uint64_t, BigInt>& support() const { return support_; }

  /// Value at coordinate k (zero when unsupported).
  BigInt coordinate(std::uint64_t k) const;

  /// Sets coordinate k to v mod p_k^{r_k}, pruning zeros from the support.
  void set_coordinate(std::uint64_t k, const BigInt& v);

  bool is_zero() const { return support_.empty(); }
  bool operator==(const DirectSumElement&) const = default;

 private:
  OrderSchema ambient_;
  std::map<std::uint64_t, BigInt> support_;
};

/// a/p^n in the Pruefer group Z(p^infinity), canonical: 0 <= a < p^n,
/// p does not divide a unless a = 0 (and then n = 0).
struct PrueferElement {
  std::uint64_t p = 2;
  std::uint32_t n = 0;
  BigInt a = 0;

  bool is_zero() const { return a == 0; }
  bool operator==(const PrueferElement&) const = default;
};

/// Reduces a mod p^n, then strips common factors of p. Rejects non-prime p.
PrueferElement canonicalize_pruefer(std::uint64_t p, const BigInt& a,
                                    std::uint32_t n);

struct IntegerElement {
  BigInt value;
  bool operator==(const IntegerElement&) const = default;
};

using GroupElement =
    std::variant<IntegerElement, CyclicElement, DirectSumElement,
                 PrueferElement>;

/// The canonical copy of Z(n) inside the circle: k/n reduced.
CirclePoint embed_cyclic(const CyclicElement& e);

/// Exact sum in canonical form. Rejects ambient mismatches (different
/// modulus, schema, or prime).
GroupElement group_add(const GroupElement& x, const GroupElement& y);

GroupElement group_neg(const GroupElement& x);

bool is_zero(const GroupElement& x);

}  // namespace tbtop
