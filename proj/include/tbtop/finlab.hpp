#pragma once

#include "tbtop/bigint.hpp"
#include "tbtop/circle.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tbtop {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all d_i >= 0. Pivoting picks the smallest nonzero magnitude (ties by
/// position), so the output is deterministic. Vinv is the exact inverse
/// of V, maintained alongside.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix Vinv;

  /// Diagonal of D.
  std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& M);

/// Z^g modulo the row span of an integer relation matrix.
struct FiniteAbelianPresentation {
  std::size_t generators = 0;
  IntMatrix relations;  // rows are relations, columns are generators
};

/// Canonical cyclic decomposition: torsion factors d_1 | d_2 | ... (each
/// >= 2) plus a free rank.
struct InvariantFactors {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  BigInt order() const;  // torsion order; meaningful when free_rank = 0
  bool operator==(const InvariantFactors&) const = default;
};

/// Invariant factors of Z^g / rowspan(relations): ones dropped, zero
/// diagonal entries counted as free rank.
InvariantFactors quotient_decomposition(const FiniteAbelianPresentation& p);

/// Canonicalizes an arbitrary finite list of cyclic orders (each >= 1)
/// into invariant factors.
InvariantFactors invariant_factors_of_cyclic_orders(
    const std::vector<BigInt>& orders);

struct RankProfile {
  std::size_t free_rank = 0;
  std::map<BigInt, std::size_t> p_ranks;  // prime -> number of factors it divides
  std::size_t total = 0;
};

/// r_p = number of invariant factors divisible by p, for each prime p
/// dividing some factor; total = free rank + sum of the p-ranks.
RankProfile ranks(const InvariantFactors& f);

/// Invariant factors of the p-primary part: the p-parts of each factor.
InvariantFactors p_component(const InvariantFactors& f, const BigInt& p);

/// Prime factorization by trial division plus a primality check on the
/// remainder; refuses (OpError) when the remainder is a large composite.
std::map<BigInt, unsigned> factorize(const BigInt& n);

// ---------------------------------------------------------------------------
// Desk-scale lab for explicit finite abelian groups.

using Tuple = std::vector<std::uint64_t>;

/// A finite abelian group presented as a product of cyclic groups of the
/// given orders (each >= 2; the empty product is the trivial group).
/// Exhaustive operations are gated by the global budget.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return orders_.size(); }

  Tuple zero() const { return Tuple(orders_.size(), 0); }
  Tuple add(const Tuple& a, const Tuple& b) const;
  Tuple neg(const Tuple& a) const;
  Tuple scale(std::uint64_t m, const Tuple& a) const;

  /// All elements in mixed-radix order (budget-gated).
  std::vector<Tuple> elements() const;

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
};

/// Subgroup stored as its sorted element set plus a small generator list.
struct Subgroup {
  std::vector<Tuple> elements;    // sorted, canonical
  std::vector<Tuple> generators;  // a generating set

  std::uint64_t order() const { return elements.size(); }
  bool contains(const Tuple& t) const;
  bool operator==(const Subgroup& other) const {
    return elements == other.elements;
  }
};

/// Closure of a generating set.
Subgroup span(const FiniteGroup& G, const std::vector<Tuple>& generators);

Subgroup trivial_subgroup(const FiniteGroup& G);

/// Whether every element of `inner` lies in `outer`.
bool subgroup_leq(const Subgroup& inner, const Subgroup& outer);

/// All subgroups S with H <= S < K, exhaustively (budget-gated on |K|).
std::vector<Subgroup> enumerate_intermediate_subgroups(const FiniteGroup& K,
                                                       const Subgroup& H);

/// The cyclic decomposition K/H = C_1 + ... + C_t together with the
/// projection data needed to pull sub-sums back to subgroups of K.
struct QuotientDecomposition {
  std::vector<BigInt> factor_orders;  // orders of the cyclic factors C_i
  /// phi-coordinates of x in K: component i of the image of x in C_i.
  std::vector<BigInt> coordinates(const FiniteGroup& K, const Tuple& x) const;

  IntMatrix V;  // column transform from the presentation's normal form
  std::vector<BigInt> diagonal;
  std::vector<std::size_t> factor_positions;  // diagonal entries > 1
};

QuotientDecomposition quotient_of(const FiniteGroup& K, const Subgroup& H);

/// The injection A -> H_A: for every proper subset A of the cyclic factors
/// of K/H, the preimage of the sub-sum indexed by A under the canonical
/// projection. Returns all 2^t - 1 subgroups and verifies pairwise
/// distinctness (a failure indicates a bug and throws logic_error).
std::vector<Subgroup> thm17_injection(const FiniteGroup& K, const Subgroup& H);

/// A character of a finite group, stored by its images on the standard
/// generators e_1, ..., e_g.
struct FiniteCharacter {
  std::vector<CirclePoint> images;

  bool operator==(const FiniteCharacter&) const = default;
  bool operator<(const FiniteCharacter& other) const;
};

/// Validates that images define a character: d_j * images[j] = 0.
FiniteCharacter make_finite_character(const FiniteGroup& G,
                                      std::vector<CirclePoint> images);

CirclePoint eval_finite_character(const FiniteGroup& G,
                                  const FiniteCharacter& chi, const Tuple& x);

/// The dual of a finite group has the same invariant factors.
InvariantFactors dual_group(const InvariantFactors& f);

/// Basis characters chi_i sending generator g_i to 1/d_i and the others to 0.
std::vector<FiniteCharacter> character_basis(const FiniteGroup& G);

struct SeparationDensity {
  bool separates = false;    // the family separates points of G
  bool equals_dual = false;  // the family generates the full dual
};

/// Exhaustively checks point separation and compares the generated subgroup
/// of the dual with the full dual; asserts the two answers coincide (the
/// finite form of "separating = dense").
SeparationDensity separation_is_density_check(
    const FiniteGroup& G, const std::vector<FiniteCharacter>& family);

/// Extends a character given on a subgroup (by images on the subgroup's
/// generator list) to the whole group; deterministic: the lexicographically
/// least lift in the standard generator ordering. Verifies that the images
/// define a homomorphism on A first.
FiniteCharacter extend_character(const FiniteGroup& G, const Subgroup& A,
                                 const std::vector<CirclePoint>& images);

/// All lifts of the given character of A to G, exhaustively (|G| candidates,
/// budget-gated). The count always equals |G| / |A|.
std::vector<FiniteCharacter> all_extensions(const FiniteGroup& G,
                                            const Subgroup& A,
                                            const std::vector<CirclePoint>& images);

}  // namespace tbtop
