#include "tbtop/finlab.hpp"

#include "tbtop/budget.hpp"
#include "tbtop/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tbtop {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  IntMatrix out(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw InputError("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant needs a square matrix");
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w[pivot][k] == 0) ++pivot;
      if (pivot == n) return BigInt(0);
      std::swap(w[k], w[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sign > 0 ? w[n - 1][n - 1] : BigInt(-w[n - 1][n - 1]);
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> diag;
  const std::size_t n = std::min(D.size(), D.empty() ? 0 : D[0].size());
  for (std::size_t i = 0; i < n; ++i) diag.push_back(D[i][i]);
  return diag;
}

SnfResult smith_normal_form(const IntMatrix& M) {
  if (M.empty() || M[0].empty())
    throw InputError("smith normal form needs a nonempty matrix");
  const std::size_t rows = M.size();
  const std::size_t cols = M[0].size();
  for (const auto& row : M)
    if (row.size() != cols)
      throw InputError("matrix rows have inconsistent lengths");

  IntMatrix D = M;
  IntMatrix U = identity_matrix(rows);
  IntMatrix V = identity_matrix(cols);
  IntMatrix Vinv = identity_matrix(cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(D[i][a], D[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    std::swap(Vinv[a], Vinv[b]);
  };
  auto negate_row = [&](std::size_t a) {
    for (auto& v : D[a]) v = -v;
    for (auto& v : U[a]) v = -v;
  };
  // row a -= q * row b
  auto row_sub = [&](std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) D[a][j] -= q * D[b][j];
    for (std::size_t j = 0; j < rows; ++j) U[a][j] -= q * U[b][j];
  };
  // col a -= q * col b; Vinv gets the inverse op: row b += q * row a.
  auto col_sub = [&](std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) D[i][a] -= q * D[i][b];
    for (std::size_t i = 0; i < cols; ++i) V[i][a] -= q * V[i][b];
    for (std::size_t j = 0; j < cols; ++j) Vinv[b][j] += q * Vinv[a][j];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing submatrix, ties by
      // position: deterministic output.
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (D[i][j] == 0) continue;
          BigInt mag = abs_big(D[i][j]);
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;  // trailing submatrix is zero

      swap_rows(t, pi);
      swap_cols(t, pj);
      if (D[t][t] < 0) negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        row_sub(i, t, D[i][t] / D[t][t]);
        if (D[i][t] != 0) clean = false;  // smaller residue became a pivot
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        col_sub(j, t, D[t][j] / D[t][t]);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Full divisibility sweep: the pivot must divide the whole trailing
      // submatrix so the diagonal forms a chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols && divides_all; ++j) {
          if (D[i][j] % D[t][t] != 0) {
            row_sub(t, i, BigInt(-1));  // pull the offending row up
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (D[t][t] == 0) break;  // nothing left; trailing diagonal stays zero
  }

  return SnfResult{std::move(U), std::move(D), std::move(V), std::move(Vinv)};
}

BigInt InvariantFactors::order() const {
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

InvariantFactors quotient_decomposition(const FiniteAbelianPresentation& p) {
  for (const auto& row : p.relations)
    if (row.size() != p.generators)
      throw InputError("relation length does not match the generator count");
  InvariantFactors f;
  if (p.relations.empty()) {
    f.free_rank = p.generators;
    return f;
  }
  if (p.generators == 0) return f;
  SnfResult snf = smith_normal_form(p.relations);
  std::size_t rank = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) f.torsion.push_back(d);
  }
  f.free_rank = p.generators - rank;
  return f;
}

InvariantFactors invariant_factors_of_cyclic_orders(
    const std::vector<BigInt>& orders) {
  std::vector<BigInt> nontrivial;
  for (const auto& d : orders) {
    if (d < 1) throw InputError("cyclic order must be >= 1, got " + d.str());
    if (d > 1) nontrivial.push_back(d);
  }
  if (nontrivial.empty()) return InvariantFactors{};
  IntMatrix diag(nontrivial.size(), std::vector<BigInt>(nontrivial.size(), 0));
  for (std::size_t i = 0; i < nontrivial.size(); ++i) diag[i][i] = nontrivial[i];
  FiniteAbelianPresentation pres{nontrivial.size(), diag};
  return quotient_decomposition(pres);
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n < 1) throw InputError("factorization needs a positive integer");
  std::map<BigInt, unsigned> factors;
  BigInt rest = n;
  for (BigInt p = 2; p * p <= rest && p < (1 << 20); p == 2 ? p = 3 : p += 2) {
    while (rest % p == 0) {
      ++factors[p];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (!is_probable_prime(rest))
      throw OpError("factorization budget exceeded: composite remainder " +
                    rest.str());
    ++factors[rest];
  }
  return factors;
}

RankProfile ranks(const InvariantFactors& f) {
  RankProfile profile;
  profile.free_rank = f.free_rank;
  std::set<BigInt> primes;
  for (const auto& d : f.torsion)
    for (const auto& [p, e] : factorize(d)) primes.insert(p);
  for (const auto& p : primes) {
    std::size_t count = 0;
    for (const auto& d : f.torsion)
      if (d % p == 0) ++count;
    profile.p_ranks[p] = count;
  }
  profile.total = profile.free_rank;
  for (const auto& [p, r] : profile.p_ranks) profile.total += r;
  return profile;
}

InvariantFactors p_component(const InvariantFactors& f, const BigInt& p) {
  if (!is_probable_prime(p))
    throw InputError("p-component needs a prime, got " + p.str());
  if (f.free_rank != 0)
    throw InputError("p-component is defined here for finite groups only");
  InvariantFactors result;
  for (const auto& d : f.torsion) {
    BigInt part = 1;
    BigInt rest = d;
    while (rest % p == 0) {
      part *= p;
      rest /= p;
    }
    if (part > 1) result.torsion.push_back(part);
  }
  return result;
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::uint64_t> orders)
    : orders_(std::move(orders)) {
  BigInt total = 1;
  for (std::uint64_t d : orders_) {
    if (d < 2)
      throw InputError("finite group cyclic orders must be >= 2, got " +
                       std::to_string(d));
    total *= d;
    if (total > BigInt(1) << 62)
      throw InputError("finite group order overflows the desk-scale range");
  }
  order_ = total.convert_to<std::uint64_t>();
}

Tuple FiniteGroup::add(const Tuple& a, const Tuple& b) const {
  Tuple out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

Tuple FiniteGroup::neg(const Tuple& a) const {
  Tuple out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return out;
}

Tuple FiniteGroup::scale(std::uint64_t m, const Tuple& a) const {
  Tuple out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = (static_cast<unsigned __int128>(a[i]) * m) % orders_[i];
  return out;
}

std::vector<Tuple> FiniteGroup::elements() const {
  if (order_ > budget())
    throw OpError("group order " + std::to_string(order_) +
                  " exceeds the enumeration budget (TBTOP_BUDGET)");
  std::vector<Tuple> all;
  all.reserve(order_);
  Tuple current = zero();
  for (std::uint64_t i = 0; i < order_; ++i) {
    all.push_back(current);
    // Mixed-radix increment, last coordinate fastest.
    for (std::size_t j = orders_.size(); j-- > 0;) {
      if (++current[j] < orders_[j]) break;
      current[j] = 0;
    }
  }
  return all;
}

bool Subgroup::contains(const Tuple& t) const {
  return std::binary_search(elements.begin(), elements.end(), t);
}

Subgroup span(const FiniteGroup& G, const std::vector<Tuple>& generators) {
  for (const auto& g : generators)
    if (g.size() != G.rank())
      throw InputError("generator arity does not match the group rank");
  std::set<Tuple> closure;
  closure.insert(G.zero());
  std::vector<Tuple> frontier{G.zero()};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        Tuple candidate = G.add(e, g);
        if (closure.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  Subgroup result;
  result.elements.assign(closure.begin(), closure.end());
  result.generators = generators;
  return result;
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return span(G, {}); }

bool subgroup_leq(const Subgroup& inner, const Subgroup& outer) {
  return std::all_of(inner.elements.begin(), inner.elements.end(),
                     [&](const Tuple& t) { return outer.contains(t); });
}

std::vector<Subgroup> enumerate_intermediate_subgroups(const FiniteGroup& K,
                                                       const Subgroup& H) {
  if (K.order() > budget())
    throw OpError("group order " + std::to_string(K.order()) +
                  " exceeds the enumeration budget (TBTOP_BUDGET)");
  Subgroup base = span(K, H.generators);
  if (!(base == H))
    throw InputError("subgroup element set is not the span of its generators");

  const std::vector<Tuple> all = K.elements();
  std::set<std::vector<Tuple>> seen;
  std::vector<Subgroup> found;
  std::vector<Subgroup> queue{base};
  seen.insert(base.elements);
  while (!queue.empty()) {
    Subgroup current = std::move(queue.back());
    queue.pop_back();
    for (const auto& x : all) {
      if (current.contains(x)) continue;
      std::vector<Tuple> gens = current.generators;
      gens.push_back(x);
      Subgroup bigger = span(K, gens);
      if (seen.insert(bigger.elements).second) queue.push_back(bigger);
    }
    found.push_back(std::move(current));
  }

  // Drop K itself, order deterministically.
  found.erase(std::remove_if(found.begin(), found.end(),
                             [&](const Subgroup& s) {
                               return s.order() == K.order();
                             }),
              found.end());
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements < b.elements;
            });
  return found;
}

std::vector<BigInt> QuotientDecomposition::coordinates(const FiniteGroup& K,
                                                       const Tuple& x) const {
  const std::size_t g = K.rank();
  std::vector<BigInt> transformed(g, 0);
  for (std::size_t j = 0; j < g; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < g; ++i) acc += BigInt(x[i]) * V[i][j];
    transformed[j] = acc;
  }
  std::vector<BigInt> coords;
  coords.reserve(factor_positions.size());
  for (std::size_t pos : factor_positions)
    coords.push_back(mod_floor(transformed[pos], diagonal[pos]));
  return coords;
}

QuotientDecomposition quotient_of(const FiniteGroup& K, const Subgroup& H) {
  const std::size_t g = K.rank();
  if (g == 0) throw InputError("quotient of the trivial group is trivial");
  IntMatrix relations;
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<BigInt> row(g, 0);
    row[i] = K.orders()[i];
    relations.push_back(std::move(row));
  }
  for (const auto& h : H.generators) {
    if (h.size() != g)
      throw InputError("subgroup generator arity does not match the group");
    std::vector<BigInt> row(g);
    for (std::size_t i = 0; i < g; ++i) row[i] = BigInt(h[i]);
    relations.push_back(std::move(row));
  }
  SnfResult snf = smith_normal_form(relations);

  QuotientDecomposition q;
  q.V = snf.V;
  q.diagonal = snf.diagonal();
  for (std::size_t i = 0; i < q.diagonal.size(); ++i) {
    if (q.diagonal[i] == 0)
      throw std::logic_error("finite quotient produced a zero factor");
    if (q.diagonal[i] > 1) {
      q.factor_positions.push_back(i);
      q.factor_orders.push_back(q.diagonal[i]);
    }
  }
  return q;
}

std::vector<Subgroup> thm17_injection(const FiniteGroup& K,
                                      const Subgroup& H) {
  if (K.order() > budget())
    throw OpError("group order " + std::to_string(K.order()) +
                  " exceeds the enumeration budget (TBTOP_BUDGET)");
  QuotientDecomposition q = quotient_of(K, H);
  const std::size_t t = q.factor_orders.size();
  if (t < 1)
    throw InputError("quotient K/H is trivial; no cyclic factors to index");
  if (t >= 20) throw OpError("too many cyclic factors for subset enumeration");

  const std::vector<Tuple> all = K.elements();
  std::vector<std::vector<BigInt>> coords;
  coords.reserve(all.size());
  for (const auto& x : all) coords.push_back(q.coordinates(K, x));

  std::vector<Subgroup> family;
  std::set<std::vector<Tuple>> distinct;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << t); ++mask) {
    Subgroup h_a;
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
      bool inside = true;
      for (std::size_t i = 0; i < t && inside; ++i)
        if ((mask & (std::uint64_t{1} << i)) == 0 && coords[idx][i] != 0)
          inside = false;
      if (inside) h_a.elements.push_back(all[idx]);
    }
    std::sort(h_a.elements.begin(), h_a.elements.end());
    // Greedy small generating set.
    Subgroup current = span(K, {});
    for (const auto& e : h_a.elements) {
      if (current.contains(e)) continue;
      h_a.generators.push_back(e);
      current = span(K, h_a.generators);
    }
    if (!distinct.insert(h_a.elements).second)
      throw std::logic_error("subgroup family members collide; the subset "
                             "injection is broken");
    if (h_a.order() >= K.order())
      throw std::logic_error("subgroup family member is not proper");
    family.push_back(std::move(h_a));
  }
  return family;
}

bool FiniteCharacter::operator<(const FiniteCharacter& other) const {
  const std::size_t n = std::min(images.size(), other.images.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].num() != other.images[i].num())
      return images[i].num() < other.images[i].num();
    if (images[i].den() != other.images[i].den())
      return images[i].den() < other.images[i].den();
  }
  return images.size() < other.images.size();
}

FiniteCharacter make_finite_character(const FiniteGroup& G,
                                      std::vector<CirclePoint> images) {
  if (images.size() != G.rank())
    throw InputError("character needs one image per generator");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].scaled(BigInt(G.orders()[i])).is_zero())
      throw InputError("image of generator " + std::to_string(i) +
                       " does not respect its order");
  }
  return FiniteCharacter{std::move(images)};
}

CirclePoint eval_finite_character(const FiniteGroup& G,
                                  const FiniteCharacter& chi, const Tuple& x) {
  if (chi.images.size() != G.rank() || x.size() != G.rank())
    throw InputError("character/element arity mismatch");
  CirclePoint acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc = acc + chi.images[i].scaled(BigInt(x[i]));
  return acc;
}

InvariantFactors dual_group(const InvariantFactors& f) {
  if (f.free_rank != 0)
    throw InputError("finite duality needs a torsion group (free rank 0)");
  return f;
}

std::vector<FiniteCharacter> character_basis(const FiniteGroup& G) {
  std::vector<FiniteCharacter> basis;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    std::vector<CirclePoint> images(G.rank());
    images[i] = CirclePoint::normalized(BigInt(1), BigInt(G.orders()[i]));
    basis.push_back(FiniteCharacter{std::move(images)});
  }
  return basis;
}

SeparationDensity separation_is_density_check(
    const FiniteGroup& G, const std::vector<FiniteCharacter>& family) {
  if (G.order() > budget())
    throw OpError("group order " + std::to_string(G.order()) +
                  " exceeds the enumeration budget (TBTOP_BUDGET)");
  for (const auto& chi : family) make_finite_character(G, chi.images);

  const std::vector<Tuple> all = G.elements();
  SeparationDensity result;

  result.separates = true;
  for (std::size_t i = 0; i < all.size() && result.separates; ++i) {
    for (std::size_t j = i + 1; j < all.size() && result.separates; ++j) {
      bool separated = false;
      for (const auto& chi : family) {
        if (!(eval_finite_character(G, chi, all[i]) ==
              eval_finite_character(G, chi, all[j]))) {
          separated = true;
          break;
        }
      }
      if (!separated) result.separates = false;
    }
  }

  // Pointwise closure of the family inside the dual.
  std::set<FiniteCharacter> closure;
  FiniteCharacter zero{std::vector<CirclePoint>(G.rank())};
  closure.insert(zero);
  std::vector<FiniteCharacter> frontier{zero};
  while (!frontier.empty()) {
    std::vector<FiniteCharacter> next;
    for (const auto& chi : frontier) {
      for (const auto& gen : family) {
        std::vector<CirclePoint> sum(G.rank());
        for (std::size_t i = 0; i < G.rank(); ++i)
          sum[i] = chi.images[i] + gen.images[i];
        FiniteCharacter candidate{std::move(sum)};
        if (closure.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  result.equals_dual = closure.size() == G.order();

  if (result.separates != result.equals_dual)
    throw std::logic_error("separation and dual-density disagree on a finite "
                           "group; this is a bug");
  return result;
}

namespace {

/// chi on all of A by propagating generator images; rejects inconsistent
/// assignments (images that do not define a homomorphism).
std::map<Tuple, CirclePoint> homomorphism_on(
    const FiniteGroup& G, const Subgroup& A,
    const std::vector<CirclePoint>& images) {
  if (images.size() != A.generators.size())
    throw InputError("need exactly one image per subgroup generator");
  std::map<Tuple, CirclePoint> value;
  value[G.zero()] = CirclePoint();
  std::vector<Tuple> frontier{G.zero()};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& e : frontier) {
      for (std::size_t i = 0; i < A.generators.size(); ++i) {
        Tuple stepped = G.add(e, A.generators[i]);
        CirclePoint v = value.at(e) + images[i];
        auto [it, inserted] = value.emplace(stepped, v);
        if (inserted)
          next.push_back(stepped);
        else if (!(it->second == v))
          throw InputError("images do not define a homomorphism on the "
                           "subgroup");
      }
    }
    frontier = std::move(next);
  }
  return value;
}

}  // namespace

std::vector<FiniteCharacter> all_extensions(
    const FiniteGroup& G, const Subgroup& A,
    const std::vector<CirclePoint>& images) {
  if (G.order() > budget())
    throw OpError("group order " + std::to_string(G.order()) +
                  " exceeds the enumeration budget (TBTOP_BUDGET)");
  homomorphism_on(G, A, images);  // validates

  std::vector<FiniteCharacter> lifts;
  const std::size_t g = G.rank();
  std::vector<std::uint64_t> c(g, 0);
  for (;;) {
    FiniteCharacter k{std::vector<CirclePoint>(g)};
    for (std::size_t i = 0; i < g; ++i)
      k.images[i] = CirclePoint::normalized(BigInt(c[i]), BigInt(G.orders()[i]));
    bool matches = true;
    for (std::size_t i = 0; i < A.generators.size() && matches; ++i)
      matches = eval_finite_character(G, k, A.generators[i]) == images[i];
    if (matches) lifts.push_back(std::move(k));

    // Lexicographic successor (last coordinate fastest).
    std::size_t j = g;
    while (j-- > 0) {
      if (++c[j] < G.orders()[j]) break;
      c[j] = 0;
      if (j == 0) return lifts;
    }
    if (g == 0) return lifts;
  }
}

FiniteCharacter extend_character(const FiniteGroup& G, const Subgroup& A,
                                 const std::vector<CirclePoint>& images) {
  std::vector<FiniteCharacter> lifts = all_extensions(G, A, images);
  if (lifts.empty())
    throw std::logic_error("no lift exists; divisibility of the circle "
                           "guarantees one");
  return lifts.front();
}

}  // namespace tbtop
