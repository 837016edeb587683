#include "tbtop/characters.hpp"

#include "tbtop/budget.hpp"
#include "tbtop/errors.hpp"

#include <algorithm>

namespace tbtop {

DigitRule DigitRule::support(std::map<std::uint64_t, std::uint32_t> digits) {
  for (auto it = digits.begin(); it != digits.end();) {
    if (it->second == 0)
      it = digits.erase(it);
    else
      ++it;
  }
  DigitRule rule;
  rule.kind_ = Kind::Support;
  rule.support_ = std::move(digits);
  return rule;
}

DigitRule DigitRule::indicator(IndexSet set) {
  DigitRule rule;
  rule.kind_ = Kind::Indicator;
  rule.indicator_ = std::move(set);
  return rule;
}

DigitRule DigitRule::prefix(std::vector<std::uint32_t> digits,
                            std::uint32_t default_digit) {
  DigitRule rule;
  rule.kind_ = Kind::Prefix;
  rule.prefix_ = std::move(digits);
  rule.default_ = default_digit;
  return rule;
}

std::uint32_t DigitRule::digit(std::uint64_t k) const {
  switch (kind_) {
    case Kind::Support: {
      auto it = support_.find(k);
      return it == support_.end() ? 0 : it->second;
    }
    case Kind::Indicator:
      return indicator_.contains(k) ? 1 : 0;
    case Kind::Prefix:
      return k < prefix_.size() ? prefix_[k] : default_;
  }
  return 0;
}

std::uint32_t DigitRule::max_digit() const {
  std::uint32_t m = 0;
  switch (kind_) {
    case Kind::Support:
      for (const auto& [k, d] : support_) m = std::max(m, d);
      return m;
    case Kind::Indicator:
      return 1;
    case Kind::Prefix:
      m = default_;
      for (std::uint32_t d : prefix_) m = std::max(m, d);
      return m;
  }
  return m;
}

bool DigitRule::finite_support() const {
  switch (kind_) {
    case Kind::Support:
      return true;
    case Kind::Indicator:
      return indicator_.is_finite();
    case Kind::Prefix:
      return default_ == 0;
  }
  return false;
}

std::uint64_t DigitRule::finite_support_bound() const {
  switch (kind_) {
    case Kind::Support:
      return support_.empty() ? 0 : support_.rbegin()->first + 1;
    case Kind::Indicator: {
      const auto& members = indicator_.finite_members();
      return members.empty() ? 0 : members.back() + 1;
    }
    case Kind::Prefix:
      if (default_ != 0)
        throw InputError("digit rule does not have finite support");
      return prefix_.size();
  }
  return 0;
}

PadicCharacter make_padic_character(std::uint64_t p, DigitRule digits) {
  if (!is_prime(p))
    throw InputError("p-adic character base " + std::to_string(p) +
                     " is not prime");
  if (digits.max_digit() > p - 1)
    throw InputError("digit rule exceeds the digit range 0..p-1");
  return PadicCharacter{p, std::move(digits)};
}

TermRule TermRule::zero() { return TermRule(); }

TermRule TermRule::power(Rational coeff, Rational ratio, std::uint64_t start) {
  TermRule rule;
  rule.kind_ = Kind::Power;
  rule.coeff_ = std::move(coeff);
  rule.ratio_ = std::move(ratio);
  rule.start_ = start;
  return rule;
}

TermRule TermRule::finite(std::vector<Rational> terms) {
  TermRule rule;
  rule.kind_ = Kind::Finite;
  rule.terms_ = std::move(terms);
  return rule;
}

Rational TermRule::term(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Zero:
      return Rational(0);
    case Kind::Power: {
      if (n < start_) return Rational(0);
      Rational value = coeff_;
      for (std::uint64_t i = 0; i < n; ++i) value *= ratio_;
      return value;
    }
    case Kind::Finite:
      return n < terms_.size() ? terms_[n] : Rational(0);
  }
  return Rational(0);
}

Rational GeometricTail::at(std::uint64_t n_cutoff) const {
  Rational value = coeff;
  for (std::uint64_t i = 0; i <= n_cutoff; ++i) value *= ratio;
  return value;
}

RotationCharacter RotationCharacter::exact(CirclePoint t) {
  RotationCharacter h;
  h.kind_ = Kind::Exact;
  h.t_ = std::move(t);
  return h;
}

RotationCharacter RotationCharacter::series(TermRule terms,
                                            GeometricTail tail) {
  if (tail.coeff < 0)
    throw InputError("tail bound coefficient must be non-negative");
  if (tail.ratio < 0 || tail.ratio >= 1)
    throw InputError("tail bound ratio must lie in [0, 1)");
  RotationCharacter h;
  h.kind_ = Kind::Series;
  h.terms_ = std::move(terms);
  h.tail_ = std::move(tail);
  return h;
}

Rational CircleInterval::dist_upper() const {
  Rational d = center.dist_to_zero() + radius;
  return d > Rational(1, 2) ? Rational(1, 2) : d;
}

Rational CircleInterval::dist_lower() const {
  Rational d = center.dist_to_zero() - radius;
  return d < 0 ? Rational(0) : d;
}

CirclePoint eval_sum_character(const SumCharacter& h,
                               const DirectSumElement& x) {
  if (!(h.ambient == x.ambient()))
    throw InputError("character and element ambient schemas differ");
  CirclePoint acc;
  for (const auto& [k, v] : x.support()) {
    if (h.index_set.contains(k))
      acc = acc + CirclePoint::normalized(v, h.ambient.order_at(k));
  }
  return acc;
}

CirclePoint eval_padic_character(const PadicCharacter& h,
                                 const PrueferElement& x) {
  if (h.p != x.p)
    throw InputError("character prime p=" + std::to_string(h.p) +
                     " does not match element prime p=" + std::to_string(x.p));
  if (x.is_zero()) return CirclePoint();
  // h(a/p^n) = (a/p^n) * sum_{k<n} h(k) p^k  (mod 1)
  BigInt base(h.p);
  BigInt digit_sum = 0;
  BigInt power = 1;
  for (std::uint32_t k = 0; k < x.n; ++k) {
    std::uint32_t d = h.digits.digit(k);
    if (d != 0) digit_sum += d * power;
    power *= base;
  }
  return CirclePoint::normalized(x.a * digit_sum, pow_big(base, x.n));
}

EvalResult eval_rotation_character(const RotationCharacter& h,
                                   const IntegerElement& m,
                                   const Rational& precision) {
  if (precision <= 0) throw InputError("precision must be positive");
  if (h.kind() == RotationCharacter::Kind::Exact)
    return h.exact_angle().scaled(m.value);

  const Rational abs_m(abs_big(m.value));
  // Smallest cutoff N with |m| * B(N) <= precision, i.e.
  // A * qn^{N+1} <= B * qd^{N+1} over plain integers (no per-step gcd).
  const BigInt qn = boost::multiprecision::numerator(h.tail().ratio);
  const BigInt qd = boost::multiprecision::denominator(h.tail().ratio);
  const Rational scale = h.tail().coeff * abs_m;
  const BigInt lhs = boost::multiprecision::numerator(scale) *
                     boost::multiprecision::denominator(precision);
  const BigInt rhs = boost::multiprecision::numerator(precision) *
                     boost::multiprecision::denominator(scale);
  std::uint64_t cutoff = 0;
  BigInt qn_pow = qn;  // qn^{cutoff+1}
  BigInt qd_pow = qd;
  const std::uint64_t max_cutoff = budget();
  while (lhs * qn_pow > rhs * qd_pow) {
    ++cutoff;
    if (cutoff > max_cutoff)
      throw OpError("tail bound did not reach the requested precision within "
                    "the cutoff budget");
    qn_pow *= qn;
    qd_pow *= qd;
  }
  Rational radius = abs_m * h.tail().coeff * Rational(qn_pow, qd_pow);

  // Partial sum of the terms up to the cutoff; the power rule advances
  // incrementally to avoid re-powering per term.
  Rational partial(0);
  switch (h.terms().kind()) {
    case TermRule::Kind::Zero:
      break;
    case TermRule::Kind::Finite:
      for (std::uint64_t n = 0;
           n <= cutoff && n < h.terms().finite_terms().size(); ++n)
        partial += h.terms().finite_terms()[n];
      break;
    case TermRule::Kind::Power: {
      Rational term = h.terms().term(h.terms().start());
      for (std::uint64_t n = h.terms().start(); n <= cutoff; ++n) {
        partial += term;
        term *= h.terms().ratio();
      }
      break;
    }
  }
  Rational scaled = partial * Rational(m.value);
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  return CircleInterval{CirclePoint::normalized(num, den), radius};
}

namespace {

EvalResult eval_primitive(const Character& h, const GroupElement& x,
                          const Rational& precision) {
  return std::visit(
      [&](const auto& character) -> EvalResult {
        using H = std::decay_t<decltype(character)>;
        if constexpr (std::is_same_v<H, SumCharacter>) {
          const auto* element = std::get_if<DirectSumElement>(&x);
          if (element == nullptr)
            throw InputError("coordinate-sum character needs a direct-sum "
                             "element");
          return eval_sum_character(character, *element);
        } else if constexpr (std::is_same_v<H, PadicCharacter>) {
          const auto* element = std::get_if<PrueferElement>(&x);
          if (element == nullptr)
            throw InputError("p-adic character needs a Pruefer element");
          return eval_padic_character(character, *element);
        } else {
          const auto* element = std::get_if<IntegerElement>(&x);
          if (element == nullptr)
            throw InputError("rotation character needs an integer element");
          return eval_rotation_character(character, *element, precision);
        }
      },
      h);
}

}  // namespace

EvalResult eval_character(const AnyCharacter& h, const GroupElement& x,
                          const Rational& precision) {
  if (const auto* combo = std::get_if<CombinationCharacter>(&h)) {
    if (combo->terms.empty()) throw InputError("empty combination character");
    CirclePoint center;
    Rational radius(0);
    // Split the precision budget evenly across series terms.
    std::size_t series_terms = 0;
    for (const auto& [m, base] : combo->terms) {
      if (const auto* rot = std::get_if<RotationCharacter>(&base);
          rot != nullptr && rot->kind() == RotationCharacter::Kind::Series)
        ++series_terms;
    }
    Rational per_term =
        series_terms == 0 ? precision : precision / Rational(series_terms);
    for (const auto& [m, base] : combo->terms) {
      Rational abs_m(abs_big(m));
      Rational term_precision =
          abs_m == 0 ? per_term : per_term / abs_m;
      EvalResult value = eval_primitive(base, x, term_precision);
      if (const auto* exact = std::get_if<CirclePoint>(&value)) {
        center = center + exact->scaled(m);
      } else {
        const auto& interval = std::get<CircleInterval>(value);
        center = center + interval.center.scaled(m);
        radius += abs_m * interval.radius;
      }
    }
    if (radius == 0) return center;
    return CircleInterval{center, radius};
  }
  return std::visit(
      [&](const auto& primitive) -> EvalResult {
        using H = std::decay_t<decltype(primitive)>;
        if constexpr (std::is_same_v<H, CombinationCharacter>) {
          throw std::logic_error("combination handled above");
        } else {
          return eval_primitive(Character(primitive), x, precision);
        }
      },
      h);
}

CirclePoint eval_exact(const AnyCharacter& h, const GroupElement& x) {
  EvalResult value = eval_character(h, x);
  if (const auto* exact = std::get_if<CirclePoint>(&value)) return *exact;
  const auto& interval = std::get<CircleInterval>(value);
  if (interval.radius == 0) return interval.center;
  throw InputError("character is not exactly evaluable");
}

DirectSumElement distinguish_characters(const SumCharacter& h,
                                        const SumCharacter& h2,
                                        std::uint64_t search_bound) {
  if (!(h.ambient == h2.ambient))
    throw InputError("characters live on different direct sums");
  for (std::uint64_t k = 0; k < search_bound; ++k) {
    if (h.index_set.contains(k) != h2.index_set.contains(k)) {
      DirectSumElement witness(h.ambient);
      witness.set_coordinate(k, BigInt(1));
      return witness;
    }
  }
  throw OpError("characters indistinguishable below index bound " +
                std::to_string(search_bound));
}

Character separate_points(const GroupElement& x, const GroupElement& x2) {
  if (x.index() != x2.index())
    throw InputError("elements live in different ambient groups");
  if (x == x2) throw InputError("cannot separate an element from itself");

  if (const auto* a = std::get_if<DirectSumElement>(&x)) {
    const auto& b = std::get<DirectSumElement>(x2);
    if (!(a->ambient() == b.ambient()))
      throw InputError("elements live in different direct sums");
    // Some coordinate differs; a singleton index set separates there.
    for (const auto& [k, v] : a->support()) {
      if (b.coordinate(k) != v)
        return SumCharacter{a->ambient(), IndexSet::finite({k})};
    }
    for (const auto& [k, v] : b.support()) {
      if (a->coordinate(k) != v)
        return SumCharacter{a->ambient(), IndexSet::finite({k})};
    }
    throw InputError("elements are equal");  // unreachable after x != x2
  }

  if (const auto* a = std::get_if<PrueferElement>(&x)) {
    const auto& b = std::get<PrueferElement>(x2);
    if (a->p != b.p) throw InputError("elements have different primes");
    // h with h(0) = 1 sends a/p^n to a/p^n itself, which is injective.
    return make_padic_character(
        a->p, DigitRule::support({{std::uint64_t{0}, std::uint32_t{1}}}));
  }

  if (const auto* a = std::get_if<IntegerElement>(&x)) {
    const auto& b = std::get<IntegerElement>(x2);
    // Smallest modulus where the two integers differ; t = 1/n.
    BigInt diff = abs_big(a->value - b.value);
    for (BigInt n = 2;; ++n) {
      if (diff % n != 0)
        return RotationCharacter::exact(
            CirclePoint::normalized(BigInt(1), n));
    }
  }

  throw InputError("point separation is not supported on this ambient group");
}

TopologySpec TopologySpec::explicit_family(std::vector<AnyCharacter> family,
                                           std::string declared_weight) {
  if (family.empty())
    throw InputError("topology generating family must be nonempty");
  TopologySpec spec;
  spec.kind_ = Kind::Explicit;
  spec.family_ = std::move(family);
  spec.declared_weight_ = std::move(declared_weight);
  return spec;
}

TopologySpec TopologySpec::all_subsets_of_s(OrderSchema ambient,
                                            CountableSet S) {
  TopologySpec spec;
  spec.kind_ = Kind::AllSubsetsOfS;
  spec.ambient_ = std::move(ambient);
  spec.S_ = std::move(S);
  spec.declared_weight_ = "c";
  return spec;
}

TopologySpec TopologySpec::all_subsets_of_fac(std::uint64_t p) {
  if (!is_prime(p))
    throw InputError("topology family base " + std::to_string(p) +
                     " is not prime");
  TopologySpec spec;
  spec.kind_ = Kind::AllSubsetsOfFac;
  spec.p_ = p;
  spec.declared_weight_ = "c";
  return spec;
}

std::vector<AnyCharacter> TopologySpec::family_prefix(std::size_t count) const {
  std::vector<AnyCharacter> result;
  switch (kind_) {
    case Kind::Explicit:
      for (std::size_t i = 0; i < count && i < family_.size(); ++i)
        result.push_back(family_[i]);
      break;
    case Kind::AllSubsetsOfS:
      for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t member =
            S_->member_at(i).convert_to<std::uint64_t>();
        result.push_back(SumCharacter{
            *ambient_, IndexSet::subset_of(
                           *S_, SubRule::explicit_members({member}))});
      }
      break;
    case Kind::AllSubsetsOfFac:
      for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t member = CountableSet::factorials()
                                   .member_at(i)
                                   .convert_to<std::uint64_t>();
        result.push_back(make_padic_character(
            p_, DigitRule::indicator(IndexSet::subset_of_fac(
                    SubRule::explicit_members({member})))));
      }
      break;
  }
  return result;
}

bool basic_nbhd_contains(const TopologySpec& spec,
                         const std::vector<AnyCharacter>& F,
                         const Rational& eps, const GroupElement& x) {
  if (eps <= 0) throw InputError("neighborhood radius must be positive");
  if (spec.kind() == TopologySpec::Kind::Explicit) {
    for (const auto& h : F) {
      bool member = std::any_of(spec.family().begin(), spec.family().end(),
                                [&](const AnyCharacter& g) { return g == h; });
      if (!member)
        throw InputError("character is not drawn from the declared family");
    }
  }
  for (const auto& h : F) {
    EvalResult value = eval_character(h, x, eps / 4);
    if (const auto* exact = std::get_if<CirclePoint>(&value)) {
      if (exact->dist_to_zero() >= eps) return false;
    } else {
      const auto& interval = std::get<CircleInterval>(value);
      if (interval.dist_lower() >= eps) return false;
      if (interval.dist_upper() >= eps)
        throw OpError("available precision cannot decide the neighborhood "
                      "comparison");
    }
  }
  return true;
}

}  // namespace tbtop
