#include "tbtop/certify.hpp"

#include "tbtop/errors.hpp"

#include <algorithm>

namespace tbtop {

std::string to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T51_subsetS: return "T51_subsetS";
    case TheoremTag::T51_finite: return "T51_finite";
    case TheoremTag::T52_finite: return "T52_finite";
    case TheoremTag::T52_subsetFac: return "T52_subsetFac";
    case TheoremTag::Combination: return "combination";
    case TheoremTag::Empirical: return "empirical";
  }
  return "empirical";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::EvidenceOnly: return "evidence_only";
  }
  return "evidence_only";
}

Rational thm52_bound(std::uint64_t p, std::uint64_t n) {
  return Rational(BigInt(p - 1) * n, pow_big(BigInt(p), n));
}

ConvergenceCertificate certify_thm51(const SumCharacter& h,
                                     const SequenceSchema& seq,
                                     std::uint64_t window) {
  if (window < 1) throw InputError("verification window must be >= 1");

  ConvergenceCertificate cert;
  cert.character = h;
  cert.sequence = seq;
  cert.n_lo = first_index(seq);

  const auto* basis = std::get_if<BasisDirectSum>(&seq);
  const bool finite_set = h.index_set.is_finite();
  // The all-zero route: every index the character sums over lies in the set
  // the sequence provably avoids.
  const bool zero_route = basis != nullptr &&
                          affine_avoids(basis->rule, basis->avoided) &&
                          set_covers(basis->avoided, h.index_set);
  // The cutoff route: a finite index set against the schema's injective
  // singleton-support rule.
  const bool cutoff_route = basis != nullptr && finite_set;

  if (!zero_route && !cutoff_route) {
    // No structural guarantee: refuse to certify, report evidence.
    cert.tag = finite_set ? TheoremTag::T51_finite : TheoremTag::T51_subsetS;
    cert.verdict = Verdict::EvidenceOnly;
    cert.tail_argument = "no structural guarantee; prefix evidence only";
    std::uint64_t count = window;
    if (const auto* explicit_seq = std::get_if<ExplicitPrefix>(&seq))
      count = std::min<std::uint64_t>(window, explicit_seq->terms.size());
    for (std::uint64_t i = 0; i < count; ++i) {
      GroupElement x = term_at(seq, cert.n_lo + i);
      const auto* e = std::get_if<DirectSumElement>(&x);
      if (e == nullptr)
        throw InputError("coordinate-sum certificates need a direct-sum "
                         "sequence");
      CirclePoint value = eval_sum_character(h, *e);
      cert.values.push_back(CertificateValue{cert.n_lo + i, value,
                                             value.dist_to_zero()});
    }
    cert.n_hi = cert.n_lo + (count == 0 ? 0 : count - 1);
    return cert;
  }

  if (!zero_route) {
    // Cutoff N = 1 + max{n : support(x_n) meets the index set}; beyond it
    // every value is exactly 0 because the injective support rule has moved
    // past the finite index set.
    std::uint64_t cutoff = 0;
    for (std::uint64_t member : h.index_set.finite_members()) {
      if (member < basis->rule.offset) continue;
      std::uint64_t shifted = member - basis->rule.offset;
      if (shifted % basis->rule.stride != 0) continue;
      cutoff = std::max(cutoff, shifted / basis->rule.stride + 1);
    }
    cert.tag = TheoremTag::T51_finite;
    cert.verdict = Verdict::Certified;
    cert.tail_zero_from = cutoff;
    cert.tail_argument =
        "support indices pass the finite index set: h(x_n) = 0 for all n >= " +
        std::to_string(cutoff);
    cert.n_hi = cutoff + window;
    for (std::uint64_t n = cert.n_lo; n <= cert.n_hi; ++n) {
      CirclePoint value =
          eval_sum_character(h, std::get<DirectSumElement>(term_at(seq, n)));
      Rational bound =
          n >= cutoff ? Rational(0) : value.dist_to_zero();
      if (n >= cutoff && !value.is_zero())
        throw std::logic_error("computed cutoff violated by exact value");
      cert.values.push_back(CertificateValue{n, value, bound});
    }
    return cert;
  }

  // Index set inside the avoided set: every term vanishes on it, so every
  // value is exactly 0.
  cert.tag = TheoremTag::T51_subsetS;
  cert.verdict = Verdict::Certified;
  cert.tail_zero_from = cert.n_lo;
  cert.tail_argument =
      "index set lies inside the avoided set S and no term touches S: "
      "h(x_n) = 0 for all n";
  cert.n_hi = cert.n_lo + window - 1;
  for (std::uint64_t n = cert.n_lo; n <= cert.n_hi; ++n) {
    CirclePoint value =
        eval_sum_character(h, std::get<DirectSumElement>(term_at(seq, n)));
    if (!value.is_zero())
      throw std::logic_error("structurally guaranteed zero was nonzero");
    cert.values.push_back(CertificateValue{n, value, Rational(0)});
  }
  return cert;
}

ConvergenceCertificate certify_thm52(const PadicCharacter& h,
                                     const FactorialPruefer& seq,
                                     std::uint64_t n_hi) {
  if (h.p != seq.p)
    throw InputError("character prime does not match sequence prime");
  if (n_hi < 3)
    throw InputError("the factorial bound starts at n = 3; n_hi must be >= 3");

  bool subset_fac =
      h.digits.kind() == DigitRule::Kind::Indicator &&
      h.digits.indicator_set().kind() == IndexSet::Kind::SubsetOfFac;
  if (!subset_fac && !h.digits.finite_support())
    throw InputError("digit rule must be an indicator of a factorial subset "
                     "or have finite support");

  ConvergenceCertificate cert;
  cert.tag = subset_fac ? TheoremTag::T52_subsetFac : TheoremTag::T52_finite;
  cert.character = h;
  cert.sequence = SequenceSchema(seq);
  cert.n_lo = 3;
  cert.n_hi = n_hi;
  cert.tail_argument = "(p-1)*n/p^n -> 0";
  cert.verdict = Verdict::Certified;

  for (std::uint64_t n = 3; n <= n_hi; ++n) {
    const auto x = std::get<PrueferElement>(term_at(SequenceSchema(seq), n));
    CirclePoint value = eval_padic_character(h, x);
    Rational bound = thm52_bound(seq.p, n);
    CertificateValue entry{n, value, bound};
    if (value.dist_to_zero() > bound) {
      cert.verdict = Verdict::Refuted;
      if (!cert.counterexample) cert.counterexample = entry;
    }
    cert.values.push_back(std::move(entry));
  }
  return cert;
}

ConvergenceCertificate certify_combination(
    const std::vector<std::pair<BigInt, ConvergenceCertificate>>& terms) {
  if (terms.empty()) throw InputError("combination needs at least one term");
  for (const auto& [m, c] : terms) {
    if (c.verdict != Verdict::Certified)
      throw InputError("combination requires certified inputs");
    if (!(c.sequence == terms.front().second.sequence))
      throw InputError("combination terms certify different sequences");
  }

  std::uint64_t lo = 0;
  std::uint64_t hi = UINT64_MAX;
  for (const auto& [m, c] : terms) {
    lo = std::max(lo, c.n_lo);
    hi = std::min(hi, c.n_hi);
  }
  if (lo > hi)
    throw InputError("combination inputs have no common verified range");

  CombinationCharacter combined;
  for (const auto& [m, c] : terms) {
    std::visit(
        [&](const auto& base) {
          using H = std::decay_t<decltype(base)>;
          if constexpr (std::is_same_v<H, CombinationCharacter>) {
            // Flatten nested combinations, scaling coefficients.
            for (const auto& [inner_m, inner] : base.terms)
              combined.terms.emplace_back(m * inner_m, inner);
          } else {
            combined.terms.emplace_back(m, Character(base));
          }
        },
        c.character);
  }

  ConvergenceCertificate cert;
  cert.tag = TheoremTag::Combination;
  cert.character = combined;
  cert.sequence = terms.front().second.sequence;
  cert.n_lo = lo;
  cert.n_hi = hi;
  cert.tail_argument = "sum of |m_i|-scaled certified tail bounds, each -> 0";
  cert.verdict = Verdict::Certified;

  for (std::uint64_t n = lo; n <= hi; ++n) {
    // Composed bound sum |m_i| * bound_i(n) from the stored values.
    Rational bound(0);
    for (const auto& [m, c] : terms) {
      auto it = std::find_if(c.values.begin(), c.values.end(),
                             [n](const CertificateValue& v) { return v.n == n; });
      if (it == c.values.end())
        throw InputError("input certificate is missing a value at n = " +
                         std::to_string(n));
      bound += Rational(abs_big(m)) * it->bound;
    }
    GroupElement x = term_at(cert.sequence, n);
    CirclePoint value = eval_exact(cert.character, x);
    CertificateValue entry{n, value, bound};
    if (value.dist_to_zero() > bound) {
      cert.verdict = Verdict::Refuted;
      if (!cert.counterexample) cert.counterexample = entry;
    }
    cert.values.push_back(std::move(entry));
  }
  return cert;
}

ConvergenceCertificate empirical_scan(const AnyCharacter& h,
                                      const SequenceSchema& seq,
                                      std::uint64_t n_hi,
                                      std::vector<ThresholdStep> thresholds,
                                      const Rational& precision) {
  for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
    if (thresholds[i + 1].from_n <= thresholds[i].from_n ||
        thresholds[i + 1].bound >= thresholds[i].bound)
      throw InputError("threshold schedule must be strictly decreasing");
  }

  ConvergenceCertificate cert;
  cert.tag = TheoremTag::Empirical;
  cert.character = h;
  cert.sequence = seq;
  cert.n_lo = first_index(seq);
  if (n_hi < cert.n_lo)
    throw InputError("scan range ends before the first term");
  cert.n_hi = n_hi;
  cert.verdict = Verdict::EvidenceOnly;
  cert.tail_argument = "scan only; no tail claim";

  auto declared_bound = [&](std::uint64_t n) -> std::optional<Rational> {
    std::optional<Rational> bound;
    for (const auto& step : thresholds)
      if (n >= step.from_n) bound = step.bound;
    return bound;
  };

  for (std::uint64_t n = cert.n_lo; n <= n_hi; ++n) {
    GroupElement x = term_at(seq, n);
    EvalResult value = eval_character(h, x, precision);
    std::optional<Rational> bound = declared_bound(n);
    if (const auto* exact = std::get_if<CirclePoint>(&value)) {
      Rational dist = exact->dist_to_zero();
      CertificateValue entry{n, *exact, bound.value_or(dist)};
      if (bound && dist > *bound) {
        cert.verdict = Verdict::Refuted;
        if (!cert.counterexample) cert.counterexample = entry;
      }
      cert.values.push_back(std::move(entry));
    } else {
      // Interval data is evidence, never a refutation.
      const auto& interval = std::get<CircleInterval>(value);
      cert.values.push_back(CertificateValue{
          n, interval.center, bound.value_or(interval.dist_upper()),
          interval.radius});
    }
  }
  return cert;
}

bool recheck_certificate(const ConvergenceCertificate& cert) {
  for (const auto& entry : cert.values) {
    if (entry.radius != 0) continue;  // interval evidence is not re-derivable
    GroupElement x = term_at(cert.sequence, entry.n);
    CirclePoint value = eval_exact(cert.character, x);
    if (!(value == entry.value)) return false;
    if (cert.verdict == Verdict::Certified &&
        value.dist_to_zero() > entry.bound)
      return false;
  }
  if (cert.tail_zero_from) {
    for (const auto& entry : cert.values)
      if (entry.n >= *cert.tail_zero_from && !entry.value.is_zero())
        return false;
  }
  return true;
}

}  // namespace tbtop
