#pragma once

#include "tbtop/characters.hpp"
#include "tbtop/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tbtop {

enum class TheoremTag {
  T51_subsetS,   // coordinate sums over subsets of the avoided set S
  T51_finite,    // coordinate sums over finite index sets
  T52_finite,    // p-adic characters with finite digit support
  T52_subsetFac, // indicators of subsets of the factorials
  Combination,   // integer combination of certified characters
  Empirical,     // scan output, never a proof
};

enum class Verdict { Certified, Refuted, EvidenceOnly };

std::string to_string(TheoremTag tag);
std::string to_string(Verdict v);

/// One checked point of a certificate: the exact value of h(x_n), the bound
/// it must satisfy, and (for interval evaluations in scans) the enclosure
/// radius, 0 meaning exact.
struct CertificateValue {
  std::uint64_t n = 0;
  CirclePoint value;
  Rational bound;
  Rational radius = Rational(0);
};

/// Machine-checkable convergence record: exact values on a verified range
/// plus a symbolic tail argument. A Certified verdict asserts the tail
/// argument is valid for every n beyond the range, justified by schema
/// metadata; EvidenceOnly data carries no such claim.
struct ConvergenceCertificate {
  TheoremTag tag = TheoremTag::Empirical;
  Verdict verdict = Verdict::EvidenceOnly;
  AnyCharacter character = PadicCharacter{2, DigitRule::support({})};
  SequenceSchema sequence = FactorialPruefer{};
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::vector<CertificateValue> values;
  std::string tail_argument;
  /// For exact-zero tails: every value from this index on is 0.
  std::optional<std::uint64_t> tail_zero_from;
  /// First bound violation when refuted.
  std::optional<CertificateValue> counterexample;
};

/// Certificate that a coordinate-sum character kills the tail of a
/// direct-sum sequence: exactly zero for all n when the index set sits
/// inside the avoided set, and exactly zero beyond a computed cutoff N for
/// finite index sets. Downgrades to EvidenceOnly (never guesses) when the
/// schema does not structurally guarantee the hypotheses.
ConvergenceCertificate certify_thm51(const SumCharacter& h,
                                     const SequenceSchema& seq,
                                     std::uint64_t window = 8);

/// Certificate that a factorial-indexed Pruefer sequence is killed by a
/// digit character: checks dist(h(x_n)) <= (p-1)*n/p^n exactly for each
/// 3 <= n <= n_hi and attaches the vanishing tail bound. Any violated bound
/// refutes (the certificate carries the counterexample).
ConvergenceCertificate certify_thm52(const PadicCharacter& h,
                                     const FactorialPruefer& seq,
                                     std::uint64_t n_hi);

/// Certificate for an integer combination sum m_i * h_i of certified
/// certificates over one sequence, with the composed pointwise bound
/// sum |m_i| * bound_i(n) re-verified exactly on the common range.
ConvergenceCertificate certify_combination(
    const std::vector<std::pair<BigInt, ConvergenceCertificate>>& terms);

/// A declared eventual bound: dist(h(x_n)) <= bound for all n >= from_n.
struct ThresholdStep {
  std::uint64_t from_n = 0;
  Rational bound;
};

/// Non-certifying scanner: reports exact (or certified-interval) distances
/// for n up to n_hi. Refutes only when an exact value violates a declared
/// threshold; interval data never refutes. Verdict is EvidenceOnly or
/// Refuted, never Certified.
ConvergenceCertificate empirical_scan(const AnyCharacter& h,
                                      const SequenceSchema& seq,
                                      std::uint64_t n_hi,
                                      std::vector<ThresholdStep> thresholds,
                                      const Rational& precision = Rational(
                                          1, 1000000));

/// Re-evaluates every stored (n, value) pair from the embedded character
/// and sequence; true iff all stored values and bounds re-check exactly.
bool recheck_certificate(const ConvergenceCertificate& cert);

/// The vanishing bound (p-1)*n/p^n attached to factorial-sequence
/// certificates.
Rational thm52_bound(std::uint64_t p, std::uint64_t n);

}  // namespace tbtop
