#include "tbtop/certify.hpp"
#include "tbtop/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tbtop;

namespace {

OrderSchema all_twos() { return OrderSchema::constant(PrimePower{2, 1}); }

BasisDirectSum odd_basis() {
  return BasisDirectSum{all_twos(), AffineSupportRule{2, 1}, BigInt(1),
                        CountableSet::arithmetic(0, 2)};
}

// Independent digit-sum route for T52 values, summing h(k)/p^(n-k).
CirclePoint digit_sum_oracle(const PadicCharacter& h, const PrueferElement& x) {
  Rational total(0);
  for (std::uint32_t k = 0; k < x.n; ++k) {
    std::uint32_t d = h.digits.digit(k);
    if (d == 0) continue;
    total += Rational(BigInt(d), pow_big(BigInt(x.p), x.n - k));
  }
  total *= Rational(x.a);
  return CirclePoint::normalized(boost::multiprecision::numerator(total),
                                 boost::multiprecision::denominator(total));
}

}  // namespace

TEST_CASE("subset-of-S certificates are all-zero and certified") {
  SumCharacter h{all_twos(),
                 IndexSet::subset_of(CountableSet::arithmetic(0, 2),
                                     SubRule::congruence(2, 1))};
  ConvergenceCertificate cert = certify_thm51(h, SequenceSchema(odd_basis()));
  CHECK(cert.verdict == Verdict::Certified);
  CHECK(cert.tag == TheoremTag::T51_subsetS);
  for (const auto& v : cert.values) {
    CHECK(v.value.is_zero());
    CHECK(v.bound == 0);
  }
  CHECK(recheck_certificate(cert));
}

TEST_CASE("finite index sets get an exact cutoff") {
  SumCharacter h{all_twos(), IndexSet::finite({1, 3})};
  ConvergenceCertificate cert =
      certify_thm51(h, SequenceSchema(odd_basis()), 6);
  CHECK(cert.verdict == Verdict::Certified);
  CHECK(cert.tag == TheoremTag::T51_finite);
  REQUIRE(cert.tail_zero_from.has_value());
  CHECK(*cert.tail_zero_from == 2);
  // Values 1/2, 1/2, then exact zeros.
  REQUIRE(cert.values.size() >= 4);
  CHECK(cert.values[0].value.str() == "1/2");
  CHECK(cert.values[1].value.str() == "1/2");
  for (std::size_t i = 2; i < cert.values.size(); ++i)
    CHECK(cert.values[i].value.is_zero());
  CHECK(recheck_certificate(cert));
}

TEST_CASE("sequences without structural guarantees get evidence only") {
  DirectSumElement e(all_twos());
  e.set_coordinate(1, 1);
  ExplicitPrefix prefix{{GroupElement(e)}};
  SumCharacter h{all_twos(), IndexSet::finite({1})};
  ConvergenceCertificate cert = certify_thm51(h, SequenceSchema(prefix));
  CHECK(cert.verdict == Verdict::EvidenceOnly);
}

TEST_CASE("factorial-sequence certificates check the vanishing bound") {
  // p=2, a_n = 1, index set {1}: at n=3 the value is (1/64)*2 = 1/32.
  PadicCharacter h = make_padic_character(
      2, DigitRule::indicator(IndexSet::subset_of_fac(
             SubRule::explicit_members({1}))));
  FactorialPruefer seq = make_factorial_pruefer(2, DigitSeqRule::constant(1));
  ConvergenceCertificate cert = certify_thm52(h, seq, 7);
  CHECK(cert.verdict == Verdict::Certified);
  CHECK(cert.tag == TheoremTag::T52_subsetFac);
  CHECK(cert.values.front().n == 3);
  CHECK(cert.values.front().value.str() == "1/32");
  CHECK(cert.values.front().bound == Rational(3, 8));
  CHECK(recheck_certificate(cert));

  // The zero character certifies trivially.
  PadicCharacter zero = make_padic_character(2, DigitRule::support({}));
  ConvergenceCertificate zc = certify_thm52(zero, seq, 5);
  CHECK(zc.verdict == Verdict::Certified);
  CHECK(zc.tag == TheoremTag::T52_finite);
  for (const auto& v : zc.values) CHECK(v.value.is_zero());

  // p=3, a_n = 2, full factorial indicator, cross-checked by the
  // independent digit-sum oracle.
  PadicCharacter fac3 = make_padic_character(
      3, DigitRule::indicator(IndexSet::subset_of_fac(SubRule::all())));
  FactorialPruefer seq3 = make_factorial_pruefer(3, DigitSeqRule::constant(2));
  ConvergenceCertificate c3 = certify_thm52(fac3, seq3, 6);
  CHECK(c3.verdict == Verdict::Certified);
  for (const auto& v : c3.values) {
    CHECK(v.value.dist_to_zero() <= Rational(BigInt(2) * v.n,
                                             pow_big(BigInt(3), v.n)));
    PrueferElement x =
        std::get<PrueferElement>(term_at(SequenceSchema(seq3), v.n));
    CHECK(v.value == digit_sum_oracle(fac3, x));
  }
}

TEST_CASE("bound violations refute with a counterexample") {
  // Digit at the non-factorial position 5 makes x_3 = 1/2^6 evaluate to
  // 2^5/2^6 = 1/2 > 3/8.
  PadicCharacter h = make_padic_character(2, DigitRule::support({{5, 1}}));
  FactorialPruefer seq = make_factorial_pruefer(2, DigitSeqRule::constant(1));
  ConvergenceCertificate cert = certify_thm52(h, seq, 5);
  CHECK(cert.verdict == Verdict::Refuted);
  REQUIRE(cert.counterexample.has_value());
  CHECK(cert.counterexample->n == 3);
  CHECK(cert.counterexample->value.str() == "1/2");
}

TEST_CASE("the vanishing bound is monotone and small from n = 3") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 2; n < 40; ++n)
      CHECK(thm52_bound(p, n + 1) < thm52_bound(p, n));
    for (std::uint64_t n = 3; n < 40; ++n)
      CHECK(thm52_bound(p, n) < Rational(1, 2));
  }
}

TEST_CASE("certified T52 values equal their distance (no wrap-around)") {
  PadicCharacter h = make_padic_character(
      5, DigitRule::indicator(IndexSet::subset_of_fac(SubRule::all())));
  FactorialPruefer seq =
      make_factorial_pruefer(5, DigitSeqRule::periodic({1, 4}));
  ConvergenceCertificate cert = certify_thm52(h, seq, 6);
  REQUIRE(cert.verdict == Verdict::Certified);
  for (const auto& v : cert.values)
    CHECK(v.value.dist_to_zero() == Rational(v.value.num(), v.value.den()));
}

TEST_CASE("combinations compose bounds exactly") {
  FactorialPruefer seq = make_factorial_pruefer(2, DigitSeqRule::constant(1));
  PadicCharacter h1 = make_padic_character(
      2, DigitRule::indicator(IndexSet::subset_of_fac(
             SubRule::explicit_members({1, 2}))));
  PadicCharacter h2 = make_padic_character(
      2, DigitRule::indicator(IndexSet::subset_of_fac(SubRule::all())));
  ConvergenceCertificate c1 = certify_thm52(h1, seq, 7);
  ConvergenceCertificate c2 = certify_thm52(h2, seq, 7);

  // A single unit coefficient changes nothing.
  ConvergenceCertificate single = certify_combination({{BigInt(1), c1}});
  CHECK(single.verdict == Verdict::Certified);
  for (std::size_t i = 0; i < single.values.size(); ++i) {
    CHECK(single.values[i].value == c1.values[i].value);
    CHECK(single.values[i].bound == c1.values[i].bound);
  }

  // Negation preserves distances.
  ConvergenceCertificate negated = certify_combination({{BigInt(-1), c1}});
  CHECK(negated.verdict == Verdict::Certified);
  for (std::size_t i = 0; i < negated.values.size(); ++i) {
    CHECK(negated.values[i].value.dist_to_zero() ==
          c1.values[i].value.dist_to_zero());
    CHECK(negated.values[i].bound == c1.values[i].bound);
  }

  // 2*c1 + 3*c2 composes the bounds as 2b1 + 3b2.
  ConvergenceCertificate combo =
      certify_combination({{BigInt(2), c1}, {BigInt(3), c2}});
  CHECK(combo.verdict == Verdict::Certified);
  for (std::size_t i = 0; i < combo.values.size(); ++i) {
    CHECK(combo.values[i].bound ==
          Rational(2) * c1.values[i].bound + Rational(3) * c2.values[i].bound);
    CHECK(combo.values[i].value.dist_to_zero() <= combo.values[i].bound);
  }
  CHECK(recheck_certificate(combo));

  // Mixed sequences are rejected.
  PadicCharacter h3 = make_padic_character(
      3, DigitRule::indicator(IndexSet::subset_of_fac(SubRule::all())));
  ConvergenceCertificate c_other =
      certify_thm52(h3, make_factorial_pruefer(3, DigitSeqRule::constant(1)), 7);
  CHECK_THROWS_AS(certify_combination({{BigInt(1), c1}, {BigInt(1), c_other}}),
                  InputError);

  // Uncertified inputs are rejected.
  PadicCharacter refuting = make_padic_character(2, DigitRule::support({{5, 1}}));
  ConvergenceCertificate refuted = certify_thm52(refuting, seq, 5);
  REQUIRE(refuted.verdict == Verdict::Refuted);
  CHECK_THROWS_AS(certify_combination({{BigInt(1), refuted}}), InputError);
}

TEST_CASE("empirical scans stay evidence unless exactly refuted") {
  // Rotation by 1/3 against n!: values vanish from n = 3 on.
  AnyCharacter rot = RotationCharacter::exact(CirclePoint::normalized(1, 3));
  SequenceSchema factorial{IntegerGrowth{IntegerGrowth::Rule::Factorial}};
  ConvergenceCertificate scan = empirical_scan(rot, factorial, 8, {});
  CHECK(scan.verdict == Verdict::EvidenceOnly);
  for (const auto& v : scan.values) {
    if (v.n >= 3) CHECK(v.value.is_zero());
  }

  // Rotation by 1/2 against odd integers: every value is 1/2, refuting a
  // declared eventual bound of 1/4.
  IntegerGrowth odds{IntegerGrowth::Rule::ExplicitRatio};
  odds.terms = {3, 5, 7, 9, 11};
  AnyCharacter half = RotationCharacter::exact(CirclePoint::normalized(1, 2));
  ConvergenceCertificate refuted = empirical_scan(
      half, SequenceSchema(odds), 5, {ThresholdStep{0, Rational(1, 4)}});
  CHECK(refuted.verdict == Verdict::Refuted);
  REQUIRE(refuted.counterexample.has_value());
  CHECK(refuted.counterexample->value.str() == "1/2");

  // The zero character scans to all zeros.
  AnyCharacter zero =
      make_padic_character(2, DigitRule::support({}));
  SequenceSchema seq{make_factorial_pruefer(2, DigitSeqRule::constant(1))};
  ConvergenceCertificate zeros = empirical_scan(zero, seq, 6, {});
  CHECK(zeros.verdict == Verdict::EvidenceOnly);
  for (const auto& v : zeros.values) CHECK(v.value.is_zero());

  // Interval evaluations never refute.
  AnyCharacter series = RotationCharacter::series(
      TermRule::power(Rational(1, 2), Rational(1, 2), 0),
      GeometricTail{Rational(1), Rational(1, 2)});
  ConvergenceCertificate interval_scan = empirical_scan(
      series, SequenceSchema(odds), 4, {ThresholdStep{0, Rational(1, 1000)}},
      Rational(1, 64));
  CHECK(interval_scan.verdict == Verdict::EvidenceOnly);
}

TEST_CASE("certificate soundness: stored values re-derive exactly") {
  std::mt19937_64 rng(616);
  std::uniform_int_distribution<int> pick(0, 2);
  const std::uint64_t primes[] = {2, 3, 5};
  for (int i = 0; i < 25; ++i) {
    std::uint64_t p = primes[pick(rng)];
    DigitSeqRule digits = (i % 2 == 0)
                              ? DigitSeqRule::constant(1)
                              : DigitSeqRule::periodic(
                                    {1, static_cast<std::uint32_t>(p - 1)});
    FactorialPruefer seq = make_factorial_pruefer(p, digits);
    PadicCharacter h = make_padic_character(
        p, DigitRule::indicator(IndexSet::subset_of_fac(
               i % 3 == 0 ? SubRule::all()
                          : SubRule::explicit_members({2, 6}))));
    ConvergenceCertificate cert = certify_thm52(h, seq, 6);
    CHECK(recheck_certificate(cert));
  }
}
