// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "tbtop/certify.hpp"
#include "tbtop/finlab.hpp"
#include "tbtop/json_io.hpp"
#include "tbtop/ops.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace tbtop;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
  if (pass) {
    std::cout << "PASS [" << index << "] " << name << detail << "\n";
  } else {
    std::cout << "FAIL [" << index << "] " << name << detail << "\n";
    ++g_failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

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

// --------------------------------------------------------------------------
// 1. Factorial-sequence bound suite: p in {2,3,5}, three digit rules, all 16
//    subsets of {1,2,6,24} plus the full factorial indicator, exact bound
//    dist(h(x_n)) <= (p-1)*n/p^n for n in [3,7].
bool criterion_1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  const std::uint64_t subset_pool[] = {1, 2, 6, 24};
  std::size_t checked = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    std::vector<DigitSeqRule> rules = {
        DigitSeqRule::constant(1),
        DigitSeqRule::constant(static_cast<std::uint32_t>(p - 1)),
        DigitSeqRule::periodic({1, static_cast<std::uint32_t>(p - 1)})};
    std::vector<IndexSet> sets;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      std::vector<std::uint64_t> members;
      for (int b = 0; b < 4; ++b)
        if (mask & (1u << b)) members.push_back(subset_pool[b]);
      sets.push_back(
          IndexSet::subset_of_fac(SubRule::explicit_members(members)));
    }
    sets.push_back(IndexSet::subset_of_fac(SubRule::all()));

    for (const auto& rule : rules) {
      FactorialPruefer seq = make_factorial_pruefer(p, rule);
      for (const auto& set : sets) {
        PadicCharacter h = make_padic_character(p, DigitRule::indicator(set));
        ConvergenceCertificate cert = certify_thm52(h, seq, 7);
        if (cert.verdict != Verdict::Certified) {
          detail = ": refuted at p=" + std::to_string(p);
          return false;
        }
        for (const auto& v : cert.values) {
          if (v.value.dist_to_zero() > thm52_bound(p, v.n)) {
            detail = ": bound violated at n=" + std::to_string(v.n);
            return false;
          }
        }
        ++checked;
      }
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream note;
  note << ": " << checked << " certificates, " << elapsed << "s";
  detail = note.str();
  return checked == 153 && elapsed < 30.0;
}

// --------------------------------------------------------------------------
// 2. Exact-tail suite: 200 randomized schema-valid basis sequences against
//    subset-of-S and finite index sets, all certified with exact-zero tails.
bool criterion_2(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(92);
  std::uniform_int_distribution<std::uint64_t> small(0, 4);
  std::uniform_int_distribution<std::uint64_t> stride_pick(1, 6);
  const PrimePower pool[] = {{2, 1}, {3, 1}, {5, 1}, {2, 2}, {7, 1}};

  std::size_t certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    OrderSchema ambient =
        trial % 3 == 0
            ? OrderSchema::periodic({pool[small(rng) % 5], pool[small(rng) % 5]})
            : OrderSchema::constant(pool[small(rng) % 5]);
    CountableSet S = CountableSet::arithmetic(small(rng) % 3,
                                              2 + small(rng) % 3);
    AffineSupportRule rule{};
    // Rejection-sample a structurally avoiding affine rule.
    for (;;) {
      rule = AffineSupportRule{stride_pick(rng), small(rng)};
      if (affine_avoids(rule, S)) break;
    }
    BasisDirectSum seq{ambient, rule, BigInt(1), S};

    IndexSet set = [&]() -> IndexSet {
      switch (trial % 4) {
        case 0:
          return IndexSet::subset_of(S, SubRule::all());
        case 1:
          return IndexSet::subset_of(
              S, SubRule::congruence(1 + small(rng), 0));
        case 2:
          return IndexSet::subset_of(S, SubRule::excluding(
              {S.member_at(small(rng)).convert_to<std::uint64_t>()}));
        default:
          return IndexSet::finite({small(rng), 7 + small(rng), 20 + small(rng)});
      }
    }();

    SumCharacter h{ambient, set};
    ConvergenceCertificate cert = certify_thm51(h, SequenceSchema(seq), 10);
    if (cert.verdict != Verdict::Certified) {
      detail = ": trial " + std::to_string(trial) + " not certified";
      return false;
    }
    if (cert.tag == TheoremTag::T51_subsetS) {
      for (const auto& v : cert.values) {
        if (!v.value.is_zero()) {
          detail = ": nonzero subset-of-S value at n=" + std::to_string(v.n);
          return false;
        }
      }
    } else {
      if (!cert.tail_zero_from.has_value()) {
        detail = ": finite-case certificate lost its cutoff";
        return false;
      }
      for (const auto& v : cert.values) {
        if (v.n >= *cert.tail_zero_from && !v.value.is_zero()) {
          detail = ": nonzero tail value at n=" + std::to_string(v.n);
          return false;
        }
      }
    }
    ++certified;
  }
  double elapsed = seconds_since(start);
  std::ostringstream note;
  note << ": " << certified << " certificates, " << elapsed << "s";
  detail = note.str();
  return certified == 200 && elapsed < 10.0;
}

// --------------------------------------------------------------------------
// 3. Combination closure: random integer combinations of certified
//    factorial-sequence certificates obey the composed bound on [3,7],
//    with the combined character evaluated directly through p-adic digit
//    sums (an independent route from per-term circle addition).
bool criterion_3(std::string& detail) {
  std::mt19937_64 rng(93);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> term_count(1, 3);
  std::uniform_int_distribution<std::uint64_t> mask_pick(0, 15);

  const std::uint64_t subset_pool[] = {1, 2, 6, 24};
  struct Pool {
    FactorialPruefer seq;
    std::vector<std::pair<PadicCharacter, ConvergenceCertificate>> certs;
  };
  std::vector<Pool> pools;
  for (std::uint64_t p : {2, 3, 5}) {
    Pool pool{make_factorial_pruefer(p, DigitSeqRule::constant(1)), {}};
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      std::vector<std::uint64_t> members;
      for (int b = 0; b < 4; ++b)
        if (mask & (1u << b)) members.push_back(subset_pool[b]);
      PadicCharacter h = make_padic_character(
          p, DigitRule::indicator(
                 IndexSet::subset_of_fac(SubRule::explicit_members(members))));
      pool.certs.emplace_back(h, certify_thm52(h, pool.seq, 7));
    }
    PadicCharacter full = make_padic_character(
        p, DigitRule::indicator(IndexSet::subset_of_fac(SubRule::all())));
    pool.certs.emplace_back(full, certify_thm52(full, pool.seq, 7));
    pools.push_back(std::move(pool));
  }

  for (int trial = 0; trial < 100; ++trial) {
    const Pool& pool = pools[trial % pools.size()];
    const std::uint64_t p = pool.seq.p;
    int terms = term_count(rng);
    std::vector<std::pair<BigInt, ConvergenceCertificate>> picked;
    std::vector<std::pair<BigInt, PadicCharacter>> characters;
    for (int t = 0; t < terms; ++t) {
      int m = coeff(rng);
      if (m == 0) m = 1;
      std::size_t which = mask_pick(rng) % pool.certs.size();
      picked.emplace_back(BigInt(m), pool.certs[which].second);
      characters.emplace_back(BigInt(m), pool.certs[which].first);
    }
    ConvergenceCertificate combo = certify_combination(picked);
    if (combo.verdict != Verdict::Certified) {
      detail = ": combination refuted at trial " + std::to_string(trial);
      return false;
    }
    for (const auto& v : combo.values) {
      // Composed bound recomputed here.
      Rational bound(0);
      for (std::size_t t = 0; t < picked.size(); ++t) {
        const auto& values = picked[t].second.values;
        auto it = std::find_if(
            values.begin(), values.end(),
            [&](const CertificateValue& cv) { return cv.n == v.n; });
        if (it == values.end()) {
          detail = ": missing per-term value";
          return false;
        }
        bound += Rational(abs_big(picked[t].first)) * it->bound;
      }
      // Independent route: integer-combination of digit sums mod p^{n!}.
      PrueferElement x =
          std::get<PrueferElement>(term_at(SequenceSchema(pool.seq), v.n));
      BigInt modulus = pow_big(BigInt(p), x.n);
      BigInt combined_digit_sum = 0;
      for (const auto& [m, h] : characters) {
        BigInt digit_sum = 0;
        BigInt power = 1;
        for (std::uint32_t k = 0; k < x.n; ++k) {
          std::uint32_t d = h.digits.digit(k);
          if (d != 0) digit_sum += d * power;
          power *= p;
        }
        combined_digit_sum += m * digit_sum;
      }
      CirclePoint direct = CirclePoint::normalized(
          x.a * mod_floor(combined_digit_sum, modulus), modulus);
      if (!(direct == v.value)) {
        detail = ": digit-sum route disagrees at n=" + std::to_string(v.n);
        return false;
      }
      if (v.value.dist_to_zero() > bound) {
        detail = ": composed bound violated at n=" + std::to_string(v.n);
        return false;
      }
    }
  }
  detail = ": 100 combinations over 3 primes";
  return true;
}

// --------------------------------------------------------------------------
// 4. Separation: 50 random sets of 50 distinct direct-sum elements; every
//    unordered pair separated by a returned singleton-index character.
bool criterion_4(std::string& detail) {
  std::mt19937_64 rng(94);
  std::uniform_int_distribution<std::uint64_t> idx(0, 15);
  std::uniform_int_distribution<std::uint64_t> val(0, 6);
  const PrimePower pool[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};

  for (int set_trial = 0; set_trial < 50; ++set_trial) {
    OrderSchema ambient = OrderSchema::periodic(
        {pool[set_trial % 4], pool[(set_trial + 1) % 4]});
    std::vector<DirectSumElement> elements;
    std::set<std::string> seen;
    while (elements.size() < 50) {
      DirectSumElement e(ambient);
      for (int j = 0; j < 4; ++j) e.set_coordinate(idx(rng), val(rng));
      std::string key = group_element_to_json(GroupElement(e)).dump();
      if (seen.insert(key).second) elements.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = i + 1; j < elements.size(); ++j) {
        Character h = separate_points(GroupElement(elements[i]),
                                      GroupElement(elements[j]));
        const auto* sum = std::get_if<SumCharacter>(&h);
        if (sum == nullptr || !sum->index_set.is_finite() ||
            sum->index_set.finite_members().size() != 1) {
          detail = ": witness is not a singleton-index character";
          return false;
        }
        if (eval_sum_character(*sum, elements[i]) ==
            eval_sum_character(*sum, elements[j])) {
          detail = ": witness failed to separate a pair";
          return false;
        }
      }
    }
  }
  detail = ": 50 x C(50,2) pairs";
  return true;
}

// --------------------------------------------------------------------------
// 5. Normal-form contract on random matrices, with brute-force coset
//    enumeration on the small-quotient cases.
bool criterion_5(std::string& detail) {
  std::mt19937_64 rng(95);
  std::uniform_int_distribution<std::size_t> dim_large(1, 8);
  std::uniform_int_distribution<std::size_t> dim_small(1, 3);
  std::uniform_int_distribution<long long> entry_large(-20, 20);
  std::uniform_int_distribution<long long> entry_small(-4, 4);

  std::size_t coset_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    bool small = trial >= 350;
    std::size_t r = small ? dim_small(rng) : dim_large(rng);
    std::size_t c = small ? r : dim_large(rng);
    IntMatrix m(r, std::vector<BigInt>(c));
    for (auto& row : m)
      for (auto& v : row)
        v = small ? entry_small(rng) : entry_large(rng);

    SnfResult snf = smith_normal_form(m);
    if (!(multiply(multiply(snf.U, m), snf.V) == snf.D)) {
      detail = ": U*M*V != D at trial " + std::to_string(trial);
      return false;
    }
    if (abs_big(determinant(snf.U)) != 1 || abs_big(determinant(snf.V)) != 1) {
      detail = ": transform not unimodular at trial " + std::to_string(trial);
      return false;
    }
    auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i] < 0 ||
          (diag[i] != 0 && diag[i + 1] != 0 && diag[i + 1] % diag[i] != 0) ||
          (diag[i] == 0 && diag[i + 1] != 0)) {
        detail = ": divisibility chain broken at trial " +
                 std::to_string(trial);
        return false;
      }
    }

    // Brute-force coset enumeration for finite small quotients.
    if (r == c) {
      BigInt quotient_order = 1;
      bool finite = true;
      for (const auto& d : diag) {
        if (d == 0) finite = false;
        quotient_order *= d;
      }
      if (finite && quotient_order <= 512) {
        BigInt exponent = diag.back();
        std::uint64_t modulus = exponent.convert_to<std::uint64_t>();
        if (modulus >= 1) {
          // |Z^c / (L + mZ^c)| = m^c / |closure of rows mod m| equals the
          // quotient order whenever its exponent divides m.
          double states_estimate =
              std::pow(static_cast<double>(modulus), static_cast<double>(c)) /
              quotient_order.convert_to<double>();
          if (states_estimate <= 2000000.0) {
            std::set<std::vector<std::uint64_t>> closure;
            std::vector<std::vector<std::uint64_t>> gens;
            for (const auto& row : m) {
              std::vector<std::uint64_t> v(c);
              for (std::size_t i = 0; i < c; ++i)
                v[i] = mod_floor(row[i], BigInt(modulus))
                           .convert_to<std::uint64_t>();
              gens.push_back(std::move(v));
            }
            std::vector<std::vector<std::uint64_t>> frontier{
                std::vector<std::uint64_t>(c, 0)};
            closure.insert(frontier[0]);
            while (!frontier.empty()) {
              std::vector<std::vector<std::uint64_t>> next;
              for (const auto& e : frontier) {
                for (const auto& gen : gens) {
                  std::vector<std::uint64_t> sum(c);
                  for (std::size_t i = 0; i < c; ++i)
                    sum[i] = (e[i] + gen[i]) % modulus;
                  if (closure.insert(sum).second) next.push_back(sum);
                }
              }
              frontier = std::move(next);
            }
            BigInt enumerated =
                pow_big(BigInt(modulus), c) / BigInt(closure.size());
            if (enumerated != quotient_order) {
              detail = ": coset enumeration disagrees at trial " +
                       std::to_string(trial);
              return false;
            }
            ++coset_checked;
          }
        }
      }
    }
  }
  std::ostringstream note;
  note << ": 500 matrices, " << coset_checked << " coset enumerations";
  detail = note.str();
  return coset_checked >= 30;
}

// --------------------------------------------------------------------------
// 6. Finite subgroup-family analogue on the four named groups with trivial
//    and nontrivial base subgroups.
bool criterion_6(std::string& detail) {
  struct Case {
    std::vector<std::uint64_t> orders;
    Tuple nontrivial_gen;
  };
  const Case cases[] = {
      {{2, 2}, {1, 0}},
      {{2, 2, 2}, {1, 0, 0}},
      {{2, 4}, {0, 2}},
      {{3, 3}, {1, 0}},
  };
  for (const auto& c : cases) {
    FiniteGroup K(c.orders);
    for (int with_h = 0; with_h < 2; ++with_h) {
      Subgroup H = with_h == 0 ? trivial_subgroup(K)
                               : span(K, {c.nontrivial_gen});
      QuotientDecomposition q = quotient_of(K, H);
      std::size_t t = q.factor_orders.size();
      if (t == 0) {
        detail = ": quotient unexpectedly trivial";
        return false;
      }
      std::vector<Subgroup> family = thm17_injection(K, H);
      if (family.size() != (std::size_t{1} << t) - 1) {
        detail = ": family size is not 2^t - 1";
        return false;
      }
      std::set<std::vector<Tuple>> distinct;
      for (const auto& s : family) distinct.insert(s.elements);
      if (distinct.size() != family.size()) {
        detail = ": family members collide";
        return false;
      }
      std::vector<Subgroup> lattice =
          enumerate_intermediate_subgroups(K, H);
      for (const auto& s : family) {
        bool found = std::any_of(
            lattice.begin(), lattice.end(),
            [&](const Subgroup& t2) { return t2 == s; });
        if (!found) {
          detail = ": family member outside the H..K lattice";
          return false;
        }
      }
    }
  }
  detail = ": 4 groups x 2 base subgroups";
  return true;
}

// --------------------------------------------------------------------------
// 7. Finite duality: separation = dual generation for every subgroup of the
//    dual across the battery, and exhaustive lift counts |G/A|.
bool criterion_7(std::string& detail) {
  const std::vector<std::vector<std::uint64_t>> battery = {
      {2},    {3},    {4},    {2, 2},    {5},     {6},      {8},
      {2, 4}, {2, 2, 2}, {9},  {3, 3},   {12},    {16},     {2, 8},
      {4, 4}, {2, 2, 4}, {25}, {27},     {32},    {2, 16},  {3, 9},
      {64},   {2, 32},   {49}, {2, 2, 2, 2},      {5, 5},   {4, 8},
  };
  std::size_t dual_checks = 0;
  std::size_t lift_checks = 0;
  for (const auto& orders : battery) {
    FiniteGroup G(orders);
    if (G.order() > 64) {
      detail = ": battery group exceeds order 64";
      return false;
    }
    // Subgroups of the dual: the dual is the same abstract group; a tuple c
    // corresponds to the character with images c_i / d_i.
    std::vector<Subgroup> sublattice =
        enumerate_intermediate_subgroups(G, trivial_subgroup(G));
    sublattice.push_back(span(G, [&] {
      std::vector<Tuple> gens;
      for (std::size_t i = 0; i < G.rank(); ++i) {
        Tuple e = G.zero();
        e[i] = 1;
        gens.push_back(e);
      }
      return gens;
    }()));
    for (const auto& dual_sub : sublattice) {
      std::vector<FiniteCharacter> family;
      for (const auto& c : dual_sub.elements) {
        std::vector<CirclePoint> images;
        for (std::size_t i = 0; i < G.rank(); ++i)
          images.push_back(
              CirclePoint::normalized(BigInt(c[i]), BigInt(G.orders()[i])));
        family.push_back(FiniteCharacter{std::move(images)});
      }
      SeparationDensity r = separation_is_density_check(G, family);
      if (r.separates != r.equals_dual) {
        detail = ": separation and density disagree";
        return false;
      }
      bool full = dual_sub.order() == G.order();
      if (r.equals_dual != full) {
        detail = ": dual-closure size test disagrees with the lattice";
        return false;
      }
      ++dual_checks;
    }

    // Lift counts: restrict a fixed character to each subgroup and extend.
    for (const auto& A : sublattice) {
      std::vector<CirclePoint> images;
      for (const auto& gen : A.generators) {
        CirclePoint acc;
        for (std::size_t i = 0; i < G.rank(); ++i)
          acc = acc + CirclePoint::normalized(BigInt(gen[i]),
                                              BigInt(G.orders()[i]));
        images.push_back(acc);
      }
      auto lifts = all_extensions(G, A, images);
      if (lifts.size() != G.order() / A.order()) {
        detail = ": lift count differs from |G/A|";
        return false;
      }
      ++lift_checks;
    }
  }
  std::ostringstream note;
  note << ": " << dual_checks << " dual subgroups, " << lift_checks
       << " lift counts";
  detail = note.str();
  return true;
}

// --------------------------------------------------------------------------
// 8. Digit-formula regression against the rational-sum oracle.
bool criterion_8(std::string& detail) {
  std::mt19937_64 rng(98);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> prime_pick(0, 3);
  std::uniform_int_distribution<std::uint32_t> level(0, 12);
  std::uniform_int_distribution<int> rule_pick(0, 2);
  std::uniform_int_distribution<std::uint64_t> pos(0, 16);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t p = primes[prime_pick(rng)];
    std::uint32_t n = level(rng);
    BigInt modulus = pow_big(BigInt(p), n);
    std::uniform_int_distribution<std::uint64_t> numer(
        0, modulus.convert_to<std::uint64_t>() - 1);
    PrueferElement x = canonicalize_pruefer(p, n == 0 ? 0 : numer(rng), n);
    std::uniform_int_distribution<std::uint32_t> dig(
        0, static_cast<std::uint32_t>(p - 1));
    DigitRule rule = [&]() -> DigitRule {
      switch (rule_pick(rng)) {
        case 0: {
          std::map<std::uint64_t, std::uint32_t> support;
          for (int j = 0; j < 5; ++j) support[pos(rng)] = dig(rng);
          return DigitRule::support(std::move(support));
        }
        case 1:
          return DigitRule::indicator(
              IndexSet::subset_of_fac(SubRule::all()));
        default: {
          std::vector<std::uint32_t> prefix;
          for (int j = 0; j < 6; ++j) prefix.push_back(dig(rng));
          return DigitRule::prefix(std::move(prefix), dig(rng));
        }
      }
    }();
    PadicCharacter h = make_padic_character(p, rule);
    if (!(eval_padic_character(h, x) == digit_sum_oracle(h, x))) {
      detail = ": mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = ": 1000 random evaluations";
  return true;
}

// --------------------------------------------------------------------------
// 9. CLI determinism and exit codes.
struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args, int tag) {
  std::ostringstream path;
  const char* dir = std::getenv("TMPDIR");
  path << (dir ? dir : "/tmp") << "/tbtop_acc_" << tag << "_" << getpid()
       << ".out";
  std::string out_file = path.str();
  std::string command = std::string(TBTOP_CLI_PATH) + " " + args + " > " +
                        out_file + " 2>/dev/null";
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  result.stdout_text = text.str();
  std::remove(out_file.c_str());
  return result;
}

bool criterion_9(std::string& detail) {
  const std::string documented[] = {
      "--json certify --theorem 5.2 --p 2 --digits const:1 --index-set "
      "fac:all --n-max 7",
      "--json separate --ambient dsum2 --x '{\"5\":[1,2]}' --y '{}'",
      "--json snf --matrix '[[2,4],[6,8]]'",
      "--json eval --character '{\"kind\":\"padic\",\"p\":2,\"digits\":"
      "{\"kind\":\"indicator\",\"set\":{\"kind\":\"subsetOfFac\",\"rule\":"
      "{\"kind\":\"all\"}}}}' --element "
      "'{\"kind\":\"pruefer\",\"p\":2,\"a\":\"1\",\"n\":3}'",
      "--json generate --sequence '{\"kind\":\"factorialPruefer\",\"p\":2,"
      "\"digits\":{\"kind\":\"const\",\"v\":1}}' --count 4",
      "--json validate --conditions growth --sequence "
      "'{\"kind\":\"intGrowth\",\"rule\":\"factorial\"}' --prefix 6",
      "--json validate --conditions 5.1 --sequence "
      "'{\"kind\":\"basisDsum\",\"orders\":{\"kind\":\"constant\",\"p\":2},"
      "\"stride\":2,\"offset\":1,\"value\":\"1\",\"avoid\":{\"kind\":\"arith\","
      "\"first\":0,\"step\":2}}' --set 's:arith:0,2:all' --prefix 10",
      "--json distinguish --h1 '{\"kind\":\"sum\",\"orders\":{\"kind\":"
      "\"constant\",\"p\":2},\"indexSet\":{\"kind\":\"finite\",\"members\":"
      "[0]}}' --h2 '{\"kind\":\"sum\",\"orders\":{\"kind\":\"constant\","
      "\"p\":2},\"indexSet\":{\"kind\":\"finite\",\"members\":[1]}}'",
      "--json quotient --generators 2 --relations '[[2,0],[0,2]]'",
      "--json subgroups --orders '[2,2]'",
      "--json thm17 --orders '[2,2]'",
      "--json thm17 --orders '[2,2,2]'",
      "--json extend --orders '[4]' --subgroup '[[2]]' --images '[\"1/2\"]'",
      "--json dualcheck --orders '[2,2]' --characters '[[\"1/2\",\"0/1\"]]'",
      "--json certify --theorem comb --sequence "
      "'{\"kind\":\"factorialPruefer\",\"p\":2,\"digits\":{\"kind\":\"const\","
      "\"v\":1}}' --terms '[{\"m\":\"2\",\"character\":{\"kind\":\"padic\","
      "\"p\":2,\"digits\":{\"kind\":\"indicator\",\"set\":{\"kind\":"
      "\"subsetOfFac\",\"rule\":{\"kind\":\"all\"}}}}},{\"m\":\"-1\","
      "\"character\":{\"kind\":\"padic\",\"p\":2,\"digits\":{\"kind\":"
      "\"indicator\",\"set\":{\"kind\":\"subsetOfFac\",\"rule\":{\"kind\":"
      "\"members\",\"members\":[1,2]}}}}}]' --n-max 7",
      "--json certify --theorem 5.1 --character '{\"kind\":\"sum\",\"orders\":"
      "{\"kind\":\"constant\",\"p\":2},\"indexSet\":{\"kind\":\"finite\","
      "\"members\":[1,3]}}' --sequence '{\"kind\":\"basisDsum\",\"orders\":"
      "{\"kind\":\"constant\",\"p\":2},\"stride\":2,\"offset\":1,\"value\":"
      "\"1\",\"avoid\":{\"kind\":\"arith\",\"first\":0,\"step\":2}}'",
  };
  int tag = 0;
  for (const auto& args : documented) {
    CliResult a = run_cli(args, tag++);
    CliResult b = run_cli(args, tag++);
    if (a.exit_code != 0 || b.exit_code != 0) {
      detail = ": nonzero exit for documented example (" + args.substr(0, 40) +
               "...)";
      return false;
    }
    if (a.stdout_text != b.stdout_text || a.stdout_text.empty()) {
      detail = ": output not byte-identical";
      return false;
    }
  }

  // Exit-code contract.
  CliResult refuted = run_cli(
      "--json certify --theorem scan --character "
      "'{\"kind\":\"rotation\",\"t\":\"1/2\"}' --sequence "
      "'{\"kind\":\"intGrowth\",\"rule\":\"explicit\",\"terms\":[\"3\",\"5\","
      "\"7\"]}' --scan-n-max 3 --bound 1/4",
      tag++);
  if (refuted.exit_code != 2) {
    detail = ": refuted scan exit code " + std::to_string(refuted.exit_code);
    return false;
  }
  CliResult evidence = run_cli(
      "--json --require-certified certify --theorem scan --character "
      "'{\"kind\":\"rotation\",\"t\":\"1/3\"}' --sequence "
      "'{\"kind\":\"intGrowth\",\"rule\":\"factorial\"}' --scan-n-max 5",
      tag++);
  if (evidence.exit_code != 3) {
    detail = ": evidence_only exit code " + std::to_string(evidence.exit_code);
    return false;
  }
  CliResult malformed = run_cli("--json snf --matrix '[[2,4],[6]]'", tag++);
  if (malformed.exit_code != 1) {
    detail = ": malformed input exit code " +
             std::to_string(malformed.exit_code);
    return false;
  }
  detail = ": 15 documented invocations x 2 runs, 3 exit-code probes";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "factorial-sequence bound suite (exact, p in {2,3,5})", criterion_1},
      {2, "exact-tail suite on randomized basis sequences", criterion_2},
      {3, "combination closure with composed bounds", criterion_3},
      {4, "pairwise separation by singleton characters", criterion_4},
      {5, "normal-form contract and coset enumeration", criterion_5},
      {6, "subset-indexed subgroup families on finite groups", criterion_6},
      {7, "finite duality: separation, density, lift counts", criterion_7},
      {8, "digit-formula regression against the rational oracle", criterion_8},
      {9, "CLI determinism and exit codes", criterion_9},
  };
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string(": exception: ") + e.what();
      pass = false;
    }
    report(c.index, c.name, pass, detail);
  }
  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
