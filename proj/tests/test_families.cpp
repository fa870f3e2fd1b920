#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "subshift/automaton.hpp"
#include "subshift/families.hpp"
#include "subshift/goodwords.hpp"
#include "subshift/language.hpp"
#include "subshift/measure.hpp"
#include "subshift/transfer.hpp"

using namespace subshift;

TEST_SUITE("alpha-beta coding") {
  TEST_CASE("alpha = 1/5, beta = 8/5: a-prefix is 00100") {
    AlphaBetaParams params{Rational(1, 5), Rational(8, 5), 5};
    CHECK(params.ell() == 1);
    auto coding = alpha_beta_coding(params);
    CHECK(coding.a_prefix == Word::of("00100"));
  }

  TEST_CASE("alpha = 0 keeps the a-orbit at the fixed point") {
    AlphaBetaParams params{Rational(0), Rational(7, 4), 12};
    auto coding = alpha_beta_coding(params);
    CHECK(coding.a_prefix == Word::repeated(0, 12));
    CHECK(coding.a_boundary_hit);  // the orbit sits exactly on the left endpoint
  }

  TEST_CASE("alpha = 0, beta = 2 codes the full 2-shift from above") {
    AlphaBetaParams params{Rational(0), Rational(2), 10};
    auto coding = alpha_beta_coding(params);
    CHECK(coding.b_prefix == Word::repeated(1, 10));
  }

  TEST_CASE("doubling the working depth reproduces the same symbols") {
    AlphaBetaParams params{Rational(3, 17), Rational(23, 13), 40};
    auto coding = alpha_beta_coding(params);
    AlphaBetaParams deeper = params;
    deeper.depth = 80;
    auto coding2 = alpha_beta_coding(deeper);
    CHECK(coding2.a_prefix.prefix(40) == coding.a_prefix);
    CHECK(coding2.b_prefix.prefix(40) == coding.b_prefix);
  }

  TEST_CASE("interval enclosures reproduce the exact coding away from boundaries") {
    AlphaBetaParams params{Rational(3, 17), Rational(23, 13), 30};
    auto exact = alpha_beta_coding(params);
    auto approx = alpha_beta_coding_approx(Interval::of_rational(params.alpha),
                                           Interval::of_rational(params.beta), params.ell(), 30);
    CHECK(approx.a_prefix == exact.a_prefix);
    CHECK(approx.b_prefix == exact.b_prefix);
  }

  TEST_CASE("point enclosures resolve exact hits like the one-sided limit") {
    auto approx = alpha_beta_coding_approx(Interval::of_long(0), Interval::of_long(2), 1, 10);
    CHECK(approx.b_prefix == Word::repeated(1, 10));
    CHECK(approx.a_prefix == Word::repeated(0, 10));
  }

  TEST_CASE("ambiguous enclosures abort instead of misclassifying") {
    // An enclosure of beta straddling 2 leaves the first b-symbol undecided.
    Interval alpha = Interval::of_long(0);
    Interval beta = Interval::of_endpoints_d(2.0 - 1e-12, 2.0 + 1e-12);
    CHECK_THROWS_WITH_AS(alpha_beta_coding_approx(alpha, beta, 1, 8),
                         doctest::Contains("precision insufficient"), SubshiftError);
  }
}

TEST_SUITE("alpha-beta forbidden lists") {
  TEST_CASE("a = 0^inf, b = (10)^inf gives {11, 1011, 101011}") {
    Word a = Word::repeated(0, 6);
    Word b = Word::of("101010");
    auto f = alpha_beta_forbidden(a, b, 1, 6);
    CHECK(f.count(2) == 1);
    CHECK(f.words_of_length(2)[0] == Word::of("11"));
    CHECK(f.count(4) == 1);
    CHECK(f.words_of_length(4)[0] == Word::of("1011"));
    CHECK(f.count(6) == 1);
    CHECK(f.words_of_length(6)[0] == Word::of("101011"));
    CHECK(f.count(1) + f.count(3) + f.count(5) == 0);
  }

  TEST_CASE("full shift coding produces nothing") {
    Word a = Word::repeated(0, 8);
    Word b = Word::repeated(1, 8);
    auto f = alpha_beta_forbidden(a, b, 1, 8);
    CHECK(f.total_count() == 0);
  }

  TEST_CASE("two-letter alphabet ceiling: |F_n| <= 2 ell always") {
    AlphaBetaParams params{Rational(1, 5), Rational(8, 5), 40};
    auto coding = alpha_beta_coding(params);
    auto f = alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), 40);
    for (int n = 1; n <= 40; ++n) CHECK(f.count(n) <= 2 * params.ell());
  }

  TEST_CASE("short prefixes are rejected") {
    CHECK_THROWS_WITH_AS(alpha_beta_forbidden(Word::of("00"), Word::of("11"), 1, 6),
                         doctest::Contains("insufficient coding depth"), SubshiftError);
  }

  TEST_CASE("the coding prefixes themselves are admissible") {
    AlphaBetaParams params{Rational(1, 5), Rational(8, 5), 24};
    auto coding = alpha_beta_coding(params);
    auto f = alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), 12);
    auto aut = build_automaton(f, 12);
    CHECK(!aut.contains_forbidden(coding.a_prefix.prefix(12)));
    CHECK(!aut.contains_forbidden(coding.b_prefix.prefix(12)));
  }

  TEST_CASE("generated words are minimal: proper prefixes avoid the list") {
    AlphaBetaParams params{Rational(3, 17), Rational(23, 13), 30};
    auto coding = alpha_beta_coding(params);
    auto f = alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), 16);
    for (int n = 1; n <= 16; ++n)
      for (const Word& w : f.words_of_length(n))
        for (int i = 1; i < n; ++i) CHECK(!f.occurs_in(w.prefix(i)));
  }

  TEST_CASE("language tails respect the lexicographic envelope") {
    AlphaBetaParams params{Rational(1, 5), Rational(8, 5), 24};
    auto coding = alpha_beta_coding(params);
    auto f = alpha_beta_forbidden(coding.a_prefix, coding.b_prefix, params.ell(), 12);
    auto aut = build_automaton(f, 12);
    for (const Word& w : enumerate_language(aut, 8, BigInt(10000))) {
      for (int start = 0; start < w.size(); ++start) {
        int reach = std::min(w.size() - start, 12);
        Word tail = w.subword(start, reach);
        // a-prefix <= tail <= b-prefix on the window both are defined
        std::vector<Letter> lo(coding.a_prefix.letters().begin(),
                               coding.a_prefix.letters().begin() + reach);
        std::vector<Letter> hi(coding.b_prefix.letters().begin(),
                               coding.b_prefix.letters().begin() + reach);
        CHECK(lo <= tail.letters());
        CHECK(tail.letters() <= hi);
      }
    }
  }
}

TEST_SUITE("betaent") {
  TEST_CASE("full shift: bound approaches ln 2 and stays consistent") {
    Word a = Word::repeated(0, 10);
    Word b = Word::repeated(1, 10);
    auto f = alpha_beta_forbidden(a, b, 1, 10);
    auto aut = build_automaton(f, 10);
    auto report = betaent_check(a, b, 1, aut, 10);
    CHECK(report.N == 10);
    CHECK(report.bound == doctest::Approx(0.8 * std::log(2.0)));
    CHECK(report.consistent);
  }

  TEST_CASE("five leading zeros and ones: bound (3/5) ln 2") {
    Word a = Word::of("0000010000");
    Word b = Word::of("1111101111");
    auto f = alpha_beta_forbidden(a, b, 1, 10);
    auto aut = build_automaton(f, 10);
    auto report = betaent_check(a, b, 1, aut, 12);
    CHECK(report.N == 5);
    CHECK(report.bound == doctest::Approx(0.6 * std::log(2.0)).epsilon(1e-12));
    CHECK(report.consistent);
  }

  TEST_CASE("N = 2 is vacuous") {
    Word a = Word::of("001000");
    Word b = Word::of("110111");
    auto f = alpha_beta_forbidden(a, b, 1, 6);
    auto aut = build_automaton(f, 6);
    auto report = betaent_check(a, b, 1, aut, 8);
    CHECK(report.vacuous);
  }
}

TEST_SUITE("hardbeta") {
  TEST_CASE("ell = 1: a concrete N is found, all series pass there and fail at N/2") {
    auto cert = hardbeta_search(1);
    CHECK(cert.passed());
    int N = std::stoi(cert.params.at("N"));
    CHECK(N >= 5);
    CHECK(hardbeta_all_pass(1, N));
    CHECK(!hardbeta_all_pass(1, N - 1));
    CHECK(!hardbeta_all_pass(1, N / 2));
  }

  TEST_CASE("profile |F_n| = 2 ell everywhere (N = 0) diverges past the bounds") {
    CHECK(!hardbeta_all_pass(1, 0));
    CHECK(!hardbeta_all_pass(2, 4));
  }

  TEST_CASE("empty profiles pass for any alphabet (the vacuous direction)") {
    // All series vanish when the tail starts beyond every length in play;
    // hardbeta_all_pass at a huge N is the empty-profile case.
    CHECK(hardbeta_all_pass(1, 4096));
    CHECK(hardbeta_all_pass(3, 4096));
  }
}

TEST_SUITE("bounded density counting") {
  TEST_CASE("k = 2, h(2) = 3: only 22 exceeds") {
    BoundedDensityParams params{2, HFunction({2, 3, 5, 6}), false};
    CHECK(bounded_density_forbidden_count(params, 2) == 1);
  }

  TEST_CASE("signed variant doubles by symmetry") {
    BoundedDensityParams params{2, HFunction({2, 3, 5, 6}), true};
    CHECK(bounded_density_forbidden_count(params, 2) == 2);
  }

  TEST_CASE("h(n) = nk forbids nothing") {
    BoundedDensityParams params{3, HFunction({3, 6, 9, 12}), false};
    for (int n = 1; n <= 4; ++n) CHECK(bounded_density_forbidden_count(params, n) == 0);
  }

  TEST_CASE("counts agree with exhaustive filtering for k <= 3, n <= 8") {
    for (int k = 1; k <= 3; ++k) {
      std::vector<long long> table;
      for (int n = 1; n <= 8; ++n)
        table.push_back((3LL * n * k + 3) / 4);  // ceil(3nk/4): increasing and subadditive
      HFunction h(table);
      h.validate(8);
      for (bool sgn : {false, true}) {
        BoundedDensityParams params{k, h, sgn};
        for (int n = 1; n <= (sgn ? 6 : 8); ++n) {
          BigInt brute = 0;
          int q = params.alphabet_size();
          std::vector<Letter> w(n, 0);
          while (true) {
            long long sum = 0;
            for (Letter a : w) sum += sgn ? (static_cast<long long>(a) - k) : a;
            long long bound = h(n);
            if (sgn ? (sum > bound || sum < -bound) : (sum > bound)) ++brute;
            int i = n - 1;
            while (i >= 0 && w[i] == q - 1) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
          }
          CHECK(bounded_density_forbidden_count(params, n) == brute);
        }
      }
    }
  }

  TEST_CASE("raising h pointwise never raises a count") {
    BoundedDensityParams low{2, HFunction({2, 3, 4, 5, 6, 7}), false};
    BoundedDensityParams high{2, HFunction({2, 4, 5, 6, 7, 8}), false};
    for (int n = 1; n <= 6; ++n)
      CHECK(bounded_density_forbidden_count(high, n) <=
            bounded_density_forbidden_count(low, n));
  }

  TEST_CASE("oversized DP tables are refused") {
    CHECK_THROWS_WITH_AS(count_letter_sum_above(100000, 200, 5), doctest::Contains("reduce n or k"),
                         SubshiftError);
  }

  TEST_CASE("zero padding preserves admissibility (both variants)") {
    oracle::Rng rng(41);
    for (bool sgn : {false, true}) {
      BoundedDensityParams params{3, HFunction({3, 5, 7, 8, 9, 10, 11, 12, 12, 13}), sgn};
      params.h.validate(10 + 32);
      int q = params.alphabet_size();
      for (int trial = 0; trial < 50; ++trial) {
        Word w;
        int len = 1 + rng.below(8);
        for (int i = 0; i < len; ++i) {
          Word cand = w;
          cand.push_back(static_cast<Letter>(rng.below(q)));
          w = bounded_density_admissible(params, cand) ? cand : w;
        }
        Letter zero = sgn ? static_cast<Letter>(params.k) : 0;
        for (int t = 1; t <= 16; ++t) {
          Word padded = Word::repeated(zero, t) + w + Word::repeated(zero, t);
          REQUIRE(bounded_density_admissible(params, padded));
        }
      }
    }
  }
}

TEST_SUITE("bounded density certificates") {
  TEST_CASE("k = 25 passes, with the threshold ratio just under one half") {
    auto h = bounded_density_h_near_threshold(25, 40);
    BoundedDensityParams params{25, h, false};
    auto cert = bddthm_certify(params, 12);
    CHECK(cert.passed());
    bool ratio_seen = false;
    for (const auto& c : cert.checks)
      if (c.name.find("(k+1)/(k^2") != std::string::npos) {
        ratio_seen = true;
        CHECK(c.verdict == Verdict::kPass);
        CHECK(c.lhs.find("4.99") != std::string::npos);
      }
    CHECK(ratio_seen);
  }

  TEST_CASE("k = 24 fails the threshold inequality") {
    auto h = bounded_density_h_near_threshold(24, 40);
    BoundedDensityParams params{24, h, false};
    auto cert = bddthm_certify(params, 12);
    CHECK(cert.verdict() == Verdict::kFail);
  }

  TEST_CASE("signed k = 25 passes through the doubled bounds") {
    auto h = bounded_density_h_near_threshold(25, 40);
    BoundedDensityParams params{25, h, true};
    CHECK(bddthm_certify(params, 12).passed());
  }

  TEST_CASE("non-subadditive h is rejected as invalid") {
    BoundedDensityParams params{25, HFunction({25, 50, 200, 100}), false};
    auto cert = bddthm_certify(params, 4);
    CHECK(cert.verdict() == Verdict::kInconclusive);
    CHECK(cert.missing.find("invalid h") != std::string::npos);
  }
}

TEST_SUITE("bounded density concatenation") {
  TEST_CASE("k = 25 truncation: pairs and triples of good words up to length 8") {
    auto h = bounded_density_h_near_threshold(25, 40);
    BoundedDensityParams params{25, h, false};
    for (int arity : {2, 3}) {
      auto report = bounded_density_verify_concat(params, 12, 8, arity);
      CHECK(report.clean());
      CHECK(report.checked > 0);
    }
  }

  TEST_CASE("extremal-sum mode agrees with brute force on a small instance") {
    // k = 2, F empty below length 5, first constraints at 5..8.
    BoundedDensityParams params{2, HFunction({2, 4, 6, 8, 8, 9, 10, 11}), false};
    params.h.validate(12);
    const int max_len = 4, m = 8;
    auto f = bounded_density_forbidden(params, m);
    auto aut = build_automaton(f, m);
    auto good = good_words_range(1, max_len, f, 3, aut);
    for (int arity : {2, 3}) {
      auto exhaustive = verify_concat(good, arity, max_len, aut, 8);
      auto analytic = bounded_density_verify_concat(params, m, max_len, arity);
      CHECK(exhaustive.clean() == analytic.clean());
    }
  }

  TEST_CASE("extremal sums match brute-force enumeration of good words") {
    struct Instance {
      int k;
      std::vector<long long> table;
      bool is_signed;
    };
    std::vector<Instance> instances = {
        {1, {1, 2, 3, 4, 4, 4, 4, 4}, false},
        {1, {1, 2, 3, 4, 5, 5, 6, 6}, false},
        {2, {2, 4, 6, 8, 8, 9, 10, 11}, false},
        {2, {2, 4, 6, 8, 8, 9, 10, 11}, true},
        {1, {1, 2, 3, 4, 5, 5, 6, 6}, true},
    };
    const int max_len = 4, m = 8;
    for (const auto& inst : instances) {
      BoundedDensityParams params{inst.k, HFunction(inst.table), inst.is_signed};
      params.h.validate(3 * m);
      auto ex = bounded_density_good_extremes(params, m, max_len, 3);

      auto f = bounded_density_forbidden(params, m);
      auto aut = build_automaton(f, m);
      auto good = good_words_range(1, max_len, f, 3, aut);
      std::vector<long long> brute_suffix(max_len + 1, -1), brute_total(max_len + 1, -1);
      for (const auto& [len, words] : good.by_length) {
        for (const Word& w : words) {
          std::vector<long long> vals;
          for (Letter a : w)
            vals.push_back(inst.is_signed ? static_cast<long long>(a) - inst.k
                                          : static_cast<long long>(a));
          long long run = 0;
          for (int s = 1; s <= len; ++s) {
            run += vals[len - s];
            brute_suffix[s] = std::max(brute_suffix[s], run);
          }
          brute_total[len] = std::max(brute_total[len], run);
        }
      }
      for (int s = 1; s <= max_len; ++s) CHECK(ex.best_suffix[s] == brute_suffix[s]);
      for (int l = 1; l <= max_len; ++l) CHECK(ex.best_total[l] == brute_total[l]);
    }
  }

  TEST_CASE("flat-h instance with degenerate thresholds agrees with brute force") {
    // h plateaus at 8, so T goes negative and good words die out past length 2.
    BoundedDensityParams params{2, HFunction({2, 4, 6, 8, 8, 8, 8, 8}), false};
    params.h.validate(12);
    const int max_len = 4, m = 8;
    auto f = bounded_density_forbidden(params, m);
    auto aut = build_automaton(f, m);
    auto good = good_words_range(1, max_len, f, 3, aut);
    for (int arity : {2, 3}) {
      auto exhaustive = verify_concat(good, arity, max_len, aut, 8);
      auto analytic = bounded_density_verify_concat(params, m, max_len, arity);
      CHECK(exhaustive.clean() == analytic.clean());
    }
  }
}

TEST_SUITE("nonsupport example") {
  TEST_CASE("|A| = 4, N = 3 has exactly six forbidden words of length four") {
    auto f = nonsupport_forbidden(4, 3);
    CHECK(f.count(4) == 6);
    CHECK(f.total_count() == 6);
  }

  TEST_CASE("a^N remains locally admissible (the fixed point survives)") {
    auto f = nonsupport_forbidden(4, 3);
    auto aut = build_automaton(f, 4);
    CHECK(!aut.contains_forbidden(Word::of("000")));
    CHECK(count_language(aut, 3) > 0);
  }

  TEST_CASE("|A| = 2, N = 2: the 00-cylinder shrinks under the Parry measure") {
    auto f = nonsupport_forbidden(2, 2);
    auto aut = build_automaton(f, 3);
    auto t = build_transfer(aut);
    auto mu = parry_measure(perron(t), t);
    CHECK(mu(Word::of("00")) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(mu(Word::of("0")) > 0.0);
  }
}
