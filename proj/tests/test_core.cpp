#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "subshift/automaton.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/language.hpp"
#include "subshift/pliss.hpp"
#include "subshift/power_shift.hpp"

using namespace subshift;

namespace {

ForbiddenList golden_mean() {
  return ForbiddenList::from_words(Alphabet(2), {Word::of("11")});
}

}  // namespace

TEST_SUITE("automaton") {
  TEST_CASE("golden mean trie: root, the 1-state, and the dead state") {
    auto aut = build_automaton(golden_mean(), 2);
    CHECK(aut.state_count() == 3);
    CHECK(aut.live_states() == 2);
    CHECK(aut.has_dead_state());
    CHECK(aut.contains_forbidden(Word::of("011")));
    CHECK(!aut.contains_forbidden(Word::of("0101")));
  }

  TEST_CASE("nothing to avoid: one state, no dead state") {
    auto aut = build_automaton(ForbiddenList::empty_list(Alphabet(3)), 4);
    CHECK(aut.state_count() == 1);
    CHECK(!aut.has_dead_state());
  }

  TEST_CASE("all length-1 words forbidden: every letter leads to the dead state") {
    auto aut = build_automaton(
        ForbiddenList::from_words(Alphabet(2), {Word::of("0"), Word::of("1")}), 1);
    CHECK(aut.live_states() == 1);
    for (Letter a = 0; a < 2; ++a)
      CHECK(aut.step(aut.root(), a) == AvoidanceAutomaton::kDead);
  }

  TEST_CASE("shorter forbidden words shadow longer trie branches") {
    auto f = ForbiddenList::from_words(Alphabet(2), {Word::of("00"), Word::of("0001")});
    auto aut = build_automaton(f, 4);
    CHECK(aut.contains_forbidden(Word::of("100")));
    CHECK(!aut.contains_forbidden(Word::of("0101")));
  }

  TEST_CASE("state count stays within 1 + sum n |F_n|") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      int q = 2 + rng.below(2);
      std::vector<Word> words;
      for (int i = 0; i < 1 + rng.below(4); ++i)
        words.push_back(oracle::random_word(rng, q, 1 + rng.below(6)));
      auto f = ForbiddenList::from_words(Alphabet(q), words);
      auto aut = build_automaton(f, f.horizon());
      BigInt bound = 1;
      for (int n = 1; n <= f.horizon(); ++n) bound += BigInt(n) * f.count(n);
      CHECK(BigInt(aut.state_count()) <= bound);
    }
  }
}

TEST_SUITE("counting") {
  TEST_CASE("golden mean length 5 (Fibonacci)") {
    auto aut = build_automaton(golden_mean(), 2);
    CHECK(count_language(aut, 5) == 13);
  }

  TEST_CASE("full shift") {
    auto aut = build_automaton(ForbiddenList::empty_list(Alphabet(3)), 1);
    CHECK(count_language(aut, 4) == 81);
  }

  TEST_CASE("fully forbidden alphabet counts zero") {
    auto aut = build_automaton(
        ForbiddenList::from_words(Alphabet(2), {Word::of("0"), Word::of("1")}), 1);
    CHECK(count_language(aut, 3) == 0);
  }

  TEST_CASE("oracle equivalence on assorted instances") {
    oracle::Rng rng(42);
    for (int q = 1; q <= 3; ++q) {
      for (int inst = 0; inst < 4; ++inst) {
        std::vector<Word> words;
        int count = rng.below(4) + 1;
        for (int i = 0; i < count; ++i)
          words.push_back(oracle::random_word(rng, q, rng.below(5) + 1));
        auto f = ForbiddenList::from_words(Alphabet(q), words);
        auto aut = build_automaton(f, f.horizon());
        for (int n = 0; n <= 10; ++n)
          CHECK(count_language(aut, n) == oracle::count_brute(q, n, words));
      }
    }
  }

  TEST_CASE("submultiplicativity of the counts") {
    auto aut = build_automaton(golden_mean(), 2);
    auto counts = count_language_table(aut, 16);
    for (int m = 0; m <= 16; ++m)
      for (int n = 0; m + n <= 16; ++n)
        CHECK(counts[m + n] <= counts[m] * counts[n]);
  }

  TEST_CASE("counts never grow when the horizon grows") {
    std::vector<Word> all = {Word::of("11"), Word::of("1011"), Word::of("101011")};
    for (int m : {2, 4, 6}) {
      std::vector<Word> upto;
      for (const Word& w : all)
        if (w.size() <= m) upto.push_back(w);
      auto small = build_automaton(ForbiddenList::from_words(Alphabet(2), upto), m);
      auto full = build_automaton(ForbiddenList::from_words(Alphabet(2), all), 6);
      for (int n = 0; n <= 10; ++n)
        CHECK(count_language(full, n) <= count_language(small, n));
    }
  }
}

TEST_SUITE("enumeration and extendability") {
  TEST_CASE("golden mean length 3, lexicographic") {
    auto aut = build_automaton(golden_mean(), 2);
    auto words = enumerate_language(aut, 3, BigInt(100));
    std::vector<Word> expect = {Word::of("000"), Word::of("001"), Word::of("010"),
                                Word::of("100"), Word::of("101")};
    CHECK(words == expect);
  }

  TEST_CASE("two-letter golden mean words") {
    auto aut = build_automaton(golden_mean(), 2);
    auto words = enumerate_language(aut, 2, BigInt(100));
    CHECK(words == std::vector<Word>{Word::of("00"), Word::of("01"), Word::of("10")});
  }

  TEST_CASE("limit violations carry the count") {
    auto aut = build_automaton(ForbiddenList::empty_list(Alphabet(2)), 1);
    CHECK_THROWS_AS(enumerate_language(aut, 10, BigInt(5)), EnumerationTooLarge);
    try {
      enumerate_language(aut, 10, BigInt(5));
    } catch (const EnumerationTooLarge& e) {
      CHECK(e.count() == 1024);
    }
  }

  TEST_CASE("extendability drops words that cannot be continued") {
    auto aut = build_automaton(golden_mean(), 2);
    std::vector<Word> input = {Word::of("01"), Word::of("10"), Word::of("11")};
    auto kept = extendability_filter(input, aut, 1);
    CHECK(kept == std::vector<Word>{Word::of("01"), Word::of("10")});
  }

  TEST_CASE("no forbidden words: filter is the identity") {
    auto aut = build_automaton(ForbiddenList::empty_list(Alphabet(2)), 1);
    std::vector<Word> input = {Word::of("0"), Word::of("11")};
    CHECK(extendability_filter(input, aut, 5) == input);
  }

  TEST_CASE("000 survives padding checks against 0000") {
    auto aut = build_automaton(ForbiddenList::from_words(Alphabet(2), {Word::of("0000")}), 4);
    std::vector<Word> input = {Word::of("000")};
    CHECK(extendability_filter(input, aut, 4) == input);
  }

  TEST_CASE("filter result shrinks weakly as t grows") {
    auto aut = build_automaton(
        ForbiddenList::from_words(Alphabet(2), {Word::of("11"), Word::of("1001")}), 4);
    auto words = enumerate_language(aut, 4, BigInt(1000));
    std::size_t prev = words.size();
    for (int t : {0, 1, 2, 3, 6}) {
      auto kept = extendability_filter(words, aut, t);
      CHECK(kept.size() <= prev);
      prev = kept.size();
    }
  }
}

TEST_SUITE("language table and entropy") {
  TEST_CASE("full shift entropy is exactly ln 2 at every length") {
    auto aut = build_automaton(ForbiddenList::empty_list(Alphabet(2)), 1);
    auto table = LanguageTable::build(aut, 10, true);
    for (int n = 1; n <= 10; ++n)
      CHECK(table.h_upper(n) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }

  TEST_CASE("golden mean upper estimates decrease toward ln phi") {
    auto aut = build_automaton(golden_mean(), 2);
    auto table = LanguageTable::build(aut, 16);
    double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(table.h_upper(16) == doctest::Approx(0.4911).epsilon(1e-3));
    CHECK(table.h_upper(16) >= std::log(phi));
    for (int n : {1, 2, 4, 8}) CHECK(table.h_upper(2 * n) <= table.h_upper(n) + 1e-12);
  }

  TEST_CASE("empty subshift is reported") {
    auto aut = build_automaton(
        ForbiddenList::from_words(Alphabet(2), {Word::of("0"), Word::of("1")}), 1);
    auto table = LanguageTable::build(aut, 5);
    CHECK(table.empty_subshift());
    CHECK(table.empty_from() == 1);
    auto est = entropy_estimates(table);
    CHECK(est.empty_subshift);
    CHECK_THROWS_WITH_AS(est.require_lower(), "no lower bound available", SubshiftError);
  }

  TEST_CASE("lower bounds carry provenance") {
    auto aut = build_automaton(golden_mean(), 2);
    auto est = entropy_estimates(LanguageTable::build(aut, 8),
                                 {{0.3, "millerent"}, {0.2, "perron-sub"}});
    CHECK(est.require_lower().value == doctest::Approx(0.3));
    CHECK(est.require_lower().provenance == "millerent");
  }

  TEST_CASE("csv round-trips counts exactly") {
    auto aut = build_automaton(golden_mean(), 2);
    auto table = LanguageTable::build(aut, 12);
    std::stringstream ss;
    table.write_csv(ss);
    auto back = LanguageTable::read_csv(ss, 2, 2);
    for (int n = 0; n <= 12; ++n) CHECK(back.count(n) == table.count(n));
  }
}

TEST_SUITE("pliss") {
  TEST_CASE("constant sequences are entirely Pliss times") {
    std::vector<double> a(50, 0.7);
    auto r = pliss_set(a, 0.7, 0.2);
    CHECK(r.set.values.size() == 50);
    CHECK(r.density == doctest::Approx(1.0));
  }

  TEST_CASE("alternating 1,0,1,0 with beta = 1/4") {
    std::vector<double> a;
    for (int i = 0; i < 100; ++i) a.push_back(i % 2 == 0 ? 1.0 : 0.0);
    auto r = pliss_set(a, 1.0, 0.25);
    auto brute = oracle::pliss_brute(a, 0.25);
    CHECK(r.set.values == brute);
    CHECK(r.density >= 1.0 / 3 - 1e-12);  // (1/2 - 1/4)/(1 - 1/4)
  }

  TEST_CASE("language ratio sequence of the golden mean, beta = 0.2") {
    auto aut = build_automaton(golden_mean(), 2);
    auto counts = count_language_table(aut, 60);
    std::vector<double> a;
    for (int n = 1; n <= 60; ++n) a.push_back(ln_big(counts[n]) - ln_big(counts[n - 1]));
    auto r = pliss_set(a, std::log(2.0), 0.2);
    CHECK(r.set.values == oracle::pliss_brute(a, 0.2));
    CHECK(r.density > 0.5);
  }

  TEST_CASE("matches brute force on random sequences, with the density bound") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> a;
      double A = 1.0;
      for (int i = 0; i < 80; ++i) a.push_back(rng.unit());
      double beta = 0.137;
      auto r = pliss_set(a, A, beta);
      CHECK(r.set.values == oracle::pliss_brute(a, beta));
      double run = 0.0;
      for (int n = 1; n <= 80; ++n) {
        run += a[n - 1];
        double bound = (run / n - beta) / (A - beta);
        if (bound > 0) CHECK(r.set.prefix_density(n) >= bound - 1e-9);
      }
    }
  }

  TEST_CASE("out-of-range values are rejected") {
    CHECK_THROWS_WITH_AS(pliss_set({0.5, 1.4}, 1.0, 0.1), "sequence bound violated",
                         SubshiftError);
  }

  TEST_CASE("syndeticity over windows") {
    IndexSet s{{2, 5, 8, 11}};
    CHECK(s.syndetic(3, 12));
    CHECK(!s.syndetic(2, 12));
  }
}

TEST_SUITE("higher power and product lists") {
  TEST_CASE("golden mean squared blocks: only (01,10)") {
    auto f = golden_mean();
    auto aut = build_automaton(f, 2);
    auto power = higher_power_forbidden(f, aut, 2, 2);
    CHECK(power.letters.size() == 3);
    REQUIRE(power.forbidden.count(2) == 1);
    Word pw = power.forbidden.words_of_length(2)[0];
    CHECK(power.expand(pw) == Word::of("0110"));
  }

  TEST_CASE("empty list gives empty power list") {
    auto f = ForbiddenList::empty_list(Alphabet(2));
    auto aut = build_automaton(f, 1);
    auto power = higher_power_forbidden(f, aut, 2, 3);
    CHECK(power.forbidden.total_count() == 0);
  }

  TEST_CASE("101 at block length 1 has the single minimal cover (1,0,1)") {
    auto f = ForbiddenList::from_words(Alphabet(2), {Word::of("101")});
    auto aut = build_automaton(f, 3);
    auto power = higher_power_forbidden(f, aut, 1, 3);
    CHECK(power.forbidden.count(2) == 0);
    REQUIRE(power.forbidden.count(3) == 1);
    CHECK(power.expand(power.forbidden.words_of_length(3)[0]) == Word::of("101"));
  }

  TEST_CASE("power subshift counts match block-aligned counts of the base") {
    auto f = golden_mean();
    auto aut = build_automaton(f, 2);
    for (int n : {1, 2, 3}) {
      int j_needed = std::max(2, (f.max_present_length() - 2) / n + 2);
      auto power = higher_power_forbidden(f, aut, n, j_needed);
      auto power_aut = build_automaton(power.forbidden, power.forbidden.horizon());
      for (int j = 1; j * n <= 12; ++j)
        CHECK(count_language(power_aut, j) == count_language(aut, j * n));
    }
  }

  TEST_CASE("product list counts: golden mean pairs") {
    auto prod = product_forbidden(golden_mean());
    CHECK(prod.count(2) == 7);  // 2*1*4 - 1
    CHECK(prod.alphabet().size() == 4);
    CHECK(BigInt(prod.words_of_length(2).size()) == 7);
  }

  TEST_CASE("product of the empty list is empty") {
    auto prod = product_forbidden(ForbiddenList::empty_list(Alphabet(2)));
    CHECK(prod.total_count() == 0);
  }

  TEST_CASE("product counts respect the 2 |F_n| |A|^n bound") {
    oracle::Rng rng(11);
    std::vector<Word> words;
    for (int i = 0; i < 2; ++i) words.push_back(oracle::random_word(rng, 2, 3));
    auto f = ForbiddenList::from_words(Alphabet(2), words);
    auto prod = product_forbidden(f);
    for (int n = 1; n <= 3; ++n) {
      BigInt qa = 1;
      for (int i = 0; i < n; ++i) qa *= 2;
      CHECK(prod.count(n) <= 2 * f.count(n) * qa);
    }
  }
}

TEST_SUITE("forbidden list") {
  TEST_CASE("tail model validated on materialized lengths") {
    CHECK_THROWS(ForbiddenList::from_words(
        Alphabet(2), {Word::of("01"), Word::of("10"), Word::of("11")},
        TailModel{Rational(1), Rational(1), 1}));
    auto ok = ForbiddenList::from_words(Alphabet(2), {Word::of("01")},
                                        TailModel{Rational(2), Rational(1), 1});
    CHECK(ok.tail_model().has_value());
  }

  TEST_CASE("implicit lists without a materializer refuse enumeration") {
    auto f = ForbiddenList::rule(Alphabet(2), 10, [](int) { return BigInt(0); });
    CHECK_THROWS_WITH_AS(build_automaton(f, 12), doctest::Contains("horizon unsupported"),
                         SubshiftError);
  }

  TEST_CASE("normalization drops shadowed words and is flagged") {
    auto f = ForbiddenList::from_words(Alphabet(2), {Word::of("00"), Word::of("0001")});
    CHECK(!f.normalized_view());
    auto norm = f.normalized();
    CHECK(norm.normalized_view());
    CHECK(norm.count(4) == 0);
    CHECK(norm.count(2) == 1);
  }
}
