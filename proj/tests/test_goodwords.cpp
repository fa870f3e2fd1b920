#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "subshift/automaton.hpp"
#include "subshift/certify.hpp"
#include "subshift/goodwords.hpp"
#include "subshift/measure.hpp"

using namespace subshift;

namespace {

ForbiddenList quad_ones() {
  return ForbiddenList::from_words(Alphabet(2), {Word::of("1111")});
}

ForbiddenList golden_mean() {
  return ForbiddenList::from_words(Alphabet(2), {Word::of("11")});
}

}  // namespace

TEST_SUITE("heavy subwords") {
  TEST_CASE("{1111} at fraction 1/3: lengths two through four") {
    auto heavy = heavy_subwords(quad_ones(), 3);
    CHECK(heavy.count(1) == 0);
    CHECK(heavy.of_length(2) == std::set<Word>{Word::of("11")});
    CHECK(heavy.of_length(3) == std::set<Word>{Word::of("111")});
    CHECK(heavy.of_length(4) == std::set<Word>{Word::of("1111")});
  }

  TEST_CASE("empty list has no heavy subwords") {
    auto heavy = heavy_subwords(ForbiddenList::empty_list(Alphabet(3)), 3);
    CHECK(heavy.max_length() == 0);
  }

  TEST_CASE("{1111} at fraction 1/4 includes the single letter") {
    auto heavy = heavy_subwords(quad_ones(), 4);
    CHECK(heavy.of_length(1) == std::set<Word>{Word::of("1")});
    CHECK(heavy.count(2) == 1);
    CHECK(heavy.count(4) == 1);
  }

  TEST_CASE("counting bound |H_i| <= sum (n-i+1) |F_n| on random lists") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      int q = 2 + rng.below(2);
      std::vector<Word> words;
      for (int i = 0; i < 1 + rng.below(4); ++i)
        words.push_back(oracle::random_word(rng, q, 1 + rng.below(6)));
      auto f = ForbiddenList::from_words(Alphabet(q), words);
      std::vector<BigInt> prof(f.horizon() + 1, BigInt(0));
      for (int n = 1; n <= f.horizon(); ++n) prof[n] = f.count(n);
      for (int frac : {3, 4}) {
        auto heavy = heavy_subwords(f, frac);
        auto bound = heavy_bound_profile(prof, frac);
        for (int i = 1; i <= heavy.max_length(); ++i)
          CHECK(heavy.count(i) <= bound[i]);
      }
    }
  }
}

TEST_SUITE("good words") {
  TEST_CASE("{1111}, fraction 1/3, n = 3") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    auto good = good_words(3, f, 3, aut);
    std::vector<Word> expect = {Word::of("000"), Word::of("001"), Word::of("010"),
                                Word::of("100"), Word::of("101")};
    CHECK(good.of_length(3) == expect);
  }

  TEST_CASE("no forbidden words: every word is good") {
    auto f = ForbiddenList::empty_list(Alphabet(2));
    auto aut = build_automaton(f, 1);
    for (int n = 1; n <= 6; ++n)
      CHECK(good_words(n, f, 3, aut).of_length(n).size() == (1u << n));
  }

  TEST_CASE("{1111}, fraction 1/4, n = 3: words guarded by zeros") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    auto good = good_words(3, f, 4, aut);
    CHECK(good.of_length(3) == std::vector<Word>{Word::of("000"), Word::of("010")});
  }

  TEST_CASE("the fraction-1/4 set is contained in the fraction-1/3 set") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    for (int n = 1; n <= 8; ++n) {
      auto g = good_words(n, f, 3, aut);
      auto gp = good_words(n, f, 4, aut);
      std::set<Word> gset(g.of_length(n).begin(), g.of_length(n).end());
      for (const Word& w : gp.of_length(n)) CHECK(gset.count(w) == 1);
    }
  }
}

TEST_SUITE("concatenation verification") {
  TEST_CASE("{1111} fraction 1/3 pairs up to length 6: clean") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    auto good = good_words_range(1, 6, f, 3, aut);
    auto report = verify_concat(good, 2, 6, aut, 8);
    CHECK(report.clean());
    CHECK(report.checked > 0);
  }

  TEST_CASE("empty forbidden list: trivially clean") {
    auto f = ForbiddenList::empty_list(Alphabet(2));
    auto aut = build_automaton(f, 1);
    auto good = good_words_range(1, 3, f, 3, aut);
    CHECK(verify_concat(good, 2, 3, aut, 4).clean());
    CHECK(verify_concat(good, 3, 3, aut, 4).clean());
  }

  TEST_CASE("adversarial fraction 1: the report catches violations") {
    auto f = golden_mean();
    auto aut = build_automaton(f, 2);
    // fraction denominator 1 makes the heavy set just F itself, so every
    // admissible word is good, and 01 . 10 = 0110 contains 11.
    auto good = good_words_range(1, 4, f, 1, aut);
    auto report = verify_concat(good, 2, 4, aut, 4);
    CHECK(!report.clean());
    bool witness = false;
    for (const auto& fail : report.failures)
      if (fail.concatenation == Word::of("0110")) witness = true;
    CHECK(witness);
  }

  TEST_CASE("{1111} fraction 1/4 triples: clean") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    auto gp = good_words_range(1, 6, f, 4, aut);
    auto report = verify_concat(gp, 3, 6, aut, 8);
    CHECK(report.clean());
  }

  TEST_CASE("report serialization keeps the witness letters") {
    auto f = golden_mean();
    auto aut = build_automaton(f, 2);
    auto good = good_words_range(1, 3, f, 1, aut);
    auto report = verify_concat(good, 2, 3, aut, 2);
    auto j = report.to_json();
    CHECK(j["failure_count"].get<long long>() > 0);
    CHECK(j["failures"].size() > 0);
    CHECK(j["R"] == 0);
  }
}

TEST_SUITE("weight bound crosscheck") {
  TEST_CASE("zero-overlap pair has weight zero") {
    auto r = weightbd_crosscheck(Word::of("000"), Word::of("000"), Rational(1, 4), quad_ones());
    CHECK(r.g_value == 0);
    CHECK(r.holds);
  }

  TEST_CASE("010 . 010 stays below 4 sum n |F_n| c^{n/3}") {
    auto r = weightbd_crosscheck(Word::of("010"), Word::of("010"), Rational(1, 4), quad_ones());
    CHECK(r.holds);
  }

  TEST_CASE("01 . 01 carries the boundary overlap weight c^3") {
    auto r = weightbd_crosscheck(Word::of("01"), Word::of("01"), Rational(1, 4), quad_ones());
    CHECK(r.g_value == Rational(1, 64));
    CHECK(r.holds);
  }

  TEST_CASE("non-good inputs are rejected") {
    CHECK_THROWS_WITH_AS(
        weightbd_crosscheck(Word::of("110"), Word::of("000"), Rational(1, 4), quad_ones()),
        doctest::Contains("precondition violated"), SubshiftError);
  }

  TEST_CASE("random good pairs against a longer list") {
    auto f = ForbiddenList::from_words(Alphabet(2), {Word::of("110000"), Word::of("111000")});
    auto aut = build_automaton(f, 6);
    auto good = good_words_range(3, 5, f, 3, aut);
    oracle::Rng rng(17);
    auto pool = good.all();
    REQUIRE(!pool.empty());
    for (int trial = 0; trial < 20; ++trial) {
      const Word& v = pool[rng.below(static_cast<int>(pool.size()))];
      const Word& w = pool[rng.below(static_cast<int>(pool.size()))];
      CHECK(weightbd_crosscheck(v, w, Rational(1, 3), f).holds);
    }
  }
}

TEST_SUITE("measure of good sets") {
  TEST_CASE("full shift uniform measure gives mu(G_n) = 1") {
    auto f = ForbiddenList::empty_list(Alphabet(2));
    auto aut = build_automaton(f, 1);
    auto good = good_words_range(1, 8, f, 3, aut);
    auto uniform = [](const Word& w) { return std::pow(0.5, w.size()); };
    auto report = measure_of_goodset(uniform, good, 1, 8, 4);
    for (const auto& row : report.rows) CHECK(row.mu == doctest::Approx(1.0));
    CHECK(report.epsilon == doctest::Approx(1.0));
  }

  TEST_CASE("golden mean Parry measure of the fraction-1/3 good sets") {
    auto f = golden_mean();
    auto aut = build_automaton(f, 2);
    auto transfer = build_transfer(aut);
    auto eigen = perron(transfer);
    auto mu = parry_measure(eigen, transfer);
    auto good = good_words_range(1, 14, f, 3, aut);
    auto report = measure_of_goodset(mu.evaluator(), good, 1, 14, 4);
    CHECK(report.epsilon > 0.0);
    for (const auto& row : report.rows) {
      CHECK(row.mu > 0.0);
      CHECK(row.mu <= 1.0 + 1e-9);
    }
  }

  TEST_CASE("{1111} Parry measure of the fraction-1/4 good sets stays positive") {
    auto f = quad_ones();
    auto aut = build_automaton(f, 4);
    auto transfer = build_transfer(aut);
    auto mu = parry_measure(perron(transfer), transfer);
    auto gp = good_words_range(1, 10, f, 4, aut);
    auto report = measure_of_goodset(mu.evaluator(), gp, 1, 10, 4);
    CHECK(report.epsilon > 0.0);
  }
}
