#include <doctest.h>

#include <stdexcept>

#include "leelab/lee_core.hpp"
#include "oracles.hpp"

using namespace leelab;

TEST_SUITE("lee_core") {
  TEST_CASE("lee weight of residues") {
    CHECK(lee_weight(0L, 7) == 0);
    CHECK(lee_weight(3L, 5) == 2);
    CHECK(lee_weight(6L, 7) == 1);
    CHECK_THROWS_AS(lee_weight(7L, 7), std::domain_error);
    CHECK_THROWS_AS(lee_weight(-1L, 7), std::domain_error);
  }

  TEST_CASE("lee distance") {
    const Space s(4, 2);
    CHECK(lee_distance(Word(s, {0, 0}), Word(s, {0, 0})) == 0);
    CHECK(lee_distance(Word(s, {0, 0}), Word(s, {1, 2})) == 3);
    CHECK(lee_distance(Word(s, {1, 1}), Word(s, {3, 3})) == 4);
    CHECK_THROWS_AS(lee_distance(Word(s, {0, 0}), Word(Space(5, 2), {0, 0})), std::domain_error);
  }

  TEST_CASE("average lee weight") {
    CHECK(average_lee_weight(2) == Ratio(1, 2));
    CHECK(average_lee_weight(4) == Ratio(1));
    CHECK(average_lee_weight(5) == Ratio(6, 5));
  }

  TEST_CASE("compositions") {
    CHECK(lee_composition(Word(Space(5, 3), {0, 0, 0})).counts == std::vector<long>{3, 0, 0});
    CHECK(lee_composition(Word(Space(5, 4), {0, 1, 4, 2})).counts == std::vector<long>{1, 2, 1});
    CHECK(lee_composition(Word(Space(6, 2), {3, 3})).counts == std::vector<long>{0, 0, 0, 2});
  }

  TEST_CASE("weight composition counts") {
    CHECK(count_weight_compositions(0, Space(7, 3)) == 1);
    CHECK(count_weight_compositions(2, Space(4, 2)) == 3);
    CHECK(count_weight_compositions(4, Space(4, 2)) == 1);
    CHECK_THROWS_AS(count_weight_compositions(5, Space(4, 2)), std::domain_error);
    for (int m = 2; m <= 7; ++m)
      for (int n = 1; n <= 4; ++n) {
        const auto table = weight_composition_table(Space(m, n));
        for (long j = 0; j < static_cast<long>(table.size()); ++j)
          CHECK(table[static_cast<std::size_t>(j)] == oracle::capped_compositions(j, n, m / 2));
      }
  }

  TEST_CASE("all compositions total") {
    CHECK(count_all_compositions(Space(2, 1)) == 2);
    CHECK(count_all_compositions(Space(4, 2)) == 9);
    CHECK(count_all_compositions(Space(3, 3)) == 8);
    CHECK(count_distinct_compositions(Space(4, 2)) == 6);
  }

  TEST_CASE("word enumeration") {
    std::vector<std::string> got;
    for (const auto& w : iter_words(Space(3, 1))) got.push_back(to_digit_string(w));
    CHECK(got == std::vector<std::string>{"0", "1", "2"});
    const auto r = iter_words(Space(2, 2));
    CHECK(r.size() == 4);
    CHECK(to_digit_string(*r.begin()) == "00");
    std::string last;
    for (const auto& w : r) last = to_digit_string(w);
    CHECK(last == "11");
    CHECK_THROWS(iter_words(Space(10, 8), 1000));
  }

  TEST_CASE("index round trip matches oracle order") {
    const Space s(5, 3);
    const auto ws = oracle::words(5, 3);
    for (std::uint64_t i = 0; i < ws.size(); ++i) {
      const Word w = word_at(s, i);
      CHECK(w.coords == ws[i]);
      CHECK(word_index(w) == i);
    }
    CHECK(parse_digit_string(Space(4, 2), "13").coords == std::vector<int>{1, 3});
  }

  TEST_CASE("metric against oracle") {
    const Space s(6, 2);
    for (const auto& a : oracle::words(6, 2))
      for (const auto& b : oracle::words(6, 2)) CHECK(lee_distance(Word(s, a), Word(s, b)) == oracle::dist(a, b, 6));
  }
}
