#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "leelab/limits.hpp"
#include "leelab/numeric.hpp"

namespace leelab {

struct Space {
  int m = 2;
  int n = 1;

  Space() = default;
  Space(int modulus, int length);

  int max_weight() const { return m / 2; }
  long max_distance() const { return static_cast<long>(n) * (m / 2); }
  Count cardinality() const { return power(static_cast<long>(m), static_cast<unsigned long>(n)); }
  // m^n as a machine integer; throws CapacityError above cap.
  std::uint64_t checked_size(std::uint64_t cap) const;

  bool operator==(const Space&) const = default;
};

struct Word {
  Space space;
  std::vector<int> coords;

  Word() = default;
  Word(Space s, std::vector<int> c);
  static Word zero(Space s) { return Word(s, std::vector<int>(static_cast<std::size_t>(s.n), 0)); }

  bool operator==(const Word&) const = default;
};

struct Composition {
  std::vector<long> counts;  // counts[i] = coordinates of Lee weight i
  bool operator==(const Composition&) const = default;
  bool operator<(const Composition& o) const { return counts < o.counts; }
};

int lee_weight(long x, int m);
long lee_weight(const Word& x);
long lee_distance(const Word& x, const Word& y);
Ratio average_lee_weight(int m);
Composition lee_composition(const Word& z);

enum class CompositionMethod { oracle, inclusion_exclusion };

// s(j): weak compositions of j into n parts, each part <= floor(m/2).
Count count_weight_compositions(long j, Space space, CompositionMethod method = CompositionMethod::oracle);
// All s(j), j = 0..n*floor(m/2), by dynamic programming.
std::vector<Count> weight_composition_table(Space space);
Count count_all_compositions(Space space);
// Number of distinct Lee compositions (weight histograms), C(n + floor(m/2), floor(m/2)).
Count count_distinct_compositions(Space space);

std::uint64_t word_index(const Word& x);
Word word_at(Space space, std::uint64_t index);
std::string to_digit_string(const Word& x);
Word parse_digit_string(Space space, const std::string& text);

class WordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    iterator(Space s, std::uint64_t pos, std::uint64_t total);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    Word current_;
    std::uint64_t pos_ = 0;
    std::uint64_t total_ = 0;
  };

  WordRange(Space s, std::uint64_t cap);
  iterator begin() const { return iterator(space_, 0, total_); }
  iterator end() const { return iterator(space_, total_, total_); }
  std::uint64_t size() const { return total_; }

 private:
  Space space_;
  std::uint64_t total_;
};

// All m^n words in lexicographic order of their digit strings.
WordRange iter_words(Space space, std::uint64_t cap = Limits{}.enumeration);

}  // namespace leelab
