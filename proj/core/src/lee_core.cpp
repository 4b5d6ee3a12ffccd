#include "leelab/lee_core.hpp"

#include <stdexcept>

#include "leelab/errors.hpp"

namespace leelab {

Space::Space(int modulus, int length) : m(modulus), n(length) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  if (n < 1) throw std::domain_error("length must be at least 1");
}

std::uint64_t Space::checked_size(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(m)) {
      throw CapacityError("space " + std::to_string(m) + "^" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(m);
  }
  if (total > cap) throw CapacityError("space exceeds cap " + std::to_string(cap));
  return total;
}

Word::Word(Space s, std::vector<int> c) : space(s), coords(std::move(c)) {
  if (coords.size() != static_cast<std::size_t>(space.n)) throw std::domain_error("word length does not match space");
  for (int x : coords)
    if (x < 0 || x >= space.m) throw std::domain_error("coordinate out of range");
}

int lee_weight(long x, int m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  if (x < 0 || x >= m) throw std::domain_error("residue out of range");
  return static_cast<int>(std::min<long>(x, m - x));
}

long lee_weight(const Word& x) {
  long w = 0;
  for (int c : x.coords) w += lee_weight(c, x.space.m);
  return w;
}

long lee_distance(const Word& x, const Word& y) {
  if (!(x.space == y.space)) throw std::domain_error("words from different spaces");
  const int m = x.space.m;
  long d = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) d += lee_weight(((x.coords[i] - y.coords[i]) % m + m) % m, m);
  return d;
}

Ratio average_lee_weight(int m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
  long total = 0;
  for (int x = 0; x < m; ++x) total += lee_weight(x, m);
  return make_ratio(total, m);
}

Composition lee_composition(const Word& z) {
  Composition c;
  c.counts.assign(static_cast<std::size_t>(z.space.max_weight()) + 1, 0);
  for (int x : z.coords) ++c.counts[static_cast<std::size_t>(lee_weight(x, z.space.m))];
  return c;
}

std::vector<Count> weight_composition_table(Space space) {
  const long M = space.max_weight();
  std::vector<Count> row{1};
  for (int i = 0; i < space.n; ++i) {
    std::vector<Count> next(row.size() + static_cast<std::size_t>(M), 0);
    for (std::size_t j = 0; j < row.size(); ++j)
      for (long part = 0; part <= M; ++part) next[j + static_cast<std::size_t>(part)] += row[j];
    row = std::move(next);
  }
  return row;
}

Count count_weight_compositions(long j, Space space, CompositionMethod method) {
  if (j < 0 || j > space.max_distance()) throw std::domain_error("weight out of range");
  if (method == CompositionMethod::oracle) return weight_composition_table(space)[static_cast<std::size_t>(j)];
  // Signed sum over r + s*floor(m/2) = j with r, s >= 0, as printed.
  const long M = space.max_weight();
  const long n = space.n;
  Count total = 0;
  for (long s = 0; s * M <= j; ++s) {
    const long r = j - s * M;
    Count term = binomial(n, s) * binomial(n + r - 1, r);
    if (s % 2) total -= term;
    else total += term;
  }
  return total;
}

Count count_all_compositions(Space space) {
  Count total = 0;
  for (const auto& s : weight_composition_table(space)) total += s;
  return total;
}

Count count_distinct_compositions(Space space) { return binomial(space.n + space.max_weight(), space.max_weight()); }

std::uint64_t word_index(const Word& x) {
  std::uint64_t idx = 0;
  for (int c : x.coords) idx = idx * static_cast<std::uint64_t>(x.space.m) + static_cast<std::uint64_t>(c);
  return idx;
}

Word word_at(Space space, std::uint64_t index) {
  std::vector<int> coords(static_cast<std::size_t>(space.n));
  for (int i = space.n - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(space.m));
    index /= static_cast<std::uint64_t>(space.m);
  }
  if (index != 0) throw std::domain_error("word index out of range");
  return Word(space, std::move(coords));
}

namespace {
constexpr const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
}

std::string to_digit_string(const Word& x) {
  if (x.space.m > 36) throw std::domain_error("digit strings support m <= 36");
  std::string out;
  for (int c : x.coords) out.push_back(kDigits[c]);
  return out;
}

Word parse_digit_string(Space space, const std::string& text) {
  if (text.size() != static_cast<std::size_t>(space.n))
    throw std::domain_error("digit string '" + text + "' does not have length " + std::to_string(space.n));
  std::vector<int> coords;
  for (char ch : text) {
    int v = -1;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'z') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'Z') v = ch - 'A' + 10;
    if (v < 0 || v >= space.m) throw std::domain_error("bad digit in '" + text + "'");
    coords.push_back(v);
  }
  return Word(space, std::move(coords));
}

WordRange::iterator::iterator(Space s, std::uint64_t pos, std::uint64_t total)
    : current_(Word::zero(s)), pos_(pos), total_(total) {}

WordRange::iterator& WordRange::iterator::operator++() {
  ++pos_;
  if (pos_ >= total_) return *this;
  auto& c = current_.coords;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < current_.space.m) break;
    c[i] = 0;
  }
  return *this;
}

WordRange::WordRange(Space s, std::uint64_t cap) : space_(s), total_(s.checked_size(cap)) {}

WordRange iter_words(Space space, std::uint64_t cap) { return WordRange(space, cap); }

}  // namespace leelab
