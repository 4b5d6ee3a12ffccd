#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "leelab/numeric.hpp"

namespace leelab::cli {

enum class Format { table, json, csv };
Format parse_format(const std::string& name);

// exact: computed value. bound: a proven inequality side. estimate: empirical
// or floating-point value.
enum class Exactness { exact, bound, estimate };

struct Field {
  enum class Kind { integer, ratio, real, text, boolean };

  std::string name;
  Kind kind = Kind::text;
  std::string text;       // integer digits, fraction, decimal or plain text
  std::string decimal;    // ratio only
  Exactness exactness = Exactness::exact;

  static Field count(std::string name, const Count& v, Exactness e = Exactness::exact);
  static Field integer(std::string name, long v, Exactness e = Exactness::exact);
  static Field ratio(std::string name, const Ratio& v, Exactness e = Exactness::exact);
  static Field real(std::string name, long double v, Exactness e = Exactness::estimate);
  static Field str(std::string name, std::string v);
  static Field flag(std::string name, bool v);
};

using Record = std::vector<Field>;

struct Output {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Record> records;
  std::vector<std::string> notes;
  std::string violation;  // set when a checked invariant fails
};

void render(const Output& out, Format format, std::ostream& os);
std::string csv_escape(const std::string& cell);

}  // namespace leelab::cli
