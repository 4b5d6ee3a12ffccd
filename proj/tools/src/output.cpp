#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace leelab::cli {

namespace {

std::string exactness_name(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::bound: return "bound";
    case Exactness::estimate: return "estimate";
  }
  return "exact";
}

bool numeric(const Field& f) {
  return f.kind == Field::Kind::integer || f.kind == Field::Kind::ratio || f.kind == Field::Kind::real;
}

// Table cell: fractions get their decimal alongside unless they are long.
std::string cell(const Field& f) {
  if (f.kind != Field::Kind::ratio) return f.text;
  if (f.text == f.decimal || f.text.find('/') == std::string::npos) return f.text;
  if (f.text.size() > 24) return f.decimal;
  return f.text + " (" + f.decimal + ")";
}

nlohmann::ordered_json field_json(const Field& f) {
  nlohmann::ordered_json j;
  switch (f.kind) {
    case Field::Kind::integer:
      j["value"] = f.text;
      j["exactness"] = exactness_name(f.exactness);
      return j;
    case Field::Kind::ratio:
      j["fraction"] = f.text;
      j["decimal"] = f.decimal;
      j["exactness"] = exactness_name(f.exactness);
      return j;
    case Field::Kind::real:
      j["decimal"] = f.text;
      j["exactness"] = exactness_name(f.exactness);
      return j;
    case Field::Kind::boolean: return f.text == "true";
    case Field::Kind::text: return f.text;
  }
  return f.text;
}

void render_table(const Output& out, std::ostream& os) {
  if (out.records.size() == 1) {
    std::size_t w = 0;
    for (const auto& f : out.records[0]) w = std::max(w, f.name.size());
    for (const auto& f : out.records[0]) {
      os << f.name << std::string(w - f.name.size() + 2, ' ') << cell(f);
      if (numeric(f) && f.exactness != Exactness::exact) os << "  [" << exactness_name(f.exactness) << "]";
      os << '\n';
    }
  } else if (!out.records.empty()) {
    const auto& head = out.records[0];
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].name.size();
    for (const auto& r : out.records)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], cell(r[c]).size());
    auto line = [&](auto get) {
      for (std::size_t c = 0; c < width.size(); ++c) {
        const std::string s = get(c);
        os << (c ? "  " : "") << s;
        if (c + 1 < width.size()) os << std::string(width[c] - s.size(), ' ');
      }
      os << '\n';
    };
    line([&](std::size_t c) { return head[c].name; });
    for (const auto& r : out.records) line([&](std::size_t c) { return c < r.size() ? cell(r[c]) : std::string(); });
  }
  for (const auto& n : out.notes) os << "note: " << n << '\n';
}

void render_json(const Output& out, std::ostream& os) {
  nlohmann::ordered_json j;
  j["command"] = out.command;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : out.parameters) params[k] = v;
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : out.records) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (const auto& f : r) rec[f.name] = field_json(f);
    records.push_back(std::move(rec));
  }
  j["notes"] = out.notes;
  os << j.dump(2) << '\n';
}

void render_csv(const Output& out, std::ostream& os) {
  if (out.records.empty()) return;
  std::vector<std::string> header;
  for (const auto& f : out.records[0]) {
    header.push_back(f.name);
    if (f.kind == Field::Kind::ratio) header.push_back(f.name + "_decimal");
  }
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
    os << "\r\n";
  };
  row(header);
  for (const auto& r : out.records) {
    std::vector<std::string> cells;
    for (const auto& f : r) {
      cells.push_back(f.text);
      if (f.kind == Field::Kind::ratio) cells.push_back(f.decimal);
    }
    row(cells);
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

Field Field::count(std::string name, const Count& v, Exactness e) {
  return {std::move(name), Kind::integer, v.get_str(), {}, e};
}

Field Field::integer(std::string name, long v, Exactness e) {
  return {std::move(name), Kind::integer, std::to_string(v), {}, e};
}

Field Field::ratio(std::string name, const Ratio& v, Exactness e) {
  return {std::move(name), Kind::ratio, to_fraction(v), to_decimal(v, 12), e};
}

Field Field::real(std::string name, long double v, Exactness e) {
  std::string s;
  if (std::isinf(v)) s = v < 0 ? "-inf" : "inf";
  else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    s = buf;
  }
  return {std::move(name), Kind::real, s, {}, e};
}

Field Field::str(std::string name, std::string v) { return {std::move(name), Kind::text, std::move(v), {}, Exactness::exact}; }

Field Field::flag(std::string name, bool v) {
  return {std::move(name), Kind::boolean, v ? "true" : "false", {}, Exactness::exact};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void render(const Output& out, Format format, std::ostream& os) {
  switch (format) {
    case Format::table: render_table(out, os); break;
    case Format::json: render_json(out, os); break;
    case Format::csv: render_csv(out, os); break;
  }
}

}  // namespace leelab::cli
