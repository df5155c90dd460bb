#include <algorithm>
#include <sstream>

#include "internal.hpp"

namespace semiab::capi {

namespace {

std::string cell(json const& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  std::string s = v.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

std::string escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

bool is_row_list(json const& v) {
  if (!v.is_array() || v.empty()) return false;
  for (auto const& x : v)
    if (!x.is_object()) return false;
  return true;
}

void table_of_rows(std::ostream& os, json const& rows) {
  std::vector<std::string> cols;
  for (auto const& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
        cols.push_back(it.key());
  os << '|';
  for (auto const& c : cols) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << '\n';
  for (auto const& r : rows) {
    os << '|';
    for (auto const& c : cols)
      os << ' ' << escape(r.contains(c) ? cell(r[c]) : std::string("-")) << " |";
    os << '\n';
  }
}

void section(std::ostream& os, std::string const& title, json const& v, int depth) {
  std::string const hashes(std::min(depth, 6), '#');
  std::vector<std::pair<std::string, json const*>> nested;
  bool header = false;
  for (auto it = v.begin(); it != v.end(); ++it) {
    auto const& x = it.value();
    if (x.is_object() || is_row_list(x)) {
      nested.emplace_back(it.key(), &x);
      continue;
    }
    if (!header) {
      os << "| field | value |\n|---|---|\n";
      header = true;
    }
    os << "| " << it.key() << " | " << escape(cell(x)) << " |\n";
  }
  for (auto const& [key, x] : nested) {
    os << '\n' << hashes << "# " << (title.empty() ? key : title + "." + key) << "\n\n";
    if (x->is_object())
      section(os, title.empty() ? key : title + "." + key, *x, depth + 1);
    else
      table_of_rows(os, *x);
  }
}

}  // namespace

std::string render(std::string const& report, std::string const& format) {
  json const doc = json::parse(report);
  if (format == "json") return doc.dump(2) + "\n";
  if (format != "markdown")
    throw std::invalid_argument("unknown format '" + format + "' (json or markdown)");
  if (!doc.is_object()) throw std::invalid_argument("report must be a JSON object");
  std::ostringstream os;
  os << "# " << (doc.contains("command") ? cell(doc["command"]) : std::string("report"))
     << "\n\n";
  section(os, "", doc, 1);
  return os.str();
}

}  // namespace semiab::capi
