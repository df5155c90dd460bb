#include "semiab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semiab/families.hpp"

namespace semiab {

using nlohmann::json;

std::string describe_position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    std::size_t const at = e.byte > 0 ? e.byte - 1 : 0;
    raise(ErrorKind::ParseError, "invalid JSON at " + describe_position(text, at));
  }
}

[[noreturn]] void bad_field(std::string const& where, std::string const& what) {
  raise(ErrorKind::ParseError, where + ": " + what);
}

Elem as_index(json const& v, std::string const& where) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    bad_field(where, "expected a non-negative integer");
  auto x = v.get<long long>();
  if (x < 0 || x > 0x7FFFFFFF) bad_field(where, "index out of range");
  return static_cast<Elem>(x);
}

std::vector<std::vector<Elem>> as_matrix(json const& v, std::string const& where) {
  if (!v.is_array()) bad_field(where, "expected an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto const& row = v[i];
    std::string const rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) bad_field(rw, "expected an array");
    std::vector<Elem> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(as_index(row[j], rw + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

FiniteGroup group_from_json(std::string_view text) {
  json const doc = parse_json(text);
  if (!doc.is_object()) bad_field("group", "expected a JSON object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) bad_field("/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (doc.contains("cayley")) {
    auto rows = as_matrix(doc["cayley"], "/cayley");
    if (doc.contains("order")) {
      if (as_index(doc["order"], "/order") != rows.size())
        raise(ErrorKind::MalformedTable, "order does not match the number of rows");
    }
    return FiniteGroup::from_table(rows, std::move(name));
  }
  if (doc.contains("generators")) {
    if (!doc.contains("degree")) bad_field("group", "permutation form needs \"degree\"");
    Elem const degree = as_index(doc["degree"], "/degree");
    if (degree == 0 || degree > 16) bad_field("/degree", "degree must be in 1..16");
    auto const& gens = doc["generators"];
    if (!gens.is_array()) bad_field("/generators", "expected an array");
    std::vector<std::vector<Elem>> images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string const gw = "/generators[" + std::to_string(i) + "]";
      auto cycles = as_matrix(gens[i], gw);
      std::vector<Elem> img(degree);
      for (Elem p = 0; p < degree; ++p) img[p] = p;
      std::vector<char> used(degree, 0);
      for (auto const& c : cycles) {
        for (Elem p : c) {
          if (p < 1 || p > degree)
            bad_field(gw, "point " + std::to_string(p) + " outside 1.." +
                              std::to_string(degree));
          if (used[p - 1]) bad_field(gw, "point " + std::to_string(p) + " repeated");
          used[p - 1] = 1;
        }
        for (std::size_t k = 0; k < c.size(); ++k)
          img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
      }
      images.push_back(std::move(img));
    }
    return permutation_group(degree, images, std::move(name));
  }
  bad_field("group", "expected \"cayley\" or \"generators\"");
}

std::string group_to_json(FiniteGroup const& g) {
  json doc;
  doc["order"] = g.order();
  doc["cayley"] = g.cayley_rows();
  if (!g.name().empty()) doc["name"] = g.name();
  return doc.dump();
}

FiniteGroup load_group(std::string const& ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) {
    std::ifstream in(ref, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, "cannot read " + ref);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return group_from_json(ss.str());
    } catch (Error const& e) {
      throw Error(e.kind(), ref + ": " + e.what());
    }
  }
  return named_group(ref);
}

ActionData action_from_json(std::string_view text, FiniteGroup const& acting,
                            FiniteGroup const& acted) {
  auto rows = as_matrix(parse_json(text), "phi");
  if (rows.size() != acting.order())
    raise(ErrorKind::MalformedTable, "phi needs one row per element of G");
  std::vector<Elem> flat;
  for (auto const& r : rows) {
    if (r.size() != acted.order())
      raise(ErrorKind::MalformedTable, "phi rows need one entry per element of A");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ActionData(acting, acted, std::move(flat));
}

}  // namespace semiab
