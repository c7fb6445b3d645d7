#include "celltrees/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "celltrees/errors.hpp"

namespace celltrees {

namespace {

using json = nlohmann::json;

json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

Int int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (rat_den(r) != 1) throw format_error(std::string(what) + " must be an integer");
    return rat_num(r);
  }
  throw format_error(std::string(what) + " must be an integer or a decimal string");
}

}  // namespace

std::string complex_to_json(const CellComplex& cx) {
  json doc = json::object();
  doc["name"] = cx.name();
  json meta = json::object();
  for (const auto& [key, value] : cx.metadata()) meta[key] = value;
  doc["metadata"] = meta;

  json cells = json::array();
  for (int k = 0; k <= cx.dim(); ++k) {
    for (const Cell& c : cx.cells(k)) {
      json jc = json::object();
      jc["id"] = c.id;
      jc["dim"] = c.dim;
      json weight = json::object();
      for (const auto& [var, exp] : c.weight) weight[var] = exp;
      jc["weight"] = weight;
      json boundary = json::array();
      auto sorted = c.boundary;
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [target, coeff] : sorted)
        boundary.push_back(json::array({target, int_to_json(coeff)}));
      jc["boundary"] = boundary;
      cells.push_back(jc);
    }
  }
  doc["cells"] = cells;
  return doc.dump();
}

CellComplex complex_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw format_error(std::string("complex document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw format_error("complex document must be an object with a 'cells' array");

  std::vector<Cell> cells;
  for (const json& jc : doc["cells"]) {
    if (!jc.is_object() || !jc.contains("id") || !jc.contains("dim"))
      throw format_error("every cell needs 'id' and 'dim'");
    Cell c;
    c.id = jc["id"].get<std::string>();
    c.dim = jc["dim"].get<int>();
    if (jc.contains("weight")) {
      for (auto it = jc["weight"].begin(); it != jc["weight"].end(); ++it) {
        if (!it.value().is_number_integer())
          throw format_error("weight exponents must be integers");
        c.weight[it.key()] = it.value().get<int>();
      }
    }
    if (jc.contains("boundary")) {
      for (const json& entry : jc["boundary"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string())
          throw format_error("boundary entries must be [id, coefficient] pairs");
        c.boundary.emplace_back(entry[0].get<std::string>(),
                                int_from_json(entry[1], "boundary coefficient"));
      }
    }
    cells.push_back(std::move(c));
  }

  std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "";
  std::map<std::string, std::string> metadata;
  if (doc.contains("metadata")) {
    for (auto it = doc["metadata"].begin(); it != doc["metadata"].end(); ++it) {
      if (!it.value().is_string()) throw format_error("metadata values must be strings");
      metadata[it.key()] = it.value().get<std::string>();
    }
  }
  try {
    return CellComplex(std::move(cells), std::move(name), std::move(metadata));
  } catch (const argument_error& e) {
    throw format_error(std::string("complex document failed validation: ") + e.what());
  }
}

void save_complex(const CellComplex& cx, const std::string& path) {
  write_text_file(path, complex_to_json(cx) + "\n");
}

CellComplex load_complex(const std::string& path) { return complex_from_json(read_text_file(path)); }

std::string weights_to_json(const Specialization& spec) {
  json vars = json::object();
  for (const auto& [var, val] : spec.values()) vars[var] = rat_to_string(val);
  json doc = json::object();
  doc["variables"] = vars;
  return doc.dump();
}

Specialization weights_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw format_error(std::string("weights file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_object())
    throw format_error("weights file must be an object with a 'variables' object");
  std::map<std::string, Rat> values;
  for (auto it = doc["variables"].begin(); it != doc["variables"].end(); ++it) {
    const json& v = it.value();
    Rat value;
    if (v.is_string())
      value = parse_rational(v.get<std::string>());
    else if (v.is_number_integer())
      value = Rat(v.get<std::int64_t>());
    else
      throw format_error("weight values must be rational strings");
    values.emplace(it.key(), value);
  }
  try {
    return Specialization(std::move(values));
  } catch (const specialization_error& e) {
    throw format_error(e.what());
  }
}

Specialization load_weights(const std::string& path) {
  return weights_from_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw format_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace celltrees
