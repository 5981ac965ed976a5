// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "groves/spec_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "groves/errors.hpp"

namespace groves {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    throw ParseError(source_, pointer.empty() ? "/" : pointer, message);
  }

  const json& field(const json& obj, const std::string& ptr, const char* key) const {
    if (!obj.is_object()) fail(ptr, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(ptr, std::string("missing field '") + key + "'");
    return *it;
  }

  const json& array(const json& v, const std::string& ptr) const {
    if (!v.is_array()) fail(ptr, "expected an array");
    return v;
  }

  std::string string(const json& v, const std::string& ptr) const {
    if (!v.is_string()) fail(ptr, "expected a string");
    return v.get<std::string>();
  }

  Rational rational(const json& v, const std::string& ptr) const {
    if (!v.is_string()) fail(ptr, "expected a rational encoded as a string such as \"3/4\"");
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(ptr, e.what());
    }
  }

  std::size_t count(const json& v, const std::string& ptr) const {
    if (!v.is_number_unsigned()) fail(ptr, "expected a nonnegative integer");
    return v.get<std::size_t>();
  }

  std::vector<Rational> rationals(const json& v, const std::string& ptr) const {
    array(v, ptr);
    std::vector<Rational> out;
    out.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out.push_back(rational(v[j], ptr + "/" + std::to_string(j)));
    return out;
  }

 private:
  std::string source_;
};

Domain read_domain(const Reader& rd, const json& v) {
  const std::string ptr = "/domain";
  const std::string type = rd.string(rd.field(v, ptr, "type"), ptr + "/type");
  try {
    if (type == "single_item") return Domain::single_item();
    if (type == "multi_unit") return Domain::multi_unit(rd.count(rd.field(v, ptr, "units"), ptr + "/units"));
    if (type == "public_project_equal") {
      return Domain::public_project_equal(rd.rational(rd.field(v, ptr, "cost"), ptr + "/cost"));
    }
    if (type == "public_project_general") {
      return Domain::public_project_general(rd.rationals(rd.field(v, ptr, "shares"), ptr + "/shares"));
    }
  } catch (const ContractViolation& e) {
    rd.fail(ptr, e.what());
  }
  rd.fail(ptr + "/type", "unknown domain type '" + type + "'");
}

TypeGrid read_grid(const Reader& rd, const json& v) {
  const std::string ptr = "/grid";
  const std::size_t n = rd.count(rd.field(v, ptr, "n"), ptr + "/n");
  auto values = rd.rationals(rd.field(v, ptr, "values"), ptr + "/values");
  const Rational lower = rd.rational(rd.field(v, ptr, "L"), ptr + "/L");
  const Rational upper = rd.rational(rd.field(v, ptr, "U"), ptr + "/U");
  try {
    return TypeGrid(n, std::move(values), lower, upper);
  } catch (const ContractViolation& e) {
    rd.fail(ptr, e.what());
  }
}

// Fills `out[slot(key)]` from an entry list, rejecting duplicates and gaps.
void read_entries(const Reader& rd, const Setting& setting, const json& v, const std::string& ptr,
                  bool anonymous, std::vector<Rational>& out) {
  const KeySpace& keys = setting.keys();
  rd.array(v, ptr);
  out.assign(anonymous ? keys.multiset_count() : keys.others_count(), Rational(0));
  std::vector<bool> seen(out.size(), false);
  for (std::size_t e = 0; e < v.size(); ++e) {
    const std::string eptr = ptr + "/" + std::to_string(e);
    const auto key = rd.rationals(rd.field(v[e], eptr, "key"), eptr + "/key");
    std::size_t code = 0;
    try {
      code = setting.others_code(key);
    } catch (const ContractViolation& ex) {
      rd.fail(eptr + "/key", ex.what());
    }
    const std::size_t slot = anonymous ? keys.multiset_rank(code) : code;
    if (seen[slot]) rd.fail(eptr + "/key", "duplicate table key");
    seen[slot] = true;
    out[slot] = rd.rational(rd.field(v[e], eptr, "value"), eptr + "/value");
  }
  for (std::size_t slot = 0; slot < out.size(); ++slot) {
    if (!seen[slot]) {
      const std::size_t code = anonymous ? keys.multiset_code(slot) : slot;
      std::string text;
      for (const auto& x : setting.others_values(code)) text += (text.empty() ? "" : ",") + x.to_string();
      rd.fail(ptr, "table has no entry for key (" + text + ")");
    }
  }
}

Redistribution read_redistribution(const Reader& rd, const Setting& setting, const json& v) {
  const std::string ptr = "/redistribution";
  const std::string type = rd.string(rd.field(v, ptr, "type"), ptr + "/type");
  const std::size_t n = setting.agents();
  if (type == "linear_anonymous") {
    LinearRedistribution lin;
    lin.constant = rd.rational(rd.field(v, ptr, "constant"), ptr + "/constant");
    lin.coefficients = rd.rationals(rd.field(v, ptr, "coefficients"), ptr + "/coefficients");
    if (lin.coefficients.size() != n - 1) {
      rd.fail(ptr + "/coefficients", "expected " + std::to_string(n - 1) + " coefficients");
    }
    return lin;
  }
  if (type == "anonymous_tabulated") {
    AnonymousRedistribution anon;
    read_entries(rd, setting, rd.field(v, ptr, "entries"), ptr + "/entries", true, anon.table);
    return anon;
  }
  if (type == "tabulated") {
    const json& tables = rd.array(rd.field(v, ptr, "tables"), ptr + "/tables");
    if (tables.size() != n) rd.fail(ptr + "/tables", "expected one table per agent (" + std::to_string(n) + ")");
    TabulatedRedistribution tab;
    tab.tables.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      read_entries(rd, setting, tables[a], ptr + "/tables/" + std::to_string(a), false, tab.tables[a]);
    }
    return tab;
  }
  rd.fail(ptr + "/type", "unknown redistribution type '" + type + "'");
}

json rational_array(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& x : values) out.push_back(x.to_string());
  return out;
}

json domain_json(const Domain& d) {
  json out;
  out["type"] = std::string(d.kind());
  if (const auto* mu = std::get_if<MultiUnit>(&d.variant())) out["units"] = mu->units;
  if (const auto* pe = std::get_if<PublicProjectEqual>(&d.variant())) out["cost"] = pe->cost.to_string();
  if (const auto* pg = std::get_if<PublicProjectGeneral>(&d.variant())) out["shares"] = rational_array(pg->shares);
  return out;
}

json entries_json(const GrovesMechanism& mech, const std::vector<Rational>& values, bool anonymous) {
  const KeySpace& keys = mech.keys();
  json out = json::array();
  for (std::size_t slot = 0; slot < values.size(); ++slot) {
    const std::size_t code = anonymous ? keys.multiset_code(slot) : slot;
    out.push_back(json{{"key", rational_array(mech.setting().others_values(code))},
                       {"value", values[slot].to_string()}});
  }
  return out;
}

}  // namespace

GrovesMechanism load_mechanism(std::string_view text, const std::string& source) {
  const Reader rd(source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) rd.fail("", "expected a mechanism object");
  const Domain domain = read_domain(rd, rd.field(doc, "", "domain"));
  const TypeGrid grid = read_grid(rd, rd.field(doc, "", "grid"));
  std::shared_ptr<const Setting> setting;
  try {
    setting = Setting::make(domain, grid);
  } catch (const ContractViolation& e) {
    rd.fail("/domain", e.what());
  }
  Redistribution r = read_redistribution(rd, *setting, rd.field(doc, "", "redistribution"));
  try {
    return GrovesMechanism(setting, std::move(r));
  } catch (const ContractViolation& e) {
    rd.fail("/redistribution", e.what());
  }
}

GrovesMechanism load_mechanism_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "file", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_mechanism(buf.str(), path);
}

std::string dump_mechanism(const GrovesMechanism& mech) {
  json doc;
  doc["domain"] = domain_json(mech.domain());
  const TypeGrid& g = mech.grid();
  doc["grid"] = json{{"n", g.agents()},
                     {"values", rational_array(g.values())},
                     {"L", g.lower().to_string()},
                     {"U", g.upper().to_string()}};
  json r;
  std::visit(
      [&](const auto& red) {
        using T = std::decay_t<decltype(red)>;
        if constexpr (std::is_same_v<T, LinearRedistribution>) {
          r["type"] = "linear_anonymous";
          r["constant"] = red.constant.to_string();
          r["coefficients"] = rational_array(red.coefficients);
        } else if constexpr (std::is_same_v<T, AnonymousRedistribution>) {
          r["type"] = "anonymous_tabulated";
          r["entries"] = entries_json(mech, red.table, true);
        } else {
          r["type"] = "tabulated";
          r["tables"] = json::array();
          for (const auto& t : red.tables) r["tables"].push_back(entries_json(mech, t, false));
        }
      },
      mech.redistribution());
  doc["redistribution"] = std::move(r);
  return doc.dump(2) + "\n";
}

void save_mechanism_file(const GrovesMechanism& mech, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractViolation("cannot write '" + path + "'");
  out << dump_mechanism(mech);
}

}  // namespace groves
