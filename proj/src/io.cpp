// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcdchain/error.hpp"

namespace gcdchain {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::Parse, what); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

void check_version(const json& doc) {
  const json& v = member(doc, "format_version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    parse_error("unsupported format_version " + v.dump());
  }
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  if (j.is_object() && j.contains("prime")) {
    const json& q = j.at("prime");
    if (!q.is_number_unsigned()) parse_error("field prime must be a positive integer");
    try {
      return Field::prime_field(q.get<std::uint64_t>());
    } catch (const Error& e) {
      parse_error(e.what());
    }
  }
  parse_error("field must be \"rationals\" or {\"prime\": q}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "rationals";
  return json{{"prime", f.prime}};
}

Scalar scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Scalar(f, mpz_class(std::to_string(j.get<std::uint64_t>())));
      return Scalar(f, mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    parse_error(std::string("coefficient ") + j.dump() + ": " + e.what());
  }
  parse_error("coefficient must be an integer or a \"num/den\" string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

XPoly xpoly_from_json(const Field& f, const json& j) {
  if (!j.is_array()) parse_error("polynomial in x must be a coefficient list");
  std::vector<Scalar> c;
  for (const auto& v : j) c.push_back(scalar_from_json(f, v));
  return XPoly(f, std::move(c));
}

json xpoly_to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(scalar_to_json(c));
  return out;
}

YPoly ypoly_from_json(const Modulus& m, const json& j) {
  if (!j.is_array()) parse_error("polynomial in y must be a list of coefficient lists");
  std::vector<XPoly> c;
  for (const auto& v : j) c.push_back(xpoly_from_json(m.field(), v));
  return YPoly(m, std::move(c));
}

json ypoly_to_json(const YPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(xpoly_to_json(c));
  return out;
}

Modulus modulus_from_json(const Field& f, const json& j) {
  XPoly t = xpoly_from_json(f, j);
  if (t.degree() < 1 || !t.is_monic()) {
    fail(ErrorKind::Precondition, "modulus must be monic of positive degree: " + t.to_string());
  }
  return Modulus(std::move(t));
}

/// Type errors from the JSON layer surface as parse errors.
template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    parse_error(std::string("malformed document: ") + e.what());
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Field parse_field_name(const std::string& text) {
  if (text == "rationals" || text == "Q" || text == "QQ") return Field::rationals();
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.size() > 4 && digits.back() == ')') {
    digits = digits.substr(3, digits.size() - 4);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    parse_error("unknown field '" + text + "'");
  }
  try {
    return Field::prime_field(std::stoull(digits));
  } catch (const Error& e) {
    parse_error(e.what());
  } catch (const std::out_of_range&) {
    parse_error("field characteristic out of range: " + text);
  }
}

namespace {

Problem parse_problem_impl(const std::string& json_text, const std::optional<Field>& field_override) {
  const json doc = parse_document(json_text);
  check_version(doc);
  const Field f = field_override ? *field_override : field_from_json(member(doc, "field"));
  const Modulus t = modulus_from_json(f, member(doc, "modulus"));
  Problem p{ypoly_from_json(t, member(doc, "a")), ypoly_from_json(t, member(doc, "b"))};
  if (!p.a.is_monic()) fail(ErrorKind::NonMonic, "a is not monic modulo T: " + p.a.to_string());
  if (!p.b.is_monic()) fail(ErrorKind::NonMonic, "b is not monic modulo T: " + p.b.to_string());
  if (p.a.degree() < p.b.degree()) fail(ErrorKind::Precondition, "deg_y a < deg_y b");
  return p;
}

GcdChain parse_chain_impl(const std::string& json_text);

}  // namespace

Problem parse_problem(const std::string& json_text, const std::optional<Field>& field_override) {
  return guarded([&] { return parse_problem_impl(json_text, field_override); });
}

GcdChain parse_chain(const std::string& json_text) {
  return guarded([&] { return parse_chain_impl(json_text); });
}

std::string problem_to_json(const Problem& problem) {
  json doc{{"format_version", kFormatVersion},
           {"field", field_to_json(problem.field())},
           {"modulus", xpoly_to_json(problem.modulus().poly())},
           {"a", ypoly_to_json(problem.a)},
           {"b", ypoly_to_json(problem.b)}};
  return doc.dump(2) + "\n";
}

std::string chain_to_json(const GcdChain& chain) {
  json doc{{"format_version", kFormatVersion}};
  if (!chain.C.empty()) doc["field"] = field_to_json(chain.C.front().field());
  json blocks = json::array();
  for (std::size_t i = 0; i < chain.C.size(); ++i) {
    const YPoly& G = i < chain.D.size() ? chain.D[i] : chain.C[i];
    blocks.push_back({{"g", ypoly_to_json(chain.C[i])},
                      {"G", ypoly_to_json(G)},
                      {"modulus", xpoly_to_json(chain.tree[i])}});
  }
  doc["blocks"] = std::move(blocks);
  json c = json::array(), d = json::array(), tree = json::array();
  for (const auto& g : chain.C) c.push_back(ypoly_to_json(g));
  for (const auto& g : chain.D) d.push_back(ypoly_to_json(g));
  for (const auto& t : chain.tree) tree.push_back(xpoly_to_json(t));
  doc["C"] = std::move(c);
  doc["D"] = std::move(d);
  doc["Tree"] = std::move(tree);
  doc["stats"] = {{"largest_factor_calls", chain.stats.largest_factor_calls},
                  {"hensel_lifts", chain.stats.hensel_lifts},
                  {"subres_restarts", chain.stats.subres_restarts}};
  return doc.dump(2) + "\n";
}

namespace {

GcdChain parse_chain_impl(const std::string& json_text) {
  const json doc = parse_document(json_text);
  check_version(doc);
  const Field f = field_from_json(member(doc, "field"));
  const json& c = member(doc, "C");
  const json& d = member(doc, "D");
  const json& tree = member(doc, "Tree");
  if (!c.is_array() || !d.is_array() || !tree.is_array()) parse_error("C, D and Tree must be lists");
  if (c.size() != tree.size() || d.size() + 1 != c.size()) {
    parse_error("chain needs |C| = |Tree| = |D| + 1");
  }
  GcdChain out;
  try {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Modulus m = modulus_from_json(f, tree[i]);
      out.tree.push_back(m.poly());
      out.C.push_back(ypoly_from_json(m, c[i]));
      if (i < d.size()) out.D.push_back(ypoly_from_json(m, d[i]));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    parse_error(std::string("chain entry: ") + e.what());
  }
  if (doc.contains("blocks")) {
    const json& blocks = doc.at("blocks");
    if (!blocks.is_array() || blocks.size() != out.C.size()) parse_error("blocks disagree with C");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const Modulus m(out.tree[i]);
      const YPoly& G = i < out.D.size() ? out.D[i] : out.C[i];
      if (xpoly_from_json(f, member(blocks[i], "modulus")) != out.tree[i] ||
          ypoly_from_json(m, member(blocks[i], "g")) != out.C[i] ||
          ypoly_from_json(m, member(blocks[i], "G")) != G) {
        parse_error("block " + std::to_string(i) + " disagrees with C/D/Tree");
      }
    }
  }
  if (doc.contains("stats") && doc.at("stats").is_object()) {
    const json& s = doc.at("stats");
    out.stats.largest_factor_calls = s.value("largest_factor_calls", 0);
    out.stats.hensel_lifts = s.value("hensel_lifts", 0);
    out.stats.subres_restarts = s.value("subres_restarts", 0);
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gcdchain
