#pragma once

// JSON encodings shared by the command line tool and the tests.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jkron/bounds.hpp"
#include "jkron/error.hpp"
#include "jkron/jordan.hpp"
#include "jkron/toeplitz.hpp"

namespace jkron {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "jordan-kron/1";

/// Reads `text`, or the file it names when it starts with '@'.
inline std::string read_text_arg(const std::string& text) {
  if (text.empty() || text.front() != '@')
    return text;
  std::ifstream in(text.substr(1));
  if (!in)
    throw ParseError("cannot open " + text.substr(1));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw ParseError("expected a rational as string or integer");
}

inline std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long>() < 1)
    throw ParseError(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

inline Json to_json(const JordanSpec& s) {
  Json out = Json::array();
  for (const auto& b : s.blocks())
    out.push_back({{"eig", to_string(b.eig)}, {"size", b.size}});
  return out;
}

/// `[{"eig":"num/den","size":n}, ...]`
inline JordanSpec jordan_spec_from_json(const Json& j) {
  if (!j.is_array())
    throw ParseError("Jordan spec must be a JSON array");
  std::vector<JordanBlock> blocks;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("eig") || !e.contains("size"))
      throw ParseError("Jordan block needs \"eig\" and \"size\"");
    blocks.push_back({rational_from_json(e["eig"]), size_from_json(e["size"], "block size")});
  }
  if (blocks.empty())
    throw ParseError("Jordan spec has no blocks");
  return JordanSpec(std::move(blocks));
}

inline JordanSpec parse_jordan_spec(const std::string& arg) {
  return jordan_spec_from_json(parse_json_text(read_text_arg(arg)));
}

inline Json to_json(const BlockSizes& s) {
  Json out = Json::array();
  for (auto v : s)
    out.push_back(v);
  return out;
}

/// `{"eigenvalues":[{"eig":"...","blocks":[3,1]}, ...]}`, eigenvalues ascending.
inline Json to_json(const JordanStructure& js) {
  Json list = Json::array();
  for (const auto& [eig, sizes] : js.entries())
    list.push_back({{"eig", to_string(eig)}, {"blocks", to_json(sizes)}});
  return Json{{"eigenvalues", list}};
}

inline JordanStructure jordan_structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("eigenvalues") || !j["eigenvalues"].is_array())
    throw ParseError("Jordan structure needs an \"eigenvalues\" array");
  JordanStructure out;
  for (const auto& e : j["eigenvalues"]) {
    if (!e.contains("eig") || !e.contains("blocks") || !e["blocks"].is_array())
      throw ParseError("eigenvalue entry needs \"eig\" and \"blocks\"");
    BlockSizes sizes;
    for (const auto& b : e["blocks"])
      sizes.push_back(size_from_json(b, "block size"));
    out.add(rational_from_json(e["eig"]), sizes);
  }
  return out;
}

inline Json to_json(const BlockCountBounds& b, std::size_t max_size) {
  return {{"maxBlockSize", max_size}, {"countLower", b.lower}, {"countUpper", b.upper}};
}

inline Json to_json(const DeficiencyRecord& r) {
  return {{"m", r.spec.m},         {"n", r.spec.n},       {"d", r.spec.d},
          {"ell", r.spec.ell},     {"k", r.spec.k},       {"rank", r.rank},
          {"maxRank", r.max_rank}, {"deficiency", r.deficiency}, {"predicted", r.predicted},
          {"witness", r.witness}};
}

inline DeficiencyRecord deficiency_from_json(const Json& j) {
  try {
    DeficiencyRecord r;
    r.spec = {j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>(),
              j.at("ell").get<std::size_t>(), j.at("k").get<std::size_t>()};
    r.rank = j.at("rank").get<std::size_t>();
    r.max_rank = j.at("maxRank").get<std::size_t>();
    r.deficiency = j.at("deficiency").get<std::size_t>();
    r.predicted = j.at("predicted").get<bool>();
    r.witness = j.value("witness", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad deficiency record: ") + e.what());
  }
}

/// Matrix as a list of dump rows.
template <typename T>
Json matrix_rows(const Matrix<T>& a) {
  Json rows = Json::array();
  std::istringstream in(dump(a));
  for (std::string line; std::getline(in, line);)
    rows.push_back(line);
  return rows;
}

} // namespace jkron
