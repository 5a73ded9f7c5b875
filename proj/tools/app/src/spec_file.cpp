#include "toricham/app/spec_file.hpp"

#include "toricham/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toricham::app {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

Integer integer_field(const json& value, const std::string& field) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(std::to_string(value.get<std::uint64_t>()))
                                      : Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer, got " + value.dump());
}

Rational rational_field(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(integer_field(value, field));
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected a rational string \"p/q\" or an integer, got " + value.dump());
}

const json& require_array(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(key, "missing");
  const json& v = doc.at(key);
  if (!v.is_array()) fail(key, "expected an array");
  return v;
}

}  // namespace

ManifoldSpec parse_manifold_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected a JSON object");

  ManifoldSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }

  const json& weights = require_array(doc, "weights");
  const std::size_t m = weights.size();
  if (m == 0) fail("weights", "at least one weight vector is required");
  if (!weights[0].is_array()) fail("weights[0]", "expected an array");
  const std::size_t r = weights[0].size();
  if (r == 0) fail("weights[0]", "weight vectors must have r >= 1 entries");
  if (m < r) fail("weights", "need m >= r (got m = " + std::to_string(m) + ", r = " + std::to_string(r) + ")");
  spec.weights = IntMatrix(r, m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::string field = "weights[" + std::to_string(j) + "]";
    if (!weights[j].is_array() || weights[j].size() != r) {
      fail(field, "expected an array of " + std::to_string(r) + " integers");
    }
    for (std::size_t i = 0; i < r; ++i) {
      spec.weights(i, j) = integer_field(weights[j][i], field + "[" + std::to_string(i) + "]");
    }
  }

  const json& tau = require_array(doc, "tau");
  if (tau.size() != r) {
    fail("tau", "expected " + std::to_string(r) + " entries, got " + std::to_string(tau.size()));
  }
  for (std::size_t i = 0; i < r; ++i) spec.tau.push_back(rational_field(tau[i], "tau[" + std::to_string(i) + "]"));

  if (doc.contains("loops")) {
    const json& loops = require_array(doc, "loops");
    for (std::size_t l = 0; l < loops.size(); ++l) {
      const std::string field = "loops[" + std::to_string(l) + "]";
      if (!loops[l].is_array() || loops[l].size() != m) {
        fail(field, "expected an array of m = " + std::to_string(m) + " integers");
      }
      LoopSpec loop;
      for (std::size_t a = 0; a < m; ++a) {
        loop.weights.push_back(integer_field(loops[l][a], field + "[" + std::to_string(a) + "]"));
      }
      spec.loops.push_back(std::move(loop));
    }
  }
  return spec;
}

ManifoldSpec load_manifold_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_manifold_spec(text.str());
}

std::string dump_manifold_spec(const ManifoldSpec& spec) {
  nlohmann::ordered_json doc;
  doc["name"] = spec.name;
  doc["weights"] = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < spec.weights.cols(); ++j) {
    auto w = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < spec.weights.rows(); ++i) w.push_back(spec.weights(i, j).get_str());
    doc["weights"].push_back(std::move(w));
  }
  doc["tau"] = nlohmann::ordered_json::array();
  for (const auto& t : spec.tau) doc["tau"].push_back(t.str());
  if (!spec.loops.empty()) {
    doc["loops"] = nlohmann::ordered_json::array();
    for (const auto& loop : spec.loops) {
      auto c = nlohmann::ordered_json::array();
      for (const auto& x : loop.weights) c.push_back(x.get_str());
      doc["loops"].push_back(std::move(c));
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace toricham::app
