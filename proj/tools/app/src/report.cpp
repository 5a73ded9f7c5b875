#include "toricham/app/report.hpp"

#include "toricham/error.hpp"

#include <json.hpp>

#include <ostream>

namespace toricham::app {
namespace {

using nlohmann::ordered_json;

ordered_json rational_array(const RatVector& v) {
  auto out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

ordered_json integer_array(const IntVector& v) {
  auto out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

// Readers for the parse direction; every failure names its JSON path.
const ordered_json& at(const ordered_json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, path + "." + key + ": missing");
  }
  return doc.at(key);
}

Rational read_rational(const ordered_json& v, const std::string& path) {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, path + ": expected a rational string");
  return Rational::parse(v.get<std::string>());
}

Integer read_integer(const ordered_json& v, const std::string& path) {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, path + ": expected an integer string");
  return parse_integer(v.get<std::string>());
}

RatVector read_rational_array(const ordered_json& v, const std::string& path) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, path + ": expected an array");
  RatVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rational(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

IntVector read_integer_array(const ordered_json& v, const std::string& path) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, path + ": expected an array");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_integer(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename T>
T read_plain(const ordered_json& v, const std::string& path) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, path + ": unexpected type " + std::string(v.type_name()));
  }
}

std::string join(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string join(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + ")";
}

}  // namespace

ReportFile make_report(const ManifoldSpec& spec, const AssumptionReport& assumptions, const DelzantModel& model,
                       const std::vector<InvariantReport>& loops) {
  ReportFile r;
  r.name = spec.name;
  r.coordinates = model.coordinate_count();
  r.rank = model.weights.rows();
  r.dimension = model.dimension();
  r.rank_ok = assumptions.rank_ok;
  r.half_space_ok = assumptions.half_space_ok;
  r.half_space_witness = assumptions.half_space_witness;
  r.vertices = model.polytope.vertices;
  for (const auto& f : model.facets) {
    const auto& q = model.polytope.inequalities[f.index];
    r.facets.push_back({f.index + 1, q.normal, model.normal_scales[f.index], q.offset, f.vertices.size(), f.proper,
                        facet_lattice_volume(f)});
  }
  r.volume = model.volume;
  r.smoothness = std::string(to_string(model.smoothness));
  r.warnings = model.warnings;
  for (const auto& l : loops) {
    r.loops.push_back({l.loop.weights, l.kappa, l.facet_contributions, l.invariant, std::string(to_string(l.verdict))});
  }
  return r;
}

std::string to_json(const ReportFile& report) {
  ordered_json doc;
  doc["name"] = report.name;
  doc["coordinates"] = report.coordinates;
  doc["rank"] = report.rank;
  doc["dimension"] = report.dimension;

  ordered_json assumptions;
  assumptions["rank_ok"] = report.rank_ok;
  assumptions["half_space_ok"] = report.half_space_ok;
  assumptions["half_space_witness"] =
      report.half_space_witness ? rational_array(*report.half_space_witness) : ordered_json(nullptr);
  doc["assumptions"] = std::move(assumptions);

  ordered_json polytope;
  polytope["dimension"] = report.dimension;
  polytope["vertices"] = ordered_json::array();
  for (const auto& v : report.vertices) polytope["vertices"].push_back(rational_array(v));
  polytope["facets"] = ordered_json::array();
  for (const auto& f : report.facets) {
    ordered_json facet;
    facet["coordinate"] = f.coordinate;
    facet["normal"] = integer_array(f.normal);
    facet["scale"] = f.scale.get_str();
    facet["offset"] = f.offset.str();
    facet["vertex_count"] = f.vertex_count;
    facet["proper"] = f.proper;
    facet["lattice_volume"] = f.lattice_volume.str();
    polytope["facets"].push_back(std::move(facet));
  }
  polytope["volume"] = report.volume.str();
  polytope["smoothness"] = report.smoothness;
  doc["polytope"] = std::move(polytope);

  doc["warnings"] = report.warnings;

  doc["loops"] = ordered_json::array();
  for (const auto& l : report.loops) {
    ordered_json block;
    block["weights"] = integer_array(l.weights);
    block["kappa"] = l.kappa.str();
    ordered_json contributions = ordered_json::object();
    for (std::size_t k = 0; k < l.facet_contributions.size(); ++k) {
      contributions[std::to_string(k + 1)] = l.facet_contributions[k].str();
    }
    block["facet_contributions"] = std::move(contributions);
    block["invariant"] = l.invariant.str();
    block["verdict"] = l.verdict;
    doc["loops"].push_back(std::move(block));
  }
  return doc.dump(2) + "\n";
}

ReportFile parse_report(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report JSON: ") + e.what());
  }
  ReportFile r;
  r.name = read_plain<std::string>(at(doc, "name", ""), ".name");
  r.coordinates = read_plain<std::size_t>(at(doc, "coordinates", ""), ".coordinates");
  r.rank = read_plain<std::size_t>(at(doc, "rank", ""), ".rank");
  r.dimension = read_plain<std::size_t>(at(doc, "dimension", ""), ".dimension");

  const auto& assumptions = at(doc, "assumptions", "");
  r.rank_ok = read_plain<bool>(at(assumptions, "rank_ok", ".assumptions"), ".assumptions.rank_ok");
  r.half_space_ok = read_plain<bool>(at(assumptions, "half_space_ok", ".assumptions"), ".assumptions.half_space_ok");
  const auto& witness = at(assumptions, "half_space_witness", ".assumptions");
  if (!witness.is_null()) r.half_space_witness = read_rational_array(witness, ".assumptions.half_space_witness");

  const auto& polytope = at(doc, "polytope", "");
  const auto& vertices = at(polytope, "vertices", ".polytope");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    r.vertices.push_back(read_rational_array(vertices[i], ".polytope.vertices[" + std::to_string(i) + "]"));
  }
  const auto& facets = at(polytope, "facets", ".polytope");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string path = ".polytope.facets[" + std::to_string(i) + "]";
    const auto& f = facets[i];
    r.facets.push_back({read_plain<std::size_t>(at(f, "coordinate", path), path + ".coordinate"),
                        read_integer_array(at(f, "normal", path), path + ".normal"),
                        read_integer(at(f, "scale", path), path + ".scale"),
                        read_rational(at(f, "offset", path), path + ".offset"),
                        read_plain<std::size_t>(at(f, "vertex_count", path), path + ".vertex_count"),
                        read_plain<bool>(at(f, "proper", path), path + ".proper"),
                        read_rational(at(f, "lattice_volume", path), path + ".lattice_volume")});
  }
  r.volume = read_rational(at(polytope, "volume", ".polytope"), ".polytope.volume");
  r.smoothness = read_plain<std::string>(at(polytope, "smoothness", ".polytope"), ".polytope.smoothness");
  r.warnings = read_plain<std::vector<std::string>>(at(doc, "warnings", ""), ".warnings");

  const auto& loops = at(doc, "loops", "");
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const std::string path = ".loops[" + std::to_string(i) + "]";
    const auto& l = loops[i];
    LoopBlock block;
    block.weights = read_integer_array(at(l, "weights", path), path + ".weights");
    block.kappa = read_rational(at(l, "kappa", path), path + ".kappa");
    const auto& contributions = at(l, "facet_contributions", path);
    for (std::size_t k = 1; k <= block.weights.size(); ++k) {
      block.facet_contributions.push_back(read_rational(at(contributions, std::to_string(k), path + ".facet_contributions"),
                                                        path + ".facet_contributions." + std::to_string(k)));
    }
    block.invariant = read_rational(at(l, "invariant", path), path + ".invariant");
    block.verdict = read_plain<std::string>(at(l, "verdict", path), path + ".verdict");
    r.loops.push_back(std::move(block));
  }
  return r;
}

void print_text(std::ostream& os, const ReportFile& r) {
  os << "manifold: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  os << "  m = " << r.coordinates << ", r = " << r.rank << ", polytope dimension n = " << r.dimension
     << " (real dimension " << 2 * r.dimension << ")\n";
  os << "assumptions: spanning " << (r.rank_ok ? "ok" : "FAILED") << ", half-space "
     << (r.half_space_ok ? "ok" : "FAILED");
  if (r.half_space_witness) os << " (xi = " << join(*r.half_space_witness) << ")";
  os << "\n";
  os << "polytope: " << r.vertices.size() << " vertices, volume " << r.volume.str() << ", " << r.smoothness << "\n";
  for (const auto& v : r.vertices) os << "  vertex " << join(v) << "\n";
  for (const auto& f : r.facets) {
    os << "  facet z_" << f.coordinate << " = 0: normal " << join(f.normal) << " scale " << f.scale.get_str()
       << " offset " << f.offset.str() << ", " << f.vertex_count << " vertices, lattice volume "
       << f.lattice_volume.str() << (f.proper ? "" : " (not a facet)") << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  for (const auto& l : r.loops) {
    os << "loop " << join(l.weights) << ":\n";
    os << "  kappa = " << l.kappa.str() << "\n";
    for (std::size_t k = 0; k < l.facet_contributions.size(); ++k) {
      os << "  N_" << k + 1 << " = " << l.facet_contributions[k].str() << "\n";
    }
    os << "  I = " << l.invariant.str() << "\n";
    os << "  verdict: " << l.verdict << "\n";
  }
}

}  // namespace toricham::app
