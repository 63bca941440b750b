#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric_deform/errors.hpp"
#include "toric_deform/hulls.hpp"
#include "toric_deform/kmoduli.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/minkowski.hpp"
#include "toric_deform/polytope3.hpp"

namespace toric_deform::io {

using Json = nlohmann::ordered_json;

/// Integers are written as JSON numbers; values outside int64 are refused
/// rather than rounded.
inline Json to_json(const BigInt& v) {
  if (!v.fits_slong_p()) throw InvalidArgument("integer " + to_string(v) + " does not fit in a JSON int64");
  return Json(static_cast<std::int64_t>(v.get_si()));
}

inline BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    return BigInt(std::to_string(u));
  }
  throw InvalidPolygon("coordinates must be integers");
}

inline Json to_json(const geometry::LatticeVector2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }
inline Json to_json(const fano::LatticeVector3& v) { return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)}); }

inline Json to_json(const std::vector<geometry::LatticeVector2>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

inline Json to_json(const std::vector<BigInt>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json polygon_to_json(const geometry::LatticePolygon& f) {
  Json j;
  j["vertices"] = to_json(f.vertices());
  return j;
}

/// Reads {"vertices": [[x, y], ...]}; the hull of the listed points.
inline geometry::LatticePolygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InvalidPolygon("polygon JSON needs a \"vertices\" array");
  std::vector<geometry::LatticeVector2> pts;
  for (const auto& p : j["vertices"]) {
    if (!p.is_array() || p.size() != 2) throw InvalidPolygon("each vertex must be a pair [x, y]");
    pts.emplace_back(integer_from_json(p[0]), integer_from_json(p[1]));
  }
  return geometry::LatticePolygon::from_points(std::move(pts));
}

inline geometry::LatticePolygon polygon_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidPolygon(std::string("malformed JSON: ") + e.what());
  }
  return polygon_from_json(j);
}

inline geometry::LatticePolygon polygon_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return polygon_from_text(ss.str());
}

/// Decompositions serialise as lists of summand vertex lists.
inline Json to_json(const geometry::MinkowskiDecomposition& d) {
  Json a = Json::array();
  for (const auto& s : d.summands) a.push_back(to_json(s.vertices));
  return a;
}

inline Json to_json(const hulls::Classification& c) {
  Json j;
  j["case"] = c.to_string();
  j["algebra"] = c.algebra();
  j["embedding_dimension"] = c.embedding_dimension;
  return j;
}

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline Json to_json(const hulls::HullReport& r) {
  Json j;
  j["polygon"] = polygon_to_json(r.polygon);
  j["edge_count"] = r.edge_count;
  j["embedding_dimension"] = r.embedding_dimension;
  j["hilbert"] = to_json(r.hilbert);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["dimension"] = c.dimension;
    cj["summands"] = to_json(c.decomposition);
    comps.push_back(cj);
  }
  j["components"] = comps;
  j["classification"] = to_json(r.classification);
  j["artinian"] = r.artinian;
  j["h1_check"] = r.h1_check;
  j["h2_check"] = optional_bool(r.h2_check);
  j["obstruction_check"] = optional_bool(r.obstruction_check);
  return j;
}

inline Json to_json(const hulls::AltmannPresentation& p) {
  Json j;
  j["variables"] = p.ring->names();
  j["dropped_edge"] = p.dropped + 1;
  Json gens = Json::array();
  const auto ideal = p.ideal();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  j["generators"] = gens;
  return j;
}

inline Json to_json(const fano::BranchBounds& b) {
  Json j;
  j["decomposition_count"] = to_json(b.decomposition_count);
  j["stack_lower"] = to_json(b.stack_lower);
  j["space_lower"] = to_json(b.space_lower);
  j["aut_divisor"] = to_json(b.aut_divisor);
  return j;
}

inline Json to_json(const fano::LatticePolytope3& p) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json fj;
    fj["normal"] = to_json(f.normal);
    fj["offset"] = to_json(f.offset);
    facets.push_back(fj);
  }
  j["facets"] = facets;
  return j;
}

inline Json to_json(const fano::FamilyBranchReport& r) {
  Json j;
  j["r"] = r.r;
  j["polygon"] = polygon_to_json(r.polygon);
  j["vertex_count"] = r.vertex_count;
  j["unit_edges"] = r.unit_edges;
  j["centrally_symmetric"] = r.centrally_symmetric;
  j["bounds"] = to_json(r.bounds);
  Json targets;
  targets["decomposition_count"] = to_json(r.d_target);
  targets["stack_lower"] = to_json(r.stack_target);
  targets["space_lower"] = to_json(r.space_target);
  j["targets"] = targets;
  j["fano"] = r.fano;
  j["prism"] = r.prism;
  j["reflexive"] = r.reflexive;
  j["all_checks_pass"] = r.all_ok();
  return j;
}

}  // namespace toric_deform::io
