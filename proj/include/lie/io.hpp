#pragma once

// JSON and DOT serialization. Every number is exact: integers as JSON
// integers, rationals as "p/q" strings.

#include "lie/affine.hpp"
#include "lie/character.hpp"
#include "lie/garland.hpp"
#include "lie/graded.hpp"
#include "lie/loop.hpp"
#include "lie/root_system.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lie::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Weight& w) {
  Json j = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) j.push_back(w[i]);
  return j;
}

inline Weight weight_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "weight must be a JSON array");
  if (j.size() != rank)
    throw Error(ErrorCode::parse_error,
                "weight has " + std::to_string(j.size()) + " entries, expected " + std::to_string(rank));
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer()) throw Error(ErrorCode::parse_error, "weight entries must be integers");
    w[i] = j[i].get<std::int64_t>();
  }
  return w;
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

inline Weight parse_weight(const std::string& text, std::size_t rank) { return weight_from_json(parse(text), rank); }

/// Integers that may outgrow int64 fall back to decimal strings.
inline Json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::parse_error, "expected an integer or a \"p/q\" string");
}

// characters ---------------------------------------------------------------

template <class Map>
Json multiplicity_json(const Map& m) {
  Json j = Json::object();
  for (const auto& [w, c] : m) j[w.str()] = c;
  return j;
}

inline Json to_json(const FormalCharacter& ch) { return multiplicity_json(ch.terms()); }
inline Json to_json(const DominantDecomposition& d) { return multiplicity_json(d.mults()); }

inline Weight weight_from_key(const std::string& key, std::size_t rank) { return parse_weight(key, rank); }

inline FormalCharacter character_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "character must be a JSON object");
  FormalCharacter ch;
  for (const auto& [key, v] : j.items()) {
    if (!v.is_number_integer()) throw Error(ErrorCode::parse_error, "multiplicities must be integers");
    ch.add(weight_from_key(key, rank), v.get<std::int64_t>());
  }
  return ch;
}

inline DominantDecomposition decomposition_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "decomposition must be a JSON object");
  DominantDecomposition d;
  for (const auto& [key, v] : j.items()) {
    if (!v.is_number_integer()) throw Error(ErrorCode::parse_error, "multiplicities must be integers");
    d.add(weight_from_key(key, rank), v.get<std::int64_t>());
  }
  return d;
}

// root data ----------------------------------------------------------------

inline Json to_json(const Root& r) { return Json{{"simple", to_json(r.simple)}, {"weight", to_json(r.weight)}}; }

inline Json to_json(const std::vector<Root>& roots) {
  Json j = Json::array();
  for (const auto& r : roots) j.push_back(to_json(r));
  return j;
}

inline Json root_system_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(row);
  }
  return Json{{"type", rs.type().str()},
              {"rank", rs.rank()},
              {"cartan", cartan},
              {"dim", rs.dim_algebra()},
              {"weyl_group_order", to_json(rs.weyl_group_order())},
              {"highest_root", to_json(rs.highest_root())},
              {"rho", to_json(rs.rho())},
              {"positive_roots", to_json(rs.positive_roots())}};
}

// loop modules -------------------------------------------------------------

inline Json to_json(const LoopIrrep& v) {
  Json j = Json::array();
  for (const auto& [a, lam] : v.support()) j.push_back(Json{{"point", a.str()}, {"weight", to_json(lam)}});
  return j;
}

/// Raw (point, weight) list, in input order and without validation beyond shape.
inline std::vector<std::pair<Point, Weight>> loop_parts_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "loop module must be a JSON array");
  std::vector<std::pair<Point, Weight>> parts;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("point") || !item.contains("weight"))
      throw Error(ErrorCode::parse_error, "each factor needs \"point\" and \"weight\"");
    parts.emplace_back(Point(rational_from_json(item["point"])), weight_from_json(item["weight"], rank));
  }
  return parts;
}

inline LoopIrrep loop_irrep_from_json(const Json& j, std::size_t rank) {
  return LoopIrrep::from_parts(loop_parts_from_json(j, rank));
}

inline Json to_json(const SpectralCharacter& chi) {
  Json j = Json::array();
  for (const auto& [a, cls] : chi) {
    Json r = Json::array();
    for (auto x : cls.residues) r.push_back(x);
    j.push_back(Json{{"point", a.str()}, {"class", r}});
  }
  return j;
}

// graded category ------------------------------------------------------------

inline Json to_json(const GradedSimple& x) { return Json{{"weight", to_json(x.weight)}, {"grade", x.grade}}; }

inline GradedSimple graded_simple_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("grade") || !j["grade"].is_number_integer())
    throw Error(ErrorCode::parse_error, "graded simple needs \"weight\" and integer \"grade\"");
  return {weight_from_json(j["weight"], rank), j["grade"].get<std::int64_t>()};
}

inline Json to_json(const GammaSet& g) {
  Json j = Json::array();
  for (const auto& x : g.elements) j.push_back(to_json(x));
  return j;
}

inline GammaSet gamma_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "vertex set must be a JSON array");
  GammaSet g;
  for (const auto& item : j) g.elements.insert(graded_simple_from_json(item, rank));
  return g;
}

inline Json to_json(const Quiver& q) {
  Json vs = Json::array(), as = Json::array();
  for (const auto& v : q.vertices) vs.push_back(to_json(v));
  for (const auto& a : q.arrows)
    as.push_back(Json{{"source", to_json(a.source)}, {"target", to_json(a.target)}, {"multiplicity", a.multiplicity}});
  return Json{{"vertices", vs}, {"arrows", as}};
}

inline Quiver quiver_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw Error(ErrorCode::parse_error, "quiver needs \"vertices\" and \"arrows\"");
  Quiver q;
  for (const auto& v : j["vertices"]) q.vertices.push_back(graded_simple_from_json(v, rank));
  for (const auto& a : j["arrows"]) {
    if (!a.contains("multiplicity") || !a["multiplicity"].is_number_integer())
      throw Error(ErrorCode::parse_error, "arrow needs an integer \"multiplicity\"");
    q.arrows.push_back({graded_simple_from_json(a.at("source"), rank), graded_simple_from_json(a.at("target"), rank),
                        a["multiplicity"].get<std::int64_t>()});
  }
  return q;
}

inline std::string vertex_label(const GradedSimple& x) { return "(" + x.weight.str() + ", " + std::to_string(x.grade) + ")"; }

inline std::string to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  std::map<GradedSimple, std::size_t> id;
  for (const auto& v : q.vertices) {
    const auto k = id.size();
    id.emplace(v, k);
    out << "  v" << k << " [label=\"" << vertex_label(v) << "\"];\n";
  }
  for (const auto& a : q.arrows)
    out << "  v" << id.at(a.source) << " -> v" << id.at(a.target) << " [label=\"" << a.multiplicity << "\"];\n";
  out << "}\n";
  return out.str();
}

// affine -----------------------------------------------------------------------

inline Json to_json(const AffineWeight& w) {
  return Json{{"finite", to_json(w.finite)}, {"level", w.level}, {"delta", rational_json(w.delta)}};
}

inline AffineWeight affine_weight_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object() || !j.contains("finite") || !j.contains("level") || !j["level"].is_number_integer())
    throw Error(ErrorCode::parse_error, "affine weight needs \"finite\" and integer \"level\"");
  return {weight_from_json(j["finite"], rank), j["level"].get<std::int64_t>(),
          j.contains("delta") ? rational_from_json(j["delta"]) : Rational(0)};
}

/// Terms ordered by depth below the top, then by root coordinates.
inline Json to_json(const TruncatedAffineSeries& s, const AffineAlgebra& aff) {
  std::vector<std::pair<AffineRootCoords, std::int64_t>> rows(s.relative.begin(), s.relative.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return height(a.first) < height(b.first); });
  Json terms = Json::array();
  for (const auto& [c, v] : rows) {
    Json coords = Json::array();
    for (auto x : c) coords.push_back(x);
    terms.push_back(Json{{"weight", to_json(aff.lower(s.top, c))}, {"below_top", coords}, {"mult", v}});
  }
  return Json{{"top", to_json(s.top)}, {"depth", s.depth}, {"terms", terms}};
}

// garland ----------------------------------------------------------------------

inline Json to_json(const PowerSumPoly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::array();
    for (auto k : m) mono.push_back(k);
    j.push_back(Json{{"monomial", mono}, {"coeff", rational_json(c)}});
  }
  return j;
}

inline PowerSumPoly power_sum_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "polynomial must be a JSON array");
  PowerSumPoly p;
  for (const auto& t : j) {
    PowerSumPoly::Monomial m;
    for (const auto& k : t.at("monomial")) m.push_back(k.get<std::size_t>());
    p += PowerSumPoly::term(m, rational_from_json(t.at("coeff")));
  }
  return p;
}

// errors -----------------------------------------------------------------------

inline Json error_json(const Error& e) {
  return Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

}  // namespace lie::io
