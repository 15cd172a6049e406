#pragma once

// JSON forms of the library's values. Readers accept every documented
// input form; writers emit one canonical form that the readers accept.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvstate/gamma_xi.hpp"
#include "mvstate/geometry.hpp"
#include "mvstate/homomorphism.hpp"
#include "mvstate/parse.hpp"
#include "mvstate/state.hpp"
#include "mvstate/universal.hpp"

namespace mvstate::io {

using nlohmann::json;

inline json::array_t checked_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a JSON array");
  return j.get<json::array_t>();
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Integer to_integer(const json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  return j.get<Integer>();
}

inline IntVector int_vector(const json& j) {
  IntVector out;
  for (const auto& v : checked_array(j, "integer vector")) out.push_back(to_integer(v));
  return out;
}

// -- algebras and elements --------------------------------------------------

/// Accepts "M3*M1*M2" or {"chains":[3,1,2]}.
inline FiniteMvAlgebra algebra_from_json(const json& j) {
  if (j.is_string()) return parse_algebra(j.get<std::string>());
  return FiniteMvAlgebra(int_vector(field(j, "chains")));
}

inline json to_json(const FiniteMvAlgebra& A) { return json{{"chains", A.chains()}}; }

inline json to_json(const MvElement& a) { return a.numerators; }

inline MvElement element_from_json(const FiniteMvAlgebra& A, const json& j) {
  MvElement a(int_vector(j));
  A.require(a);
  return a;
}

inline std::vector<MvElement> elements_from_json(const FiniteMvAlgebra& A, const json& j) {
  std::vector<MvElement> out;
  for (const auto& e : checked_array(j, "element list")) out.push_back(element_from_json(A, e));
  return out;
}

inline json to_json(const std::vector<MvElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

// -- good sequences and Xi ----------------------------------------------------

inline json to_json(const GoodSequence& s) { return to_json(s.entries); }

inline GoodSequence good_sequence_from_json(const FiniteMvAlgebra& A, const json& j) {
  return make_good_sequence(A, elements_from_json(A, j));
}

inline json to_json(const XiPair& x) { return json{{"pos", to_json(x.pos)}, {"neg", to_json(x.neg)}}; }
inline json to_json(const XiVector& x) { return json{{"vector", x.vector}, {"unit", x.unit}}; }
inline json to_json(const XiElement& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

inline XiElement xi_from_json(const FiniteMvAlgebra& A, const json& j) {
  if (j.is_object() && j.contains("vector")) {
    XiVector v{int_vector(j.at("vector")), j.contains("unit") ? int_vector(j.at("unit")) : A.unit()};
    if (v.unit != A.unit() || v.vector.size() != A.rank()) throw DimensionMismatch("Xi vector does not match algebra");
    return v;
  }
  return XiPair{good_sequence_from_json(A, field(j, "pos")), good_sequence_from_json(A, field(j, "neg"))};
}

// -- states -------------------------------------------------------------------

/// {"domain":..., "codomain":..., "atom_values":[...]} expands through
/// extend_from_atoms; an explicit "table":[[arg, value], ...] is loaded
/// verbatim (and must be total).
inline StateTable state_from_json(const json& j) {
  const FiniteMvAlgebra A = algebra_from_json(field(j, "domain"));
  const FiniteMvAlgebra N = algebra_from_json(field(j, "codomain"));
  if (j.contains("table")) {
    std::map<MvElement, MvElement> entries;
    for (const auto& row : checked_array(j.at("table"), "table")) {
      const auto pair = checked_array(row, "table row");
      if (pair.size() != 2) throw InputError("table rows must be [argument, value]");
      MvElement arg = element_from_json(A, pair[0]);
      if (!entries.emplace(arg, element_from_json(N, pair[1])).second)
        throw InputError("table lists an argument twice");
    }
    return make_state_table(A, N, entries);
  }
  return extend_from_atoms(A, N, elements_from_json(N, field(j, "atom_values")));
}

inline json to_json(const StateTable& t, bool full_table = false) {
  json out{{"domain", to_json(t.domain)}, {"codomain", to_json(t.codomain)}};
  if (t.domain.is_terminal() || t.values.size() != t.domain.size()) full_table = true;
  else {
    out["atom_values"] = to_json(t.atom_values());
    try {
      if (extend_from_atoms(t.domain, t.codomain, t.atom_values()) != t) full_table = true;
    } catch (const Error&) {
      full_table = true;
    }
  }
  if (full_table) {
    json table = json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i)
      table.push_back(json::array({to_json(t.domain.element(i)), to_json(t.values[i])}));
    out["table"] = std::move(table);
  }
  return out;
}

inline json to_json(const ConformanceReport& r) {
  json out{{"ok", r.ok}};
  if (!r.ok) {
    out["axiom"] = r.axiom;
    out["witness"] = to_json(r.witness);
  }
  return out;
}

inline json to_json(const XiStateMatrix& x) {
  return json{{"matrix", x.matrix}, {"source_unit", x.source_unit}, {"target_unit", x.target_unit}};
}

// -- homomorphisms ------------------------------------------------------------

/// {"domain":..., "codomain":..., "atom_images":[...]} or with "table".
/// The domain and codomain may be supplied by the caller (chain files).
inline MvHom hom_from_json(const json& j, const FiniteMvAlgebra* domain = nullptr,
                           const FiniteMvAlgebra* codomain = nullptr) {
  const FiniteMvAlgebra A = domain ? *domain : algebra_from_json(field(j, "domain"));
  const FiniteMvAlgebra B = codomain ? *codomain : algebra_from_json(field(j, "codomain"));
  if (j.contains("table")) {
    std::map<MvElement, MvElement> entries;
    for (const auto& row : checked_array(j.at("table"), "table")) {
      const auto pair = checked_array(row, "table row");
      if (pair.size() != 2) throw InputError("table rows must be [argument, value]");
      entries[element_from_json(A, pair[0])] = element_from_json(B, pair[1]);
    }
    const StateTable t = make_state_table(A, B, entries);
    return MvHom{A, B, t.values};
  }
  return extend_atom_images(A, B, elements_from_json(B, field(j, "atom_images")));
}

inline json to_json(const MvHom& h) {
  json images = json::array();
  for (const auto& a : atoms(h.domain)) images.push_back(to_json(h(a)));
  return json{{"domain", to_json(h.domain)}, {"codomain", to_json(h.codomain)}, {"atom_images", images}};
}

struct Chain {
  std::vector<FiniteMvAlgebra> algebras;
  std::vector<MvHom> maps;
};

/// {"algebras":["M1","M2","M2*M6"], "maps":[{"atom_images":...}, ...]}
inline Chain chain_from_json(const json& j) {
  Chain c;
  for (const auto& a : checked_array(field(j, "algebras"), "algebras")) c.algebras.push_back(algebra_from_json(a));
  const auto maps = checked_array(field(j, "maps"), "maps");
  if (maps.size() + 1 != c.algebras.size()) throw InputError("chain needs exactly one map per consecutive pair");
  for (std::size_t i = 0; i < maps.size(); ++i) c.maps.push_back(hom_from_json(maps[i], &c.algebras[i], &c.algebras[i + 1]));
  return c;
}

// -- geometry -----------------------------------------------------------------

inline json to_json(const RationalPoint& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(to_string(c));
  return out;
}

inline RationalPoint point_from_json(const json& j) {
  RatVector c;
  for (const auto& v : checked_array(j, "point")) {
    if (v.is_string()) c.push_back(parse_rational(v.get<std::string>()));
    else c.emplace_back(to_integer(v));
  }
  return RationalPoint(std::move(c));
}

inline json to_json(const RationalSimplex& s) {
  json out = json::array();
  for (const auto& v : s.vertices()) out.push_back(to_json(v));
  return out;
}

inline RationalSimplex simplex_from_json(const json& j) {
  std::vector<RationalPoint> vs;
  for (const auto& v : checked_array(j, "simplex")) vs.push_back(point_from_json(v));
  return RationalSimplex(std::move(vs));
}

inline json to_json(const AffineZMap& f) {
  return json{{"matrix", f.matrix}, {"offset", f.offset}, {"domain", to_json(f.domain)}};
}

inline AffineZMap affine_from_json(const json& j) {
  IntMatrix m;
  for (const auto& row : checked_array(field(j, "matrix"), "matrix")) m.push_back(int_vector(row));
  return make_affine_map(std::move(m), int_vector(field(j, "offset")), simplex_from_json(field(j, "domain")));
}

inline json to_json(const std::vector<RationalPoint>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

// -- universal ----------------------------------------------------------------

inline json to_json(const UniversalState& u) {
  json assignment = json::array();
  for (std::size_t i = 0; i < u.source.size(); ++i) {
    const auto& f = u.assignment[i];
    assignment.push_back(json::array({to_json(u.source.element(i)), json{{"matrix", f.matrix}, {"offset", f.offset}}}));
  }
  return json{{"chains", u.source.chains()}, {"simplex", to_json(u.simplex)}, {"assignment", assignment}};
}

/// Re-reads a serialized universal state; the assignment must be the one
/// universal_state() builds for the stated chains.
inline UniversalState universal_from_json(const json& j) {
  const FiniteMvAlgebra A(int_vector(field(j, "chains")));
  UniversalState u = universal_state(A);
  if (!(simplex_from_json(field(j, "simplex")) == u.simplex)) throw InputError("simplex is not Delta_k for the chains");
  const auto rows = checked_array(field(j, "assignment"), "assignment");
  if (rows.size() != A.size()) throw PartialTable("assignment is not total");
  for (const auto& row : rows) {
    const auto pair = checked_array(row, "assignment row");
    if (pair.size() != 2) throw InputError("assignment rows must be [element, affine map]");
    const MvElement a = element_from_json(A, pair[0]);
    IntMatrix m;
    for (const auto& r : checked_array(field(pair[1], "matrix"), "matrix")) m.push_back(int_vector(r));
    if (m != u(a).matrix || int_vector(field(pair[1], "offset")) != u(a).offset)
      throw InputError("assignment differs from the universal state");
  }
  return u;
}

inline json to_json(const DualHom& h) {
  return json{{"target_chains", h.target_chains}, {"points", to_json(h.points)}};
}

inline json to_json(const UpsilonCertificate& c) {
  return json{{"dual_map", c.dual_map},
              {"alpha", to_json(c.alpha)},
              {"integral", true},
              {"surjective", c.surjective},
              {"precomposition_injective", c.precomposition_injective},
              {"square_commutes", c.square_commutes}};
}

}  // namespace mvstate::io
