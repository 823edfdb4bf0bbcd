#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lvrough/approx.hpp"
#include "lvrough/axiom.hpp"
#include "lvrough/errors.hpp"
#include "lvrough/lattice.hpp"
#include "lvrough/oracle.hpp"
#include "lvrough/relation.hpp"
#include "lvrough/universe.hpp"

namespace lvrough {

inline constexpr const char* kSchemaVersion = "1";

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError("missing field '" + key + "'");
  return j.at(key);
}

inline std::string str_field(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

inline Rational rational_field(const json& v, const std::string& context) {
  if (!v.is_string()) throw ParseError(context + " must be a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(context + ": " + e.what());
  }
}

}  // namespace detail

inline LatticePtr lattice_from_json(const json& j, int max_carrier = kDefaultMaxCarrier) {
  std::string kind = detail::str_field(j, "kind");
  if (kind == "boolean") return Lattice::boolean_2();
  if (kind == "lukasiewicz" || kind == "goedel") {
    const json& lv = detail::field(j, "levels");
    if (!lv.is_number_integer() || lv.get<int>() < 1)
      throw ParseError("'levels' must be a positive integer");
    int n = lv.get<int>();
    return kind == "lukasiewicz" ? Lattice::lukasiewicz_chain(n, max_carrier)
                                 : Lattice::goedel_chain(n, max_carrier);
  }
  if (kind != "table") throw ParseError("unknown lattice kind '" + kind + "'");
  std::vector<Rational> labels;
  for (const json& v : detail::field(j, "labels"))
    labels.push_back(detail::rational_field(v, "label"));
  std::vector<std::vector<bool>> leq;
  for (const json& row : detail::field(j, "leq")) {
    std::vector<bool> r;
    for (const json& v : row) {
      if (!v.is_boolean() && !v.is_number_integer())
        throw ParseError("leq entries must be booleans");
      r.push_back(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
    }
    leq.push_back(std::move(r));
  }
  auto rational_table = [](const json& tj, const std::string& what) {
    std::vector<std::vector<Rational>> out;
    for (const json& row : tj) {
      std::vector<Rational> r;
      for (const json& v : row) r.push_back(detail::rational_field(v, what + " entry"));
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<std::vector<Rational>> tensor =
      rational_table(detail::field(j, "tensor"), "tensor");
  std::optional<std::vector<std::vector<Rational>>> impl;
  if (j.contains("impl")) impl = rational_table(j.at("impl"), "impl");
  return Lattice::from_tables(labels, leq, tensor, impl, max_carrier);
}

inline UniversePtr universe_from_json(const LatticePtr& lat, const json& j) {
  std::vector<std::string> points;
  for (const json& p : detail::field(j, "points")) {
    if (!p.is_string()) throw ParseError("point names must be strings");
    points.push_back(p.get<std::string>());
  }
  const json& mem = detail::field(j, "membership");
  std::vector<Elem> vals;
  for (const std::string& p : points) {
    if (!mem.contains(p)) throw ParseError("membership missing point '" + p + "'");
    vals.push_back(lat->elem_of(detail::rational_field(mem.at(p), "membership of " + p)));
  }
  return Universe::make(lat, std::move(points), std::move(vals));
}

inline LSubset subset_from_json(const UniversePtr& u, const json& j) {
  const json& values = detail::field(j, "values");
  std::vector<Elem> vals;
  for (int i = 0; i < u->n_points(); ++i) {
    const std::string& p = u->point_name(i);
    if (!values.contains(p)) throw ParseError("subset missing point '" + p + "'");
    vals.push_back(u->lat().elem_of(detail::rational_field(values.at(p), "value at " + p)));
  }
  return LSubset(u, std::move(vals));
}

inline json to_json(const LSubset& w) {
  json values = json::object();
  for (int i = 0; i < w.uni().n_points(); ++i)
    values[w.uni().point_name(i)] = w.uni().lat().label(w.at(i)).str();
  return json{{"values", values}};
}

inline Relation relation_from_json(const UniversePtr& u, const json& j) {
  const json& matrix = detail::field(j, "matrix");
  const int n = u->n_points();
  std::vector<Elem> m(n * n);
  for (int a = 0; a < n; ++a) {
    const std::string& pa = u->point_name(a);
    if (!matrix.contains(pa)) throw ParseError("relation matrix missing row '" + pa + "'");
    for (int d = 0; d < n; ++d) {
      const std::string& pd = u->point_name(d);
      if (!matrix.at(pa).contains(pd))
        throw ParseError("relation matrix missing entry (" + pa + ", " + pd + ")");
      m[a * n + d] = u->lat().elem_of(
          detail::rational_field(matrix.at(pa).at(pd), "matrix entry (" + pa + ", " + pd + ")"));
    }
  }
  return Relation(u, std::move(m));
}

inline json to_json(const Relation& r) {
  json matrix = json::object();
  const Universe& u = r.uni();
  for (int a = 0; a < u.n_points(); ++a) {
    json row = json::object();
    for (int d = 0; d < u.n_points(); ++d)
      row[u.point_name(d)] = u.lat().label(r.at(a, d)).str();
    matrix[u.point_name(a)] = std::move(row);
  }
  return json{{"matrix", matrix}};
}

inline json to_json(const RelationProperties& p) {
  return json{{"reflexive", p.reflexive},   {"symmetric", p.symmetric},
              {"transitive", p.transitive}, {"euclidean", p.euclidean},
              {"mediate", p.mediate},       {"tolerance", p.tolerance()},
              {"preorder", p.preorder()},   {"equivalence", p.equivalence()}};
}

inline Operator operator_from_json(const UniversePtr& u, const json& j,
                                   std::uint64_t powerset_cap = kDefaultPowersetCap) {
  std::string kind = detail::str_field(j, "kind");
  if (kind == "induced_upper")
    return Operator::induced_upper(relation_from_json(u, detail::field(j, "relation")));
  if (kind == "induced_lower")
    return Operator::induced_lower(relation_from_json(u, detail::field(j, "relation")));
  auto parse_dir = [&]() {
    std::string d = detail::str_field(j, "direction");
    if (d == "upper") return Direction::upper;
    if (d == "lower") return Direction::lower;
    throw ParseError("direction must be 'upper' or 'lower'");
  };
  if (kind == "builtin")
    return Operator::builtin(u, detail::str_field(j, "name"), parse_dir());
  if (kind == "table") {
    Direction dir = parse_dir();
    std::vector<LSubset> entries;
    for (const json& e : detail::field(j, "entries")) entries.push_back(subset_from_json(u, e));
    return Operator::table(u, dir, std::move(entries), powerset_cap);
  }
  throw ParseError("unknown operator kind '" + kind + "'");
}

inline json to_json(const Operator& op) {
  switch (op.kind()) {
    case Operator::Kind::induced: {
      json j = json{{"kind", op.direction() == Direction::upper ? "induced_upper"
                                                                : "induced_lower"}};
      j["relation"] = to_json(op.relation());
      return j;
    }
    case Operator::Kind::builtin:
      return json{{"kind", "builtin"},
                  {"name", op.builtin_name()},
                  {"direction", to_string(op.direction())}};
    case Operator::Kind::table: {
      json entries = json::array();
      for (const LSubset& e : op.entries()) entries.push_back(to_json(e));
      return json{{"kind", "table"},
                  {"direction", to_string(op.direction())},
                  {"entries", entries}};
    }
    case Operator::Kind::closure:
      break;
  }
  throw ParseError("closure operators have no serialized form; tabulate first");
}

inline json to_json(const LawReport& rep) {
  json items = json::array();
  for (const LawVerdict& v : rep.items) {
    json it{{"law", v.law},
            {"status", v.status == LawStatus::pass     ? "pass"
                       : v.status == LawStatus::fail   ? "fail"
                                                       : "skipped"}};
    if (v.status == LawStatus::fail) it["witness"] = v.witness;
    items.push_back(std::move(it));
  }
  return json{{"schema_version", kSchemaVersion}, {"all_pass", rep.all_pass()},
              {"items", items}};
}

inline json to_json(const AxiomReport& rep) {
  json j{{"schema_version", kSchemaVersion},
         {"axiom", rep.axiom.name},
         {"family", to_string(rep.axiom.family)},
         {"holds", rep.holds},
         {"checked_count", rep.checked_count}};
  if (rep.mode.exhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = "sampled";
    j["seed"] = rep.mode.seed;
    j["trials"] = rep.mode.trials;
  }
  if (rep.witness)
    j["witness"] = json{{"where", rep.witness->where},
                        {"lhs", rep.witness->lhs},
                        {"rhs", rep.witness->rhs}};
  return j;
}

inline json to_json(const CharacterizationReport& rep) {
  json j{{"schema_version", kSchemaVersion},
         {"axiom", to_json(rep.axiom)},
         {"reconstructed", rep.reconstructed},
         {"roundtrip_equal", rep.roundtrip_equal},
         {"prediction_confirmed", rep.prediction_confirmed}};
  if (rep.relation) {
    j["relation"] = to_json(*rep.relation);
    j["properties"] = to_json(rep.properties);
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline json to_json(const VerificationMatrix& mat) {
  json rows = json::array();
  for (const MatrixRow& r : mat.rows) {
    json row{{"theorem", r.theorem},
             {"check", r.check},
             {"status", r.status},
             {"cases_checked", r.cases_checked}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  return json{{"schema_version", kSchemaVersion},
              {"instance", mat.instance},
              {"all_confirmed", mat.all_confirmed()},
              {"rows", rows}};
}

}  // namespace lvrough
