#include "paratop/json_io.hpp"

#include <sstream>

namespace paratop {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw SyntaxError(0, "space JSON: " + what); }

PointSet names_to_set(const Json& list, const std::vector<Point>& points) {
  if (!list.is_array()) schema_error("expected an array of point names");
  PointSet set;
  for (const auto& item : list) {
    if (!item.is_string()) schema_error("point names must be strings");
    const auto name = item.get<std::string>();
    bool found = false;
    for (PointIndex i = 0; i < points.size(); ++i) {
      if (points[i].label() == name) {
        set.insert(i);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::UnknownPoint, "unknown point '" + name + "'");
  }
  return set;
}

Json set_to_json(PointSet set, const FiniteSpace& space) {
  Json out = Json::array();
  for (PointIndex i : set.indices()) out.push_back(space.point(i).label());
  return out;
}

}  // namespace

FiniteSpace space_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("points") || !doc["points"].is_array()) schema_error("missing \"points\" array");
  const bool has_table = doc.contains("min_nbhd");
  const bool has_opens = doc.contains("opens");
  if (has_table == has_opens) schema_error("exactly one of \"min_nbhd\" and \"opens\" is required");

  std::vector<Point> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) schema_error("point names must be strings");
    points.push_back(Point{p.get<std::string>(), false});
  }
  if (points.empty()) throw Error(ErrorCode::EmptyCarrier, "carrier has no points");
  if (points.size() > kMaxPoints) throw Error(ErrorCode::CarrierTooLarge, "too many points");

  if (has_opens) {
    if (!doc["opens"].is_array()) schema_error("\"opens\" must be an array");
    std::vector<PointSet> opens;
    for (const auto& u : doc["opens"]) opens.push_back(names_to_set(u, points));
    return from_open_sets(std::move(points), opens);
  }

  const Json& table = doc["min_nbhd"];
  if (!table.is_object()) schema_error("\"min_nbhd\" must be an object");
  std::vector<PointSet> nbhd(points.size());
  std::vector<bool> filled(points.size(), false);
  for (const auto& [key, value] : table.items()) {
    PointIndex owner = 0;
    bool found = false;
    for (PointIndex i = 0; i < points.size(); ++i) {
      if (points[i].name == key) {
        owner = i;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::UnknownPoint, "unknown point '" + key + "'");
    nbhd[owner] = names_to_set(value, points);
    filled[owner] = true;
  }
  for (PointIndex i = 0; i < points.size(); ++i) {
    if (!filled[i]) throw Error(ErrorCode::NotATopology, "no minimal neighbourhood for '" + points[i].name + "'");
  }
  return FiniteSpace(std::move(points), std::move(nbhd));
}

FiniteSpace parse_space(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(e.byte, "invalid JSON");
  }
  return space_from_json(doc);
}

Json space_to_json(const FiniteSpace& space) {
  Json table = Json::object();
  for (PointIndex x = 0; x < space.size(); ++x) table[space.point(x).label()] = set_to_json(space.min_nbhd(x), space);
  return Json{{"points", space.labels()}, {"min_nbhd", std::move(table)}};
}

Json opens_to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  for (const PointSet u : space.open_sets()) opens.push_back(set_to_json(u, space));
  return Json{{"points", space.labels()}, {"opens", std::move(opens)}};
}

Json abelian_to_json(const AbelianVector& v, const FiniteSpace& space) {
  Json out = Json::object();
  for (const auto& [p, c] : v.coeffs()) out[space.point(p).label()] = c;
  return out;
}

AbelianVector abelian_from_json(const Json& doc, const FiniteSpace& space) {
  if (!doc.is_object()) throw SyntaxError(0, "abelian vector must be a JSON object");
  AbelianVector v;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer()) throw SyntaxError(0, "coefficient of '" + key + "' must be an integer");
    v.add(space.index_of(key), value.get<std::int64_t>());
  }
  return v;
}

Json verdict_to_json(const MembershipVerdict& verdict, const FiniteSpace& space) {
  Json out{{"kind", std::string(to_string(verdict.kind))}};
  switch (verdict.kind) {
    case VerdictKind::Member: {
      Json certificate = Json::array();
      for (const auto& f : verdict.factors) {
        certificate.push_back(Json{{"conjugator", format_word(f.conjugator, space)},
                                   {"from", space.point(f.generator.from).label()},
                                   {"to", space.point(f.generator.to).label()}});
      }
      for (const auto& use : verdict.flow) {
        certificate.push_back(Json{{"from", space.point(use.from).label()},
                                   {"to", space.point(use.to).label()},
                                   {"count", use.count}});
      }
      out["certificate"] = std::move(certificate);
      break;
    }
    case VerdictKind::NonMember: {
      Json obstruction{{"type", std::string(to_string(verdict.obstruction))}};
      if (verdict.obstruction == Obstruction::AbelianObstruction) {
        if (verdict.exponent_sum != 0) {
          obstruction["exponent_sum"] = verdict.exponent_sum;
        } else {
          obstruction["open_set"] = set_to_json(verdict.open_witness, space);
        }
      } else {
        obstruction["quotient_image"] = format_word(verdict.quotient_image, space);
      }
      out["obstruction"] = std::move(obstruction);
      break;
    }
    case VerdictKind::Unknown:
      out["bound"] = verdict.bound;
      break;
  }
  return out;
}

Json separation_to_json(const Separation& separation, const FiniteSpace& space) {
  if (!separation.separable) return Json{{"separable", false}};
  return Json{{"separable", true},
              {"coset_center", abelian_to_json(separation.center, space)},
              {"evidence", verdict_to_json(separation.evidence, space)}};
}

Json basep_to_json(const BasepReport& report) {
  return Json{{"samples", report.samples},
              {"checks", report.checks},
              {"unresolved", report.unresolved},
              {"violations", report.violations}};
}

Json report_to_json(const SuiteReport& report, bool include_timing) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json counterexamples = Json::array();
    for (const auto& ce : c.counterexamples) {
      counterexamples.push_back(Json{{"space", space_to_json(ce.space)}, {"witness", ce.witness}});
    }
    checks.push_back(Json{{"tag", c.tag},
                          {"description", c.description},
                          {"passed", c.passed},
                          {"counterexamples", std::move(counterexamples)}});
  }
  Json out{{"carrier_size", report.carrier_size},
           {"spaces_checked", report.spaces_checked},
           {"checks", std::move(checks)},
           {"clean", report.clean()}};
  if (include_timing) out["wall_time"] = report.wall_time;
  return out;
}

std::string report_to_text(const SuiteReport& report, bool include_timing) {
  std::ostringstream out;
  out << "carrier size " << report.carrier_size << ", " << report.spaces_checked << " spaces\n";
  for (const auto& c : report.checks) {
    out << "  " << c.tag << "  " << c.passed << " passed, " << c.counterexamples.size()
        << " counterexamples  (" << c.description << ")\n";
    for (const auto& ce : c.counterexamples) {
      out << "    " << space_to_json(ce.space).dump() << "  " << ce.witness << "\n";
    }
  }
  if (include_timing) out << "wall time " << report.wall_time << " s\n";
  out << (report.clean() ? "clean\n" : "COUNTEREXAMPLES FOUND\n");
  return out.str();
}

}  // namespace paratop
