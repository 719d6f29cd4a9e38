#include "rauzy/json.hpp"

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

Json letters(const Alphabet& a, const std::vector<Letter>& xs) {
  Json out = Json::array();
  for (Letter x : xs) out.push_back(a.name(x));
  return out;
}

Json optional_letter(const Alphabet& a, const std::optional<Letter>& x) {
  return x ? Json(a.name(*x)) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& q) {
  return Json{{"decimal", to_decimal(q)}, {"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const LabeledPermutation& p) {
  return Json{{"alphabet", p.alphabet().names()},
              {"top", letters(p.alphabet(), p.top())},
              {"bottom", letters(p.alphabet(), p.bottom())}};
}

Json to_json(const SpectralBracket& b) {
  return Json{{"low", to_json(b.low)},
              {"high", to_json(b.high)},
              {"width", to_json(Rational(b.high - b.low))},
              {"iterations", b.iterations}};
}

Json to_json(const EdgeRecord& e) {
  const Alphabet& a = e.source.alphabet();
  return Json{{"kind", std::string(1, move_char(e.kind))},
              {"source", to_json(e.source)},
              {"target", to_json(e.target)},
              {"winner", optional_letter(a, e.winner)},
              {"loser", optional_letter(a, e.loser)},
              {"matrix", to_json(edge_matrix(e))}};
}

Json to_json(const AllowedPath& path) {
  const Alphabet& a = path.start().alphabet();
  Json edges = Json::array();
  for (const auto& e : path.edges())
    edges.push_back(Json{{"kind", std::string(1, move_char(e.kind))},
                         {"winner", optional_letter(a, e.winner)},
                         {"loser", optional_letter(a, e.loser)}});
  return Json{{"start", to_json(path.start())},
              {"end", to_json(path.end())},
              {"execution_order", format_move_word(path.moves())},
              {"allowed", path.allowed()},
              {"edges", std::move(edges)}};
}

Json to_json(const RauzyDiagram& d) {
  Json vertices = Json::array();
  for (const auto& v : d.vertices()) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    const Alphabet& a = d.vertex(e.source).alphabet();
    edges.push_back(Json{{"src", e.source},
                         {"dst", e.target},
                         {"kind", std::string(1, move_char(e.kind))},
                         {"winner", optional_letter(a, e.winner)},
                         {"loser", optional_letter(a, e.loser)}});
  }
  return Json{{"augmented", d.augmented()},
              {"vertex_count", d.size()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

Json surface_json(const LabeledPermutation& p, const GluedSurface& s) {
  Json sides = Json::object();
  for (Letter x = 0; x < s.letters; ++x)
    sides[p.alphabet().name(x)] = Json{{"closed", bool(s.side_closed[x])},
                                       {"homology_nonzero", bool(s.side_homology_nonzero[x])}};
  return Json{{"vertex_count", s.vertex_count},
              {"euler_char", s.euler_char},
              {"genus", s.genus},
              {"irreducible", s.from_irreducible},
              {"sides", std::move(sides)}};
}

Json to_json(const PACertificate& c) {
  const Alphabet& a = c.path.start().alphabet();
  Json j;
  j["verdict"] = c.pseudo_anosov() ? "pseudo-Anosov" : "inconclusive";
  j["path"] = to_json(c.path);
  j["matrix"] = to_json(c.matrix);
  j["primitive"] = c.primitive;
  j["positive_power"] = c.positive_power ? Json(*c.positive_power) : Json(nullptr);
  j["lambda"] = c.lambda ? to_json(*c.lambda) : Json(nullptr);
  j["teich_length"] =
      c.teich_length ? Json{{"low", c.teich_length->first}, {"high", c.teich_length->second}} : Json(nullptr);
  if (c.lc_upper) {
    const auto& o = c.lc_upper->orbit;
    Json map = Json::object();
    for (Letter x = 0; x < o.orbit_map.size(); ++x) map[a.name(x)] = a.name(o.orbit_map[x]);
    j["lc_upper"] = Json{{"value", to_json(c.lc_upper->value)},
                         {"distance_step", kDistanceStep},
                         {"orbit",
                          {{"winners", letters(a, o.winners)},
                           {"orbit_map", std::move(map)},
                           {"best_start", a.name(o.best_start)},
                           {"steps", o.steps},
                           {"trajectory", letters(a, o.trajectory)},
                           {"skipped_sides", letters(a, o.skipped_sides)},
                           {"cycling_starts", letters(a, o.cycling_starts)}}}};
  } else {
    j["lc_upper"] = nullptr;
  }
  j["lc_lower"] = c.lc_lower ? Json{{"value", to_json(c.lc_lower->value)},
                                    {"exponent", c.lc_lower->exponent},
                                    {"mode", lower_mode_name(c.lc_lower->mode)}}
                             : Json(nullptr);
  j["genus"] = c.genus;
  j["assumptions"] = c.assumptions;
  j["warnings"] = c.warnings;
  return j;
}

Json to_json(const std::vector<CheckItem>& items) {
  Json out = Json::array();
  for (const auto& c : items) out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json to_json(const FgReport& r) {
  auto lower = [](const std::optional<LowerBound>& b) {
    return b ? Json{{"value", to_json(b->value)}, {"exponent", b->exponent}} : Json(nullptr);
  };
  return Json{{"g", r.g},
              {"path", to_json(r.path)},
              {"matrix", to_json(r.matrix)},
              {"block_form_matches", r.block_form_matches},
              {"intermediate_forms_match", r.intermediate_forms_match},
              {"certificate", to_json(r.certificate)},
              {"thm11_upper", to_json(r.thm11_upper)},
              {"thm11_lower", to_json(r.thm11_lower)},
              {"lc_lower_paper_cap", lower(r.lower_paper)},
              {"lc_lower_exact", lower(r.lower_exact)},
              {"checks", to_json(r.checks)},
              {"ok", r.ok()}};
}

Json to_json(const CentralReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"family", s.family},
                           {"start", s.path.start().display()},
                           {"execution_order", format_move_word(s.path.moves())},
                           {"primitive", s.primitive},
                           {"positive_diagonal", s.positive_diagonal},
                           {"exponent", s.exponent ? Json(*s.exponent) : Json(nullptr)}});
  return Json{{"n", r.n},
              {"genus", r.genus},
              {"component_size", r.component_size},
              {"bound", to_json(r.bound)},
              {"samples", std::move(samples)},
              {"drawn", {{"closed_loops", r.drawn[1]}, {"flip_paths", r.drawn[2]}}},
              {"checks", to_json(r.checks)},
              {"warnings", r.warnings},
              {"ok", r.ok()}};
}

Json to_json(const StretchReport& r) {
  return Json{{"g", r.g},
              {"n", r.n.get_str()},
              {"min_row_sum_power", r.min_row_sum_power.get_str()},
              {"rho", to_json(r.rho)},
              {"rho_low_pow_g", to_json(r.low_pow_g)},
              {"teich_length", {{"low", r.teich_length.first}, {"high", r.teich_length.second}}},
              {"checks", to_json(r.checks)},
              {"ok", r.ok()}};
}

Json to_json(const RotationReport& r) {
  return Json{{"g", r.g},
              {"orbit", r.orbit},
              {"steps", r.steps},
              {"distance", r.distance},
              {"value", to_json(r.value)},
              {"assumptions", r.assumptions}};
}

Json to_json(const HgReport& r) {
  return Json{{"g", r.g},
              {"n", r.n.get_str()},
              {"rho", to_json(r.rho)},
              {"teich_length", {{"low", r.teich_length.first}, {"high", r.teich_length.second}}},
              {"lc_upper", to_json(r.lc_upper)},
              {"checks", to_json(r.checks)},
              {"ok", r.ok()}};
}

LabeledPermutation permutation_from_json(const Json& j) {
  try {
    auto alphabet = std::make_shared<const Alphabet>(j.at("alphabet").get<std::vector<std::string>>());
    std::vector<Letter> top, bottom;
    for (const auto& s : j.at("top")) top.push_back(alphabet->index_of(s.get<std::string>()));
    for (const auto& s : j.at("bottom")) bottom.push_back(alphabet->index_of(s.get<std::string>()));
    return LabeledPermutation(alphabet, std::move(top), std::move(bottom));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("permutation JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  try {
    const Integer den(j.at("den").get<std::string>(), 10);
    if (den == 0) fail(ErrorKind::Parse, "rational JSON: zero denominator");
    Rational q(Integer(j.at("num").get<std::string>(), 10), den);
    q.canonicalize();
    return q;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("rational JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "rational JSON: malformed integer");
  }
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "matrix JSON must be an array of rows");
  IntMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) fail(ErrorKind::Parse, "matrix JSON is not square");
    for (std::size_t k = 0; k < j.size(); ++k) {
      try {
        m(i, k) = Integer(j[i][k].get<std::string>(), 10);
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "matrix entry is not a decimal string");
      }
    }
  }
  return m;
}

void validate_certificate_json(const Json& j) {
  auto need = [&j](const char* key, auto pred, const char* what) {
    if (!j.contains(key) || !pred(j.at(key))) fail(ErrorKind::Parse, std::string("certificate field '") + key + "' missing or not " + what);
  };
  auto is_string = [](const Json& v) { return v.is_string(); };
  auto is_bool = [](const Json& v) { return v.is_boolean(); };
  auto is_object = [](const Json& v) { return v.is_object(); };
  auto is_array = [](const Json& v) { return v.is_array(); };
  auto is_int = [](const Json& v) { return v.is_number_integer(); };
  auto object_or_null = [](const Json& v) { return v.is_object() || v.is_null(); };
  auto int_or_null = [](const Json& v) { return v.is_number_integer() || v.is_null(); };
  need("verdict", is_string, "a string");
  need("path", is_object, "an object");
  need("matrix", is_array, "an array");
  need("primitive", is_bool, "a boolean");
  need("positive_power", int_or_null, "an integer or null");
  need("lambda", object_or_null, "an object or null");
  need("teich_length", object_or_null, "an object or null");
  need("lc_upper", object_or_null, "an object or null");
  need("lc_lower", object_or_null, "an object or null");
  need("genus", is_int, "an integer");
  need("assumptions", is_array, "an array");
  need("warnings", is_array, "an array");
  permutation_from_json(j.at("path").at("start"));
  permutation_from_json(j.at("path").at("end"));
  matrix_from_json(j.at("matrix"));
  if (!j.at("lambda").is_null()) {
    rational_from_json(j.at("lambda").at("low"));
    rational_from_json(j.at("lambda").at("high"));
  }
  if (!j.at("lc_upper").is_null()) rational_from_json(j.at("lc_upper").at("value"));
  if (!j.at("lc_lower").is_null()) rational_from_json(j.at("lc_lower").at("value"));
  const bool primitive = j.at("primitive").get<bool>();
  if ((j.at("verdict") == "pseudo-Anosov") != primitive)
    fail(ErrorKind::Parse, "certificate verdict disagrees with primitivity");
}

}  // namespace rauzy
