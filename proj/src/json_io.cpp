#include "annulus/json_io.hpp"

#include <fstream>

namespace annulus {

namespace {

Json cx_to_json(Cx v) { return Json::array({v.real(), v.imag()}); }

Cx cx_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("expected [re, im] pair");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

Json cx_vector_to_json(const std::vector<Cx>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(cx_to_json(c));
  return a;
}

std::vector<Cx> cx_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of [re, im] pairs");
  std::vector<Cx> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(cx_from_json(e));
  return v;
}

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
    throw InvalidInput(std::string("expected object of kind \"") + kind +
                       "\"");
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name))
    throw InvalidInput(std::string("missing field \"") + name + "\"");
  return j[name];
}

}  // namespace

std::string json_kind(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput("input JSON lacks a \"kind\" field");
  return j["kind"].get<std::string>();
}

Json to_json(const CircleHomeo& h) {
  return Json{{"kind", "circle_homeo"}, {"n", h.n()}, {"lift", h.lift()}};
}

CircleHomeo circle_homeo_from_json(const Json& j) {
  expect_kind(j, "circle_homeo");
  if (!j.contains("lift") || !j["lift"].is_array())
    throw InvalidInput("circle_homeo: missing lift array");
  std::vector<double> lift;
  for (const auto& e : j["lift"]) {
    if (!e.is_number()) throw InvalidInput("circle_homeo: lift must be numeric");
    lift.push_back(e.get<double>());
  }
  if (j.contains("n") &&
      j["n"].get<int>() != static_cast<int>(lift.size()))
    throw InvalidInput("circle_homeo: n does not match lift length");
  return CircleHomeo(std::move(lift));
}

Json to_json(const DiskMap& f) {
  return Json{{"kind", "disk_map"},
              {"m", f.order()},
              {"coeffs", cx_vector_to_json(f.a)}};
}

DiskMap disk_map_from_json(const Json& j) {
  expect_kind(j, "disk_map");
  DiskMap f;
  f.a = cx_vector_from_json(field(j, "coeffs"));
  if (j.contains("m") && j["m"].get<int>() != f.order())
    throw InvalidInput("disk_map: m does not match coefficient count");
  return f;
}

Json to_json(const ExteriorMap& g) {
  return Json{{"kind", "exterior_map"},
              {"lead", cx_to_json(g.lead)},
              {"const", cx_to_json(g.c0)},
              {"neg", cx_vector_to_json(g.b)}};
}

ExteriorMap exterior_map_from_json(const Json& j) {
  expect_kind(j, "exterior_map");
  ExteriorMap g;
  g.lead = cx_from_json(field(j, "lead"));
  g.c0 = cx_from_json(field(j, "const"));
  g.b = cx_vector_from_json(field(j, "neg"));
  validate_exterior(g);
  return g;
}

Json to_json(const JordanCurveSamples& c) {
  return Json{{"kind", "curve"}, {"points", cx_vector_to_json(c.points)}};
}

JordanCurveSamples curve_from_json(const Json& j) {
  expect_kind(j, "curve");
  return JordanCurveSamples(cx_vector_from_json(field(j, "points")));
}

Json to_json(const RiggedAnnulus& x) {
  Json flags = Json::array();
  for (const auto& f : x.flags) flags.push_back(flag_name(f));
  Json j{{"kind", "rigged_annulus"},
         {"f", to_json(x.f)},
         {"g", to_json(x.g)},
         {"tag", tag_name(x.tag)},
         {"flags", flags}};
  if (x.tag == NormalizationTag::a_normalized) j["a"] = cx_to_json(x.tag_a);
  return j;
}

RiggedAnnulus annulus_from_json(const Json& j, const RunConfig& cfg) {
  expect_kind(j, "rigged_annulus");
  RiggedAnnulus x = make_annulus(disk_map_from_json(field(j, "f")),
                                 exterior_map_from_json(field(j, "g")), cfg);
  if (j.contains("tag")) {
    const std::string t = j["tag"].get<std::string>();
    if (t == "raw")
      x.tag = NormalizationTag::raw;
    else if (t == "standard")
      x.tag = NormalizationTag::standard;
    else if (t == "a_normalized") {
      x.tag = NormalizationTag::a_normalized;
      if (j.contains("a")) x.tag_a = cx_from_json(j["a"]);
    } else
      throw InvalidInput("rigged_annulus: unknown tag \"" + t + "\"");
  }
  return x;
}

Json to_json(const TaylorSeries& s) {
  return Json{{"kind", "series"}, {"coeffs", cx_vector_to_json(s.c)}};
}

TaylorSeries series_from_json(const Json& j) {
  expect_kind(j, "series");
  return {cx_vector_from_json(field(j, "coeffs"))};
}

Json to_json(const ChartPoint& p) {
  return Json{{"kind", "chart_point"},
              {"u0", cx_vector_to_json(p.u0.c)},
              {"q0", cx_to_json(p.q0)},
              {"uinf", cx_vector_to_json(p.uinf.c)},
              {"qinf", cx_to_json(p.qinf)}};
}

ChartPoint chart_point_from_json(const Json& j) {
  expect_kind(j, "chart_point");
  ChartPoint p;
  p.u0 = {cx_vector_from_json(field(j, "u0"))};
  p.q0 = cx_from_json(field(j, "q0"));
  p.uinf = {cx_vector_from_json(field(j, "uinf"))};
  p.qinf = cx_from_json(field(j, "qinf"));
  return p;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out << j.dump(1) << "\n";
}

}  // namespace annulus
