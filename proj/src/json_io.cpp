#include "confsect/json_io.hpp"

namespace confsect::io {

json word_to_json(const braid::BraidWord& w) { return json(w.letters); }

braid::BraidWord word_from_json(int strands, const json& j) {
  if (!j.is_array()) throw ParseError("braid word: expected an array of signed integers");
  std::vector<int> letters;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("braid word: non-integer letter");
    letters.push_back(v.get<int>());
  }
  try {
    return braid::BraidWord(strands, std::move(letters));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json normal_form_to_json(const braid::GarsideNormalForm& nf) {
  json factors = json::array();
  for (const braid::Permutation& f : nf.factors) factors.push_back(f.one_based_images());
  return json{{"delta_power", nf.delta_power}, {"factors", factors}};
}

json point_to_json(const mobius::ProjectivePoint& p) {
  if (p.is_infinity()) return json("inf");
  const mobius::Complex z = p.value();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

mobius::ProjectivePoint point_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return mobius::ProjectivePoint::infinity();
    throw ParseError("point: the only string form is \"inf\"");
  }
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("point: expected {\"re\": ..., \"im\": ...} or \"inf\"");
  return mobius::ProjectivePoint::from_complex(
      {j["re"].get<double>(), j["im"].get<double>()});
}

json configuration_to_json(const mobius::Configuration& c) {
  json pts = json::array();
  for (const auto& p : c.points()) pts.push_back(point_to_json(p));
  return json{{"n", c.n()}, {"points", pts}};
}

mobius::Configuration configuration_from_json(const json& j, double tol_sep) {
  if (!j.is_object() || !j.contains("points"))
    throw ParseError("configuration: expected {\"n\": ..., \"points\": [...]}");
  std::vector<mobius::ProjectivePoint> pts;
  for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
  if (j.contains("n") && j["n"].get<int>() != static_cast<int>(pts.size()))
    throw ParseError("configuration: n does not match the number of points");
  return mobius::Configuration(std::move(pts), tol_sep);
}

json section_output_to_json(const mobius::SectionOutput& out) {
  json pts = json::array();
  for (const auto& p : out.new_points) pts.push_back(point_to_json(p));
  return json{{"m", out.m}, {"method", out.method}, {"params", out.params},
              {"new_points", pts}};
}

json torsion_spec_to_json(const elliptic::TorsionSpec& spec) {
  return json{{"k", spec.k}, {"primitive", spec.primitive_only}};
}

elliptic::TorsionSpec torsion_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k"))
    throw ParseError("torsion spec: expected {\"k\": int, \"primitive\": bool}");
  elliptic::TorsionSpec spec;
  spec.k = j["k"].get<int>();
  spec.primitive_only = j.value("primitive", false);
  return spec;
}

monodromy::ConfigPath path_from_json(const json& j, const mobius::Configuration& basepoint) {
  if (!j.is_object() || !j.contains("type")) throw ParseError("path: missing \"type\"");
  const std::string type = j["type"].get<std::string>();
  if (type == "generator") {
    if (!j.contains("i")) throw ParseError("path: generator path needs \"i\"");
    return monodromy::generator_loop(basepoint.n(), j["i"].get<int>(), basepoint);
  }
  if (type == "samples") {
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
      throw ParseError("path: samples path needs a nonempty \"points\" array");
    std::vector<std::vector<mobius::ProjectivePoint>> samples;
    for (const auto& cfg : j["points"]) {
      std::vector<mobius::ProjectivePoint> pts;
      for (const auto& p : cfg) pts.push_back(point_from_json(p));
      if (!samples.empty() && samples.back().size() != pts.size())
        throw ParseError("path: samples must all have the same point count");
      samples.push_back(std::move(pts));
    }
    monodromy::ConfigPath path;
    path.n = static_cast<int>(samples.front().size());
    // Closed iff the endpoint tuples coincide as sets.
    const auto& first = samples.front();
    const auto& last = samples.back();
    path.closed = true;
    for (const auto& p : first) {
      bool found = false;
      for (const auto& q : last) found = found || mobius::chordal_distance(p, q) < 1e-12;
      path.closed = path.closed && found;
    }
    path.at = [samples](double t) {
      // Piecewise-linear in the affine chart between samples.
      const double x = t * (samples.size() - 1);
      const size_t seg = std::min(samples.size() - 2, static_cast<size_t>(std::floor(x)));
      const double u = x - seg;
      std::vector<mobius::ProjectivePoint> out;
      for (size_t i = 0; i < samples[seg].size(); ++i) {
        const mobius::Complex a = samples[seg][i].value();
        const mobius::Complex b = samples[seg + 1][i].value();
        out.push_back(mobius::ProjectivePoint::from_complex(a + u * (b - a)));
      }
      return out;
    };
    return path;
  }
  throw ParseError("path: unknown type '" + type + "'");
}

json tracking_result_to_json(const monodromy::TrackingResult& r) {
  return json{{"permutation", r.induced.one_based_images()},
              {"max_gap", r.max_matching_gap},
              {"min_interpoint_gap", r.min_interpoint_gap},
              {"closure_mismatch", r.closure_mismatch},
              {"steps", r.steps}};
}

}  // namespace confsect::io
