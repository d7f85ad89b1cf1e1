#include "cuboid/emit.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <ostream>
#include <sstream>

#include "cuboid/sieve.hpp"

namespace cuboid {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

Json quadrat_json(const QuadRat& v) {
  return Json{{"rat", v.rational_part().to_string()}, {"sqrt2", v.sqrt2_part().to_string()}};
}

Json newton_json(const NewtonPolygon& np, const std::vector<EdgeSolution>& edges) {
  Json nodes = Json::array();
  for (const auto& n : np.nodes)
    nodes.push_back(Json{{"m", n.m}, {"r", n.r}, {"coeff", n.coeff.to_pretty_string()}});
  Json boundary = Json::array();
  for (std::size_t idx : np.upper_boundary_nodes()) {
    const auto& n = np.nodes[idx];
    boundary.push_back(Json{{"m", n.m}, {"r", n.r}, {"coeff", n.coeff.to_pretty_string()}});
  }
  Json segments = Json::array();
  for (const auto& s : np.upper_segments)
    segments.push_back(Json{{"m1", s.m1},
                            {"r1", s.r1},
                            {"m2", s.m2},
                            {"r2", s.r2},
                            {"slope", s.slope.to_string()}});
  Json edgearr = Json::array();
  for (const auto& e : edges) {
    Json roots = Json::array();
    for (const auto& r : e.roots)
      roots.push_back(Json{{"scale", quadrat_json(r.scale)},
                           {"b_power", r.b_power},
                           {"axis", r.axis == Axis::real ? "real" : "imaginary"},
                           {"multiplicity", r.multiplicity}});
    edgearr.push_back(Json{{"alpha", e.alpha.to_string()},
                           {"edge_poly", e.edge_poly.to_pretty_string()},
                           {"roots", roots}});
  }
  return Json{{"nodes", nodes},
              {"upper_boundary_nodes", boundary},
              {"segments", segments},
              {"exponents", [&] {
                 Json a = Json::array();
                 for (const auto& al : candidate_exponents(np)) a.push_back(al.to_string());
                 return a;
               }()},
              {"edges", edgearr}};
}

Json certification_json(const CertificationReport& rep) {
  return Json{{"kind", rep.kind},
              {"subject", rep.subject},
              {"B", rep.B},
              {"p_sign", rep.p_sign},
              {"witnessed_constant", quadrat_json(rep.witnessed_constant)},
              {"witnessed_decimal", rep.witnessed_constant.to_decimal(8)},
              {"paper_constant", quadrat_json(rep.paper_constant)},
              {"threshold", quadrat_json(rep.threshold)},
              {"verdict", verdict_name(rep.verdict)},
              {"detail", rep.detail}};
}

Json disjointness_json(const DisjointnessReport& rep) {
  Json gaps = Json::array();
  for (const auto& [name, gap] : rep.gaps)
    gaps.push_back(Json{{"name", name},
                        {"gap", quadrat_json(gap)},
                        {"gap_decimal", gap.to_decimal(6)}});
  return Json{{"kind", "disjointness"},
              {"p_tilde", rep.p_tilde.get_str()},
              {"q_tilde", rep.q_tilde.get_str()},
              {"B", rep.B},
              {"certified", rep.certified},
              {"gaps", gaps},
              {"failure", rep.failure}};
}

Json gap_magnitude_json(const GapMagnitude& gap) {
  return Json{{"kind", "gap_magnitude"},
              {"tag", gap.tag},
              {"exact", quadrat_json(gap.exact)},
              {"exact_decimal", gap.exact.to_decimal(4)},
              {"truncated_decimal", gap.truncated.to_decimal(4)},
              {"printed", gap.printed.to_string()},
              {"within_one_percent", gap.within_one_percent},
              {"exact_rel_err", gap.exact_rel_err},
              {"truncated_rel_err", gap.truncated_rel_err}};
}

void newton_svg(const NewtonPolygon& np, std::ostream& os) {
  const int W = 560, H = 480, margin = 40;
  int mmax = 0, rmax = 0;
  for (const auto& n : np.nodes) {
    mmax = std::max(mmax, n.m);
    rmax = std::max(rmax, n.r);
  }
  if (mmax == 0) mmax = 1;
  if (rmax == 0) rmax = 1;
  auto X = [&](double m) { return margin + m / mmax * (W - 2 * margin); };
  auto Y = [&](double r) { return H - margin - r / rmax * (H - 2 * margin); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& s : np.upper_segments)
    os << "<line x1=\"" << X(s.m1) << "\" y1=\"" << Y(s.r1) << "\" x2=\"" << X(s.m2)
       << "\" y2=\"" << Y(s.r2) << "\" stroke=\"green\" stroke-width=\"2\"/>\n";
  for (const auto& n : np.nodes)
    os << "<circle cx=\"" << X(n.m) << "\" cy=\"" << Y(n.r)
       << "\" r=\"4\" fill=\"black\"/>\n";
  for (std::size_t idx : np.upper_boundary_nodes()) {
    const auto& n = np.nodes[idx];
    os << "<circle cx=\"" << X(n.m) << "\" cy=\"" << Y(n.r)
       << "\" r=\"6\" fill=\"none\" stroke=\"green\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << X(n.m) + 8 << "\" y=\"" << Y(n.r) - 8 << "\" font-size=\"12\">(" << n.m
       << "," << n.r << ")</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
     << "\" font-size=\"12\" text-anchor=\"middle\">t degree m</text>\n"
     << "<text x=\"12\" y=\"" << H / 2 << "\" font-size=\"12\" transform=\"rotate(-90 12 "
     << H / 2 << ")\">q degree r</text>\n</svg>\n";
}

void regions_svg(long max_q, std::ostream& os) {
  // The p axis is cube-root scaled so the parabolic strips stay legible.
  const int W = 360, H = 300;
  const double pmax = 9.0 * std::pow(static_cast<double>(max_q), 3.0);
  const double cservice = std::cbrt(pmax);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * W << "\" height=\""
     << 2 * H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  for (int py = 0; py < H; ++py) {
    double frac = 1.0 - (py + 0.5) / H;
    double pval = std::pow(frac * cservice, 3.0);
    BigInt p(std::max(1.0, std::floor(pval)));
    int run_start = 0;
    std::string run_color;
    auto color_at = [&](int px) -> std::string {
      double qval = (px + 0.5) / W * static_cast<double>(max_q);
      BigInt q(std::max(1.0, std::floor(qval)));
      RegionLabel l = classify_region(p, q);
      if (l.parabolic_core_strip) return "#8b0000";
      if (l.parabolic_strip_B) return "#dc143c";
      if (l.bisector_strip) return "#708090";
      if (l.linear) return "#87ceeb";
      if (l.nonlinear) return "#ffc0cb";
      return "#c8c8c8";
    };
    run_color = color_at(0);
    for (int px = 1; px <= W; ++px) {
      std::string c = px < W ? color_at(px) : std::string();
      if (px == W || c != run_color) {
        os << "<rect x=\"" << run_start << "\" y=\"" << py << "\" width=\"" << px - run_start
           << "\" height=\"1\" fill=\"" << run_color << "\"/>\n";
        run_start = px;
        run_color = c;
      }
    }
  }
  os << "</svg>\n";
}

bool json_matches_schema(const Json& doc, const Json& schema, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) || (t == "number" && doc.is_number()) ||
              (t == "integer" && doc.is_number_integer()) ||
              (t == "boolean" && doc.is_boolean()) || (t == "null" && doc.is_null());
    if (!ok) return fail("expected type " + t + " got " + doc.dump().substr(0, 80));
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == doc;
    if (!ok) return fail("value " + doc.dump() + " not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>()))
          return fail("missing required key " + k.get<std::string>());
    const Json props = schema.value("properties", Json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        if (!json_matches_schema(it.value(), props[it.key()], why)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected key " + it.key());
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (const auto& el : doc)
      if (!json_matches_schema(el, schema["items"], why)) return false;
  }
  return true;
}

}  // namespace cuboid
