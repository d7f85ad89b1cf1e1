#include "cuboid/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cuboid/emit.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/sieve.hpp"

namespace cuboid {

namespace {

/// "1e-6", "0.25", "3/8" and plain integers, parsed exactly.
BigRat parse_rat_flag(const std::string& s) {
  if (s.find('/') != std::string::npos) return BigRat::parse(s);
  std::string mantissa = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    exp10 = std::stol(s.substr(epos + 1));
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      seen_dot = true;
      continue;
    }
    digits.push_back(ch);
    if (seen_dot && ch >= '0' && ch <= '9') ++frac_digits;
  }
  BigRat v{BigInt(digits)};
  long net = exp10 - frac_digits;
  return v * BigRat(10).pow(net);
}

std::ostream& open_sink(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

Json enclosure_json(Family f, const BigInt& pt, const BigInt& qt, int B, unsigned precision) {
  Json rec{{"family", family_name(f)}};
  if (!applicability(f, pt, qt, B)) {
    rec["applicable"] = false;
    return rec;
  }
  auto enc = enclosure_bounds(f, pt, qt, B);
  rec["applicable"] = true;
  rec["axis"] = enc.axis == Axis::real ? "real" : "imaginary";
  rec["lower"] = quadrat_json(enc.lower);
  rec["upper"] = quadrat_json(enc.upper);
  rec["lower_decimal"] = enc.lower.to_decimal(precision);
  rec["upper_decimal"] = enc.upper.to_decimal(precision);
  rec["width"] = quadrat_json(enc.width());
  return rec;
}

int run_poly(const std::string& kind, int B, const std::string& out_path,
             const std::string& format, std::ostream& out) {
  CharPoly cp = [&] {
    if (kind == "original") return build_qpq();
    if (kind == "transformed") return B > 0 ? build_qtilde(B) : qtilde_symbolic();
    if (B > 0) {
      MultiPoly body = build_exceptional().body.substitute("B", MultiPoly::constant(QuadRat(B)));
      return CharPoly{std::move(body), CharKind::exceptional};
    }
    return build_exceptional();
  }();
  std::string text = cp.body.to_canonical_string();
  if (format == "text") {
    std::ofstream file;
    open_sink(out_path, file, out) << text;
    return 0;
  }
  Json doc{{"kind", kind},
           {"variables", cp.body.variables()},
           {"monomials", cp.body.monomial_count()},
           {"sha256", sha256_hex(text)}};
  std::ofstream file;
  open_sink(out_path, file, out) << doc.dump(2) << "\n";
  return 0;
}

int run_derive(const std::string& family_arg, const std::string& out_path,
               const std::string& ancillary_path, std::ostream& out) {
  std::vector<Family> families;
  if (family_arg == "all") families.assign(kAllFamilies.begin(), kAllFamilies.end());
  else families.push_back(family_from_name(family_arg));

  Json arr = Json::array();
  std::vector<RemainderEquation> eqs;
  for (Family f : families) {
    RemainderEquation eq = derive_remainder_equation(f);
    arr.push_back(Json{{"family", family_name(f)},
                       {"lhs_coeff", eq.lhs_coeff.to_pretty_string()},
                       {"center", eq.center.to_pretty_string()},
                       {"tail_monomials", eq.tail_component_count()},
                       {"tail_sha256", sha256_hex(component_split_serialization(eq.tail))}});
    eqs.push_back(std::move(eq));
  }
  if (!ancillary_path.empty()) {
    std::ofstream anc(ancillary_path);
    if (!anc) throw CLI::ValidationError("--ancillary", "cannot open " + ancillary_path);
    export_ancillary(eqs, anc);
  }
  std::ofstream file;
  open_sink(out_path, file, out) << arr.dump(2) << "\n";
  return 0;
}

int run_newton(const std::string& svg_path, const std::string& out_path, std::ostream& out) {
  NewtonPolygon np = newton_polygon(qtilde_symbolic());
  std::vector<EdgeSolution> edges;
  for (std::size_t i = 0; i < np.upper_segments.size(); ++i)
    edges.push_back(solve_edge(edge_polynomial(np, i)));
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw CLI::ValidationError("--svg", "cannot open " + svg_path);
    newton_svg(np, svg);
  }
  std::ofstream file;
  open_sink(out_path, file, out) << newton_json(np, edges).dump(2) << "\n";
  return 0;
}

int run_enclose(long pt, long qt, int B, unsigned precision, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  Json arr = Json::array();
  for (Family f : kAllFamilies)
    arr.push_back(enclosure_json(f, BigInt(pt), BigInt(qt), B, precision));
  std::ofstream file;
  std::ostream& sink = open_sink(out_path, file, out);
  if (format == "tsv") {
    sink << "family\tapplicable\taxis\tlower\tupper\tlower_decimal\tupper_decimal\n";
    for (const auto& rec : arr) {
      sink << rec["family"].get<std::string>() << "\t" << (rec["applicable"].get<bool>() ? 1 : 0);
      if (rec["applicable"].get<bool>())
        sink << "\t" << rec["axis"].get<std::string>() << "\t"
             << rec["lower"]["rat"].get<std::string>() << "+"
             << rec["lower"]["sqrt2"].get<std::string>() << "*sqrt2\t"
             << rec["upper"]["rat"].get<std::string>() << "+"
             << rec["upper"]["sqrt2"].get<std::string>() << "*sqrt2\t"
             << rec["lower_decimal"].get<std::string>() << "\t"
             << rec["upper_decimal"].get<std::string>();
      sink << "\n";
    }
  } else {
    sink << arr.dump(2) << "\n";
  }
  return 0;
}

int run_certify(bool all, const std::string& family_arg, int B_filter,
                const std::string& out_path, std::ostream& out) {
  std::vector<Family> families;
  if (all || family_arg.empty() || family_arg == "all")
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  else families.push_back(family_from_name(family_arg));
  std::vector<int> Bs;
  if (B_filter > 0) Bs.push_back(B_filter);
  else for (int b = 1; b <= 9; ++b) Bs.push_back(b);

  Json arr = Json::array();
  bool all_ok = true;
  for (Family f : families) {
    RemainderEquation eq = derive_remainder_equation(f);
    for (int b : Bs) {
      for (int sign : {-1, +1}) {
        auto maj = certify_majorant(eq, b, sign);
        all_ok = all_ok && maj.verdict != Verdict::failed;
        arr.push_back(certification_json(maj));
        auto sc = certify_sign_change(eq, b, BigInt(sign), BigInt(3600));
        all_ok = all_ok && sc.verdict != Verdict::failed;
        arr.push_back(certification_json(sc));
      }
    }
  }
  if (all) {
    for (int b : Bs) {
      for (int sign : {-1, +1}) {
        auto dis = disjointness(BigInt(sign), BigInt(3600), b);
        all_ok = all_ok && dis.certified;
        arr.push_back(disjointness_json(dis));
      }
    }
    for (const auto& gap : reproduce_gap_magnitudes()) {
      all_ok = all_ok && gap.within_one_percent;
      arr.push_back(gap_magnitude_json(gap));
    }
  }
  std::ofstream file;
  open_sink(out_path, file, out) << arr.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_roots(long pt, long qt, int B, const std::string& width_str, unsigned precision,
              const std::string& out_path, std::ostream& out) {
  BigRat width = parse_rat_flag(width_str);
  if (width.sign() <= 0) throw CLI::ValidationError("--width", "must be positive");
  AxisSplit split = axis_split_roots(B, BigInt(pt), BigInt(qt), width);
  auto to_json = [&](const std::vector<IsolatedRoot>& v) {
    Json arr = Json::array();
    for (const auto& r : v)
      arr.push_back(Json{{"lo", r.lo.to_string()},
                         {"hi", r.hi.to_string()},
                         {"lo_decimal", r.lo.to_decimal(precision)},
                         {"hi_decimal", r.hi.to_decimal(precision)},
                         {"variations_lo", r.variations_lo},
                         {"variations_hi", r.variations_hi}});
    return arr;
  };
  Json doc{{"p_tilde", pt},
           {"q_tilde", qt},
           {"B", B},
           {"real_positive", to_json(split.real_positive)},
           {"imaginary_positive", to_json(split.imaginary_positive)}};
  std::ofstream file;
  open_sink(out_path, file, out) << doc.dump(2) << "\n";
  return 0;
}

int run_regions(long p, long q, long max_q, const std::string& svg_path,
                const std::string& format, const std::string& out_path, std::ostream& out) {
  if (!svg_path.empty()) {
    if (max_q <= 0) throw CLI::ValidationError("--max-q", "required with --svg");
    std::ofstream svg(svg_path);
    if (!svg) throw CLI::ValidationError("--svg", "cannot open " + svg_path);
    regions_svg(max_q, svg);
  }
  if (p > 0 && q > 0) {
    RegionLabel l = classify_region(BigInt(p), BigInt(q));
    std::ofstream file;
    std::ostream& sink = open_sink(out_path, file, out);
    if (format == "tsv") {
      sink << "p\tq\tlinear\tnonlinear\tno_cuboid\tbisector_strip\tparabolic_strip_B\t"
              "parabolic_core_strip\n"
           << p << "\t" << q << "\t" << l.linear << "\t" << l.nonlinear << "\t" << l.no_cuboid
           << "\t" << l.bisector_strip << "\t" << l.parabolic_strip_B << "\t"
           << l.parabolic_core_strip << "\n";
    } else {
      sink << Json{{"p", p},
                   {"q", q},
                   {"linear", l.linear},
                   {"nonlinear", l.nonlinear},
                   {"no_cuboid", l.no_cuboid},
                   {"bisector_strip", l.bisector_strip},
                   {"parabolic_strip_B", l.parabolic_strip_B},
                   {"parabolic_core_strip", l.parabolic_core_strip}}
                  .dump(2)
           << "\n";
    }
  }
  return 0;
}

int run_scan(int B, long q_from, long q_to, int workers, const std::string& out_path,
             std::ostream& out) {
  std::ofstream file;
  std::ostream& sink = open_sink(out_path, file, out);
  ScanSummary sum = scan_strip(B, q_from, q_to, workers, sink);
  Json doc{{"B", B},
           {"q_from", q_from},
           {"q_to", q_to},
           {"points", sum.points},
           {"certified_points", sum.certified_points},
           {"exceptional_candidates", sum.exceptional_candidates},
           {"integer_roots_found", sum.integer_roots_found},
           {"cuboid_candidates", sum.cuboid_candidates}};
  out << doc.dump(2) << "\n";
  return sum.certified_points == sum.points && sum.cuboid_candidates == 0 ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction, certification and sieving for the degree-10 "
               "cuboid characteristic polynomial"};
  app.require_subcommand(1);

  // poly
  auto* poly = app.add_subcommand("poly", "emit a characteristic polynomial");
  std::string poly_kind = "transformed", poly_format = "json", poly_out;
  int poly_B = 0;
  poly->add_option("--kind", poly_kind)->check(CLI::IsMember({"original", "transformed", "exceptional"}));
  poly->add_option("--B", poly_B)->check(CLI::Range(1, 9));
  poly->add_option("--format", poly_format)->check(CLI::IsMember({"json", "text"}));
  poly->add_option("--out", poly_out);

  // derive
  auto* derive = app.add_subcommand("derive", "derive remainder equations");
  std::string derive_family = "all", derive_out, derive_anc;
  derive->add_option("--family", derive_family)
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "all"}));
  derive->add_option("--out", derive_out);
  derive->add_option("--ancillary", derive_anc);

  // newton
  auto* newton = app.add_subcommand("newton", "Newton polygon, exponents and edge roots");
  std::string newton_svg_path, newton_out;
  newton->add_option("--svg", newton_svg_path);
  newton->add_option("--out", newton_out);

  // enclose
  auto* enclose = app.add_subcommand("enclose", "exact root enclosures at a parameter point");
  long enc_pt = 0, enc_qt = 0;
  int enc_B = 0;
  unsigned enc_prec = 12;
  std::string enc_format = "json", enc_out;
  enclose->add_option("--p-tilde", enc_pt)->required();
  enclose->add_option("--q-tilde", enc_qt)->required()->check(CLI::PositiveNumber);
  enclose->add_option("--B", enc_B)->required()->check(CLI::Range(1, 9));
  enclose->add_option("--precision", enc_prec)->check(CLI::Range(1u, 1000u));
  enclose->add_option("--format", enc_format)->check(CLI::IsMember({"json", "tsv"}));
  enclose->add_option("--out", enc_out);

  // certify
  auto* certify = app.add_subcommand("certify", "majorant / sign-change / disjointness reports");
  bool cert_all = false;
  std::string cert_family, cert_out;
  int cert_B = 0;
  certify->add_flag("--all", cert_all);
  certify->add_option("--family", cert_family)
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "all"}));
  certify->add_option("--B", cert_B)->check(CLI::Range(1, 9));
  certify->add_option("--out", cert_out);

  // roots
  auto* roots = app.add_subcommand("roots", "certified isolating intervals");
  long roots_pt = 0, roots_qt = 0;
  int roots_B = 0;
  std::string roots_width = "1/1000000", roots_out;
  unsigned roots_prec = 12;
  roots->add_option("--p-tilde", roots_pt)->required();
  roots->add_option("--q-tilde", roots_qt)->required()->check(CLI::PositiveNumber);
  roots->add_option("--B", roots_B)->required()->check(CLI::Range(1, 9));
  roots->add_option("--width", roots_width);
  roots->add_option("--precision", roots_prec)->check(CLI::Range(1u, 1000u));
  roots->add_option("--out", roots_out);

  // regions
  auto* regions = app.add_subcommand("regions", "region classification and map rendering");
  long reg_p = 0, reg_q = 0, reg_maxq = 0;
  std::string reg_svg, reg_format = "json", reg_out;
  regions->add_option("--p", reg_p);
  regions->add_option("--q", reg_q);
  regions->add_option("--max-q", reg_maxq);
  regions->add_option("--svg", reg_svg);
  regions->add_option("--format", reg_format)->check(CLI::IsMember({"json", "tsv"}));
  regions->add_option("--out", reg_out);

  // scan
  auto* scan = app.add_subcommand("scan", "certify strip lattice points cuboid-free");
  int scan_B = 0, scan_workers = 1;
  long scan_from = 0, scan_to = 0;
  std::string scan_out;
  scan->add_option("--B", scan_B)->required()->check(CLI::Range(1, 9));
  scan->add_option("--q-from", scan_from)->required()->check(CLI::PositiveNumber);
  scan->add_option("--q-to", scan_to)->required()->check(CLI::PositiveNumber);
  scan->add_option("--workers", scan_workers)->check(CLI::Range(1, 64));
  scan->add_option("--out", scan_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (poly->parsed()) return run_poly(poly_kind, poly_B, poly_out, poly_format, out);
    if (derive->parsed()) return run_derive(derive_family, derive_out, derive_anc, out);
    if (newton->parsed()) return run_newton(newton_svg_path, newton_out, out);
    if (enclose->parsed())
      return run_enclose(enc_pt, enc_qt, enc_B, enc_prec, enc_format, enc_out, out);
    if (certify->parsed()) return run_certify(cert_all, cert_family, cert_B, cert_out, out);
    if (roots->parsed())
      return run_roots(roots_pt, roots_qt, roots_B, roots_width, roots_prec, roots_out, out);
    if (regions->parsed())
      return run_regions(reg_p, reg_q, reg_maxq, reg_svg, reg_format, reg_out, out);
    if (scan->parsed()) return run_scan(scan_B, scan_from, scan_to, scan_workers, scan_out, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cuboid
