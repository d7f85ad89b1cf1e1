// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.
//
// Criterion 8 is expected to fail at exactly one parameter pair (B=1, q=1),
// where the p=0 polynomial factors as (t^2-1)(t^2+1)^4 and genuinely has
// the integer roots +-1; the check reports that finding honestly instead of
// special-casing it away. See README.

#include <array>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include "cuboid/emit.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/sieve.hpp"

using namespace cuboid;

namespace {

int failures = 0;

struct Criterion {
  int id;
  const char* label;
  bool ok = true;
  std::string detail;
  double seconds = 0;
};

void report(const Criterion& c) {
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.label << " ["
            << c.seconds << " s]";
  if (!c.detail.empty()) std::cout << " -- " << c.detail;
  std::cout << "\n" << std::flush;
  if (!c.ok) ++failures;
}

template <typename F>
void run(int id, const char* label, F body) {
  Criterion c{id, label};
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail += std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(c);
}

QuadRat qr(long a, long b) { return QuadRat(BigRat(a), BigRat(b)); }

// grid of criteria 5 and 7: p in {-2,-1,1,2}, B in {1,5,9},
// q in {3600 ceil(|p|^(1/3)), +1}
std::vector<std::array<long, 3>> grid() {
  std::vector<std::array<long, 3>> pts;
  for (long p : {-2L, -1L, 1L, 2L}) {
    long ceil_cbrt = std::labs(p) == 1 ? 1 : 2;
    for (long q : {3600L * ceil_cbrt, 3600L * ceil_cbrt + 1}) {
      for (long B : {1L, 5L, 9L}) pts.push_back({p, q, B});
    }
  }
  return pts;
}

}  // namespace

int main() {
  std::vector<RemainderEquation> eqs;

  run(1, "transform size: 108 monomials with symbolic B", [](Criterion& c) {
    std::size_t n = qtilde_symbolic().body.monomial_count();
    c.ok = n == 108;
    c.detail = "monomials = " + std::to_string(n);
  });

  run(2, "derivation counts and leading forms; re-substitution residual", [&](Criterion& c) {
    const std::size_t expect[5] = {1612, 1612, 490, 1031, 1031};
    std::ostringstream os;
    for (Family f : kAllFamilies) {
      RemainderEquation eq = derive_remainder_equation(f);  // validates the leading form
      std::size_t n = eq.tail_component_count();
      os << family_name(f) << "=" << n << " ";
      if (n != expect[static_cast<int>(f)]) {
        c.ok = false;
        os << "(expected " << expect[static_cast<int>(f)] << ") ";
      }
      if (!remainder_residual_is_zero(eq, 0xace + static_cast<unsigned>(f), 5)) {
        c.ok = false;
        os << "(residual nonzero!) ";
      }
      eqs.push_back(std::move(eq));
    }
    c.detail = os.str();
  });

  run(3, "Newton polygon: nodes, exponents, edge polynomials, retained roots",
      [](Criterion& c) {
        NewtonPolygon np = newton_polygon(qtilde_symbolic());
        auto boundary = np.upper_boundary_nodes();
        const std::vector<std::tuple<int, int, long, int>> nodes{
            {0, 40, -1, 10}, {2, 36, -6, 10}, {4, 32, -1, 10},
            {6, 24, 1, 8},   {8, 12, -2, 4},  {10, 0, 1, 0}};
        c.ok = boundary.size() == nodes.size() && np.all_nodes_under_hull();
        for (std::size_t i = 0; c.ok && i < nodes.size(); ++i) {
          auto [m, r, coeff, bpow] = nodes[i];
          const NewtonNode& n = np.nodes[boundary[i]];
          c.ok = n.m == m && n.r == r &&
                 n.coeff.with_universe({"p", "B"}) ==
                     MultiPoly::monomial({"p", "B"}, {0, bpow}, QuadRat(coeff));
        }
        if (!c.ok) { c.detail = "boundary nodes mismatch"; return; }
        if (candidate_exponents(np) != std::vector<BigRat>{BigRat(2), BigRat(4), BigRat(6)}) {
          c.ok = false;
          c.detail = "exponents mismatch";
          return;
        }
        const std::vector<std::string> u{"B", "C"};
        auto mono = [&](long q, int eb, int ec) {
          return MultiPoly::monomial(u, {eb, ec}, QuadRat(q));
        };
        EdgeSolution top = solve_edge(edge_polynomial(np, 0));
        EdgeSolution mid = solve_edge(edge_polynomial(np, 1));
        EdgeSolution low = solve_edge(edge_polynomial(np, 2));
        c.ok = top.edge_poly == mono(1, 0, 4) + mono(6, 0, 2) + mono(1, 0, 0) &&
               mid.edge_poly == mono(1, 0, 2) + mono(-1, 2, 0) &&
               low.edge_poly == mono(1, 0, 4) + mono(-2, 4, 2) + mono(1, 8, 0);
        if (!c.ok) { c.detail = "edge polynomial mismatch"; return; }
        bool roots_ok = top.roots.size() == 2 && mid.roots.size() == 1 && low.roots.size() == 1;
        if (roots_ok) {
          bool small = false, big = false;
          for (const auto& r : top.roots) {
            small = small || (r.scale == qr(-1, 1) && r.axis == Axis::imaginary);
            big = big || (r.scale == qr(1, 1) && r.axis == Axis::imaginary);
          }
          roots_ok = small && big && mid.roots[0].scale == QuadRat(1) &&
                     mid.roots[0].b_power == 1 && mid.roots[0].multiplicity == 1 &&
                     low.roots[0].scale == QuadRat(1) && low.roots[0].b_power == 2 &&
                     low.roots[0].multiplicity == 2;
        }
        c.ok = roots_ok;
        if (!c.ok) c.detail = "retained roots mismatch";
      });

  run(4, "majorant and sign-change certification for every family, B, sign",
      [&](Criterion& c) {
        if (eqs.size() != 5) {
          eqs.clear();
          for (Family f : kAllFamilies) eqs.push_back(derive_remainder_equation(f));
        }
        std::ostringstream os;
        QuadRat worst[5];
        for (Family f : kAllFamilies) {
          const auto& eq = eqs[static_cast<std::size_t>(f)];
          for (int B = 1; B <= 9; ++B) {
            for (int sign : {-1, +1}) {
              auto maj = certify_majorant(eq, B, sign);
              if (maj.verdict == Verdict::failed) {
                c.ok = false;
                os << family_name(f) << " B=" << B << " majorant failed; ";
              }
              if (maj.witnessed_constant > worst[static_cast<int>(f)])
                worst[static_cast<int>(f)] = maj.witnessed_constant;
              auto sc = certify_sign_change(eq, B, BigInt(sign), BigInt(3600));
              if (sc.verdict == Verdict::failed) {
                c.ok = false;
                os << family_name(f) << " B=" << B << " sign-change failed; ";
              }
            }
          }
        }
        os << "witnessed max M vs printed constants: ";
        const char* printed[5] = {"72", "72", "26", "512", "2"};
        for (Family f : kAllFamilies)
          os << family_name(f) << " " << worst[static_cast<int>(f)].to_decimal(3) << "/"
             << printed[static_cast<int>(f)] << " ";
        c.detail = os.str();
      });

  run(5, "oracle concordance: 3+2 roots, each inside its enclosure, all disjoint",
      [](Criterion& c) {
        std::ostringstream os;
        for (const auto& [p, q, B] : grid()) {
          BigInt pt(p), qt(q);
          int Bi = static_cast<int>(B);
          auto t5 = enclosure_bounds(Family::T5, pt, qt, Bi);
          // refine until each interval is narrower than the tightest site
          BigRat width = BigRat(1, 8);
          {
            QuadRat w = t5.width();
            // rational lower bound on the tightest width
            BigRat wr = w.rational_part() + w.sqrt2_part() * BigRat(3, 2);
            while (width > wr) width *= BigRat(1, 65536);
          }
          AxisSplit split = axis_split_roots(Bi, pt, qt, width);
          if (split.real_positive.size() != 3 || split.imaginary_positive.size() != 2) {
            c.ok = false;
            os << "(" << p << "," << q << "," << B << "): counts "
               << split.real_positive.size() << "+" << split.imaginary_positive.size() << "; ";
            continue;
          }
          auto inside = [](const IsolatedRoot& r, const RootEnclosure& e) {
            return e.lower < QuadRat(r.lo) && QuadRat(r.hi) < e.upper;
          };
          // ascending real roots are T3, T2, T1; ascending imaginary are T5, T4
          bool ok = inside(split.real_positive[0], enclosure_bounds(Family::T3, pt, qt, Bi)) &&
                    inside(split.real_positive[1], enclosure_bounds(Family::T2, pt, qt, Bi)) &&
                    inside(split.real_positive[2], enclosure_bounds(Family::T1, pt, qt, Bi)) &&
                    inside(split.imaginary_positive[0], t5) &&
                    inside(split.imaginary_positive[1],
                           enclosure_bounds(Family::T4, pt, qt, Bi));
          bool disjoint = disjointness(pt, qt, Bi).certified;
          if (!ok || !disjoint) {
            c.ok = false;
            os << "(" << p << "," << q << "," << B << "): containment=" << ok
               << " disjoint=" << disjoint << "; ";
          }
        }
        c.detail = os.str().empty() ? "24 grid points" : os.str();
      });

  run(6, "printed worst-case gap magnitudes within 1%", [](Criterion& c) {
    std::ostringstream os;
    for (const auto& g : reproduce_gap_magnitudes()) {
      if (!g.within_one_percent) c.ok = false;
      os << g.tag << (g.within_one_percent ? " ok" : " FAIL") << " (exact "
         << g.exact.to_decimal(0) << ", printed " << g.printed.to_string() << "); ";
    }
    c.detail = os.str();
  });

  run(7, "integer exclusion on the grid; B=5 candidate formulas", [](Criterion& c) {
    std::ostringstream os;
    for (const auto& [p, q, B] : grid()) {
      BigInt pt(p), qt(q);
      int Bi = static_cast<int>(B);
      for (Family f : {Family::T1, Family::T2, Family::T3}) {
        auto v = has_integer_point(enclosure_bounds(f, pt, qt, Bi));
        // on this grid 2q > |p| always, so every verdict is exclusion
        if (v.outcome != ExclusionOutcome::no_integer_points) {
          c.ok = false;
          os << "(" << p << "," << q << "," << B << "," << family_name(f)
             << "): unexpected " << static_cast<int>(v.outcome) << "; ";
        }
      }
    }
    // constructed B=5 exceptional candidates (2q <= |p|), both signs
    const BigInt qt(306000), pt(612001);
    auto v1 = has_integer_point(enclosure_bounds(Family::T1, pt, qt, 5));
    auto v2 = has_integer_point(enclosure_bounds(Family::T2, -pt, qt, 5));
    BigInt q2 = qt * qt, q3 = q2 * qt, q4 = q3 * qt, q6 = q4 * q2;
    BigInt f1 = 25 * q6 + 10 * q4 - 10 * pt * q3 - 2 * q2 - 2 * pt * qt + pt * pt + 1;
    BigInt f2 = 25 * q6 - 10 * q4 + 10 * pt * q3 - 2 * q2 - 2 * pt * qt + pt * pt - 1;
    bool cand_ok = v1.outcome == ExclusionOutcome::exceptional_candidate &&
                   v2.outcome == ExclusionOutcome::exceptional_candidate &&
                   v1.candidate == f1 && v2.candidate == f2;
    auto t1 = test_exceptional_candidate(pt, qt, v1.candidate);
    auto t2 = test_exceptional_candidate(-pt, qt, v2.candidate);
    if (!cand_ok || t1.is_root || t2.is_root) {
      c.ok = false;
      os << "B=5 candidate handling broken; ";
    } else {
      os << "B=5 candidates verified non-root (values " << t1.value.sign() << "/"
         << t2.value.sign() << " sign)";
    }
    c.detail = os.str();
  });

  run(8, "exceptional case: no integer roots for B in 1..9, q in {1,2,3,10}",
      [](Criterion& c) {
        std::ostringstream os;
        for (int B = 1; B <= 9; ++B) {
          for (long q : {1L, 2L, 3L, 10L}) {
            auto v = exceptional_no_integer_roots(BigInt(q), B);
            if (!v.no_integer_roots) {
              c.ok = false;
              os << "B=" << B << " q=" << q << " has integer roots";
              for (const auto& r : v.integer_roots) os << " " << r.get_str();
              os << " (the polynomial factors there; genuine finding, kept red); ";
            }
          }
        }
        c.detail = os.str().empty() ? "36/36 combinations integer-free" : os.str();
      });

  run(9, "end-to-end sieve: scan B=2, q 3600..3602, deterministic across workers",
      [](Criterion& c) {
        std::ostringstream one, eight;
        ScanSummary s1 = scan_strip(2, 3600, 3602, 1, one);
        ScanSummary s8 = scan_strip(2, 3600, 3602, 8, eight);
        c.ok = s1.points == 9 && s1.certified_points == 9 && s1.cuboid_candidates == 0 &&
               one.str() == eight.str() && s8.certified_points == 9;
        c.detail = "points=" + std::to_string(s1.points) +
                   " certified=" + std::to_string(s1.certified_points) +
                   " deterministic=" + (one.str() == eight.str() ? "yes" : "NO");
      });

  run(10, "sanity identities", [](Criterion& c) {
    const MultiPoly& Q = build_qpq().body;
    bool zero_at_111 =
        Q.eval({{"t", QuadRat(1)}, {"q", QuadRat(1)}, {"p", QuadRat(1)}}).is_zero();
    bool even = true;
    for (const auto& [e, coeff] : Q.terms()) even = even && e[0] % 2 == 0;
    const MultiPoly& Qt = qtilde_symbolic().body;
    std::mt19937 rng(1729);
    std::uniform_int_distribution<long> d(-5, 5), bdist(1, 9);
    bool preserved = true;
    for (int i = 0; i < 100; ++i) {
      long t = d(rng), qv = d(rng), pv = d(rng), B = bdist(rng);
      QuadRat p_orig = QuadRat(B) * QuadRat(qv).pow(3) - QuadRat(pv);
      preserved = preserved &&
                  Q.eval({{"t", QuadRat(t)}, {"q", QuadRat(qv)}, {"p", p_orig}}) ==
                      Qt.eval({{"t", QuadRat(t)},
                               {"q", QuadRat(qv)},
                               {"p", QuadRat(pv)},
                               {"B", QuadRat(B)}});
    }
    c.ok = zero_at_111 && even && preserved;
    c.detail = std::string("Q_{1,1}(1)=0: ") + (zero_at_111 ? "yes" : "no") +
               ", even: " + (even ? "yes" : "no") +
               ", transform preserves 100 random values: " + (preserved ? "yes" : "no");
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) +
                " criterion(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}
