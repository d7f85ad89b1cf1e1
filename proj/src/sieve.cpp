#include "cuboid/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cuboid/oracle.hpp"

namespace cuboid {

RegionLabel classify_region(const BigInt& p, const BigInt& q) {
  if (p < 1 || q < 1) throw std::invalid_argument("classify_region: p, q must be positive");
  RegionLabel label;
  BigInt q3 = q * q * q;
  // (1.4): q/59 < p and p < 59 q
  label.linear = (q < 59 * p) && (p < 59 * q);
  // (1.5): 59 q <= p and p <= 9 q^3
  label.nonlinear = (59 * q <= p) && (p <= 9 * q3);
  label.no_cuboid = !label.linear && !label.nonlinear;
  // (1.6): q - q/97 <= p <= q + min(q/97, cbrt(q/74))
  BigInt d = p - q;
  label.bisector_strip = (97 * (q - p) <= q) && (97 * d <= q) && (74 * d * d * d <= q);
  // (9.1): 3600^3 |p - B q^3| <= q^3
  const BigInt c3 = BigInt(3600) * 3600 * 3600;
  for (int B = 1; B <= 9; ++B) {
    BigInt off = p - B * q3;
    if (c3 * abs(off) <= q3) {
      label.parabolic_strip_B = B;
      // (9.2): additionally |p - 5 q^3| < 2 q
      label.parabolic_core_strip = (B == 5) && (abs(off) < 2 * q);
      break;
    }
  }
  return label;
}

namespace {

BigInt candidate_formula(Family f, const BigInt& pt, const BigInt& qt) {
  BigInt q2 = qt * qt, q3 = q2 * qt, q4 = q3 * qt, q6 = q4 * q2;
  if (f == Family::T1)  // theorem for the p > 0 site
    return 25 * q6 + 10 * q4 - 10 * pt * q3 - 2 * q2 - 2 * pt * qt + pt * pt + 1;
  if (f == Family::T2)  // theorem for the p < 0 site
    return 25 * q6 - 10 * q4 - 10 * pt * q3 - 2 * q2 + 2 * pt * qt + pt * pt - 1;
  throw std::logic_error("candidate_formula: only T1/T2 have candidates");
}

std::string exclusion_theorem(Family f, int B, int p_sign, bool candidate_possible) {
  switch (f) {
    case Family::T1:
      if (B != 5) return "7.1";
      if (p_sign < 0) return "7.2";
      return candidate_possible ? "7.4" : "7.3";
    case Family::T2:
      if (B != 5) return "7.5";
      if (p_sign > 0) return "7.6";
      return candidate_possible ? "7.8" : "7.7";
    case Family::T3:
      return "7.9";
    default:
      throw std::logic_error("exclusion_theorem: imaginary family");
  }
}

}  // namespace

ExclusionVerdict has_integer_point(const RootEnclosure& enc) {
  if (enc.axis != Axis::real)
    throw std::invalid_argument("has_integer_point: imaginary-axis enclosure");
  if (!enc.lower.is_rational() || !enc.upper.is_rational())
    throw std::logic_error("has_integer_point: real-axis endpoints must be rational");
  const BigRat lo = enc.lower.rational_part();
  const BigRat hi = enc.upper.rational_part();
  const int p_sign = sgn(enc.p_tilde);
  // 2 q > |p| makes the B=5 candidate impossible (it falls outside the site)
  const bool candidate_possible =
      enc.B == 5 && ((enc.family == Family::T1 && p_sign > 0) ||
                     (enc.family == Family::T2 && p_sign < 0)) &&
      !(2 * enc.q_tilde > abs(enc.p_tilde));

  ExclusionVerdict v;
  v.family = enc.family;
  // largest integer strictly below the upper endpoint (the open interval
  // excludes its endpoints, which matters when 16/B or 5/B is an integer
  // and an endpoint lands exactly on the lattice)
  BigInt n = hi.is_integer() ? BigInt(hi.numerator() - 1) : hi.floor();
  if (!(BigRat(n) > lo)) {
    v.outcome = ExclusionOutcome::no_integer_points;
    v.theorem = exclusion_theorem(enc.family, enc.B, p_sign, candidate_possible);
    return v;
  }
  // An integer lies strictly inside. Under applicability the width is < 1,
  // so it is unique.
  if (enc.width() >= QuadRat(1))
    throw std::logic_error("has_integer_point: enclosure unexpectedly wide");
  if (enc.B != 5 || enc.family == Family::T3)
    throw std::logic_error("has_integer_point: interior integer outside the B=5 exception");
  if ((enc.family == Family::T1 && p_sign <= 0) || (enc.family == Family::T2 && p_sign >= 0))
    throw std::logic_error("has_integer_point: interior integer with the wrong sign of p");
  BigInt expect = candidate_formula(enc.family, enc.p_tilde, enc.q_tilde);
  if (n != expect)
    throw std::logic_error("has_integer_point: interior integer differs from the candidate formula");
  v.outcome = ExclusionOutcome::exceptional_candidate;
  v.candidate = n;
  v.theorem = enc.family == Family::T1 ? "7.4" : "7.8";
  return v;
}

CandidateTest test_exceptional_candidate(const BigInt& p_tilde, const BigInt& q_tilde,
                                         const BigInt& candidate_t) {
  CandidateTest out;
  out.value = qtilde_value(5, p_tilde, q_tilde, candidate_t);
  out.is_root = out.value.is_zero();
  return out;
}

ExceptionalVerdict exceptional_no_integer_roots(const BigInt& q_tilde, int B) {
  if (q_tilde < 1) throw std::invalid_argument("exceptional_no_integer_roots: q must be >= 1");
  auto coeffs = qtilde_dense_coeffs(B, BigInt(0), q_tilde);
  auto roots = sturm_isolate(coeffs, BigRat(1, 2));
  ExceptionalVerdict v;
  for (const auto& r : roots) {
    // width < 1: at most one integer inside the open interval
    BigInt n = r.hi.floor();
    if (BigRat(n) > r.lo && BigRat(n) < r.hi) {
      BigRat val = qtilde_value(B, BigInt(0), q_tilde, n);
      if (val.is_zero()) v.integer_roots.push_back(n);
    }
  }
  v.no_integer_roots = v.integer_roots.empty();
  return v;
}

bool cuboid_conditions(const BigInt& p, const BigInt& q, const BigInt& t) {
  if (p < 1 || q < 1 || t < 1)
    throw std::invalid_argument("cuboid_conditions: p, q, t must be positive");
  if (p == q) throw std::invalid_argument("cuboid_conditions: p = q violates the precondition");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::invalid_argument("cuboid_conditions: p, q not coprime");
  if (!(t > p * p)) return false;
  if (!(t > p * q)) return false;
  if (!(t > q * q)) return false;
  return (p * p + t) * (p * q + t) > 2 * t * t;
}

namespace {

void emit_line(std::ostream& os, int B, const BigInt& p, long q, long pt,
               const std::string& family, const std::string& verdict,
               const std::string& theorem) {
  os << "{\"p\":" << p.get_str() << ",\"q\":" << q << ",\"p_tilde\":" << pt
     << ",\"q_tilde\":" << q << ",\"B\":" << B << ",\"family\":\"" << family
     << "\",\"verdict\":\"" << verdict << "\",\"theorem\":\"" << theorem << "\"}\n";
}

struct PointResult {
  std::string text;
  bool certified = false;
  bool exceptional_candidate = false;
  bool integer_root = false;
  bool cuboid_candidate = false;
};

PointResult certify_point(int B, long q, long pt_long) {
  PointResult res;
  std::ostringstream os;
  BigInt qt(q), pt(pt_long);
  BigInt p = BigInt(B) * qt * qt * qt - pt;
  bool all_ok = true;

  auto line = [&](const std::string& family, const std::string& verdict,
                  const std::string& theorem) {
    emit_line(os, B, p, q, pt_long, family, verdict, theorem);
  };

  auto handle_integer_root = [&](const std::string& family, const BigInt& t0) {
    res.integer_root = true;
    bool cuboid = false;
    std::string verdict;
    if (p == q) {
      verdict = "integer_root_no_cuboid_pq_equal";
    } else {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qt.get_mpz_t());
      if (g != 1) {
        verdict = "integer_root_no_cuboid_not_coprime";
      } else if (t0 < 1) {
        verdict = "integer_root_no_cuboid_nonpositive";
      } else {
        cuboid = cuboid_conditions(p, qt, t0);
        verdict = cuboid ? "cuboid_candidate" : "integer_root_no_cuboid";
      }
    }
    if (cuboid) {
      res.cuboid_candidate = true;
      all_ok = false;
    }
    line(family, verdict + " t=" + t0.get_str(), "1.1");
  };

  if (pt == 0) {
    auto verdict = exceptional_no_integer_roots(qt, B);
    if (verdict.no_integer_roots) {
      line("exceptional", "no_integer_roots", "8.1");
    } else {
      for (const auto& t0 : verdict.integer_roots) handle_integer_root("exceptional", t0);
    }
  } else if (!applicability(Family::T5, pt, qt, B)) {
    // below the strongest threshold: fall back to direct oracle-based
    // integer-root testing (unreachable for genuine strip points, where
    // |p~| >= 1 forces q >= 3600)
    auto coeffs = qtilde_dense_coeffs(B, pt, qt);
    auto roots = sturm_isolate(coeffs, BigRat(1, 2));
    bool found = false;
    for (const auto& r : roots) {
      BigInt n = r.hi.floor();
      if (BigRat(n) > r.lo && BigRat(n) < r.hi && qtilde_value(B, pt, qt, n).is_zero()) {
        handle_integer_root("oracle", n);
        found = true;
      }
    }
    if (!found) line("oracle", "no_integer_roots", "direct");
  } else {
    auto dis = disjointness(pt, qt, B);
    line("all", dis.certified ? "enclosures_disjoint" : "enclosure_overlap",
         sgn(pt) > 0 ? "6.2" : "6.1");
    if (!dis.certified) all_ok = false;
    for (Family f : {Family::T1, Family::T2, Family::T3}) {
      auto enc = enclosure_bounds(f, pt, qt, B);
      auto verdict = has_integer_point(enc);
      if (verdict.outcome == ExclusionOutcome::no_integer_points) {
        line(family_name(f), "no_integer_points", verdict.theorem);
      } else {
        res.exceptional_candidate = true;
        auto test = test_exceptional_candidate(pt, qt, verdict.candidate);
        if (test.is_root) {
          handle_integer_root(family_name(f), verdict.candidate);
        } else {
          line(family_name(f),
               "exceptional_candidate_not_root t=" + verdict.candidate.get_str(), verdict.theorem);
        }
      }
    }
  }

  std::string summary_theorem = B == 5 ? "9.2" : "9.1";
  if (all_ok && !res.cuboid_candidate) {
    line("point", "cuboid_free", summary_theorem);
    res.certified = true;
  } else {
    line("point", "not_certified", summary_theorem);
  }
  res.text = os.str();
  return res;
}

}  // namespace

ScanSummary scan_strip(int B, long q_from, long q_to, int workers, std::ostream& sink) {
  if (B < 1 || B > 9) throw std::invalid_argument("scan_strip: B out of range 1..9");
  if (q_from < 1) throw std::invalid_argument("scan_strip: q_from must be >= 1");
  if (q_to > 1000000) throw std::invalid_argument("scan_strip: q_to too large (max 1e6)");
  if (workers < 1) workers = 1;

  ScanSummary total;
  if (q_to < q_from) return total;

  const std::size_t nq = static_cast<std::size_t>(q_to - q_from + 1);
  std::vector<std::string> chunks(nq);
  std::vector<ScanSummary> partial(nq);

  auto work_q = [&](std::size_t qi) {
    long q = q_from + static_cast<long>(qi);
    BigInt q3 = BigInt(q) * q * q;
    const BigInt c3 = BigInt(3600) * 3600 * 3600;
    BigInt ptmax_big = q3 / c3;  // floor
    if (B == 5) ptmax_big = std::min(ptmax_big, BigInt(2 * q - 1));
    long ptmax = static_cast<long>(ptmax_big.get_si());
    std::ostringstream os;
    ScanSummary sum;
    for (long pt = -ptmax; pt <= ptmax; ++pt) {
      PointResult r = certify_point(B, q, pt);
      os << r.text;
      ++sum.points;
      if (r.certified) ++sum.certified_points;
      if (r.exceptional_candidate) ++sum.exceptional_candidates;
      if (r.integer_root) ++sum.integer_roots_found;
      if (r.cuboid_candidate) ++sum.cuboid_candidates;
    }
    chunks[qi] = os.str();
    partial[qi] = sum;
  };

  if (workers == 1 || nq == 1) {
    for (std::size_t i = 0; i < nq; ++i) work_q(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < nq;
             i += static_cast<std::size_t>(workers))
          work_q(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < nq; ++i) {
    sink << chunks[i];
    total.points += partial[i].points;
    total.certified_points += partial[i].certified_points;
    total.exceptional_candidates += partial[i].exceptional_candidates;
    total.integer_roots_found += partial[i].integer_roots_found;
    total.cuboid_candidates += partial[i].cuboid_candidates;
  }
  return total;
}

}  // namespace cuboid
