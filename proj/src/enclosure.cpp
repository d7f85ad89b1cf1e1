#include "cuboid/enclosure.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace cuboid {

namespace {
QuadRat s2(long a, long b) { return QuadRat(BigRat(a), BigRat(b)); }
}  // namespace

const FamilySpec& family_spec(Family f) {
  static const std::array<FamilySpec, 5> specs = {
      FamilySpec{Family::T1, 20, BigRat(10), 2, Axis::real, 3, +1,
                 16, 37, QuadRat(80), 35, QuadRat(80), QuadRat(72)},
      FamilySpec{Family::T2, 20, BigRat(10), 2, Axis::real, 3, -1,
                 16, 37, QuadRat(-80), 35, QuadRat(80), QuadRat(72)},
      FamilySpec{Family::T3, 7, BigRat(32), 2, Axis::real, 3, +1,
                 2, 23, QuadRat(32), 21, QuadRat(32), QuadRat(26)},
      FamilySpec{Family::T4, 15, BigRat(80), 3, Axis::imaginary, 5, -1,
                 16, 30, s2(-320, -224), 27, QuadRat(636), QuadRat(512)},
      FamilySpec{Family::T5, 3600, BigRat(1, 2), 3, Axis::imaginary, 5, +1,
                 16, 30, s2(320, -224), 27, s2(320, -224), QuadRat(2)},
  };
  return specs[static_cast<std::size_t>(f)];
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::certified_above_paper_constant: return "certified_above_paper_constant";
    case Verdict::failed: return "failed";
  }
  return "?";
}

bool applicability(Family f, const BigInt& p_tilde, const BigInt& q_tilde, int B) {
  if (B < 1 || B > 9) throw std::invalid_argument("applicability: B out of range 1..9");
  if (q_tilde < 1) throw std::invalid_argument("applicability: q must be positive");
  if (p_tilde == 0) return false;  // exceptional case
  const FamilySpec& spec = family_spec(f);
  BigInt lhs = q_tilde * q_tilde * q_tilde;
  BigInt coeff(spec.q_threshold_coeff);
  BigInt rhs = coeff * coeff * coeff * abs(p_tilde);
  return lhs >= rhs;
}

RootEnclosure enclosure_bounds(Family f, const BigInt& p_tilde, const BigInt& q_tilde, int B) {
  if (!applicability(f, p_tilde, q_tilde, B))
    throw std::invalid_argument("enclosure_bounds: applicability violated");
  const FamilySpec& spec = family_spec(f);

  QuadRat center = truncated_expansion(f).eval({{"q", QuadRat(BigRat(q_tilde))},
                                                {"p", QuadRat(BigRat(p_tilde))},
                                                {"B", QuadRat(B)}});
  QuadRat delta = QuadRat(spec.c_box_scalar * BigRat(p_tilde) * BigRat(spec.delta_sign)) /
                  QuadRat(BigRat(BigInt(B)).pow(spec.c_box_bexp) *
                          BigRat(q_tilde).pow(spec.remainder_exp));

  RootEnclosure enc;
  enc.family = f;
  enc.axis = spec.axis;
  enc.p_tilde = p_tilde;
  enc.q_tilde = q_tilde;
  enc.B = B;
  if (delta.sign() >= 0) {
    enc.lower = center;
    enc.upper = center + delta;
  } else {
    enc.lower = center + delta;
    enc.upper = center;
  }
  return enc;
}

CertificationReport certify_majorant(const RemainderEquation& eq, int B, int p_sign) {
  if (B < 1 || B > 9) throw std::invalid_argument("certify_majorant: B out of range");
  if (p_sign != 1 && p_sign != -1) throw std::invalid_argument("certify_majorant: bad sign");
  const FamilySpec& spec = family_spec(eq.family);

  const QuadRat Bq{BigRat(B)};
  const QuadRat cbox = QuadRat(spec.c_box_scalar) / Bq.pow(spec.c_box_bexp);
  const QuadRat zbox = QuadRat(BigRat(1, spec.q_threshold_coeff));

  const auto& vars = eq.tail.variables();  // (p, B, c, z)
  int ip = -1, iB = -1, ic = -1, iz = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "p") ip = static_cast<int>(i);
    if (vars[i] == "B") iB = static_cast<int>(i);
    if (vars[i] == "c") ic = static_cast<int>(i);
    if (vars[i] == "z") iz = static_cast<int>(i);
  }

  QuadRat sum(0);
  for (const auto& [e, coeff] : eq.tail.terms()) {
    int ep = ip >= 0 ? e[static_cast<std::size_t>(ip)] : 0;
    int eB = iB >= 0 ? e[static_cast<std::size_t>(iB)] : 0;
    int ec = ic >= 0 ? e[static_cast<std::size_t>(ic)] : 0;
    int ez = iz >= 0 ? e[static_cast<std::size_t>(iz)] : 0;
    // net |p| exponent: ec + ep - ez/3 must be <= 1
    if (3 * (ec + ep) - ez > 3)
      throw std::runtime_error("certify_majorant: monomial with net |p| exponent > 1");
    sum += coeff.abs() * cbox.pow(ec) * zbox.pow(ez) * Bq.pow(eB);
  }
  QuadRat M = sum / Bq.pow(spec.center_bpow);

  CertificationReport rep;
  rep.kind = "majorant";
  rep.subject = family_name(eq.family);
  rep.B = B;
  rep.p_sign = p_sign;
  rep.witnessed_constant = M;
  rep.paper_constant = spec.paper_constant;
  rep.threshold = spec.sign_change_threshold;
  if (M >= spec.sign_change_threshold) rep.verdict = Verdict::failed;
  else if (M <= spec.paper_constant) rep.verdict = Verdict::certified;
  else rep.verdict = Verdict::certified_above_paper_constant;
  std::ostringstream os;
  os << "|tail| <= " << M.to_decimal(6) << " * |p| * B^" << spec.center_bpow
     << " (paper " << spec.paper_constant.to_decimal(2) << ", sign-change threshold "
     << spec.sign_change_threshold.to_decimal(6) << ")";
  rep.detail = os.str();
  return rep;
}

CertificationReport certify_sign_change(const RemainderEquation& eq, int B,
                                        const BigInt& p_tilde, const BigInt& q_tilde) {
  if (!applicability(eq.family, p_tilde, q_tilde, B))
    throw std::invalid_argument("certify_sign_change: applicability violated");
  const FamilySpec& spec = family_spec(eq.family);
  const int p_sign = sgn(p_tilde);

  CertificationReport maj = certify_majorant(eq, B, p_sign);
  if (maj.verdict == Verdict::failed) {
    maj.kind = "sign_change";
    maj.detail = "majorant not certified: " + maj.detail;
    return maj;
  }
  const QuadRat M = maj.witnessed_constant;

  const QuadRat Bq{BigRat(B)};
  const BigInt abs_pt = abs(p_tilde);
  const QuadRat absp{BigRat(abs_pt)};
  // c-interval: one endpoint 0, the other K with the family's side
  QuadRat K = QuadRat(spec.c_box_scalar) * absp / Bq.pow(spec.c_box_bexp);
  int side = spec.delta_sign * p_sign;  // +1: (0, K); -1: (-K, 0)
  QuadRat c_lo = side > 0 ? QuadRat(0) : -K;
  QuadRat c_hi = side > 0 ? K : QuadRat(0);

  QuadRat lhs_scale = QuadRat(spec.lhs_scalar) * Bq.pow(spec.lhs_bpow);
  QuadRat lhs_lo = lhs_scale * c_lo, lhs_hi = lhs_scale * c_hi;

  QuadRat center = spec.center_coeff * QuadRat(BigRat(p_tilde)) * Bq.pow(spec.center_bpow);
  QuadRat delta = M * absp * Bq.pow(spec.center_bpow);
  QuadRat rhs_lo = center - delta, rhs_hi = center + delta;

  bool ok = lhs_lo < rhs_lo && rhs_hi < lhs_hi;

  CertificationReport rep;
  rep.kind = "sign_change";
  rep.subject = family_name(eq.family);
  rep.B = B;
  rep.p_sign = p_sign;
  rep.witnessed_constant = M;
  rep.paper_constant = spec.paper_constant;
  rep.threshold = spec.sign_change_threshold;
  rep.verdict = ok ? (maj.verdict == Verdict::certified ? Verdict::certified
                                                        : Verdict::certified_above_paper_constant)
                   : Verdict::failed;
  std::ostringstream os;
  os << "lhs range (" << lhs_lo.to_decimal(4) << ", " << lhs_hi.to_decimal(4)
     << ") must contain rhs range [" << rhs_lo.to_decimal(4) << ", " << rhs_hi.to_decimal(4)
     << "]: lhs_lo<rhs_lo=" << (lhs_lo < rhs_lo ? "yes" : "no")
     << ", rhs_hi<lhs_hi=" << (rhs_hi < lhs_hi ? "yes" : "no");
  rep.detail = os.str();
  return rep;
}

DisjointnessReport disjointness(const BigInt& p_tilde, const BigInt& q_tilde, int B) {
  for (Family f : kAllFamilies)
    if (!applicability(f, p_tilde, q_tilde, B))
      throw std::invalid_argument("disjointness: applicability violated for " +
                                  std::string(family_name(f)));
  auto e1 = enclosure_bounds(Family::T1, p_tilde, q_tilde, B);
  auto e2 = enclosure_bounds(Family::T2, p_tilde, q_tilde, B);
  auto e3 = enclosure_bounds(Family::T3, p_tilde, q_tilde, B);
  auto e4 = enclosure_bounds(Family::T4, p_tilde, q_tilde, B);
  auto e5 = enclosure_bounds(Family::T5, p_tilde, q_tilde, B);

  DisjointnessReport rep;
  rep.p_tilde = p_tilde;
  rep.q_tilde = q_tilde;
  rep.B = B;
  rep.gaps.emplace_back("t3_lower", e3.lower);
  rep.gaps.emplace_back("t2_minus_t3", e2.lower - e3.upper);
  rep.gaps.emplace_back("t1_minus_t2", e1.lower - e2.upper);
  rep.gaps.emplace_back("t5_lower", e5.lower);
  rep.gaps.emplace_back("t4_minus_t5", e4.lower - e5.upper);
  rep.certified = true;
  for (const auto& [name, gap] : rep.gaps) {
    if (gap.sign() <= 0) {
      rep.certified = false;
      rep.failure = name;
      break;
    }
  }
  return rep;
}

namespace {

QuadRat truncate_two_decimals(const QuadRat& factor) {
  // toward zero; factors here are positive
  QuadRat scaled = factor * QuadRat(100);
  // exact floor of a QuadRat: a + b*sqrt2; use decimal bracketing via the
  // rational value of floor through its decimal string would be lossy, so
  // bracket with integers instead.
  BigInt lo = scaled.rational_part().floor() - 3;
  while (QuadRat(BigRat(BigInt(lo + 1))) <= scaled) lo += 1;
  return QuadRat(BigRat(lo, 100));
}

}  // namespace

std::vector<GapMagnitude> reproduce_gap_magnitudes() {
  const QuadRat Q{BigRat(3600)};
  const QuadRat one(1);
  auto inv = [&](long k, long mul = 1, long den = 1) {
    return QuadRat(BigRat(mul, den)) / Q.pow(k);
  };
  const QuadRat r2 = QuadRat::sqrt2();

  std::vector<GapMagnitude> out;
  auto push = [&](const char* tag, const QuadRat& exact, int pw, const BigRat& printed) {
    GapMagnitude g;
    g.tag = tag;
    g.exact = exact;
    // truncated-coefficient variant: factor = exact / Q^pw (includes any
    // leading irrational constant), truncated toward zero at 2 decimals
    QuadRat factor = exact / Q.pow(pw);
    g.truncated = truncate_two_decimals(factor) * Q.pow(pw);
    g.printed = printed;
    QuadRat tol = QuadRat(printed) / QuadRat(100);
    QuadRat err_exact = (g.exact - QuadRat(printed)).abs();
    QuadRat err_trunc = (g.truncated - QuadRat(printed)).abs();
    g.within_one_percent = err_exact <= tol || err_trunc <= tol;
    g.exact_rel_err = (err_exact / QuadRat(printed)).to_double();
    g.truncated_rel_err = (err_trunc / QuadRat(printed)).to_double();
    out.push_back(std::move(g));
  };

  // (6.4)  3600^4 (1 - 1/3600^3) + 16/9 - 32/3600^3
  push("6.4", Q.pow(4) * (one - inv(3)) + QuadRat(BigRat(16, 9)) - inv(3, 32), 4,
       BigRat(BigInt("168000000000000")));
  // (6.5)  3600^4 (1 - 1/3600^3) + 16/9
  push("6.5", Q.pow(4) * (one - inv(3)) + QuadRat(BigRat(16, 9)), 4,
       BigRat(BigInt("167000000000000")));
  // (6.6)  3600^6 (1 - 3/Q^2 - 2/Q^3 - 2/Q^4 - 3/Q^5 - 21/Q^6 - 20/Q^8)
  QuadRat f66 = one - inv(2, 3) - inv(3, 2) - inv(4, 2) - inv(5, 3) - inv(6, 21) - inv(8, 20);
  push("6.6", Q.pow(6) * f66, 6, BigRat(BigInt("2180000000000000000000")));
  // (6.7)  ... - 42/Q^9
  push("6.7", Q.pow(6) * (f66 - inv(9, 42)), 6, BigRat(BigInt("2170000000000000000000")));
  // (6.8)  4 * 3600^4 (1 - 1/Q^3 - 5/(2 Q^4) - 5/Q^7)
  push("6.8", QuadRat(4) * Q.pow(4) * (one - inv(3) - inv(4, 5, 2) - inv(7, 5)), 4,
       BigRat(BigInt("671000000000000")));
  // (6.9)  4 * 3600^4 (1 - 1/Q^3 - 5/(2 Q^4))
  push("6.9", QuadRat(4) * Q.pow(4) * (one - inv(3) - inv(4, 5, 2)), 4,
       BigRat(BigInt("671000000000000")));
  // (6.10) (sqrt2-1) Q^2 (1 - (3 sqrt2 - 4)/Q^4 - (sqrt2+1)/(2 Q^7))
  QuadRat c10 = one - (QuadRat(-4) + QuadRat(3) * r2) / Q.pow(4) -
                (one + r2) / (QuadRat(2) * Q.pow(7));
  push("6.10", (r2 - one) * Q.pow(2) * c10, 2, BigRat(5310000));
  // (6.11) (sqrt2-1) Q^2 (1 - (3 sqrt2 - 4)/Q^4)
  push("6.11", (r2 - one) * Q.pow(2) * (one - (QuadRat(-4) + QuadRat(3) * r2) / Q.pow(4)), 2,
       BigRat(5310000));
  // (6.12) 2 Q^2 (1 - 10/Q^4)
  push("6.12", QuadRat(2) * Q.pow(2) * (one - inv(4, 10)), 2, BigRat(25900000));
  // (6.13) 2 Q^2 (1 - 10/Q^4 - 81/(2 Q^7))
  push("6.13", QuadRat(2) * Q.pow(2) * (one - inv(4, 10) - inv(7, 81, 2)), 2,
       BigRat(25900000));
  return out;
}

}  // namespace cuboid
