#pragma once

#include <string>
#include <vector>

#include "cuboid/charpoly.hpp"
#include "cuboid/newton.hpp"

namespace cuboid {

/// Per-family certification constants. Thresholds and box coefficients are
/// exact; the sign-change threshold is the constant the majorant must stay
/// strictly below for the containment argument to close.
struct FamilySpec {
  Family family;
  int q_threshold_coeff;     // 20, 20, 7, 15, 3600
  BigRat c_box_scalar;       // 10, 10, 32, 80, 1/2
  int c_box_bexp;            // c-box is c_box_scalar * |p| / B^c_box_bexp
  Axis axis;
  int remainder_exp;         // 3, 3, 3, 5, 5
  int delta_sign;            // side of the remainder term: +1 or -1 times p
  long lhs_scalar;           // 16, 16, 2, 16, 16
  int lhs_bpow;              // 37, 37, 23, 30, 30
  QuadRat center_coeff;      // 80, -80, 32, -(320+224*s2), 320-224*s2
  int center_bpow;           // 35, 35, 21, 27, 27
  QuadRat sign_change_threshold;  // 80, 80, 32, 636, 320-224*s2
  QuadRat paper_constant;         // 72, 72, 26, 512, 2
};

const FamilySpec& family_spec(Family f);

/// Exact applicability test q^3 >= coeff^3 * |p| (never via cube roots),
/// additionally requiring p != 0.
bool applicability(Family f, const BigInt& p_tilde, const BigInt& q_tilde, int B);

/// Exact root enclosure: center = truncated expansion at (p, q, B), the
/// signed remainder bound attached on the side dictated by the family and
/// the sign of p. For real families both endpoints are rational; for the
/// imaginary families they bound Im t and live in Q(sqrt 2).
struct RootEnclosure {
  Family family;
  QuadRat lower, upper;
  Axis axis;
  BigInt p_tilde, q_tilde;
  int B = 0;

  QuadRat width() const { return upper - lower; }
};

RootEnclosure enclosure_bounds(Family f, const BigInt& p_tilde, const BigInt& q_tilde, int B);

enum class Verdict { certified, certified_above_paper_constant, failed };

const char* verdict_name(Verdict v);

struct CertificationReport {
  std::string kind;  // "majorant" | "sign_change" | "disjointness"
  std::string subject;  // family name or pair tag
  int B = 0;
  int p_sign = 0;
  QuadRat witnessed_constant;
  QuadRat paper_constant;
  QuadRat threshold;
  Verdict verdict = Verdict::failed;
  std::string detail;
};

/// Monomial-wise triangle-inequality bound: |c| <= c_box, |z| <= 1/coeff *
/// |p|^(-1/3), |p| >= 1. Every monomial's net |p|-exponent must be <= 1
/// (throws otherwise); the absolute values sum to M(B) with
/// |tail| <= M(B) * |p| * B^center_bpow.
CertificationReport certify_majorant(const RemainderEquation& eq, int B, int p_sign);

/// Exact containment of the right side's certified range in the open range
/// swept by the linear left side over the printed c-interval.
CertificationReport certify_sign_change(const RemainderEquation& eq, int B,
                                        const BigInt& p_tilde, const BigInt& q_tilde);

struct DisjointnessReport {
  bool certified = false;
  BigInt p_tilde, q_tilde;
  int B = 0;
  /// named gaps, all of which must be positive:
  /// t3_lower, t2_minus_t3, t1_minus_t2, t5_lower, t4_minus_t5
  std::vector<std::pair<std::string, QuadRat>> gaps;
  std::string failure;  // offending pair when not certified
};

DisjointnessReport disjointness(const BigInt& p_tilde, const BigInt& q_tilde, int B);

/// One evaluated worst-case gap bound: the exact value of the displayed
/// lower-bound expression at q = 3600, |p| = 1, plus the variant with the
/// scalar factor truncated to two decimals (the rounding used in print).
struct GapMagnitude {
  std::string tag;          // "6.4" .. "6.13"
  QuadRat exact;
  QuadRat truncated;
  BigRat printed;           // the printed approximate value, exact as a rational
  bool within_one_percent;  // min over the two readings
  double exact_rel_err;
  double truncated_rel_err;
};

std::vector<GapMagnitude> reproduce_gap_magnitudes();

}  // namespace cuboid
