#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cuboid/enclosure.hpp"

namespace cuboid {

struct RegionLabel {
  bool linear = false;
  bool nonlinear = false;
  bool no_cuboid = false;
  bool bisector_strip = false;
  int parabolic_strip_B = 0;  // 0 when not inside any parabolic strip
  bool parabolic_core_strip = false;
};

/// Region flags of a positive lattice point, all comparisons exact
/// (the cube root of the bisector-strip bound is tested by cubing).
RegionLabel classify_region(const BigInt& p, const BigInt& q);

enum class ExclusionOutcome { no_integer_points, exceptional_candidate, not_applicable };

struct ExclusionVerdict {
  Family family;
  ExclusionOutcome outcome = ExclusionOutcome::not_applicable;
  BigInt candidate;       // set for exceptional_candidate
  std::string theorem;    // "7.1".."7.9"
};

/// Exact floor computation on the rational endpoints of a real-axis
/// enclosure. Throws on imaginary-axis enclosures.
ExclusionVerdict has_integer_point(const RootEnclosure& enc);

struct CandidateTest {
  bool is_root = false;
  BigRat value;  // exact value of the transformed polynomial at the candidate
};

/// Exact evaluation at the unique candidate integer (B = 5 context).
CandidateTest test_exceptional_candidate(const BigInt& p_tilde, const BigInt& q_tilde,
                                         const BigInt& candidate_t);

struct ExceptionalVerdict {
  bool no_integer_roots = false;
  std::vector<BigInt> integer_roots;
};

/// Certifies integer-root absence of the p=0 polynomial at concrete (q, B):
/// isolates all real roots to width < 1 and exactly evaluates at every
/// integer inside an isolating interval.
ExceptionalVerdict exceptional_no_integer_roots(const BigInt& q_tilde, int B);

/// The four perfect-cuboid inequalities. Preconditions p != q and
/// gcd(p, q) = 1 are enforced (throws std::invalid_argument).
bool cuboid_conditions(const BigInt& p, const BigInt& q, const BigInt& t);

struct ScanSummary {
  std::uint64_t points = 0;
  std::uint64_t certified_points = 0;
  std::uint64_t exceptional_candidates = 0;
  std::uint64_t integer_roots_found = 0;
  std::uint64_t cuboid_candidates = 0;
};

/// Certifies every lattice point of the strip |p - B q^3| <= q^3 / 3600^3
/// (plus |p - B q^3| < 2 q when B = 5) for q in [q_from, q_to] cuboid-free,
/// emitting one JSONL certificate line per check into `sink`. Output is
/// byte-deterministic and independent of the worker count.
ScanSummary scan_strip(int B, long q_from, long q_to, int workers, std::ostream& sink);

}  // namespace cuboid
