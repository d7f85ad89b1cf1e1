#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cuboid/multipoly.hpp"

namespace cuboid {

/// The five tracked root families: T1/T2 (fast real, ~B^2 q^6), T3 (real,
/// ~B q^4), T4/T5 (purely imaginary, ~q^2).
enum class Family { T1, T2, T3, T4, T5 };

constexpr std::array<Family, 5> kAllFamilies{Family::T1, Family::T2, Family::T3,
                                             Family::T4, Family::T5};

const char* family_name(Family f);
Family family_from_name(const std::string& s);

enum class CharKind { original, transformed, exceptional };

/// A named characteristic polynomial. `original` lives in (t, q, p);
/// `transformed` and `exceptional` live in (t, q, p, B) where q and p
/// denote the transformed parameters.
struct CharPoly {
  MultiPoly body;
  CharKind kind;
};

/// Degree-10 even polynomial in t with the six printed coefficient blocks.
CharPoly build_qpq();

/// Transformed polynomial: p -> B q^3 - p with symbolic B. 108 monomials.
const CharPoly& qtilde_symbolic();

/// Transformed polynomial at a concrete B in 1..9.
CharPoly build_qtilde(int B);

/// Exceptional-case polynomial (transformed at p = 0), symbolic B.
CharPoly build_exceptional();

/// Truncated root expansion for a family, a Laurent polynomial in
/// (q, p, B); the enclosure center is its exact evaluation.
const MultiPoly& truncated_expansion(Family f);

/// 3 for the real families (remainder ~ q^-3), 5 for the imaginary ones.
int remainder_exponent(Family f);

/// lhs_coeff * c = center + tail, exactly; `clearing` and `scale` record
/// how the cleared polynomial relates to the raw substituted equation so
/// the identity can be re-checked against the original polynomial.
struct RemainderEquation {
  Family family;
  MultiPoly lhs_coeff;  // e.g. 16 B^37  (monomial, no c/z/p)
  MultiPoly center;     // e.g. 80 p B^35 (monomial)
  MultiPoly tail;       // polynomial in (p, B, c, z), no z^0 stratum
  MultiPoly clearing;   // monomial M that cleared the Laurent form
  QuadRat scale;        // multiplier applied after clearing (lead/content normalization)

  std::size_t tail_component_count() const { return tail.component_count(); }
};

/// Performs the family's substitution into the transformed polynomial,
/// maps q -> 1/z, clears denominators and isolates the printed leading
/// form. Throws std::runtime_error on shape mismatch.
RemainderEquation derive_remainder_equation(Family f);

/// Exact identity check tying a derived equation back to the original
/// polynomial: at `npoints` pseudo-random rational sample points the
/// cleared equation must equal scale * M * Q(p,q,t) evaluated through the
/// substitutions. Returns true when every residual vanishes.
bool remainder_residual_is_zero(const RemainderEquation& eq, unsigned seed, int npoints);

/// Writes every tail in canonical serialization, coefficients split into
/// their 1 and sqrt2 components (one component per line). Deterministic.
void export_ancillary(const std::vector<RemainderEquation>& eqs, std::ostream& os);

/// Component-split canonical serialization of one polynomial (the format
/// used by export_ancillary and by the derive subcommand hashes).
std::string component_split_serialization(const MultiPoly& poly);

/// Dense t-coefficients (degree 10) of the transformed polynomial at
/// concrete parameters; all coefficients are rational.
std::vector<BigRat> qtilde_dense_coeffs(int B, const BigInt& p_tilde, const BigInt& q_tilde);

/// Exact value of the transformed polynomial at integer (t, p~, q~, B).
BigRat qtilde_value(int B, const BigInt& p_tilde, const BigInt& q_tilde, const BigInt& t);

}  // namespace cuboid
