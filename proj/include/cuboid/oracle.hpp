#pragma once

#include <utility>
#include <vector>

#include "cuboid/newton.hpp"

namespace cuboid {

/// Dense univariate polynomial with integer coefficients, index = degree.
using ZPoly = std::vector<BigInt>;

ZPoly zpoly_from_rational(const std::vector<BigRat>& coeffs);
ZPoly zpoly_derivative(const ZPoly& p);
int zpoly_degree(const ZPoly& p);
int zpoly_sign_at(const ZPoly& p, const BigRat& x);
BigRat zpoly_eval(const ZPoly& p, const BigRat& x);
/// Primitive part of gcd(a, b), positive leading coefficient.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);
ZPoly zpoly_divexact(const ZPoly& num, const ZPoly& den);
ZPoly squarefree_part(const ZPoly& p);
/// (factor, multiplicity) pairs with product of factor^mult = p up to content.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);
/// 1 + max |a_i| / |lead|, every real root lies in (-bound, bound).
BigRat cauchy_bound(const ZPoly& p);

/// Sturm chain of the squarefree part; sign-variation counts prove root
/// counts: roots in open (a,b) = variations(a) - variations(b) for
/// non-root endpoints.
class SturmChain {
 public:
  explicit SturmChain(const ZPoly& squarefree);
  int variations(const BigRat& x) const;
  /// exact number of distinct real roots in open (a, b); endpoints must
  /// not be roots.
  int count(const BigRat& a, const BigRat& b) const;
  const ZPoly& base() const { return chain_.front(); }

 private:
  std::vector<ZPoly> chain_;
};

/// One certified real root: exactly one root of the (squarefree part of
/// the) polynomial lies in the open interval, witnessed by the recorded
/// sign-variation counts; endpoints are dyadic and are not roots.
struct IsolatedRoot {
  BigRat lo, hi;
  int variations_lo = 0, variations_hi = 0;
  Axis axis = Axis::real;
};

/// Disjoint isolating intervals for all real roots, each narrower than
/// target_width. Throws on the zero polynomial.
std::vector<IsolatedRoot> sturm_isolate(const std::vector<BigRat>& coeffs,
                                        const BigRat& target_width);

struct AxisSplit {
  std::vector<IsolatedRoot> real_positive;       // intervals for t > 0
  std::vector<IsolatedRoot> imaginary_positive;  // intervals for Im t > 0
  /// x-space isolating intervals of S(x) (x = t^2) backing the above,
  /// positive roots first, ascending.
  std::vector<IsolatedRoot> x_roots;
};

/// Splits the roots of the transformed polynomial at concrete parameters
/// into the tracked half: writes Q(t) = S(t^2), isolates the roots x of S,
/// and maps x > 0 to real roots t = sqrt(x) > 0 and x < 0 to purely
/// imaginary roots with Im t = sqrt(-x) > 0. The returned t-intervals have
/// dyadic endpoints a < b whose squares still isolate x (re-proved with
/// the Sturm chain of S).
AxisSplit axis_split_roots(int B, const BigInt& p_tilde, const BigInt& q_tilde,
                           const BigRat& target_width);

/// Same split for an arbitrary even univariate polynomial given by dense
/// t-coefficients (odd entries must be zero).
AxisSplit axis_split_even(const std::vector<BigRat>& tcoeffs, const BigRat& target_width);

}  // namespace cuboid
