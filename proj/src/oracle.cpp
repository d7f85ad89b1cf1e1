#include "cuboid/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuboid {

namespace {

void normalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content_of(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void divide_content(ZPoly& p) {
  BigInt g = content_of(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// remainder of a by b over Q, scaled by a positive rational to integer
// primitive form (sign pattern preserved).
ZPoly signed_prem(ZPoly a, const ZPoly& b) {
  normalize(a);
  int db = zpoly_degree(b);
  BigInt lead = b.back();
  while (zpoly_degree(a) >= db && !a.empty()) {
    int da = zpoly_degree(a);
    BigInt q = a.back();
    // a = lead * a - q * x^(da-db) * b  keeps integrality; multiplying by
    // lead flips signs when lead < 0, so use lead^2-scaled steps instead.
    BigInt pos_lead = lead < 0 ? BigInt(-lead) : lead;
    BigInt scale = pos_lead;
    for (auto& c : a) c *= scale;
    BigInt factor = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= factor * b[static_cast<std::size_t>(i)];
    normalize(a);
    divide_content(a);
  }
  return a;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

int zpoly_degree(const ZPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

ZPoly zpoly_from_rational(const std::vector<BigRat>& coeffs) {
  BigInt l = 1;
  for (const auto& c : coeffs) {
    BigInt d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.numerator() * (l / c.denominator()));
  normalize(out);
  return out;
}

ZPoly zpoly_derivative(const ZPoly& p) {
  ZPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  normalize(out);
  return out;
}

BigRat zpoly_eval(const ZPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + BigRat(p[i]);
  return acc;
}

int zpoly_sign_at(const ZPoly& p, const BigRat& x) {
  // sum a_i n^i d^(deg-i), integer arithmetic only
  int deg = zpoly_degree(p);
  if (deg < 0) return 0;
  BigInt n = x.numerator(), d = x.denominator();
  BigInt acc = 0, npow = 1;
  std::vector<BigInt> dpows(static_cast<std::size_t>(deg) + 1);
  dpows[static_cast<std::size_t>(deg)] = 1;
  for (int i = deg - 1; i >= 0; --i) dpows[static_cast<std::size_t>(i)] = dpows[static_cast<std::size_t>(i + 1)] * d;
  for (int i = 0; i <= deg; ++i) {
    if (p[static_cast<std::size_t>(i)] != 0) acc += p[static_cast<std::size_t>(i)] * npow * dpows[static_cast<std::size_t>(i)];
    if (i < deg) npow *= n;
  }
  return sgn(acc);
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  normalize(a);
  normalize(b);
  divide_content(a);
  divide_content(b);
  if (zpoly_degree(a) < zpoly_degree(b)) std::swap(a, b);
  while (zpoly_degree(b) >= 0) {
    ZPoly r = signed_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

ZPoly zpoly_divexact(const ZPoly& num, const ZPoly& den) {
  int dn = zpoly_degree(num), dd = zpoly_degree(den);
  if (dd < 0) throw std::domain_error("zpoly_divexact: zero divisor");
  if (dn < dd) throw std::domain_error("zpoly_divexact: not divisible");
  // exact division over Q, then clear (the quotient of primitive polys is
  // integral up to content; we work with rationals and convert back).
  std::vector<BigRat> rem(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) rem[i] = BigRat(num[i]);
  std::vector<BigRat> quot(static_cast<std::size_t>(dn - dd) + 1, BigRat(0));
  for (int i = dn; i >= dd; --i) {
    BigRat f = rem[static_cast<std::size_t>(i)] / BigRat(den[static_cast<std::size_t>(dd)]);
    quot[static_cast<std::size_t>(i - dd)] = f;
    if (f.is_zero()) continue;
    for (int k = 0; k <= dd; ++k)
      rem[static_cast<std::size_t>(i - dd + k)] -= f * BigRat(den[static_cast<std::size_t>(k)]);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::domain_error("zpoly_divexact: remainder nonzero");
  return zpoly_from_rational(quot);
}

ZPoly squarefree_part(const ZPoly& p) {
  if (zpoly_degree(p) <= 0) throw std::domain_error("squarefree_part: degenerate polynomial");
  ZPoly g = zpoly_gcd(p, zpoly_derivative(p));
  if (zpoly_degree(g) == 0) {
    ZPoly out = p;
    divide_content(out);
    if (out.back() < 0)
      for (auto& c : out) c = -c;
    return out;
  }
  ZPoly out = zpoly_divexact(p, g);
  divide_content(out);
  if (out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
  // Yun's algorithm
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly a = p;
  divide_content(a);
  if (zpoly_degree(a) <= 0) return out;
  ZPoly d = zpoly_derivative(a);
  ZPoly g = zpoly_gcd(a, d);
  if (zpoly_degree(g) == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  ZPoly b = zpoly_divexact(a, g);
  ZPoly c = zpoly_divexact(d, g);
  int mult = 1;
  while (true) {
    // e = c - b'
    ZPoly bp = zpoly_derivative(b);
    std::vector<BigRat> diff(std::max(c.size(), bp.size()), BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i) diff[i] += BigRat(c[i]);
    for (std::size_t i = 0; i < bp.size(); ++i) diff[i] -= BigRat(bp[i]);
    ZPoly e = zpoly_from_rational(diff);
    if (zpoly_degree(e) < 0) {
      if (zpoly_degree(b) > 0) out.emplace_back(b, mult);
      break;
    }
    ZPoly f = zpoly_gcd(b, e);
    if (zpoly_degree(f) > 0 || true) {
      ZPoly factor = f;
      if (zpoly_degree(factor) > 0) out.emplace_back(factor, mult);
      b = zpoly_divexact(b, f);
      c = zpoly_divexact(e, f);
      ++mult;
      if (zpoly_degree(b) <= 0) break;
    }
  }
  return out;
}

BigRat cauchy_bound(const ZPoly& p) {
  int deg = zpoly_degree(p);
  if (deg < 0) throw std::domain_error("cauchy_bound: zero polynomial");
  BigInt lead = p[static_cast<std::size_t>(deg)];
  if (lead < 0) lead = -lead;
  BigInt mx = 0;
  for (int i = 0; i < deg; ++i) {
    BigInt a = p[static_cast<std::size_t>(i)];
    if (a < 0) a = -a;
    if (a > mx) mx = a;
  }
  return BigRat(1) + BigRat(mx, lead);
}

SturmChain::SturmChain(const ZPoly& squarefree) {
  ZPoly p0 = squarefree;
  divide_content(p0);
  if (zpoly_degree(p0) < 0) throw std::domain_error("SturmChain: zero polynomial");
  chain_.push_back(p0);
  ZPoly p1 = zpoly_derivative(p0);
  if (zpoly_degree(p1) >= 0) {
    divide_content(p1);
    chain_.push_back(p1);
    while (true) {
      const ZPoly& a = chain_[chain_.size() - 2];
      const ZPoly& b = chain_.back();
      ZPoly r = signed_prem(a, b);
      if (zpoly_degree(r) < 0) break;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }
}

int SturmChain::variations(const BigRat& x) const {
  int v = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = zpoly_sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count(const BigRat& a, const BigRat& b) const {
  return variations(a) - variations(b);
}

namespace {

// dyadic point in (a, b) where p does not vanish
BigRat pick_split(const ZPoly& p, const BigRat& a, const BigRat& b) {
  BigRat half(1, 2);
  BigRat mid = (a + b) * half;
  for (int tries = 0; tries < 64; ++tries) {
    if (zpoly_sign_at(p, mid) != 0) return mid;
    mid = (a + mid) * half;  // walk toward a; roots are finite in number
  }
  throw std::logic_error("pick_split: could not find a non-root split point");
}

BigRat dyadic_ceil_pow2(const BigRat& x) {
  // smallest power of two >= x (x > 0)
  BigRat v(1);
  while (v < x) v *= BigRat(2);
  return v;
}

}  // namespace

std::vector<IsolatedRoot> sturm_isolate(const std::vector<BigRat>& coeffs,
                                        const BigRat& target_width) {
  ZPoly p = zpoly_from_rational(coeffs);
  if (zpoly_degree(p) < 0) throw std::domain_error("sturm_isolate: zero polynomial");
  if (zpoly_degree(p) == 0) return {};
  ZPoly sf = squarefree_part(p);
  SturmChain chain(sf);

  BigRat bound = dyadic_ceil_pow2(cauchy_bound(sf));
  struct Work { BigRat a, b; int count; };
  std::vector<Work> stack;
  {
    BigRat a = -bound, b = bound;
    // Cauchy bound endpoints are never roots.
    int n = chain.count(a, b);
    if (n > 0) stack.push_back({a, b, n});
  }
  std::vector<IsolatedRoot> found;
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    if (w.count == 1) {
      // refine by sign bisection: exactly one simple root inside
      BigRat a = w.a, b = w.b;
      int sa = zpoly_sign_at(sf, a);
      while (b - a >= target_width) {
        BigRat m = pick_split(sf, a, b);
        int sm = zpoly_sign_at(sf, m);
        if (sm == sa) a = m; else b = m;
      }
      IsolatedRoot r;
      r.lo = a;
      r.hi = b;
      r.variations_lo = chain.variations(a);
      r.variations_hi = chain.variations(b);
      found.push_back(std::move(r));
      continue;
    }
    BigRat m = pick_split(sf, w.a, w.b);
    int left = chain.count(w.a, m);
    if (left > 0) stack.push_back({w.a, m, left});
    if (w.count - left > 0) stack.push_back({m, w.b, w.count - left});
  }
  std::sort(found.begin(), found.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return found;
}

namespace {

// dyadic a with a^2 <= x (x > 0), resolution 2^-k
BigRat dyadic_sqrt_floor(const BigRat& x, unsigned k) {
  BigInt fourk;
  mpz_ui_pow_ui(fourk.get_mpz_t(), 4, k);
  BigInt scaled_num = x.numerator() * fourk;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.denominator().get_mpz_t());
  BigInt r = detail::isqrt(q);
  BigInt twok;
  mpz_ui_pow_ui(twok.get_mpz_t(), 2, k);
  return BigRat(r, twok);
}

// dyadic b with b^2 >= x (x > 0), resolution 2^-k
BigRat dyadic_sqrt_ceil(const BigRat& x, unsigned k) {
  BigRat a = dyadic_sqrt_floor(x, k);
  BigInt twok;
  mpz_ui_pow_ui(twok.get_mpz_t(), 2, k);
  BigRat step(BigInt(1), twok);
  while (a * a < x) a += step;
  return a;
}

}  // namespace

AxisSplit axis_split_even(const std::vector<BigRat>& tcoeffs, const BigRat& target_width) {
  for (std::size_t i = 1; i < tcoeffs.size(); i += 2)
    if (!tcoeffs[i].is_zero())
      throw std::invalid_argument("axis_split_even: odd power of t present");
  std::vector<BigRat> xcoeffs;
  for (std::size_t i = 0; i < tcoeffs.size(); i += 2) xcoeffs.push_back(tcoeffs[i]);

  ZPoly S = zpoly_from_rational(xcoeffs);
  ZPoly sf = squarefree_part(S);
  SturmChain chain(sf);

  AxisSplit out;
  // x-space isolation; the width here only needs to separate roots from 0
  // and from each other, the t-space refinement loop below does the rest.
  out.x_roots = sturm_isolate(xcoeffs, BigRat(1, 4));

  for (auto& xr : out.x_roots) {
    // make the interval sign-definite (0 is never a root here when the
    // constant term is nonzero; refine past it if it straddles)
    while (xr.lo.sign() != xr.hi.sign()) {
      BigRat m = pick_split(sf, xr.lo, xr.hi);
      if (chain.count(xr.lo, m) == 1) xr.hi = m; else xr.lo = m;
    }
  }

  for (const auto& xr : out.x_roots) {
    bool positive = xr.lo.sign() > 0;
    BigRat plo = positive ? xr.lo : -xr.hi;
    BigRat phi = positive ? xr.hi : -xr.lo;
    BigRat lo = plo, hi = phi;
    unsigned k = 8;
    IsolatedRoot tr;
    while (true) {
      BigRat a = dyadic_sqrt_floor(lo, k);
      if (a.is_zero()) { k += 8; continue; }
      BigRat b = dyadic_sqrt_ceil(hi, k);
      BigRat xa = positive ? a * a : -(b * b);
      BigRat xb = positive ? b * b : -(a * a);
      if (b - a < target_width && zpoly_sign_at(sf, xa) != 0 && zpoly_sign_at(sf, xb) != 0 &&
          chain.count(xa, xb) == 1) {
        tr.lo = a;
        tr.hi = b;
        // proof data in x-space: xa < xb and the count over (xa, xb) is 1
        tr.variations_lo = chain.variations(xa);
        tr.variations_hi = chain.variations(xb);
        tr.axis = positive ? Axis::real : Axis::imaginary;
        break;
      }
      // refine the x-interval by sign bisection and raise resolution
      int slo = zpoly_sign_at(sf, positive ? lo : -hi);
      for (int step = 0; step < 8 && hi - lo > BigRat(0); ++step) {
        BigRat xm = pick_split(sf, positive ? lo : -hi, positive ? hi : -lo);
        BigRat m = positive ? xm : -xm;
        // m is in (lo, hi) in the positive magnitude coordinates
        int sm = zpoly_sign_at(sf, xm);
        if (positive) {
          if (sm == slo) lo = m; else hi = m;
        } else {
          // xm in (-hi, -lo); magnitude interval splits at -xm
          if (sm == slo) hi = -xm; else lo = -xm;
        }
      }
      k += 8;
    }
    if (positive) out.real_positive.push_back(std::move(tr));
    else out.imaginary_positive.push_back(std::move(tr));
  }
  auto by_lo = [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; };
  std::sort(out.real_positive.begin(), out.real_positive.end(), by_lo);
  std::sort(out.imaginary_positive.begin(), out.imaginary_positive.end(), by_lo);
  return out;
}

AxisSplit axis_split_roots(int B, const BigInt& p_tilde, const BigInt& q_tilde,
                           const BigRat& target_width) {
  return axis_split_even(qtilde_dense_coeffs(B, p_tilde, q_tilde), target_width);
}

}  // namespace cuboid
