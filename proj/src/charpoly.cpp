#include "cuboid/charpoly.hpp"

#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cuboid {

namespace {

const std::vector<std::string> kTQP{"t", "q", "p"};
const std::vector<std::string> kTQPB{"t", "q", "p", "B"};
const std::vector<std::string> kQPB{"q", "p", "B"};

MultiPoly mono_tqp(long coeff, int et, int eq, int ep) {
  return MultiPoly::monomial(kTQP, {et, eq, ep}, QuadRat(coeff));
}

MultiPoly mono_qpb(QuadRat coeff, int eq, int ep, int eb) {
  return MultiPoly::monomial(kQPB, {eq, ep, eb}, std::move(coeff));
}

QuadRat s2(long a, long b) { return QuadRat(BigRat(a), BigRat(b)); }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::T3: return "T3";
    case Family::T4: return "T4";
    case Family::T5: return "T5";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : kAllFamilies)
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + s);
}

CharPoly build_qpq() {
  // t^10
  MultiPoly body = mono_tqp(1, 10, 0, 0);
  // (2q^2 + p^2)(3q^2 - 2p^2) t^8
  body = body + (mono_tqp(2, 0, 2, 0) + mono_tqp(1, 0, 0, 2)) *
                    (mono_tqp(3, 0, 2, 0) + mono_tqp(-2, 0, 0, 2)) * mono_tqp(1, 8, 0, 0);
  // (q^8 + 10 p^2 q^6 + 4 p^4 q^4 - 14 p^6 q^2 + p^8) t^6
  body = body + (mono_tqp(1, 0, 8, 0) + mono_tqp(10, 0, 6, 2) + mono_tqp(4, 0, 4, 4) +
                 mono_tqp(-14, 0, 2, 6) + mono_tqp(1, 0, 0, 8)) *
                    mono_tqp(1, 6, 0, 0);
  // - p^2 q^2 (q^8 - 14 p^2 q^6 + 4 p^4 q^4 + 10 p^6 q^2 + p^8) t^4
  body = body + (mono_tqp(1, 0, 8, 0) + mono_tqp(-14, 0, 6, 2) + mono_tqp(4, 0, 4, 4) +
                 mono_tqp(10, 0, 2, 6) + mono_tqp(1, 0, 0, 8)) *
                    mono_tqp(-1, 4, 2, 2);
  // - p^6 q^6 (q^2 + 2 p^2)(3 p^2 - 2 q^2) t^2
  body = body + (mono_tqp(1, 0, 2, 0) + mono_tqp(2, 0, 0, 2)) *
                    (mono_tqp(3, 0, 0, 2) + mono_tqp(-2, 0, 2, 0)) * mono_tqp(-1, 2, 6, 6);
  // - q^10 p^10
  body = body + mono_tqp(-1, 0, 10, 10);
  return CharPoly{std::move(body), CharKind::original};
}

const CharPoly& qtilde_symbolic() {
  static const CharPoly cached = [] {
    // p -> B q^3 - p, q -> q
    MultiPoly repl = MultiPoly::monomial(kTQPB, {0, 3, 0, 1}, QuadRat(1)) +
                     MultiPoly::monomial(kTQPB, {0, 0, 1, 0}, QuadRat(-1));
    MultiPoly body = build_qpq().body.with_universe(kTQPB).substitute("p", repl);
    return CharPoly{std::move(body), CharKind::transformed};
  }();
  return cached;
}

CharPoly build_qtilde(int B) {
  if (B < 1 || B > 9) throw std::invalid_argument("build_qtilde: B out of range 1..9");
  MultiPoly body =
      qtilde_symbolic().body.substitute("B", MultiPoly::constant(QuadRat(B))).with_universe(kTQP);
  return CharPoly{std::move(body), CharKind::transformed};
}

CharPoly build_exceptional() {
  MultiPoly body = qtilde_symbolic().body.substitute("p", MultiPoly{});
  return CharPoly{std::move(body), CharKind::exceptional};
}

const MultiPoly& truncated_expansion(Family f) {
  static const std::array<MultiPoly, 5> cached = [] {
    std::array<MultiPoly, 5> a;
    // (4.1): B^2 q^6 + 2 B q^4 - 2 B p q^3 - 2 q^2 - 2 p q + p^2 + 5/B - 20/(B^2 q^2)
    a[0] = mono_qpb(1, 6, 0, 2) + mono_qpb(2, 4, 0, 1) + mono_qpb(-2, 3, 1, 1) +
           mono_qpb(-2, 2, 0, 0) + mono_qpb(-2, 1, 1, 0) + mono_qpb(1, 0, 2, 0) +
           mono_qpb(5, 0, 0, -1) + mono_qpb(-20, -2, 0, -2);
    // (4.13): B^2 q^6 - 2 B q^4 - 2 B p q^3 - 2 q^2 + 2 p q + p^2 - 5/B - 20/(B^2 q^2)
    a[1] = mono_qpb(1, 6, 0, 2) + mono_qpb(-2, 4, 0, 1) + mono_qpb(-2, 3, 1, 1) +
           mono_qpb(-2, 2, 0, 0) + mono_qpb(2, 1, 1, 0) + mono_qpb(1, 0, 2, 0) +
           mono_qpb(-5, 0, 0, -1) + mono_qpb(-20, -2, 0, -2);
    // (4.21): B q^4 - p q + 16/B
    a[2] = mono_qpb(1, 4, 0, 1) + mono_qpb(-1, 1, 1, 0) + mono_qpb(16, 0, 0, -1);
    // (5.1): (sqrt2+1) q^2 - (10+7 sqrt2)/(B^2 q^2)   [coefficients of Im t]
    a[3] = mono_qpb(s2(1, 1), 2, 0, 0) + mono_qpb(s2(-10, -7), -2, 0, -2);
    // (5.11): (sqrt2-1) q^2 + (10-7 sqrt2)/(B^2 q^2)
    a[4] = mono_qpb(s2(-1, 1), 2, 0, 0) + mono_qpb(s2(10, -7), -2, 0, -2);
    return a;
  }();
  return cached[static_cast<std::size_t>(f)];
}

int remainder_exponent(Family f) {
  return (f == Family::T4 || f == Family::T5) ? 5 : 3;
}

namespace {

struct LeadingForm {
  long lhs_scalar;    // 16, 16, 2, 16, 16
  int lhs_bpow;       // 37, 37, 23, 30, 30
  QuadRat center;     // 80, -80, 32, -(320+224 s2), 320-224 s2
  int center_bpow;    // 35, 35, 21, 27, 27
};

LeadingForm leading_form(Family f) {
  switch (f) {
    case Family::T1: return {16, 37, QuadRat(80), 35};
    case Family::T2: return {16, 37, QuadRat(-80), 35};
    case Family::T3: return {2, 23, QuadRat(32), 21};
    case Family::T4: return {16, 30, s2(-320, -224), 27};
    case Family::T5: return {16, 30, s2(320, -224), 27};
  }
  throw std::logic_error("leading_form");
}

/// Transformed polynomial with t^2 replaced by -u^2 (valid for purely
/// imaginary t = i*u since the polynomial is even in t).
MultiPoly qtilde_in_u() {
  const MultiPoly& src = qtilde_symbolic().body;  // (t, q, p, B)
  const std::vector<std::string> uni{"q", "p", "B", "u"};
  MultiPolyBuilder out(uni);
  for (const auto& [e, c] : src.terms()) {
    int m = e[0];
    if (m % 2 != 0) throw std::logic_error("qtilde_in_u: odd t power");
    QuadRat coeff = (m / 2) % 2 == 0 ? c : -c;
    out.add({e[1], e[2], e[3], m}, coeff);
  }
  return out.take();
}

}  // namespace

RemainderEquation derive_remainder_equation(Family f) {
  const bool imag = f == Family::T4 || f == Family::T5;
  const std::string root_var = imag ? "u" : "t";
  const LeadingForm lead = leading_form(f);

  MultiPoly base = imag ? qtilde_in_u() : qtilde_symbolic().body;

  // q -> 1/z turns the truncated expansion into a Laurent polynomial in z.
  MultiPoly zinv = MultiPoly::monomial({"z"}, {-1}, QuadRat(1));
  MultiPoly subst = truncated_expansion(f).substitute("q", zinv) +
                    MultiPoly::monomial({"c", "z"}, {1, remainder_exponent(f)}, QuadRat(1));

  MultiPoly laurent = base.substitute("q", zinv).substitute(root_var, subst);

  auto cleared = laurent.clear_denominators();
  MultiPoly P = cleared.poly;

  BigRat cont = P.content();
  if (cont.is_zero()) throw std::runtime_error("derive: empty equation");
  P = P * QuadRat(BigRat(1) / cont);

  // Locate the unique c^1 z^0 monomial and normalize its coefficient to
  // the printed lhs (recovers the paper's 16/2 scaling and sign).
  MultiPoly cz0 = P.stratum("z", 0).stratum("c", 1);
  if (cz0.monomial_count() != 1)
    throw std::runtime_error("derive: shape mismatch (c z^0 stratum not a single monomial)");
  const auto& [ce, cc] = *cz0.terms().begin();
  {
    // expect pure B power, no p
    const auto& uni = cz0.variables();
    for (std::size_t i = 0; i < uni.size(); ++i) {
      if (uni[i] == "p" && ce[i] != 0)
        throw std::runtime_error("derive: shape mismatch (p in leading c term)");
      if (uni[i] == "B" && ce[i] != lead.lhs_bpow)
        throw std::runtime_error("derive: shape mismatch (B power of leading c term)");
    }
  }
  QuadRat mu = QuadRat(lead.lhs_scalar) / cc;
  P = P * mu;

  const std::vector<std::string> uni4{"p", "B", "c", "z"};
  MultiPoly lhs_term =
      MultiPoly::monomial(uni4, {0, lead.lhs_bpow, 1, 0}, QuadRat(lead.lhs_scalar));
  MultiPoly center_term = MultiPoly::monomial(uni4, {1, lead.center_bpow, 0, 0}, lead.center);

  MultiPoly z0 = P.stratum("z", 0).with_universe(uni4);
  if (!(z0 == lhs_term - center_term))
    throw std::runtime_error("derive: shape mismatch (z^0 stratum is not the printed form)");

  // P == lhs*c - center - tail
  MultiPoly tail = lhs_term - center_term - P.with_universe(uni4);
  if (!tail.is_zero() && tail.min_exponent("z") < 1)
    throw std::runtime_error("derive: shape mismatch (tail has z^0 terms)");

  RemainderEquation eq;
  eq.family = f;
  eq.lhs_coeff = MultiPoly::monomial(uni4, {0, lead.lhs_bpow, 0, 0}, QuadRat(lead.lhs_scalar));
  eq.center = std::move(center_term);
  eq.tail = std::move(tail);
  eq.clearing = cleared.clearing;
  eq.scale = mu * QuadRat(BigRat(1) / cont);
  return eq;
}

bool remainder_residual_is_zero(const RemainderEquation& eq, unsigned seed, int npoints) {
  const bool imag = eq.family == Family::T4 || eq.family == Family::T5;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);

  // t-strata of the *original* polynomial, evaluated pointwise; this route
  // never touches the transformed polynomial or the derivation machinery.
  const MultiPoly qpq = build_qpq().body;

  for (int k = 0; k < npoints; ++k) {
    BigRat zv(num(rng), den(rng));
    while (zv.is_zero()) zv = BigRat(num(rng), den(rng));
    BigRat cv(num(rng), den(rng));
    BigRat pv(num(rng), den(rng));
    BigRat Bv(den(rng));  // positive

    BigRat qv = BigRat(1) / zv;
    std::map<std::string, QuadRat> zpt{{"c", QuadRat(cv)},
                                       {"z", QuadRat(zv)},
                                       {"p", QuadRat(pv)},
                                       {"B", QuadRat(Bv)}};

    MultiPoly zinv = MultiPoly::monomial({"z"}, {-1}, QuadRat(1));
    MultiPoly subst = truncated_expansion(eq.family).substitute("q", zinv) +
                      MultiPoly::monomial({"c", "z"}, {1, remainder_exponent(eq.family)}, QuadRat(1));
    QuadRat root = subst.eval(zpt);

    // Original-polynomial route: p_orig = B q^3 - p.
    QuadRat p_orig = QuadRat(Bv * qv * qv * qv - pv);
    QuadRat q_orig = QuadRat(qv);
    QuadRat qval(0);
    if (!imag) {
      qval = qpq.eval({{"t", root}, {"q", q_orig}, {"p", p_orig}});
    } else {
      // t = i*u: even polynomial evaluated with t^2 -> -u^2.
      QuadRat x = -(root * root);
      for (int m = 0; m <= 10; m += 2) {
        MultiPoly str = qpq.stratum("t", m);
        if (str.is_zero()) continue;
        QuadRat coeffval(0);
        for (const auto& [e, c] : str.terms())
          coeffval += c * q_orig.pow(e[1]) * p_orig.pow(e[2]);
        qval += coeffval * x.pow(m / 2);
      }
    }

    QuadRat lhs = eq.lhs_coeff.eval(zpt) * QuadRat(cv) - eq.center.eval(zpt) - eq.tail.eval(zpt);
    QuadRat rhs = eq.scale * eq.clearing.eval(zpt) * qval;
    if (lhs != rhs) return false;
  }
  return true;
}

std::string component_split_serialization(const MultiPoly& poly) {
  std::ostringstream os;
  const auto& vars = poly.variables();
  auto put = [&](const char* tag, const BigRat& r, const MultiPoly::Exponents& e) {
    os << tag << " " << r.numerator().get_str() << "/" << r.denominator().get_str();
    os << (tag[0] == 'R' ? " SQRT2 0/1 :" : " :");
    for (std::size_t i = 0; i < vars.size(); ++i) os << " " << vars[i] << "^" << e[i];
    os << "\n";
  };
  for (const auto& [e, c] : poly.terms()) {
    if (!c.rational_part().is_zero()) put("RAT", c.rational_part(), e);
    if (!c.sqrt2_part().is_zero()) {
      os << "RAT 0/1 SQRT2 " << c.sqrt2_part().numerator().get_str() << "/"
         << c.sqrt2_part().denominator().get_str() << " :";
      for (std::size_t i = 0; i < vars.size(); ++i) os << " " << vars[i] << "^" << e[i];
      os << "\n";
    }
  }
  return os.str();
}

void export_ancillary(const std::vector<RemainderEquation>& eqs, std::ostream& os) {
  os << "# remainder equation tails, canonical serialization\n";
  for (const auto& eq : eqs) {
    os << "# family " << family_name(eq.family) << " lhs "
       << eq.lhs_coeff.to_pretty_string() << " center " << eq.center.to_pretty_string()
       << " tail_monomials " << eq.tail_component_count() << "\n";
    os << component_split_serialization(eq.tail);
  }
}

std::vector<BigRat> qtilde_dense_coeffs(int B, const BigInt& p_tilde, const BigInt& q_tilde) {
  if (B < 1 || B > 9) throw std::invalid_argument("qtilde_dense_coeffs: B out of range");
  const MultiPoly& body = qtilde_symbolic().body;  // (t, q, p, B)
  std::vector<BigRat> coeffs(11, BigRat(0));
  QuadRat qv{BigRat(q_tilde)}, pv{BigRat(p_tilde)}, Bv{BigRat(B)};
  for (const auto& [e, c] : body.terms()) {
    QuadRat v = c * qv.pow(e[1]) * pv.pow(e[2]) * Bv.pow(e[3]);
    if (!v.sqrt2_part().is_zero()) throw std::logic_error("qtilde_dense_coeffs: irrational");
    coeffs[static_cast<std::size_t>(e[0])] += v.rational_part();
  }
  return coeffs;
}

BigRat qtilde_value(int B, const BigInt& p_tilde, const BigInt& q_tilde, const BigInt& t) {
  auto coeffs = qtilde_dense_coeffs(B, p_tilde, q_tilde);
  BigRat tv{t}, acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * tv + coeffs[i];
  return acc;
}

}  // namespace cuboid
