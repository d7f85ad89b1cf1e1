#include "cuboid/multipoly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cuboid {

namespace {

// Fixed precedence so merged universes and serializations are stable.
int var_rank(const std::string& name) {
  static const char* order[] = {"t", "q", "p", "B", "c", "z", "u", "x"};
  for (int i = 0; i < 8; ++i)
    if (name == order[i]) return i;
  return 100;
}

bool var_less(const std::string& a, const std::string& b) {
  int ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 1; i < vars_.size(); ++i)
    if (!var_less(vars_[i - 1], vars_[i]))
      throw std::invalid_argument("MultiPoly: universe not in canonical order");
}

void MultiPoly::check_exponent(long e) {
  if (e > (1L << 28) || e < -(1L << 28))
    throw std::overflow_error("MultiPoly: exponent overflow");
}

MultiPoly MultiPoly::constant(const QuadRat& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, QuadRat(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, QuadRat coeff) {
  if (vars.size() != exps.size())
    throw std::invalid_argument("MultiPoly::monomial: arity mismatch");
  MultiPoly p{std::move(vars)};
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

std::size_t MultiPoly::component_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) {
    if (!c.rational_part().is_zero()) ++n;
    if (!c.sqrt2_part().is_zero()) ++n;
  }
  return n;
}

std::vector<std::string> MultiPoly::merge_universes(const std::vector<std::string>& a,
                                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), var_less);
  return out;
}

MultiPoly MultiPoly::with_universe(const std::vector<std::string>& vars) const {
  MultiPoly out{vars};
  std::vector<int> pos(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) pos[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (pos[i] < 0)
        throw std::invalid_argument("MultiPoly::with_universe drops used variable " + vars_[i]);
      ne[pos[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const QuadRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  auto uni = MultiPoly::merge_universes(a.vars_, b.vars_);
  MultiPoly x = a.with_universe(uni), y = b.with_universe(uni);
  for (const auto& [e, c] : y.terms_) x.add_term(e, c);
  return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  auto uni = MultiPoly::merge_universes(a.vars_, b.vars_);
  MultiPoly x = a.with_universe(uni), y = b.with_universe(uni);
  MultiPoly out{uni};
  MultiPoly::Exponents e(uni.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        long s = static_cast<long>(ea[i]) + eb[i];
        MultiPoly::check_exponent(s);
        e[i] = static_cast<int>(s);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const QuadRat& s) const {
  if (s.is_zero()) return MultiPoly{vars_};
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(QuadRat(1)).with_universe(vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end())
    throw std::invalid_argument("MultiPoly::substitute: unknown variable " + var);
  std::size_t idx = static_cast<std::size_t>(vit - vars_.begin());

  auto uni = merge_universes(vars_, replacement.vars_);
  MultiPoly repl = replacement.with_universe(uni);
  bool repl_monomial = repl.terms_.size() == 1;

  // position of each original variable inside the merged universe
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    pos[i] = static_cast<std::size_t>(
        std::find(uni.begin(), uni.end(), vars_[i]) - uni.begin());

  std::map<int, MultiPoly> powers;  // exponent -> repl^exponent
  auto repl_pow = [&](int k) -> const MultiPoly& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    MultiPoly val{uni};
    if (k >= 0) {
      val = repl.pow(static_cast<unsigned>(k));
    } else {
      if (!repl_monomial)
        throw std::invalid_argument("MultiPoly::substitute: negative power of a non-monomial");
      const auto& [me, mc] = *repl.terms_.begin();
      Exponents inv(me.size());
      for (std::size_t i = 0; i < me.size(); ++i) inv[i] = -me[i];
      val = MultiPoly::monomial(uni, inv, QuadRat(1) / mc).pow(static_cast<unsigned>(-k));
    }
    return powers.emplace(k, std::move(val)).first->second;
  };

  MultiPoly out{uni};
  for (const auto& [e, c] : terms_) {
    Exponents base(uni.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx) base[pos[i]] = e[i];
    const MultiPoly& rp = repl_pow(e[idx]);
    for (const auto& [re, rc] : rp.terms_) {
      Exponents ne(uni.size());
      for (std::size_t i = 0; i < ne.size(); ++i) {
        long s = static_cast<long>(base[i]) + re[i];
        check_exponent(s);
        ne[i] = static_cast<int>(s);
      }
      out.add_term(ne, c * rc);
    }
  }
  return out;
}

QuadRat MultiPoly::eval(const std::map<std::string, QuadRat>& assignment) const {
  std::vector<const QuadRat*> vals(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it != assignment.end()) vals[i] = &it->second;
  }
  QuadRat sum(0);
  for (const auto& [e, c] : terms_) {
    QuadRat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vals[i])
        throw std::invalid_argument("MultiPoly::eval: missing assignment for " + vars_[i]);
      term *= vals[i]->pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly::Cleared MultiPoly::clear_denominators() const {
  Exponents shift(vars_.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      shift[i] = std::max(shift[i], -e[i]);
  MultiPoly cleared{vars_};
  for (const auto& [e, c] : terms_) {
    Exponents ne(e);
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
    cleared.terms_.emplace(std::move(ne), c);
  }
  return {std::move(cleared), MultiPoly::monomial(vars_, shift, QuadRat(1))};
}

int MultiPoly::min_exponent(const std::string& var) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end() || terms_.empty()) return 0;
  std::size_t i = static_cast<std::size_t>(vit - vars_.begin());
  int m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

int MultiPoly::max_exponent(const std::string& var) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end() || terms_.empty()) return 0;
  std::size_t i = static_cast<std::size_t>(vit - vars_.begin());
  int m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

MultiPoly MultiPoly::stratum(const std::string& var, int want) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end())
    return want == 0 ? *this : MultiPoly{vars_};
  std::size_t i = static_cast<std::size_t>(vit - vars_.begin());
  MultiPoly out{vars_};
  for (const auto& [e, c] : terms_)
    if (e[i] == want) out.terms_.emplace(e, c);
  return out;
}

QuadRat MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QuadRat(0) : it->second;
}

BigRat MultiPoly::content() const {
  if (terms_.empty()) return BigRat(0);
  BigInt g = 0, l = 1;
  auto feed = [&](const BigRat& r) {
    if (r.is_zero()) return;
    BigInt num = r.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    BigInt den = r.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  };
  for (const auto& [e, c] : terms_) {
    feed(c.rational_part());
    feed(c.sqrt2_part());
  }
  return BigRat(g, l);
}

void MultiPoly::serialize(std::ostream& os) const {
  for (const auto& [e, c] : terms_) {
    os << "RAT " << c.rational_part().numerator().get_str() << "/"
       << c.rational_part().denominator().get_str() << " SQRT2 "
       << c.sqrt2_part().numerator().get_str() << "/"
       << c.sqrt2_part().denominator().get_str() << " :";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << " " << vars_[i] << "^" << e[i];
    os << "\n";
  }
}

std::string MultiPoly::to_canonical_string() const {
  std::ostringstream os;
  serialize(os);
  return os.str();
}

MultiPoly MultiPoly::parse_canonical(std::istream& is) {
  MultiPoly out;
  bool have_vars = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw, ratstr, kw2, s2str, colon;
    if (!(ls >> kw >> ratstr >> kw2 >> s2str >> colon) || kw != "RAT" || kw2 != "SQRT2" ||
        colon != ":")
      throw std::invalid_argument("MultiPoly::parse_canonical: bad line: " + line);
    QuadRat c(BigRat::parse(ratstr), BigRat::parse(s2str));
    std::vector<std::string> vars;
    Exponents exps;
    std::string tok;
    while (ls >> tok) {
      auto caret = tok.rfind('^');
      if (caret == std::string::npos)
        throw std::invalid_argument("MultiPoly::parse_canonical: bad monomial token " + tok);
      vars.push_back(tok.substr(0, caret));
      exps.push_back(std::stoi(tok.substr(caret + 1)));
    }
    if (!have_vars) {
      out.vars_ = vars;
      have_vars = true;
    } else if (vars != out.vars_) {
      throw std::invalid_argument("MultiPoly::parse_canonical: inconsistent universe");
    }
    out.add_term(exps, c);
  }
  return out;
}

std::string MultiPoly::to_pretty_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
  }
  return os.str();
}

}  // namespace cuboid
