#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cuboid/quadrat.hpp"

namespace cuboid {

/// Sparse multivariate polynomial over Q(sqrt 2) in named variables.
/// Exponents are plain ints and may go negative in intermediate Laurent
/// forms (cleared by clear_denominators). Terms are kept in a std::map
/// keyed by the exponent vector, so iteration order is ascending
/// lexicographic and every derived artifact (serialization, counts,
/// hashes) is deterministic.
///
/// Values are immutable in spirit: all operations return new polynomials,
/// nothing mutates shared state, so instances can be shared across threads.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, QuadRat>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(const QuadRat& c);
  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, QuadRat coeff);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Number of stored monomials (coefficients in Q(sqrt 2)).
  std::size_t monomial_count() const { return terms_.size(); }
  /// Monomial count with a+b*sqrt2 coefficients split into components,
  /// i.e. the count over a Z-basis {1, sqrt2}.
  std::size_t component_count() const;

  /// Re-express over a larger universe (zero exponents for new variables).
  /// Throws if a variable actually used would be dropped.
  MultiPoly with_universe(const std::vector<std::string>& vars) const;
  static std::vector<std::string> merge_universes(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator*(const QuadRat& s) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Composition: every occurrence of `var` replaced by `replacement`.
  /// Negative source exponents are allowed only for single-monomial
  /// replacements (exactly invertible).
  MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;

  QuadRat eval(const std::map<std::string, QuadRat>& assignment) const;

  struct Cleared;
  /// Minimal per-variable shift making all exponents nonnegative.
  Cleared clear_denominators() const;

  int min_exponent(const std::string& var) const;
  int max_exponent(const std::string& var) const;
  /// Terms whose exponent of `var` equals e (exponent kept as-is).
  MultiPoly stratum(const std::string& var, int e) const;
  QuadRat coeff(const Exponents& exps) const;

  /// gcd of all integer coefficient components divided by the lcm of
  /// denominators; dividing by it yields the primitive part.
  BigRat content() const;

  /// Canonical text serialization: one monomial per line,
  ///   RAT a/b SQRT2 c/d : v1^e1 v2^e2 ...
  /// ascending lexicographic in the exponent vector.
  std::string to_canonical_string() const;
  void serialize(std::ostream& os) const;
  static MultiPoly parse_canonical(std::istream& is);

  std::string to_pretty_string() const;

 private:
  void add_term(const Exponents& e, const QuadRat& c);
  static void check_exponent(long e);

  std::vector<std::string> vars_;
  TermMap terms_;

  friend class MultiPolyBuilder;
};

struct MultiPoly::Cleared {
  MultiPoly poly;      // no negative exponents
  MultiPoly clearing;  // monomial M with original * M == poly
};

/// Convenience incremental builder used by the construction routines.
class MultiPolyBuilder {
 public:
  explicit MultiPolyBuilder(std::vector<std::string> vars) { p_.vars_ = std::move(vars); }
  void add(const MultiPoly::Exponents& e, const QuadRat& c) { p_.add_term(e, c); }
  MultiPoly take() { return std::move(p_); }

 private:
  MultiPoly p_;
};

}  // namespace cuboid
