#ifndef SEMIPROB_POLYNOMIAL_HPP
#define SEMIPROB_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiprob/rational.hpp"

namespace semiprob {

/// A variable of the integration ring: one of x_1..x_n or the interval
/// length L.
class Var {
 public:
  static Var x(int i) { return Var(i); }
  static Var length() { return Var(0); }

  bool is_length() const { return id_ == 0; }
  /// 1-based index of an x variable; 0 denotes L.
  int index() const { return id_; }

  bool operator==(const Var&) const = default;

 private:
  explicit Var(int id) : id_(id) {}
  int id_;
};

/// Multivariate polynomial in x_1..x_num_x and L with exact rational
/// coefficients. The variable universe (num_x) is fixed per value; mixing
/// universes throws UnknownVariableError. Internally a sparse map from
/// exponent vectors to nonzero coefficients.
class Polynomial {
 public:
  /// Exponents for x_1..x_num_x followed by the exponent of L.
  using Exponents = std::vector<int>;

  explicit Polynomial(int num_x = 0);

  static Polynomial constant(int num_x, const Rational& c);
  static Polynomial variable(int num_x, Var v);

  int num_x() const { return num_x_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  /// Largest total degree over all terms; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(Var v) const;

  /// Coefficient of the monomial with the given exponent vector
  /// (x exponents then L exponent; shorter vectors are zero-padded).
  Rational coefficient(const Exponents& exponents) const;
  /// Coefficient of L^k in a polynomial with no x dependence.
  Rational coefficient_of_length(int k) const;
  /// True when no x variable occurs (polynomial in L alone).
  bool depends_only_on_length() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  bool operator==(const Polynomial&) const = default;

  /// Replaces v by an arbitrary polynomial of the same universe.
  Polynomial substitute(Var v, const Polynomial& value) const;

  /// Binds every variable; x_values must have length num_x().
  Rational evaluate(std::span<const Rational> x_values, const Rational& length_value) const;

  /// Antiderivative with respect to v (integration constant zero).
  Polynomial antiderivative(Var v) const;

  /// Canonical string form: terms in graded-lex order (total degree first,
  /// then exponents over x_1,..,x_n,L), e.g. "12*L^2 - 28*L".
  std::string str() const;

  /// Parses the canonical form (and ordinary "+/-/*/^" polynomial syntax).
  static Polynomial parse(std::string_view text, int num_x);
  /// Same, inferring the universe from the largest x index mentioned.
  static Polynomial parse(std::string_view text);

 private:
  void check_same_universe(const Polynomial& other) const;
  void check_var(Var v) const;
  void normalize();

  int num_x_;
  std::map<Exponents, Rational> terms_;
};

/// Definite integral of p with respect to var between polynomial bounds.
/// Bounds must have total degree <= 1 and must not involve var or any x
/// variable with a larger index. The result no longer involves var.
Polynomial integrate_var(const Polynomial& p, Var var, const Polynomial& lower,
                         const Polynomial& upper);

}  // namespace semiprob

#endif
