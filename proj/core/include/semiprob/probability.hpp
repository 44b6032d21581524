#ifndef SEMIPROB_PROBABILITY_HPP
#define SEMIPROB_PROBABILITY_HPP

#include <vector>

#include "semiprob/polynomial.hpp"
#include "semiprob/poset.hpp"

namespace semiprob {

/// N(P,L) = L^n F(P,L): the nested integral of n! over the bound
/// functions, a polynomial in L alone with zero constant term and degree
/// at most n.
struct ExactNumerator {
  Polynomial poly;  // universe num_x = 0, variable L only
  int n = 0;

  Rational coefficient(int degree) const { return poly.coefficient_of_length(degree); }
  int degree() const { return poly.total_degree(); }
  /// N(P, l)
  Rational value(const Rational& l) const;
  /// F(P, l) = N(P, l) / l^n
  Rational f_value(const Rational& l) const;
};

/// Throws NotSemiorderError; SizeLimitError above size_limit(12).
ExactNumerator exact_numerator(const Poset& p);

/// The unique splitting of a semiorder into bricks whose lexicographic sum
/// over a chain reconstructs it. A brick decomposes into a single part.
struct BrickDecomposition {
  std::vector<Poset> bricks;

  int count() const { return static_cast<int>(bricks.size()); }
  std::vector<int> sizes() const;
};
BrickDecomposition brick_decomposition(const Poset& p);

/// L^n Pr(P) ~ c L^k with k the brick count and
/// c = multinomial(n; |P_1|..|P_k|) c_1...c_k / k!.
struct AsymptoticForm {
  int k = 0;
  Rational c;
  int n = 0;
};
AsymptoticForm asymptotic_form(const Poset& p);

/// Brick count of p; the degree k of the asymptotic form.
int asymptotic_degree(const Poset& p);

}  // namespace semiprob

#endif
