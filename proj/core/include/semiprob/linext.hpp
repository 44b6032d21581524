#ifndef SEMIPROB_LINEXT_HPP
#define SEMIPROB_LINEXT_HPP

#include <span>
#include <string>
#include <vector>

#include "semiprob/polynomial.hpp"
#include "semiprob/poset.hpp"

namespace semiprob {

/// Endpoint linear extension: the order the representing intervals' left
/// endpoints must take. order[p-1] is the element at position p. Twins
/// occupy consecutive positions (ascending original index inside a block).
struct Extension {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  /// 1-based element at 1-based position.
  int at(int position) const { return order[position - 1]; }
};

/// Twins collapsed, elements sorted by increasing downset size with ties
/// broken by decreasing upset size, twins reinserted adjacent to their
/// representative. Throws NotSemiorderError.
Extension endpoint_extension(const Poset& p);

/// Symbolic bound on the left endpoint of the interval at one extension
/// position: 0, L, x_j, or x_j+1 with j a smaller position.
struct Bound {
  enum class Kind { zero, big_l, var, var_plus_one };

  Kind kind = Kind::zero;
  int index = 0;  // extension position j, for var / var_plus_one

  bool operator==(const Bound&) const = default;

  static Bound zero() { return {Kind::zero, 0}; }
  static Bound big_l() { return {Kind::big_l, 0}; }
  static Bound var(int j) { return {Kind::var, j}; }
  static Bound var_plus_one(int j) { return {Kind::var_plus_one, j}; }

  /// "0", "L", "x3", "x2+1"
  std::string str() const;
  /// Degree <= 1 polynomial over positions x_1..x_num_x and L.
  Polynomial to_polynomial(int num_x) const;
  double evaluate(std::span<const double> points, double big_l_value) const;
};

/// Lower bounds a_1..a_n and upper bounds b_1..b_n for the extension
/// positions; a_1 = 0 and b_1 = L always.
struct BoundSpec {
  std::vector<Bound> lower;
  std::vector<Bound> upper;

  int size() const { return static_cast<int>(lower.size()); }
  /// One line per position: "a(x4)=x2+1, b(x4)=x3+1".
  std::string str() const;
};

/// The bound construction over the prefix subposets of the extension.
BoundSpec bound_functions(const Poset& p, const Extension& ext);

/// True iff a_i < sample_i < b_i strictly for every position after
/// substituting the sample. sample must be sorted ascending and have the
/// poset's length (LengthMismatchError otherwise).
bool check_bounds_generate(const Poset& p, std::span<const double> sample, double big_l_value);

}  // namespace semiprob

#endif
