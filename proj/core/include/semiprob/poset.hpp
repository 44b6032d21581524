#ifndef SEMIPROB_POSET_HPP
#define SEMIPROB_POSET_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semiprob/errors.hpp"

namespace semiprob {

/// Reads SEMIPROB_MAX_N when set, otherwise returns the given default.
/// All size-bounded operations route their limits through here.
int size_limit(int default_limit);

/// Finite strict partial order on {1..n}, stored as the full transitive
/// closure. Immutable after construction; cheap to copy for the sizes this
/// library targets (n up to ~100).
class Poset {
 public:
  Poset() = default;

  int size() const { return n_; }
  /// Strict order test, 1-based elements.
  bool less(int i, int j) const {
    check_element(i);
    check_element(j);
    return lt_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  std::vector<int> downset(int x) const;
  std::vector<int> upset(int x) const;
  std::vector<int> incomparables(int x) const;

  int downset_size(int x) const;
  int upset_size(int x) const;

  bool operator==(const Poset&) const = default;

  /// Wraps an already transitively closed matrix; validates irreflexivity
  /// and antisymmetry. Row-major n*n, entry (i-1)*n+(j-1) meaning i<j.
  static Poset from_closed_matrix(int n, std::vector<bool> lt);

 private:
  void check_element(int x) const {
    if (x < 1 || x > n_) throw IndexError("element " + std::to_string(x) + " out of range 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<bool> lt_;
};

/// Transitive closure of the given relation pairs. Throws CycleError when
/// the closure would relate an element to itself, IndexError on elements
/// outside 1..n.
Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations);

/// Order-reversed copy.
Poset dual(const Poset& p);

/// Subposet induced by the given elements, relabelled 1..k in list order.
Poset induced_subposet(const Poset& p, const std::vector<int>& elements);

/// Partition of {1..n} into maximal classes of elements with identical
/// downsets and upsets. Blocks and their members are sorted ascending.
struct TwinPartition {
  std::vector<std::vector<int>> blocks;
};
TwinPartition twin_partition(const Poset& p);

/// No induced 2+2 (Fishburn). Quadruple scan.
bool is_interval_order(const Poset& p);
/// No induced 2+2 and no induced 3+1 (Scott-Suppes). Quadruple scan.
bool is_semiorder(const Poset& p);

/// Lexicographic sum of the parts over a chain: earlier parts entirely
/// below later parts.
Poset lex_sum(const std::vector<Poset>& parts);
/// Disjoint union with no cross relations.
Poset graph_sum(const Poset& p, const Poset& q);

/// Canonical form of a semiorder: the sequence of downset sizes d_1..d_n
/// along the endpoint linear extension. Decodes via "i < j iff i <= d_j".
struct CanonicalCode {
  std::vector<int> d;

  auto operator<=>(const CanonicalCode&) const = default;

  int size() const { return static_cast<int>(d.size()); }
  /// Nondecreasing with 0 <= d_i < i.
  bool valid() const;
  Poset decode() const;

  /// "(0,0,1,2,4,4)"
  std::string str() const;
  static CanonicalCode parse(std::string_view text);
};

/// Throws NotSemiorderError unless is_semiorder(p).
CanonicalCode canonical_code(const Poset& p);

/// Semiorders compare by canonical code; general posets fall back to
/// permutation search up to the brute-force budget (default 8), beyond
/// which SizeLimitError is thrown.
bool is_isomorphic(const Poset& p, const Poset& q);

/// One canonical code per isomorphism class of semiorders on n elements,
/// lexicographically sorted. Class counts are the Catalan numbers.
/// Bounded by size_limit(9).
std::vector<CanonicalCode> enumerate_semiorders(int n);

/// Parses the poset text format
///     n=4
///     rel: 1<3, 2<4
/// or the JSON form {"n": 4, "relations": [[1,3],[2,4]]}. Whitespace is
/// insignificant; the transitive closure is applied on load.
Poset parse_poset(std::string_view text);
Poset load_poset_file(const std::string& path);

/// Text format with the cover relations (round-trips through parse_poset).
std::string format_poset(const Poset& p);

}  // namespace semiprob

#endif
