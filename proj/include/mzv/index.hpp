#ifndef MZV_INDEX_HPP
#define MZV_INDEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// A composition (k_1, ..., k_d) of positive integers naming a zeta symbol.
/// The empty index is legal and stands for the empty symbol.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t depth() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  int weight() const noexcept;
  int height() const noexcept;
  /// k_1 >= 2 (and depth >= 1).
  bool admissible() const noexcept;

  /// Reversed order of parts.
  Index reversed() const;
  /// Concatenation.
  Index operator+(const Index& other) const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

struct IndexStats {
  int weight = 0;
  int depth = 0;
  int height = 0;
  bool admissible = false;

  friend bool operator==(const IndexStats&, const IndexStats&) = default;
};

IndexStats stats(const Index& k);

/// Dual index k^dagger from the (a_p, b_p) run decomposition. Throws AdmissibilityError.
Index dual(const Index& k);

/// Hoffman's dual k^vee: exchange commas and plus signs in 1+...+1,... Throws DomainError on ().
Index hoffman_dual(const Index& k);

/// All k' refining k (k recovered by summing adjacent blocks), lexicographic order.
std::vector<Index> refinements(const Index& k);

/// Compositions of n into exactly `parts` positive parts, lexicographic order.
std::vector<Index> compositions(int n, int parts);

/// Compositions of n into exactly `parts` nonnegative parts, lexicographic order.
std::vector<std::vector<int>> weak_compositions(int n, int parts);

/// Componentwise sum of two indices (or an index and a shift vector) of equal depth.
Index add_parts(const Index& k, const std::vector<int>& shift);

/// All indices of the given weight (any depth >= 1), lexicographic order.
std::vector<Index> indices_of_weight(int weight);

/// Parses "4,1,1,1" or "(4,1,1,1)" with arbitrary whitespace. The empty string
/// and "()" give the empty index.
Index parse_index(std::string_view text);

/// Canonical text: comma separated parts, no parentheses.
std::string format_index(const Index& k);

std::ostream& operator<<(std::ostream& os, const Index& k);

}  // namespace mzv

#endif  // MZV_INDEX_HPP
