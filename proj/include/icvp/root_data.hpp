#ifndef ICVP_ROOT_DATA_HPP
#define ICVP_ROOT_DATA_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icvp/poly.hpp"

namespace icvp {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Subset of Dynkin nodes, 1-based (Bourbaki labels). Rank is capped at 31.
class NodeSet {
 public:
  static constexpr int kMaxNodes = 31;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes);

  static NodeSet all(int rank);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  bool contains(int node) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  std::vector<int> nodes() const;

  friend constexpr bool operator==(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// A simple Dynkin type. Construction canonicalizes B1, C1 -> A1 and D3 -> A3;
// D2 is not simple (see GroupType::of).
class SimpleType {
 public:
  // Type A goes up to kMaxTypeARank (it has a recursion without node
  // subsets); other families are limited to NodeSet::kMaxNodes.
  static constexpr int kMaxTypeARank = 511;
  static SimpleType make(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  // Sorted by family letter, then rank.
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  SimpleType(Family family, int rank) : family_(family), rank_(rank) {}

  Family family_;
  int rank_;
};

// Canonically sorted multiset of simple factors; empty = trivial group.
class GroupType {
 public:
  GroupType() = default;
  explicit GroupType(std::vector<SimpleType> factors);
  GroupType(SimpleType factor);  // NOLINT: a simple type is a group type

  // Handles every low-rank coincidence, including D2 = A1+A1.
  static GroupType of(Family family, int rank);

  // SPEC := FACTOR ("+" FACTOR)*, FACTOR := FAMILY RANK. Throws ParseError.
  static GroupType parse(std::string_view text);

  const std::vector<SimpleType>& factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_simple() const noexcept { return factors_.size() == 1; }
  int rank() const noexcept;

  // "A2+A2+B3"; the trivial group is "1".
  std::string key() const;

  friend GroupType operator*(const GroupType& a, const GroupType& b);
  friend auto operator<=>(const GroupType&, const GroupType&) = default;

 private:
  std::vector<SimpleType> factors_;
};

struct DynkinEdge {
  // For multiplicity > 1 the arrow points from the long root `from` to the short root `to`.
  int from;
  int to;
  int multiplicity;
};

// Bourbaki-labelled Dynkin diagram:
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n          (n short)
//   C_n  1 - ... - (n-1) <= n          (n long)
//   D_n  1 - ... - (n-2) - (n-1), (n-2) - n
//   E_n  1 - 3 - 4 - 5 - ... - n, 2 - 4
//   F_4  1 - 2 => 3 - 4
//   G_2  1 <≡ 2                         (1 short, 2 long)
class DynkinDiagram {
 public:
  static DynkinDiagram of(SimpleType type);
  DynkinDiagram(int rank, std::vector<DynkinEdge> edges);

  int rank() const noexcept { return rank_; }
  std::span<const DynkinEdge> edges() const noexcept { return edges_; }

  // Connected components of the diagram with `removed` deleted, each
  // classified as a simple type. Component node order follows the ambient
  // labelling; that is what decides B2 versus C2.
  std::vector<SimpleType> classify_components(NodeSet removed) const;

 private:
  int rank_;
  std::vector<DynkinEdge> edges_;
};

// Fundamental degrees, ascending.
std::vector<int> degrees(SimpleType type);

// prod over all degrees e of (1 - t^e).
IntPoly f_poly(const GroupType& group);

// Sum of all fundamental degrees = dim X_G.
int dim_x(const GroupType& group);

// Semisimple type of the Levi subgroup obtained by deleting `removed` from the diagram.
GroupType levi_subtype(SimpleType type, NodeSet removed);

// |G(F_q)| = (-1)^rank q^(d - rank) f_G(q).
Integer group_order(const GroupType& group, const Integer& q);

}  // namespace icvp

#endif  // ICVP_ROOT_DATA_HPP
