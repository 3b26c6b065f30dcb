#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "icvp/errors.hpp"
#include "icvp/root_data.hpp"

using namespace icvp;

namespace {

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(SimpleType::make(Family::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(SimpleType::make(Family::B, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(SimpleType::make(Family::C, r));
  for (int r = 4; r <= max_rank; ++r) out.push_back(SimpleType::make(Family::D, r));
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back(SimpleType::make(Family::E, r));
  if (max_rank >= 4) out.push_back(SimpleType::make(Family::F, 4));
  out.push_back(SimpleType::make(Family::G, 2));
  return out;
}

// (lo, hi) -> multiplicity, with the sign recording which end is long.
using EdgeMap = std::map<std::pair<int, int>, int>;

EdgeMap edge_map(const DynkinDiagram& diagram) {
  EdgeMap m;
  for (const auto& e : diagram.edges()) {
    const int lo = std::min(e.from, e.to), hi = std::max(e.from, e.to);
    m[{lo, hi}] = e.multiplicity == 1 ? 1 : (e.from == lo ? e.multiplicity : -e.multiplicity);
  }
  return m;
}

int oriented(const EdgeMap& m, int a, int b) {
  const auto it = m.find({std::min(a, b), std::max(a, b)});
  if (it == m.end()) return 0;
  if (it->second == 1 || a < b) return it->second;
  return -it->second;
}

bool isomorphic(const EdgeMap& ambient, const std::vector<int>& nodes, SimpleType candidate) {
  const EdgeMap standard = edge_map(DynkinDiagram::of(candidate));
  std::vector<int> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < nodes.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < nodes.size() && ok; ++b) {
        ok = oriented(ambient, nodes[a], nodes[b]) == oriented(standard, perm[a], perm[b]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string canonical_name(SimpleType t) { return t.name() == "C2" ? "B2" : t.name(); }

// Components by flood fill, each named by exhaustive isomorphism search.
std::vector<std::string> oracle_components(SimpleType type, NodeSet removed) {
  const DynkinDiagram diagram = DynkinDiagram::of(type);
  const EdgeMap ambient = edge_map(diagram);
  std::vector<int> label(type.rank() + 1, 0);
  std::vector<std::string> names;
  for (int start = 1; start <= type.rank(); ++start) {
    if (removed.contains(start) || label[start]) continue;
    std::vector<int> nodes{start}, stack{start};
    label[start] = start;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 1; w <= type.rank(); ++w) {
        if (!removed.contains(w) && !label[w] && oriented(ambient, v, w) != 0) {
          label[w] = start;
          nodes.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    const int k = static_cast<int>(nodes.size());
    std::vector<SimpleType> candidates{SimpleType::make(Family::A, k)};
    if (k >= 2) candidates.push_back(SimpleType::make(Family::B, k));
    if (k >= 3) candidates.push_back(SimpleType::make(Family::C, k));
    if (k >= 4) candidates.push_back(SimpleType::make(Family::D, k));
    if (k >= 6 && k <= 8) candidates.push_back(SimpleType::make(Family::E, k));
    if (k == 4) candidates.push_back(SimpleType::make(Family::F, 4));
    if (k == 2) candidates.push_back(SimpleType::make(Family::G, 2));
    std::string found;
    for (const auto& c : candidates) {
      if (isomorphic(ambient, nodes, c)) {
        EXPECT_TRUE(found.empty()) << "ambiguous component in " << type.name();
        found = canonical_name(c);
      }
    }
    names.push_back(found);
  }
  std::sort(names.begin(), names.end());
  return names;
}

Integer det_mod(const std::vector<int>& m, int n, int p) {
  if (n == 2) return ((m[0] * m[3] - m[1] * m[2]) % p + p) % p;
  const long d = static_cast<long>(m[0]) * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                 m[2] * (m[3] * m[7] - m[4] * m[6]);
  return ((d % p) + p) % p;
}

Integer count_special_linear(int n, int p) {
  const int cells = n * n;
  std::vector<int> m(cells, 0);
  Integer count = 0;
  long total = 1;
  for (int k = 0; k < cells; ++k) total *= p;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int k = 0; k < cells; ++k, c /= p) m[k] = static_cast<int>(c % p);
    if (det_mod(m, n, p) == 1) ++count;
  }
  return count;
}

}  // namespace

TEST(SimpleType, Canonicalization) {
  EXPECT_EQ(SimpleType::make(Family::B, 1), SimpleType::make(Family::A, 1));
  EXPECT_EQ(SimpleType::make(Family::C, 1), SimpleType::make(Family::A, 1));
  EXPECT_EQ(SimpleType::make(Family::D, 3), SimpleType::make(Family::A, 3));
  EXPECT_EQ(GroupType::of(Family::D, 2).key(), "A1+A1");
  EXPECT_NE(SimpleType::make(Family::B, 2), SimpleType::make(Family::C, 2));
  EXPECT_THROW(SimpleType::make(Family::E, 9), InvalidArgs);
  EXPECT_THROW(SimpleType::make(Family::F, 3), InvalidArgs);
  EXPECT_THROW(SimpleType::make(Family::G, 3), InvalidArgs);
  EXPECT_THROW(SimpleType::make(Family::A, 0), InvalidArgs);
}

TEST(GroupType, Parse) {
  EXPECT_EQ(GroupType::parse("A2+B3+A2").key(), "A2+A2+B3");
  EXPECT_EQ(GroupType::parse("g2").key(), "G2");
  EXPECT_EQ(GroupType::parse("D2").key(), "A1+A1");
  EXPECT_EQ(GroupType::parse("A12").rank(), 12);
  EXPECT_EQ(GroupType::parse("A1+A1").rank(), 2);
}

TEST(GroupType, ParseErrorsCarryPositions) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"X3", 0}, {"A", 1}, {"A2+", 3}, {"A2+Q1", 3}, {"", 0}, {"A2B3", 2}};
  for (const auto& [text, position] : cases) {
    try {
      GroupType::parse(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), position) << text << ": " << e.what();
    }
  }
  EXPECT_THROW(GroupType::parse("E9"), ParseError);
}

TEST(Degrees, LengthIsRankAndSumIsDimension) {
  for (const auto& t : all_simple_types(9)) {
    const auto d = degrees(t);
    EXPECT_EQ(static_cast<int>(d.size()), t.rank()) << t.name();
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0), dim_x(t)) << t.name();
    EXPECT_EQ(f_poly(t).degree(), dim_x(t)) << t.name();
  }
  EXPECT_EQ(degrees(SimpleType::make(Family::E, 8)), (std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30}));
  EXPECT_EQ(degrees(SimpleType::make(Family::D, 4)), (std::vector<int>{2, 4, 4, 6}));
  EXPECT_EQ(dim_x(GroupType()), 0);
  EXPECT_EQ(f_poly(GroupType()), IntPoly({1}));
}

TEST(Degrees, BAndCShareDegrees) {
  for (int r = 2; r <= 9; ++r) {
    EXPECT_EQ(degrees(SimpleType::make(Family::B, r)), degrees(SimpleType::make(Family::C, r)));
  }
}

TEST(LeviSubtype, MatchesIsomorphismOracle) {
  for (const auto& t : all_simple_types(8)) {
    for (std::uint32_t bits = 0; bits < (1u << t.rank()); ++bits) {
      const NodeSet removed(bits);
      std::vector<std::string> names;
      const GroupType levi = levi_subtype(t, removed);
      for (const auto& f : levi.factors()) names.push_back(canonical_name(f));
      std::sort(names.begin(), names.end());
      ASSERT_EQ(names, oracle_components(t, removed)) << t.name() << " bits " << bits;
    }
  }
}

TEST(LeviSubtype, Examples) {
  const auto a4 = SimpleType::make(Family::A, 4);
  EXPECT_EQ(levi_subtype(a4, NodeSet{2}).key(), "A1+A2");
  EXPECT_EQ(levi_subtype(a4, NodeSet::all(4)).key(), "1");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::E, 8), NodeSet{8}).key(), "E7");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::E, 8), NodeSet{1}).key(), "D7");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::F, 4), NodeSet{4}).key(), "B3");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::F, 4), NodeSet{1}).key(), "C3");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::D, 5), NodeSet{1}).key(), "D4");
  EXPECT_EQ(levi_subtype(SimpleType::make(Family::D, 5), NodeSet{3}).key(), "A1+A1+A2");
}

TEST(GroupOrder, SpecialLinearBruteForce) {
  const auto a1 = GroupType::of(Family::A, 1);
  for (int p : {2, 3, 5}) EXPECT_EQ(group_order(a1, p), count_special_linear(2, p)) << p;
  const auto a2 = GroupType::of(Family::A, 2);
  EXPECT_EQ(count_special_linear(3, 2), 168);
  EXPECT_EQ(group_order(a2, 2), 168);
  EXPECT_EQ(group_order(a2, 3), count_special_linear(3, 3));
  EXPECT_EQ(group_order(a2, 3), 5616);
}

TEST(GroupOrder, SymplecticBruteForce) {
  // M^T J M = J over F_2 with J = [[0, I], [I, 0]].
  auto form = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return (x[0] * y[2] + x[1] * y[3] + x[2] * y[0] + x[3] * y[1]) & 1;
  };
  Integer count = 0;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    std::array<std::array<int, 4>, 4> col{};
    for (int k = 0; k < 16; ++k) col[k / 4][k % 4] = code >> k & 1;
    bool ok = true;
    for (int a = 0; a < 4 && ok; ++a) {
      for (int b = 0; b < 4 && ok; ++b) {
        const int expected = (a + 2 == b || b + 2 == a) ? 1 : 0;
        ok = form(col[a], col[b]) == expected;
      }
    }
    if (ok) ++count;
  }
  EXPECT_EQ(count, 720);
  EXPECT_EQ(group_order(GroupType::of(Family::C, 2), 2), count);
  EXPECT_EQ(group_order(GroupType::of(Family::B, 2), 2), count);
}

TEST(GroupOrder, G2AtTwo) { EXPECT_EQ(group_order(GroupType::of(Family::G, 2), 2), 12096); }
