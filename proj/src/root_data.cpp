#include "icvp/root_data.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "icvp/errors.hpp"

namespace icvp {

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int node : nodes) {
    if (node < 1 || node > kMaxNodes) throw InvalidArgs("node label out of range: " + std::to_string(node));
    bits_ |= 1u << (node - 1);
  }
}

NodeSet NodeSet::all(int rank) {
  if (rank < 0 || rank > kMaxNodes) throw InvalidArgs("rank out of range: " + std::to_string(rank));
  return NodeSet(rank == 0 ? 0u : (~0u >> (32 - rank)));
}

bool NodeSet::contains(int node) const noexcept {
  return node >= 1 && node <= kMaxNodes && (bits_ >> (node - 1) & 1u) != 0;
}

int NodeSet::size() const noexcept { return std::popcount(bits_); }

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int node = 1; node <= kMaxNodes; ++node) {
    if (contains(node)) out.push_back(node);
  }
  return out;
}

SimpleType SimpleType::make(Family family, int rank) {
  auto reject = [&] {
    return InvalidArgs(std::string("no simple type ") + static_cast<char>(family) + std::to_string(rank));
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw reject();
      break;
    case Family::B:
    case Family::C:
      if (rank < 1) throw reject();
      if (rank == 1) return {Family::A, 1};
      break;
    case Family::D:
      if (rank < 3) throw reject();
      if (rank == 3) return {Family::A, 3};
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw reject();
      break;
    case Family::F:
      if (rank != 4) throw reject();
      break;
    case Family::G:
      if (rank != 2) throw reject();
      break;
    default:
      throw reject();
  }
  if (rank > (family == Family::A ? SimpleType::kMaxTypeARank : NodeSet::kMaxNodes)) throw reject();
  return {family, rank};
}

std::string SimpleType::name() const { return static_cast<char>(family_) + std::to_string(rank_); }

GroupType::GroupType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

GroupType::GroupType(SimpleType factor) : factors_{factor} {}

GroupType GroupType::of(Family family, int rank) {
  if (family == Family::D && rank == 2) {
    auto a1 = SimpleType::make(Family::A, 1);
    return GroupType({a1, a1});
  }
  return GroupType(SimpleType::make(family, rank));
}

GroupType GroupType::parse(std::string_view text) {
  GroupType out;
  std::size_t pos = 0;
  auto at_end = [&] { return pos >= text.size(); };
  while (true) {
    if (at_end()) throw ParseError("expected a family letter (A-G)", pos);
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter < 'A' || letter > 'G') throw ParseError(std::string("unknown family '") + text[pos] + "'", pos);
    const std::size_t family_pos = pos++;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a rank after family letter", pos);
    }
    int rank = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      rank = rank * 10 + (text[pos++] - '0');
      if (rank > 1000) throw ParseError("rank too large", family_pos);
    }
    try {
      out = out * GroupType::of(static_cast<Family>(letter), rank);
    } catch (const InvalidArgs& e) {
      throw ParseError(e.what(), family_pos);
    }
    if (at_end()) break;
    if (text[pos] != '+') throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    ++pos;
  }
  return out;
}

int GroupType::rank() const noexcept {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

std::string GroupType::key() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '+';
    out += f.name();
  }
  return out;
}

GroupType operator*(const GroupType& a, const GroupType& b) {
  std::vector<SimpleType> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return GroupType(std::move(all));
}

DynkinDiagram::DynkinDiagram(int rank, std::vector<DynkinEdge> edges) : rank_(rank), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.from < 1 || e.from > rank_ || e.to < 1 || e.to > rank_ || e.from == e.to || e.multiplicity < 1 ||
        e.multiplicity > 3) {
      throw InvalidArgs("malformed Dynkin edge");
    }
  }
}

DynkinDiagram DynkinDiagram::of(SimpleType type) {
  const int n = type.rank();
  std::vector<DynkinEdge> edges;
  auto chain = [&](int first, int last) {
    for (int i = first; i < last; ++i) edges.push_back({i, i + 1, 1});
  };
  switch (type.family()) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n - 1);
      edges.push_back({n - 1, n, 2});
      break;
    case Family::C:
      chain(1, n - 1);
      edges.push_back({n, n - 1, 2});
      break;
    case Family::D:
      chain(1, n - 1);
      edges.push_back({n - 2, n, 1});
      break;
    case Family::E:
      edges.push_back({1, 3, 1});
      edges.push_back({2, 4, 1});
      chain(3, n);
      break;
    case Family::F:
      edges = {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
      break;
    case Family::G:
      edges = {{2, 1, 3}};
      break;
  }
  return {n, std::move(edges)};
}

namespace {

struct Component {
  std::vector<int> nodes;  // ambient labels, ascending
  std::vector<DynkinEdge> edges;
};

std::vector<Component> components(int rank, std::span<const DynkinEdge> edges, NodeSet removed) {
  std::vector<int> root(rank + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (!removed.contains(e.from) && !removed.contains(e.to)) root[find(e.from)] = find(e.to);
  }
  std::vector<Component> out;
  std::vector<int> slot(rank + 1, -1);
  for (int v = 1; v <= rank; ++v) {
    if (removed.contains(v)) continue;
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].nodes.push_back(v);
  }
  for (const auto& e : edges) {
    if (!removed.contains(e.from) && !removed.contains(e.to)) out[slot[find(e.from)]].edges.push_back(e);
  }
  return out;
}

SimpleType classify(const Component& c) {
  const int k = static_cast<int>(c.nodes.size());
  auto fail = [&](const std::string& why) {
    std::string labels;
    for (int v : c.nodes) labels += (labels.empty() ? "" : ",") + std::to_string(v);
    return InternalConsistency("diagram component {" + labels + "} is not a Dynkin diagram: " + why);
  };
  if (static_cast<int>(c.edges.size()) != k - 1) throw fail("not a tree");
  if (k == 1) return SimpleType::make(Family::A, 1);

  std::vector<int> degree_of(c.nodes.back() + 1, 0);
  std::vector<std::vector<int>> adjacent(c.nodes.back() + 1);
  const DynkinEdge* multiple = nullptr;
  for (const auto& e : c.edges) {
    ++degree_of[e.from];
    ++degree_of[e.to];
    adjacent[e.from].push_back(e.to);
    adjacent[e.to].push_back(e.from);
    if (e.multiplicity > 1) {
      if (multiple != nullptr) throw fail("more than one multiple edge");
      multiple = &e;
    }
  }
  std::vector<int> branch_nodes;
  for (int v : c.nodes) {
    if (degree_of[v] > 3) throw fail("node of degree > 3");
    if (degree_of[v] == 3) branch_nodes.push_back(v);
  }

  if (multiple == nullptr) {
    if (branch_nodes.empty()) return SimpleType::make(Family::A, k);
    if (branch_nodes.size() > 1) throw fail("two branch nodes");
    const int centre = branch_nodes.front();
    std::vector<int> arms;
    for (int start : adjacent[centre]) {
      int len = 1;
      int prev = centre;
      int cur = start;
      while (degree_of[cur] == 2) {
        const int next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return SimpleType::make(Family::D, k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return SimpleType::make(Family::E, k);
    throw fail("branched diagram of affine or hyperbolic type");
  }

  if (!branch_nodes.empty()) throw fail("branch node together with a multiple edge");
  if (multiple->multiplicity == 3) {
    if (k != 2) throw fail("triple edge in a diagram of more than two nodes");
    return SimpleType::make(Family::G, 2);
  }
  const int long_end = multiple->from;
  const int short_end = multiple->to;
  if (k == 2) {
    // Read in ambient order: long first is B2, short first is C2.
    return SimpleType::make(long_end < short_end ? Family::B : Family::C, 2);
  }
  if (degree_of[short_end] == 1) return SimpleType::make(Family::B, k);
  if (degree_of[long_end] == 1) return SimpleType::make(Family::C, k);
  if (k == 4) return SimpleType::make(Family::F, 4);
  throw fail("interior double edge in a diagram that is not F4");
}

}  // namespace

std::vector<SimpleType> DynkinDiagram::classify_components(NodeSet removed) const {
  if ((removed.bits() & ~NodeSet::all(rank_).bits()) != 0) {
    throw InvalidArgs("node subset is not contained in the diagram");
  }
  std::vector<SimpleType> out;
  for (const auto& c : components(rank_, edges_, removed)) out.push_back(classify(c));
  return out;
}

std::vector<int> degrees(SimpleType type) {
  const int n = type.rank();
  std::vector<int> out;
  switch (type.family()) {
    case Family::A:
      for (int e = 2; e <= n + 1; ++e) out.push_back(e);
      break;
    case Family::B:
    case Family::C:
      for (int e = 1; e <= n; ++e) out.push_back(2 * e);
      break;
    case Family::D:
      for (int e = 1; e < n; ++e) out.push_back(2 * e);
      out.push_back(n);
      break;
    case Family::E:
      if (n == 6) out = {2, 5, 6, 8, 9, 12};
      if (n == 7) out = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) out = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      out = {2, 6, 8, 12};
      break;
    case Family::G:
      out = {2, 6};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPoly f_poly(const GroupType& group) {
  IntPoly f{1};
  for (const auto& factor : group.factors()) {
    for (int e : degrees(factor)) f *= IntPoly{1} - IntPoly::monomial(1, e);
  }
  return f;
}

int dim_x(const GroupType& group) {
  int d = 0;
  for (const auto& factor : group.factors()) {
    for (int e : degrees(factor)) d += e;
  }
  return d;
}

GroupType levi_subtype(SimpleType type, NodeSet removed) {
  return GroupType(DynkinDiagram::of(type).classify_components(removed));
}

Integer group_order(const GroupType& group, const Integer& q) {
  const int r = group.rank();
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(dim_x(group) - r));
  Integer out = power * f_poly(group).evaluate(q);
  return r % 2 == 0 ? out : Integer(-out);
}

}  // namespace icvp
