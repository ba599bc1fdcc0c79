#include "dessins/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dessins {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt bigint_pow(const BigInt& base, int exp) {
  BigInt result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims)
// ---------------------------------------------------------------------------

struct GroupHandle::Chain {
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal;  // by point, 1..degree
  };

  int degree;
  std::vector<Level> levels;
  BigInt order = 1;

  Chain(int deg, const std::vector<Permutation>& generators,
        const std::vector<int>& base_prefix)
      : degree(deg) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree mismatch");
      if (!g.is_identity()) gens.push_back(g);
    }

    std::vector<int> base;
    for (int b : base_prefix) {
      if (b < 1 || b > degree) throw std::invalid_argument("base point out of range");
      if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
    }
    // Every non-identity generator must move some base point.
    for (const auto& g : gens) {
      bool moved = std::any_of(base.begin(), base.end(),
                               [&](int b) { return g(b) != b; });
      if (!moved) {
        for (int p = 1; p <= degree; ++p) {
          if (g(p) != p) {
            base.push_back(p);
            break;
          }
        }
      }
    }

    if (base.empty()) return;  // trivial group (forced prefix may still apply)

    levels.resize(base.size());
    for (size_t l = 0; l < base.size(); ++l) {
      levels[l].base_point = base[l];
      for (const auto& g : gens) {
        bool stabilizes = true;
        for (size_t k = 0; k < l; ++k) {
          if (g(base[k]) != base[k]) {
            stabilizes = false;
            break;
          }
        }
        if (stabilizes) levels[l].gens.push_back(g);
      }
      rebuild_orbit(l);
    }

    // Verify levels bottom-up; a dirty Schreier generator jumps back down.
    size_t i = levels.size();
    while (i >= 1) {
      const size_t li = i - 1;
      size_t jump = 0;  // 1-indexed level to resume from, 0 = clean
      for (size_t oi = 0; jump == 0 && oi < levels[li].orbit.size(); ++oi) {
        const int beta = levels[li].orbit[oi];
        const Permutation u_beta = *levels[li].transversal[beta];
        for (size_t xi = 0; jump == 0 && xi < levels[li].gens.size(); ++xi) {
          const Permutation x = levels[li].gens[xi];
          Permutation schreier =
              u_beta * x * levels[li].transversal[x(beta)]->inverse();
          if (schreier.is_identity()) continue;

          auto [h, j] = strip(schreier);
          if (j == levels.size()) {
            if (h.is_identity()) continue;
            int next_point = 1;
            while (h(next_point) == next_point) ++next_point;
            Level fresh;
            fresh.base_point = next_point;
            levels.push_back(std::move(fresh));
          }
          for (size_t m = i; m <= j; ++m) {
            levels[m].gens.push_back(h);
            rebuild_orbit(m);
          }
          jump = j + 1;
        }
      }
      if (jump)
        i = jump;
      else
        --i;
    }

    order = 1;
    for (const auto& lvl : levels) order *= static_cast<int>(lvl.orbit.size());
  }

  void rebuild_orbit(size_t l) {
    Level& lvl = levels[l];
    lvl.orbit.clear();
    lvl.transversal.assign(degree + 1, std::nullopt);
    lvl.orbit.push_back(lvl.base_point);
    lvl.transversal[lvl.base_point] = Permutation(degree);
    for (size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
      int gamma = lvl.orbit[qi];
      for (const auto& g : lvl.gens) {
        int delta = g(gamma);
        if (!lvl.transversal[delta]) {
          lvl.transversal[delta] = *lvl.transversal[gamma] * g;
          lvl.orbit.push_back(delta);
        }
      }
    }
  }

  // Sift through the chain; returns the residue and the first level index at
  // which sifting failed (levels.size() on a full pass).
  std::pair<Permutation, size_t> strip(Permutation p) const {
    for (size_t l = 0; l < levels.size(); ++l) {
      int beta = p(levels[l].base_point);
      if (!levels[l].transversal[beta]) return {std::move(p), l};
      p = p * levels[l].transversal[beta]->inverse();
    }
    return {std::move(p), levels.size()};
  }

  bool contains(const Permutation& p) const {
    auto [residue, level] = strip(p);
    return level == levels.size() && residue.is_identity();
  }

  BigInt suborder(size_t from_level) const {
    BigInt result = 1;
    for (size_t l = from_level; l < levels.size(); ++l)
      result *= static_cast<int>(levels[l].orbit.size());
    return result;
  }
};

GroupHandle::GroupHandle(std::vector<Permutation> generators, int degree)
    : GroupHandle(std::move(generators), degree, {}) {}

GroupHandle::GroupHandle(std::vector<Permutation> generators, int degree,
                         std::vector<int> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  chain_ = std::make_shared<const Chain>(degree_, generators_, base_prefix);
}

const BigInt& GroupHandle::order() const { return chain_->order; }

bool GroupHandle::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  return chain_->contains(p);
}

std::vector<int> GroupHandle::orbit_of(int point) const {
  std::vector<int> orbit{point};
  std::vector<char> seen(degree_ + 1, 0);
  seen[point] = 1;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      int image = g(orbit[i]);
      if (!seen[image]) {
        seen[image] = 1;
        orbit.push_back(image);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool GroupHandle::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit_of(1).size()) == degree_;
}

std::vector<Permutation> GroupHandle::stabilizer_generators(size_t prefix_len) const {
  if (prefix_len >= chain_->levels.size()) return {};
  return chain_->levels[prefix_len].gens;
}

BigInt GroupHandle::stabilizer_order(size_t prefix_len) const {
  return chain_->suborder(prefix_len);
}

Permutation GroupHandle::random_element(std::mt19937_64& rng) const {
  Permutation x(degree_);
  for (size_t l = chain_->levels.size(); l-- > 0;) {
    const auto& lvl = chain_->levels[l];
    std::uniform_int_distribution<size_t> pick(0, lvl.orbit.size() - 1);
    x = x * (*lvl.transversal[lvl.orbit[pick(rng)]]);
  }
  return x;
}

std::vector<Permutation> GroupHandle::elements(std::uint64_t cap) const {
  if (order() > cap) throw std::runtime_error("group too large to enumerate");
  std::vector<Permutation> elems{Permutation(degree_)};
  std::set<std::vector<int>> seen{elems[0].images()};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation next = elems[i] * g;
      if (seen.insert(next.images()).second) elems.push_back(std::move(next));
    }
  }
  return elems;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

std::optional<BigInt> brute_force_order(const std::vector<Permutation>& gens,
                                        int degree, std::uint64_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");

  auto key = [](const Permutation& p) {
    std::string s(p.images().size(), '\0');
    for (size_t i = 0; i < p.images().size(); ++i)
      s[i] = static_cast<char>(p.images()[i]);
    return s;
  };

  std::vector<Permutation> frontier{Permutation(degree)};
  std::unordered_set<std::string> seen{key(frontier[0])};
  for (size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = frontier[i] * g;
      if (seen.insert(key(next)).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(std::move(next));
      }
    }
  }
  return BigInt(frontier.size());
}

// ---------------------------------------------------------------------------
// Block systems
// ---------------------------------------------------------------------------

int BlockSystem::block_of(int point) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), point))
      return static_cast<int>(i) + 1;
  throw std::invalid_argument("point not covered by block system");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

}  // namespace

std::optional<BlockSystem> minimal_block_system(const GroupHandle& G, int a, int b) {
  if (!G.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  const int n = G.degree();
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    throw std::invalid_argument("invalid seed pair");

  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  uf.unite(a, b);
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (const auto& g : G.generators()) {
      int gx = g(x), gy = g(y);
      if (uf.unite(gx, gy)) work.emplace_back(gx, gy);
    }
  }

  std::map<int, std::vector<int>> classes;
  for (int p = 1; p <= n; ++p) classes[uf.find(p)].push_back(p);
  if (classes.size() <= 1) return std::nullopt;

  BlockSystem system;
  for (auto& [root, members] : classes) system.blocks.push_back(members);
  std::sort(system.blocks.begin(), system.blocks.end());
  const size_t size = system.blocks[0].size();
  for (const auto& block : system.blocks)
    if (block.size() != size)
      throw std::logic_error("non-uniform block sizes for transitive group");
  return system;
}

std::vector<BlockSystem> all_minimal_block_systems(const GroupHandle& G) {
  std::vector<BlockSystem> systems;
  for (int k = 2; k <= G.degree(); ++k) {
    auto system = minimal_block_system(G, 1, k);
    if (!system) continue;
    if (std::find(systems.begin(), systems.end(), *system) == systems.end())
      systems.push_back(std::move(*system));
  }
  std::sort(systems.begin(), systems.end(),
            [](const BlockSystem& lhs, const BlockSystem& rhs) {
              if (lhs.num_blocks() != rhs.num_blocks())
                return lhs.num_blocks() > rhs.num_blocks();
              return lhs.blocks < rhs.blocks;
            });
  return systems;
}

// ---------------------------------------------------------------------------
// Sign signature
// ---------------------------------------------------------------------------

bool SignSignature::contains(const std::vector<std::uint8_t>& vec) const {
  std::vector<std::uint8_t> v = vec;
  for (const auto& row : basis) {
    size_t pivot = 0;
    while (pivot < row.size() && !row[pivot]) ++pivot;
    if (pivot < v.size() && v[pivot]) {
      for (size_t i = 0; i < v.size(); ++i) v[i] ^= row[i];
    }
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return !x; });
}

void SignSignature::add(std::vector<std::uint8_t> vec) {
  for (const auto& row : basis) {
    size_t pivot = 0;
    while (pivot < row.size() && !row[pivot]) ++pivot;
    if (pivot < vec.size() && vec[pivot]) {
      for (size_t i = 0; i < vec.size(); ++i) vec[i] ^= row[i];
    }
  }
  if (std::any_of(vec.begin(), vec.end(), [](std::uint8_t x) { return x != 0; })) {
    basis.push_back(std::move(vec));
    std::sort(basis.begin(), basis.end(),
              [](const auto& lhs, const auto& rhs) {
                auto pl = std::find(lhs.begin(), lhs.end(), 1) - lhs.begin();
                auto pr = std::find(rhs.begin(), rhs.end(), 1) - rhs.begin();
                return pl < pr;
              });
    // Back-substitute to keep a reduced echelon basis.
    for (size_t i = basis.size(); i-- > 0;) {
      size_t pivot = std::find(basis[i].begin(), basis[i].end(), 1) - basis[i].begin();
      for (size_t j = 0; j < i; ++j) {
        if (basis[j][pivot]) {
          for (size_t k = 0; k < basis[j].size(); ++k) basis[j][k] ^= basis[i][k];
        }
      }
    }
  }
}

bool SignSignature::is_diagonal() const {
  return rank() == 1 &&
         std::all_of(basis[0].begin(), basis[0].end(),
                     [](std::uint8_t x) { return x == 1; });
}

bool SignSignature::is_even_product() const {
  if (rank() != d - 1) return false;
  for (const auto& row : basis) {
    int weight = 0;
    for (auto x : row) weight += x;
    if (weight % 2 != 0) return false;
  }
  return true;
}

std::string SignSignature::describe() const {
  if (is_trivial()) return "trivial";
  if (is_full()) return "full";
  if (is_diagonal()) return "equal-sign";
  if (is_even_product()) return "even-product";
  return "rank " + std::to_string(rank());
}

// ---------------------------------------------------------------------------
// Block action, kernel, signature
// ---------------------------------------------------------------------------

namespace {

// Sign of the restriction of p to a block it fixes setwise.
int restricted_sign(const Permutation& p, const std::vector<int>& block) {
  std::set<int> members(block.begin(), block.end());
  std::set<int> seen;
  int cycles = 0;
  for (int start : block) {
    if (seen.count(start)) continue;
    ++cycles;
    int cur = start;
    do {
      seen.insert(cur);
      cur = p(cur);
      if (!members.count(cur))
        throw std::invalid_argument("element does not fix the block");
    } while (cur != start);
  }
  return ((static_cast<int>(block.size()) - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<std::uint8_t> sign_vector(const Permutation& p, const BlockSystem& B) {
  std::vector<std::uint8_t> vec(B.num_blocks());
  for (int i = 0; i < B.num_blocks(); ++i)
    vec[i] = restricted_sign(p, B.blocks[i]) == -1 ? 1 : 0;
  return vec;
}

Permutation block_image(const Permutation& g, const BlockSystem& B) {
  const int d = B.num_blocks();
  std::vector<int> images(d);
  for (int i = 0; i < d; ++i) {
    int target = B.block_of(g(B.blocks[i][0]));
    for (int p : B.blocks[i]) {
      if (B.block_of(g(p)) != target)
        throw std::invalid_argument("partition is not invariant under the group");
    }
    images[i] = target;
  }
  return Permutation::from_images(images);
}

}  // namespace

BlockEvidence block_action_and_kernel(const GroupHandle& G, const BlockSystem& B) {
  const int n = G.degree();
  const int d = B.num_blocks();

  std::vector<Permutation> action_gens;
  action_gens.reserve(G.generators().size());
  for (const auto& g : G.generators()) action_gens.push_back(block_image(g, B));

  GroupHandle action(action_gens, d);

  // Extend the domain with one point per block; the pointwise stabilizer of
  // those points is exactly the kernel of the block action.
  std::vector<Permutation> extended;
  extended.reserve(G.generators().size());
  for (size_t gi = 0; gi < G.generators().size(); ++gi) {
    std::vector<int> images(n + d);
    for (int p = 1; p <= n; ++p) images[p - 1] = G.generators()[gi](p);
    for (int i = 1; i <= d; ++i) images[n + i - 1] = n + action_gens[gi](i);
    extended.push_back(Permutation::from_images(std::move(images)));
  }
  std::vector<int> prefix(d);
  std::iota(prefix.begin(), prefix.end(), n + 1);
  GroupHandle extended_group(extended, n + d, prefix);

  BlockEvidence evidence{B, action, 0, {}, {}};
  evidence.kernel_order = extended_group.stabilizer_order(d);
  if (evidence.kernel_order * action.order() != G.order())
    throw std::logic_error("kernel order inconsistent with action order");

  for (const auto& kg : extended_group.stabilizer_generators(d)) {
    std::vector<int> images(kg.images().begin(), kg.images().begin() + n);
    evidence.kernel_generators.push_back(Permutation::from_images(std::move(images)));
  }

  evidence.signature.d = d;
  for (const auto& kg : evidence.kernel_generators)
    evidence.signature.add(sign_vector(kg, B));
  for (size_t gi = 0; gi < G.generators().size(); ++gi) {
    long long image_order = action_gens[gi].order();
    Permutation power = G.generators()[gi].power(image_order);
    evidence.signature.add(sign_vector(power, B));
  }
  return evidence;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

BigInt predicted_order(const GroupLabel& label) {
  using Kind = GroupLabel::Kind;
  switch (label.kind) {
    case Kind::Cyclic: return label.a;
    case Kind::Dihedral: return label.a;
    case Kind::Alt: return factorial(label.a) / 2;
    case Kind::Sym: return factorial(label.a);
    case Kind::WreathCyclic: return bigint_pow(label.a, label.b) * label.b;
    case Kind::AltWreath: return bigint_pow(factorial(label.a) / 2, label.b) * label.b;
    case Kind::SymWreath: return bigint_pow(factorial(label.a), label.b) * label.b;
    case Kind::Rtilde:
      return bigint_pow(factorial(label.a), label.b) * label.b /
             bigint_pow(2, label.b - 1);
    case Kind::R2: return bigint_pow(factorial(label.a), 2);
    case Kind::R3: return bigint_pow(factorial(label.a), 3) * 3 / 2;
    case Kind::AltCross2: return factorial(label.a);
    case Kind::SymCross2: return 2 * factorial(label.a);
    case Kind::Unknown: break;
  }
  throw std::invalid_argument("predicted_order is undefined for Unknown labels");
}

GroupLabel normalize_label(GroupLabel label) {
  using Kind = GroupLabel::Kind;
  for (;;) {
    GroupLabel before = label;
    switch (label.kind) {
      case Kind::WreathCyclic:
        if (label.b == 1) label = GroupLabel::cyclic(label.a);
        else if (label.a == 1) label = GroupLabel::cyclic(label.b);
        else if (label.a == 2 && label.b == 2) label = GroupLabel::dihedral(8);
        break;
      case Kind::SymWreath:
        if (label.b == 1) label = GroupLabel::sym(label.a);
        else if (label.a == 2) label = GroupLabel::wreath_cyclic(2, label.b);
        break;
      case Kind::AltWreath:
        if (label.b == 1) label = GroupLabel::alt(label.a);
        else if (label.a == 3) label = GroupLabel::wreath_cyclic(3, label.b);
        break;
      case Kind::Rtilde:
        if (label.b == 1) label = GroupLabel::sym(label.a);
        else if (label.b == 2) label = GroupLabel::r2(label.a);
        break;
      case Kind::Sym:
        if (label.a <= 2) label = GroupLabel::cyclic(label.a);
        else if (label.a == 3) label = GroupLabel::dihedral(6);
        break;
      case Kind::Alt:
        if (label.a == 3) label = GroupLabel::cyclic(3);
        break;
      case Kind::Dihedral:
        if (label.a == 2) label = GroupLabel::cyclic(2);
        break;
      case Kind::SymCross2:
        if (label.a == 3) label = GroupLabel::dihedral(12);
        break;
      case Kind::AltCross2:
        if (label.a == 3) label = GroupLabel::cyclic(6);
        break;
      default:
        break;
    }
    if (label == before) return label;
  }
}

std::string label_kind_tag(GroupLabel::Kind kind) {
  using Kind = GroupLabel::Kind;
  switch (kind) {
    case Kind::Cyclic: return "cyclic";
    case Kind::Dihedral: return "dihedral";
    case Kind::Alt: return "alt";
    case Kind::Sym: return "sym";
    case Kind::WreathCyclic: return "cyclic-wreath";
    case Kind::AltWreath: return "alt-wreath";
    case Kind::SymWreath: return "sym-wreath";
    case Kind::Rtilde: return "rtilde";
    case Kind::R2: return "r2";
    case Kind::R3: return "r3";
    case Kind::AltCross2: return "alt-cross-2";
    case Kind::SymCross2: return "sym-cross-2";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string label_to_string(const GroupLabel& label) {
  using Kind = GroupLabel::Kind;
  std::ostringstream out;
  switch (label.kind) {
    case Kind::Cyclic: out << "Z_" << label.a; break;
    case Kind::Dihedral: out << "D_" << label.a; break;
    case Kind::Alt: out << "A_" << label.a; break;
    case Kind::Sym: out << "S_" << label.a; break;
    case Kind::WreathCyclic: out << "Z_" << label.a << " wr Z_" << label.b; break;
    case Kind::AltWreath: out << "A_" << label.a << " wr Z_" << label.b; break;
    case Kind::SymWreath: out << "S_" << label.a << " wr Z_" << label.b; break;
    case Kind::Rtilde: out << "Rtilde_" << label.b << "(S_" << label.a << ")"; break;
    case Kind::R2: out << "R_2(S_" << label.a << ")"; break;
    case Kind::R3: out << "R_3(S_" << label.a << ")"; break;
    case Kind::AltCross2: out << "A_" << label.a << " x Z_2"; break;
    case Kind::SymCross2: out << "S_" << label.a << " x Z_2"; break;
    case Kind::Unknown: out << "Unknown(order " << label.unknown_order << ")"; break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

namespace {

bool is_cyclic_of_order(const GroupHandle& G, int k) {
  if (G.order() != k) return false;
  auto elems = G.elements(static_cast<std::uint64_t>(k) + 1);
  for (const auto& e : elems)
    if (e.order() == k) return true;
  return false;
}

// Kernel restricted to one block, relabeled to {1..m}.
GroupHandle kernel_restriction(const std::vector<Permutation>& kernel_gens,
                               const std::vector<int>& block) {
  const int m = static_cast<int>(block.size());
  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index[block[i]] = i + 1;
  std::vector<Permutation> gens;
  for (const auto& kg : kernel_gens) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = index.at(kg(block[i]));
    Permutation p = Permutation::from_images(std::move(images));
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return GroupHandle(gens, m);
}

}  // namespace

RecognitionResult recognize_with_evidence(const GroupHandle& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("recognition requires a transitive group");
  const int n = G.degree();
  const BigInt& order = G.order();

  RecognitionResult result;
  result.label = GroupLabel::unknown(order);

  // Regular cyclic: a transitive abelian group is regular, so order == n.
  if (order == n && is_cyclic_of_order(G, n)) {
    result.label = GroupLabel::cyclic(n);
    return result;
  }

  // Dihedral of order 2n: certify with an n-cycle c and an involution t
  // outside <c> inverting it.
  if (n >= 3 && order == 2 * BigInt(n)) {
    auto elems = G.elements(static_cast<std::uint64_t>(2 * n) + 1);
    for (const auto& c : elems) {
      auto type = c.cycle_type();
      if (!(type.size() == 1 && type[0] == n)) continue;
      std::set<std::vector<int>> powers;
      Permutation p(n);
      for (int k = 0; k < n; ++k) {
        powers.insert(p.images());
        p = p * c;
      }
      for (const auto& t : elems) {
        if (t.order() != 2 || powers.count(t.images())) continue;
        if (c.conjugate(t) == c.inverse()) {
          result.label = GroupLabel::dihedral(2 * n);
          return result;
        }
      }
    }
  }

  if (order == factorial(n)) {
    result.label = normalize_label(GroupLabel::sym(n));
    return result;
  }
  if (n >= 3 && 2 * order == factorial(n)) {
    result.label = normalize_label(GroupLabel::alt(n));
    return result;
  }

  for (const auto& B : all_minimal_block_systems(G)) {
    const int d = B.num_blocks();
    const int m = B.block_size();
    BlockEvidence evidence = block_action_and_kernel(G, B);
    const BigInt mf = factorial(m);
    const bool cyclic_action = is_cyclic_of_order(evidence.action, d);

    GroupLabel label = GroupLabel::unknown(order);
    if (evidence.kernel_order == bigint_pow(mf, d) &&
        evidence.signature.is_full() && cyclic_action &&
        order == bigint_pow(mf, d) * d) {
      label = GroupLabel::sym_wreath(m, d);
    } else if (m >= 3 && evidence.kernel_order == bigint_pow(mf / 2, d) &&
               evidence.signature.is_trivial() && cyclic_action &&
               order == bigint_pow(mf / 2, d) * d) {
      label = GroupLabel::alt_wreath(m, d);
    } else if (evidence.signature.is_diagonal() && cyclic_action &&
               order == bigint_pow(mf, d) * d / bigint_pow(2, d - 1)) {
      label = GroupLabel::rtilde(m, d);
    } else if (d == 3 && evidence.signature.is_even_product() && cyclic_action &&
               order == bigint_pow(mf, 3) * 3 / 2) {
      label = GroupLabel::r3(m);
    } else if (m == 2 && evidence.kernel_order == 2 &&
               2 * evidence.action.order() == factorial(d) &&
               order == factorial(d)) {
      label = GroupLabel::alt_cross2(d);
    } else if (m == 2 && evidence.kernel_order == 2 &&
               evidence.action.order() == factorial(d) &&
               order == 2 * factorial(d)) {
      label = GroupLabel::sym_cross2(d);
    } else if (evidence.kernel_order == bigint_pow(m, d) && cyclic_action &&
               order == bigint_pow(m, d) * d) {
      GroupHandle restriction =
          kernel_restriction(evidence.kernel_generators, B.blocks[0]);
      if (is_cyclic_of_order(restriction, m))
        label = GroupLabel::wreath_cyclic(m, d);
    }

    if (label.kind != GroupLabel::Kind::Unknown) {
      result.label = normalize_label(label);
      result.blocks = B;
      result.kernel_order = evidence.kernel_order;
      result.signature = evidence.signature;
      return result;
    }
  }

  return result;
}

GroupLabel recognize(const GroupHandle& G) { return recognize_with_evidence(G).label; }

// ---------------------------------------------------------------------------
// Canonical imprimitive constructions
// ---------------------------------------------------------------------------

namespace {

// Block j occupies {(j-1)m+1 .. jm}.
Permutation block_rotation(int m, int d) {
  std::vector<int> images(m * d);
  for (int j = 0; j < d; ++j)
    for (int i = 1; i <= m; ++i)
      images[j * m + i - 1] = (j + 1) % d * m + i;
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> sym_gens_on_first_block(int m, int degree) {
  std::vector<Permutation> gens;
  if (m >= 2) gens.push_back(Permutation::from_cycles({{1, 2}}, degree));
  if (m >= 3) {
    std::vector<int> cycle(m);
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back(Permutation::from_cycles({cycle}, degree));
  }
  return gens;
}

std::vector<Permutation> alt_gens_on_first_block(int m, int degree) {
  std::vector<Permutation> gens;
  for (int k = 3; k <= m; ++k)
    gens.push_back(Permutation::from_cycles({{1, 2, k}}, degree));
  return gens;
}

}  // namespace

std::pair<std::vector<Permutation>, Permutation> wreath_components(
    const Permutation& p, int m, int d) {
  if (p.degree() != m * d) throw std::invalid_argument("degree is not m*d");
  std::vector<int> block_images(d);
  std::vector<Permutation> components;
  components.reserve(d);
  for (int j = 0; j < d; ++j) {
    int target = (p(j * m + 1) - 1) / m;
    std::vector<int> tau(m);
    for (int k = 1; k <= m; ++k) {
      int image = p(j * m + k);
      if ((image - 1) / m != target)
        throw std::invalid_argument("element does not respect the blocks");
      tau[k - 1] = image - target * m;
    }
    block_images[j] = target + 1;
    components.push_back(Permutation::from_images(std::move(tau)));
  }
  return {std::move(components), Permutation::from_images(std::move(block_images))};
}

GroupHandle canonical_sym_wreath(int m, int d) {
  auto gens = sym_gens_on_first_block(m, m * d);
  gens.push_back(block_rotation(m, d));
  return GroupHandle(gens, m * d);
}

GroupHandle canonical_alt_wreath(int m, int d) {
  auto gens = alt_gens_on_first_block(m, m * d);
  gens.push_back(block_rotation(m, d));
  return GroupHandle(gens, m * d);
}

GroupHandle canonical_rtilde(int m, int d) {
  auto gens = alt_gens_on_first_block(m, m * d);
  std::vector<std::vector<int>> all_swaps;
  for (int j = 0; j < d; ++j) all_swaps.push_back({j * m + 1, j * m + 2});
  gens.push_back(Permutation::from_cycles(all_swaps, m * d));
  gens.push_back(block_rotation(m, d));
  return GroupHandle(gens, m * d);
}

GroupHandle canonical_r3(int m) {
  const int d = 3;
  auto gens = alt_gens_on_first_block(m, m * d);
  gens.push_back(Permutation::from_cycles({{1, 2}, {m + 1, m + 2}}, m * d));
  gens.push_back(block_rotation(m, d));
  return GroupHandle(gens, m * d);
}

GroupHandle canonical_cyclic_wreath(int r, int s) {
  std::vector<Permutation> gens;
  std::vector<int> cycle(r);
  std::iota(cycle.begin(), cycle.end(), 1);
  gens.push_back(Permutation::from_cycles({cycle}, r * s));
  gens.push_back(block_rotation(r, s));
  return GroupHandle(gens, r * s);
}

GroupHandle canonical_alt_cross2(int m) {
  std::vector<Permutation> gens;
  for (int k = 3; k <= m; ++k)
    gens.push_back(Permutation::from_cycles({{1, 2, k}, {m + 1, m + 2, m + k}}, 2 * m));
  std::vector<std::vector<int>> central;
  for (int i = 1; i <= m; ++i) central.push_back({i, m + i});
  gens.push_back(Permutation::from_cycles(central, 2 * m));
  return GroupHandle(gens, 2 * m);
}

GroupHandle canonical_sym_cross2(int m) {
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles({{1, 2}, {m + 1, m + 2}}, 2 * m));
  std::vector<int> c1(m), c2(m);
  std::iota(c1.begin(), c1.end(), 1);
  std::iota(c2.begin(), c2.end(), m + 1);
  gens.push_back(Permutation::from_cycles({c1, c2}, 2 * m));
  std::vector<std::vector<int>> central;
  for (int i = 1; i <= m; ++i) central.push_back({i, m + i});
  gens.push_back(Permutation::from_cycles(central, 2 * m));
  return GroupHandle(gens, 2 * m);
}

}  // namespace dessins
