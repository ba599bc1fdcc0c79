#ifndef DESSINS_GROUP_HPP
#define DESSINS_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt bigint_pow(const BigInt& base, int exp);

/// A generated permutation group backed by a deterministic Schreier-Sims
/// stabilizer chain.  Immutable after construction; cheap to copy.
class GroupHandle {
 public:
  GroupHandle(std::vector<Permutation> generators, int degree);
  /// Same, but the stabilizer chain's base starts with the given points (in
  /// order, one level each).  Used to extract pointwise stabilizers.
  GroupHandle(std::vector<Permutation> generators, int degree,
              std::vector<int> base_prefix);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const;
  bool contains(const Permutation& p) const;
  bool is_transitive() const;
  std::vector<int> orbit_of(int point) const;

  /// Generators of the subgroup fixing the first prefix_len base points.
  /// Only meaningful when constructed with a base_prefix of that length.
  std::vector<Permutation> stabilizer_generators(size_t prefix_len) const;
  /// Order of that stabilizer subgroup.
  BigInt stabilizer_order(size_t prefix_len) const;

  /// Uniform random element (product of random transversal representatives).
  Permutation random_element(std::mt19937_64& rng) const;

  /// All elements, provided the order is at most cap.  Throws otherwise.
  std::vector<Permutation> elements(std::uint64_t cap = 100000) const;

 private:
  struct Chain;
  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const Chain> chain_;
};

/// Exact order by breadth-first closure over products.  Returns nullopt when
/// the closure exceeds cap elements; never a wrong number.
std::optional<BigInt> brute_force_order(const std::vector<Permutation>& gens,
                                        int degree,
                                        std::uint64_t cap = 1000000);

/// A G-invariant partition of {1..n} into blocks of equal size.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // each sorted; list sorted by min
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  int block_of(int point) const;  // 1-indexed block id
  bool operator==(const BlockSystem& rhs) const { return blocks == rhs.blocks; }
};

/// Minimal G-invariant partition with a and b in one block, or nullopt when
/// the only such coarsening is the trivial one-block partition.
/// Throws if G is not transitive.
std::optional<BlockSystem> minimal_block_system(const GroupHandle& G, int a, int b);

/// Every distinct minimal block system (seeds {1,k}, k = 2..n), deterministic order.
std::vector<BlockSystem> all_minimal_block_systems(const GroupHandle& G);

/// Subgroup of {+-1}^d spanned by per-block sign vectors, kept as an
/// F2 row-echelon basis (entry 1 = odd restriction on that block).
struct SignSignature {
  int d = 0;
  std::vector<std::vector<std::uint8_t>> basis;

  int rank() const { return static_cast<int>(basis.size()); }
  bool is_trivial() const { return basis.empty(); }
  bool is_full() const { return rank() == d; }
  /// Exactly {(+..+), (-..-)}.
  bool is_diagonal() const;
  /// Exactly the even-product subgroup {v : sum v = 0}.
  bool is_even_product() const;
  bool contains(const std::vector<std::uint8_t>& vec) const;
  void add(std::vector<std::uint8_t> vec);
  std::string describe() const;
};

struct BlockEvidence {
  BlockSystem blocks;
  GroupHandle action;          // induced group on the blocks
  BigInt kernel_order;         // |G| / |action|
  std::vector<Permutation> kernel_generators;
  SignSignature signature;
};

/// Induced action on the blocks, the kernel of that action, and the sign
/// signature spanned by kernel sign vectors together with, for each
/// generator g, the sign vector of g^(order of g's block image).
/// Throws if B is not invariant under G.
BlockEvidence block_action_and_kernel(const GroupHandle& G, const BlockSystem& B);

/// Structured name of a recognized group.
struct GroupLabel {
  enum class Kind {
    Cyclic,       // a = r, order r
    Dihedral,     // a = group order 2k
    Alt,          // a = n
    Sym,          // a = n
    WreathCyclic, // Z_a wr Z_b
    AltWreath,    // A_a wr Z_b
    SymWreath,    // S_a wr Z_b
    Rtilde,       // index 2^(b-1) equal-sign subgroup of S_a wr Z_b
    R2,           // a = m; same predicate as Rtilde with b = 2
    R3,           // a = m; even-product index 2 subgroup of S_a wr Z_3
    AltCross2,    // A_a x Z_2
    SymCross2,    // S_a x Z_2
    Unknown,
  };
  Kind kind = Kind::Unknown;
  int a = 0;
  int b = 0;
  BigInt unknown_order;  // set when kind == Unknown

  bool operator==(const GroupLabel& rhs) const {
    return kind == rhs.kind && a == rhs.a && b == rhs.b &&
           unknown_order == rhs.unknown_order;
  }

  static GroupLabel cyclic(int r) { return {Kind::Cyclic, r, 0, 0}; }
  static GroupLabel dihedral(int order2k) { return {Kind::Dihedral, order2k, 0, 0}; }
  static GroupLabel alt(int n) { return {Kind::Alt, n, 0, 0}; }
  static GroupLabel sym(int n) { return {Kind::Sym, n, 0, 0}; }
  static GroupLabel wreath_cyclic(int r, int s) { return {Kind::WreathCyclic, r, s, 0}; }
  static GroupLabel alt_wreath(int m, int d) { return {Kind::AltWreath, m, d, 0}; }
  static GroupLabel sym_wreath(int m, int d) { return {Kind::SymWreath, m, d, 0}; }
  static GroupLabel rtilde(int m, int d) { return {Kind::Rtilde, m, d, 0}; }
  static GroupLabel r2(int m) { return {Kind::R2, m, 0, 0}; }
  static GroupLabel r3(int m) { return {Kind::R3, m, 0, 0}; }
  static GroupLabel alt_cross2(int m) { return {Kind::AltCross2, m, 0, 0}; }
  static GroupLabel sym_cross2(int m) { return {Kind::SymCross2, m, 0, 0}; }
  static GroupLabel unknown(BigInt order) { return {Kind::Unknown, 0, 0, std::move(order)}; }
};

/// Closed-form order of a labeled group.  Throws on Unknown.
BigInt predicted_order(const GroupLabel& label);

/// Collapse the small-parameter isomorphism coincidences (Z_2 wr Z_2 = D_8,
/// S_3 = D_6, A_3 wr Z_d = Z_3 wr Z_d, Rtilde with d = 2 is R_2, ...) so that
/// labels obtained from different routes compare equal.
GroupLabel normalize_label(GroupLabel label);

std::string label_to_string(const GroupLabel& label);
/// Machine-readable tag, e.g. "alt-wreath".
std::string label_kind_tag(GroupLabel::Kind kind);

struct RecognitionResult {
  GroupLabel label;
  std::optional<BlockSystem> blocks;
  std::optional<BigInt> kernel_order;
  std::optional<SignSignature> signature;
};

/// Structural recognition of the groups named in the census table.  Decision
/// procedure over order, cyclic/dihedral certificates, and block-system
/// evidence; Unknown is the total fallback.  Requires G transitive.
RecognitionResult recognize_with_evidence(const GroupHandle& G);
GroupLabel recognize(const GroupHandle& G);

/// Decompose p with respect to the standard blocks {(j-1)m+1..jm} of
/// {1..md}: returns the components tau_1..tau_d (tau_j maps block-j
/// coordinates to block-g(j) coordinates) and the block permutation g.
/// Throws if p does not respect the blocks.
std::pair<std::vector<Permutation>, Permutation> wreath_components(
    const Permutation& p, int m, int d);

/// Canonical imprimitive constructions on m*d points with blocks
/// {(j-1)m+1..jm}; used as recognition oracles.
GroupHandle canonical_sym_wreath(int m, int d);
GroupHandle canonical_alt_wreath(int m, int d);
GroupHandle canonical_rtilde(int m, int d);
GroupHandle canonical_r3(int m);
GroupHandle canonical_cyclic_wreath(int r, int s);
/// Diagonal A_m (resp. S_m) with a central all-swap on 2m points.
GroupHandle canonical_alt_cross2(int m);
GroupHandle canonical_sym_cross2(int m);

}  // namespace dessins

#endif
