#ifndef DESSINS_DESSIN_HPP
#define DESSINS_DESSIN_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dessins/group.hpp"
#include "dessins/passport.hpp"
#include "dessins/perm.hpp"

namespace dessins {

/// A plane dessin given by its rotation permutations: sigma0 cycles are the
/// counterclockwise edge orders around black vertices, sigma1 around white
/// ones.  Connectedness (transitivity of <sigma0, sigma1>) is enforced at
/// construction; everything else is derived.
class Dessin {
 public:
  Dessin(Permutation sigma0, Permutation sigma1);

  int edge_count() const { return sigma0_.degree(); }
  const Permutation& sigma0() const { return sigma0_; }
  const Permutation& sigma1() const { return sigma1_; }

  /// sigma_inf with sigma0 * sigma1 * sigma_inf = identity.
  Permutation sigma_infinity() const;
  Passport passport() const;
  int genus() const;
  /// One face and genus zero; equivalently sigma0*sigma1 is an n-cycle.
  bool is_tree() const;
  GroupHandle monodromy() const;

  bool operator==(const Dessin& rhs) const {
    return sigma0_ == rhs.sigma0_ && sigma1_ == rhs.sigma1_;
  }

 private:
  Permutation sigma0_;
  Permutation sigma1_;
};

// --- Census families ------------------------------------------------------

struct Star { int r; };                  // [r; 1^r]
struct OddPath { int r; };               // [2^r,1; 2^r,1], n = 2r+1
struct EvenPath { int r; };              // [2^r; 2^{r-1},1^2], n = 2r
struct DiamFour { int r, s, t; };        // [s^{r-1},t; r,1^...], r > 1
struct CleanedDoubleStar { int r, t; };  // [r,t,1^{r+t-2}; 2^{r+t-1}], r,t > 1
struct ThreeStarComposite { int r; };    // [r^2,1^{4r-3}; 3^{2r-1}], r >= 2
struct Sporadic337 {};                   // [3^3,1^5; 2^7]

using FamilyParams = std::variant<Star, OddPath, EvenPath, DiamFour,
                                  CleanedDoubleStar, ThreeStarComposite,
                                  Sporadic337>;

/// Kebab-case family tag, e.g. "diam-four".
std::string family_name(const FamilyParams& params);
/// Tag plus parameters, e.g. "diam-four(r=4,s=3,t=4)".
std::string family_to_string(const FamilyParams& params);

/// The labeled permutation pair the proofs use for this family.
Dessin canonical_family(const FamilyParams& params);

// --- Vertices and composition ----------------------------------------------

/// Vertex table: black vertices first (cycles of sigma0 ordered by smallest
/// edge, fixed points included as degree-1 vertices), then white.  Ids are
/// 1-based and global across the two colors.
struct DessinVertex {
  int id = 0;
  bool black = false;
  std::vector<int> edges;  // counterclockwise rotation
};
std::vector<DessinVertex> vertices(const Dessin& D);

/// The two-step edge substitution: every edge of Q is replaced by the
/// square-triangle path of P together with its interior branches, and every
/// marked vertex of Q receives one copy of the residual branches per
/// incident edge.  The square must be a black vertex of P; the triangle may
/// be of either color (the instances with both marks black are needed for
/// the 3-star composites).  Both dessins must be trees.
Dessin compose(const Dessin& P, int square_vertex, int triangle_vertex,
               const Dessin& Q);

/// A relabeling pi with pi^{-1} sigma0 pi = sigma0' and pi^{-1} sigma1 pi =
/// sigma1' (left-to-right products), or nullopt.  Found by propagating the
/// image of edge 1 of D1 over each anchor edge of D2.
std::optional<Permutation> are_isomorphic(const Dessin& D1, const Dessin& D2);

// --- Enumeration ------------------------------------------------------------

struct EnumerationResult {
  long long tree_count = 0;
  std::vector<Dessin> representatives;
  /// Count over all genera (only filled when requested and n <= 8).
  std::optional<long long> all_dessin_count;
};

/// Counts isomorphism classes of trees with the given passport: sigma0 is
/// pinned to the canonical representative of the black partition, sigma1
/// runs over the white conjugacy class, and classes are orbits under the
/// centralizer of sigma0.  Throws when the edge count exceeds cap.
EnumerationResult count_trees_with_passport(const Passport& passport,
                                            int cap = 10,
                                            bool with_all_genus = false);

// --- Rendering (display only) -----------------------------------------------

std::string to_dot(const Dessin& D);
std::string to_svg(const Dessin& D);

}  // namespace dessins

#endif
