#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dessins/dessin.hpp"
#include "dessins/group.hpp"

using namespace dessins;

namespace {

Dessin figure1() {
  return Dessin(Permutation::from_cycles({{1, 3, 2}, {4, 7, 5}}, 7),
                Permutation::from_cycles({{3, 4}, {5, 6}}, 7));
}

}  // namespace

TEST_CASE("dessin construction validates connectedness") {
  CHECK_THROWS_AS(Dessin(Permutation::from_cycles({{1, 2}}, 4),
                         Permutation::from_cycles({{3, 4}}, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Dessin(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("sigma_infinity closes the triple") {
  auto D = figure1();
  auto inf = D.sigma_infinity();
  CHECK((D.sigma0() * D.sigma1() * inf).is_identity());

  // 3-edge path: sigma_inf has order 3.
  Dessin path3(Permutation::from_cycles({{1, 2}}, 3),
               Permutation::from_cycles({{2, 3}}, 3));
  CHECK(path3.sigma_infinity().order() == 3);

  Dessin single(Permutation(1), Permutation(1));
  CHECK(single.sigma_infinity().is_identity());
}

TEST_CASE("passport, genus, tree flags") {
  auto D = figure1();
  CHECK(D.passport().to_string() == "[3^2,1;2^2,1^3]");
  CHECK(D.genus() == 0);
  CHECK(D.is_tree());

  // sigma0 = sigma1 = (1,2): two faces, genus 0, not a tree.
  Dessin two_faces(Permutation::from_cycles({{1, 2}}, 2),
                   Permutation::from_cycles({{1, 2}}, 2));
  CHECK(two_faces.genus() == 0);
  CHECK(two_faces.sigma_infinity().num_cycles() == 2);
  CHECK_FALSE(two_faces.is_tree());

  // A genus-1 pair: sigma0 = (1,2,3), sigma1 = (1,2,3).
  Dessin torus(Permutation::from_cycles({{1, 2, 3}}, 3),
               Permutation::from_cycles({{1, 2, 3}}, 3));
  CHECK(torus.genus() == 1);
  CHECK_FALSE(torus.is_tree());
}

TEST_CASE("canonical families have the expected passports") {
  CHECK(canonical_family(Star{5}).passport().to_string() == "[5;1^5]");
  CHECK(canonical_family(Star{1}).sigma0().is_identity());

  CHECK(canonical_family(OddPath{2}).passport().to_string() == "[2^2,1;2^2,1]");
  CHECK(canonical_family(EvenPath{3}).passport().to_string() == "[2^3;2^2,1^2]");

  auto d434 = canonical_family(DiamFour{4, 3, 4});
  CHECK(d434.edge_count() == 13);
  CHECK(d434.passport().to_string() == "[4,3^3;4,1^9]");
  CHECK(d434.is_tree());

  auto cds = canonical_family(CleanedDoubleStar{5, 3});
  CHECK(cds.passport().to_string() == "[5,3,1^6;2^7]");

  auto cds_eq = canonical_family(CleanedDoubleStar{3, 3});
  CHECK(cds_eq.passport().to_string() == "[3^2,1^4;2^5]");

  auto tsc = canonical_family(ThreeStarComposite{3});
  CHECK(tsc.passport().to_string() == "[3^2,1^9;3^5]");

  auto sporadic = canonical_family(Sporadic337{});
  CHECK(sporadic.edge_count() == 14);
  CHECK(sporadic.passport().to_string() == "[3^3,1^5;2^7]");

  CHECK_THROWS_AS(canonical_family(DiamFour{1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(canonical_family(CleanedDoubleStar{1, 3}), std::invalid_argument);
}

TEST_CASE("every canonical family is a tree with the full-cycle product") {
  std::vector<FamilyParams> grid;
  for (int r = 1; r <= 6; ++r) grid.push_back(Star{r});
  for (int r = 1; r <= 4; ++r) grid.push_back(OddPath{r});
  for (int r = 1; r <= 4; ++r) grid.push_back(EvenPath{r});
  for (int r = 2; r <= 4; ++r)
    for (int s = 1; s <= 3; ++s)
      for (int t = 1; t <= 3; ++t) grid.push_back(DiamFour{r, s, t});
  for (int r = 2; r <= 4; ++r)
    for (int t = 2; t <= 4; ++t) grid.push_back(CleanedDoubleStar{r, t});
  for (int r = 2; r <= 4; ++r) grid.push_back(ThreeStarComposite{r});
  grid.push_back(Sporadic337{});

  for (const auto& params : grid) {
    auto D = canonical_family(params);
    CHECK(D.is_tree());
    CHECK(D.monodromy().is_transitive());
  }

  // The diameter-four labeling multiplies to (1,2,...,n) exactly.
  auto d = canonical_family(DiamFour{4, 3, 4});
  auto prod = d.sigma0() * d.sigma1();
  for (int x = 1; x <= 12; ++x) CHECK(prod(x) == x + 1);
  CHECK(prod(13) == 1);
}

TEST_CASE("monodromy groups of small families") {
  CHECK(canonical_family(Star{6}).monodromy().order() == 6);
  CHECK(recognize(canonical_family(Star{6}).monodromy()) == GroupLabel::cyclic(6));

  auto d322 = canonical_family(DiamFour{3, 2, 2});
  CHECK(d322.monodromy().order() == 18);
  CHECK(*brute_force_order(d322.monodromy().generators(), d322.edge_count()) == 18);

  CHECK(figure1().monodromy().order() == 168);
}

TEST_CASE("diameter-four monodromy blocks are the residue classes mod d") {
  // r = 3, s = 2, t = 6: d = gcd(s,t) = 2, n = 10.
  auto G = canonical_family(DiamFour{3, 2, 6}).monodromy();
  auto B = minimal_block_system(G, 1, 3);
  REQUIRE(B.has_value());
  CHECK(B->blocks == std::vector<std::vector<int>>{{1, 3, 5, 7, 9},
                                                   {2, 4, 6, 8, 10}});

  // r odd with t/d even lands in the equal-sign subgroup: the kernel sign
  // vectors span exactly the diagonal.
  auto G3 = canonical_family(DiamFour{3, 3, 6}).monodromy();  // d = 3, n = 12
  auto systems = all_minimal_block_systems(G3);
  bool found_diagonal = false;
  for (const auto& sys : systems) {
    if (sys.num_blocks() != 3) continue;
    auto evidence = block_action_and_kernel(G3, sys);
    if (evidence.signature.is_diagonal()) found_diagonal = true;
  }
  CHECK(found_diagonal);
  CHECK(recognize(G3) == GroupLabel::rtilde(4, 3));
}

TEST_CASE("vertex table") {
  auto verts = vertices(figure1());
  REQUIRE(verts.size() == 8);  // 3 black + 5 white
  CHECK(verts[0].black);
  CHECK(verts[0].edges == std::vector<int>{1, 3, 2});
  CHECK_FALSE(verts[3].black);
  int black_count = 0;
  for (const auto& v : verts) black_count += v.black ? 1 : 0;
  CHECK(black_count == 3);
}

TEST_CASE("composing with a single edge returns Q up to relabeling") {
  Dessin edge(Permutation(1), Permutation(1));
  auto Q = canonical_family(DiamFour{3, 2, 2});
  auto composed = compose(edge, 1, 2, Q);
  CHECK(composed.edge_count() == Q.edge_count());
  CHECK(are_isomorphic(composed, Q).has_value());
}

TEST_CASE("cleaning composition matches the canonical cleaned double star") {
  // beta path: 2 edges, black leaves 1 and 2, white center 3; marks at the
  // two black leaves (positions 0 and 1 of the polynomial).
  Dessin beta(Permutation(2), Permutation::from_cycles({{1, 2}}, 2));
  for (int r = 2; r <= 4; ++r) {
    for (int t = 2; t <= 4; ++t) {
      auto Q = canonical_family(DiamFour{r, 1, t});  // the double star S_{r,t}
      auto composed = compose(beta, 1, 2, Q);
      CHECK(composed.edge_count() == 2 * Q.edge_count());
      auto expected = canonical_family(CleanedDoubleStar{r, t});
      CHECK(composed.passport() == expected.passport());
      CHECK(are_isomorphic(composed, expected).has_value());
    }
  }
}

TEST_CASE("three-star composition matches the canonical composite") {
  // 3-star with white center: sigma0 = id, sigma1 = (1,2,3); black leaves
  // are vertex ids 1..3 (the marks sit on two of them).
  Dessin tripod(Permutation(3), Permutation::from_cycles({{1, 2, 3}}, 3));
  for (int r = 2; r <= 3; ++r) {
    auto Q = canonical_family(DiamFour{r, 1, r});  // S_{r,r}
    auto composed = compose(tripod, 1, 2, Q);
    auto expected = canonical_family(ThreeStarComposite{r});
    CHECK(composed.edge_count() == expected.edge_count());
    CHECK(composed.passport() == expected.passport());
    CHECK(are_isomorphic(composed, expected).has_value());
  }
}

TEST_CASE("the sporadic tree is the cleaning of the (3,3,1) tree") {
  Dessin beta(Permutation(2), Permutation::from_cycles({{1, 2}}, 2));
  auto Q = canonical_family(DiamFour{3, 3, 1});
  auto composed = compose(beta, 1, 2, Q);
  auto expected = canonical_family(Sporadic337{});
  CHECK(composed.passport() == expected.passport());
  CHECK(are_isomorphic(composed, expected).has_value());
}

TEST_CASE("composition group order divides the wreath bound") {
  Dessin beta(Permutation(2), Permutation::from_cycles({{1, 2}}, 2));
  for (int r = 2; r <= 4; ++r) {
    for (int t = 2; t <= 4; ++t) {
      auto Q = canonical_family(DiamFour{r, 1, t});
      auto composed = compose(beta, 1, 2, Q);
      BigInt bound = bigint_pow(Q.monodromy().order(), 2) * 2;
      CHECK(bound % composed.monodromy().order() == 0);
    }
  }
}

TEST_CASE("compose rejects bad marks and non-trees") {
  Dessin beta(Permutation(2), Permutation::from_cycles({{1, 2}}, 2));
  auto Q = canonical_family(Star{3});
  CHECK_THROWS_AS(compose(beta, 3, 1, Q), std::invalid_argument);  // white square
  CHECK_THROWS_AS(compose(beta, 1, 1, Q), std::invalid_argument);
  CHECK_THROWS_AS(compose(beta, 0, 2, Q), std::invalid_argument);
  Dessin torus(Permutation::from_cycles({{1, 2, 3}}, 3),
               Permutation::from_cycles({{1, 2, 3}}, 3));
  CHECK_THROWS_AS(compose(beta, 1, 2, torus), std::invalid_argument);
  CHECK_THROWS_AS(compose(torus, 1, 2, Q), std::invalid_argument);
}

TEST_CASE("isomorphism finds relabelings and rejects different trees") {
  std::mt19937_64 rng(99);
  auto D = canonical_family(DiamFour{3, 2, 4});
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> images(D.edge_count());
    for (int i = 0; i < D.edge_count(); ++i) images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    auto pi = Permutation::from_images(images);
    Dessin relabeled(D.sigma0().conjugate(pi), D.sigma1().conjugate(pi));
    auto found = are_isomorphic(D, relabeled);
    REQUIRE(found.has_value());
    CHECK(D.sigma0().conjugate(*found) == relabeled.sigma0());
    CHECK(D.sigma1().conjugate(*found) == relabeled.sigma1());
  }

  auto path3 = canonical_family(OddPath{1});
  auto star3 = canonical_family(Star{3});
  CHECK_FALSE(are_isomorphic(path3, star3).has_value());

  // Self-isomorphism is reflexive; inverse relabeling gives symmetry.
  auto self = are_isomorphic(D, D);
  REQUIRE(self.has_value());
  auto back = are_isomorphic(canonical_family(DiamFour{3, 2, 4}), D);
  CHECK(back.has_value());
}

TEST_CASE("census counts are one for the table passports") {
  CHECK(count_trees_with_passport(Passport({3}, {1, 1, 1})).tree_count == 1);
  CHECK(count_trees_with_passport(Passport({2, 1}, {2, 1})).tree_count == 1);
  CHECK(count_trees_with_passport(canonical_family(DiamFour{3, 2, 2}).passport())
            .tree_count == 1);
  CHECK(count_trees_with_passport(canonical_family(ThreeStarComposite{2}).passport())
            .tree_count == 1);

  auto result = count_trees_with_passport(Passport({3}, {1, 1, 1}));
  REQUIRE(result.representatives.size() == 1);
  CHECK(result.representatives[0].is_tree());

  CHECK_THROWS_AS(count_trees_with_passport(Passport({11}, std::vector<int>(11, 1))),
                  std::invalid_argument);
}

namespace {

// Slow oracle for n <= 6: enumerate BOTH conjugacy classes over all of S_n,
// keep the tree pairs, and split them into isomorphism classes with the
// matcher.  Independent of the centralizer-orbit counting route.
long long full_class_tree_count(const Passport& p) {
  const int n = p.edges();
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<Permutation> black_class, white_class;
  std::vector<int> images = base;
  do {
    Permutation perm = Permutation::from_images(images);
    if (perm.cycle_type() == p.black) black_class.push_back(perm);
    if (perm.cycle_type() == p.white) white_class.push_back(perm);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<Dessin> representatives;
  for (const auto& sigma0 : black_class) {
    for (const auto& sigma1 : white_class) {
      if ((sigma0 * sigma1).num_cycles() != 1) continue;
      Dessin candidate(sigma0, sigma1);
      if (!candidate.is_tree()) continue;
      bool known = false;
      for (const auto& rep : representatives)
        if (are_isomorphic(rep, candidate)) {
          known = true;
          break;
        }
      if (!known) representatives.push_back(std::move(candidate));
    }
  }
  return static_cast<long long>(representatives.size());
}

}  // namespace

TEST_CASE("census counts agree with the slow full-class oracle for n <= 6") {
  for (const auto& p :
       {Passport({3, 1, 1, 1}, {2, 2, 2}), Passport({2, 2, 1}, {2, 2, 1}),
        Passport({2, 2, 1, 1}, {3, 2, 1}), Passport({5}, {1, 1, 1, 1, 1}),
        Passport({3, 3}, {2, 2, 1, 1})}) {
    CAPTURE(p.to_string());
    CHECK(count_trees_with_passport(p, 6).tree_count == full_class_tree_count(p));
  }
}

TEST_CASE("census representatives are pairwise non-isomorphic") {
  Passport p({3, 1, 1, 1}, {2, 2, 2});
  auto result = count_trees_with_passport(p, 10);
  auto reps = result.representatives;
  CHECK(static_cast<long long>(reps.size()) == result.tree_count);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(are_isomorphic(reps[i], reps[j]).has_value());
}

TEST_CASE("all-genus count is reported for small n") {
  auto result = count_trees_with_passport(Passport({2, 2}, {2, 1, 1}), 10, true);
  REQUIRE(result.all_dessin_count.has_value());
  CHECK(*result.all_dessin_count >= result.tree_count);
}

TEST_CASE("renderers emit plausible documents") {
  auto D = canonical_family(DiamFour{3, 2, 2});
  auto dot = to_dot(D);
  CHECK(dot.find("graph dessin") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  auto svg = to_svg(D);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
}
