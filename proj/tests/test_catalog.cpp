#include <doctest.h>

#include <stdexcept>

#include "dessins/catalog.hpp"

using namespace dessins;

TEST_CASE("predictions match the census branch table") {
  auto star = predict(Star{7});
  CHECK(star.label == GroupLabel::cyclic(7));
  CHECK(star.passport.to_string() == "[7;1^7]");

  auto tsc4 = predict(ThreeStarComposite{4});
  CHECK(tsc4.label == GroupLabel::r3(7));
  CHECK(predicted_order(tsc4.label) == bigint_pow(factorial(7), 3) * 3 / 2);

  auto d264 = predict(DiamFour{2, 6, 4});
  CHECK(d264.n == 10);
  CHECK(d264.d == 2);
  CHECK(d264.m == 5);
  CHECK(d264.label == GroupLabel::sym_wreath(5, 2));
  CHECK(predicted_order(d264.label) == 28800);

  CHECK(predict(DiamFour{3, 2, 2}).label == GroupLabel::wreath_cyclic(3, 2));
  CHECK(predicted_order(predict(DiamFour{3, 2, 2}).label) == 18);

  // gcd(d, n/d) != 1: the open cell.
  auto open = predict(DiamFour{3, 2, 4});
  CHECK(open.label.kind == GroupLabel::Kind::Unknown);

  auto cds = predict(CleanedDoubleStar{3, 3});
  CHECK(cds.label == GroupLabel::alt_cross2(5));
  CHECK(predicted_order(cds.label) == 120);
  CHECK(predict(CleanedDoubleStar{2, 2}).label == GroupLabel::sym_cross2(3));
  CHECK(predict(CleanedDoubleStar{3, 5}).label == GroupLabel::alt_wreath(7, 2));
  CHECK(predict(CleanedDoubleStar{2, 4}).label == GroupLabel::r2(5));
  CHECK(predict(CleanedDoubleStar{2, 3}).label == GroupLabel::sym_wreath(4, 2));

  CHECK(predict(Sporadic337{}).label == GroupLabel::alt_wreath(7, 2));
  CHECK(predicted_order(predict(Sporadic337{}).label) == 12700800);

  CHECK_THROWS_AS(predict(DiamFour{1, 2, 2}), std::invalid_argument);
}

TEST_CASE("predicted edge counts match the canonical dessins") {
  SweepConfig config;
  config.max_n = 16;
  for (const auto& params : sweep_grid(config)) {
    auto row = predict(params);
    CHECK(row.n == canonical_family(params).edge_count());
    CHECK(row.passport.edges() == row.n);
  }
}

TEST_CASE("verify_row passes on representative rows") {
  for (const auto& params :
       std::vector<FamilyParams>{Star{5}, OddPath{2}, EvenPath{3},
                                 DiamFour{3, 2, 2}, DiamFour{2, 6, 4},
                                 CleanedDoubleStar{3, 3}, CleanedDoubleStar{2, 4},
                                 ThreeStarComposite{2}, Sporadic337{}}) {
    auto report = verify_row(params);
    CHECK(report.all_pass);
  }
}

TEST_CASE("the sporadic row computes the full order") {
  auto report = verify_row(Sporadic337{});
  CHECK(report.all_pass);
  CHECK(report.computed_order == 12700800);
  CHECK(report.recognized == GroupLabel::alt_wreath(7, 2));
}

TEST_CASE("open rows carry the computed order but never fail") {
  auto report = verify_row(DiamFour{3, 2, 4});
  CHECK(report.all_pass);
  REQUIRE(!report.notes.empty());
  CHECK(report.notes[0].find("open case") != std::string::npos);
  CHECK(report.computed_order > 0);
}

TEST_CASE("bfs oracle assertion fires for small groups") {
  VerifyOptions options;
  options.bfs_cap = 100000;
  auto report = verify_row(DiamFour{3, 2, 2}, options);
  bool saw_bfs = false;
  for (const auto& a : report.assertions)
    if (a.name == "bfs-oracle") saw_bfs = a.pass;
  CHECK(saw_bfs);
}

TEST_CASE("lift assertion can be enabled") {
  VerifyOptions options;
  options.with_lift = true;
  auto report = verify_row(CleanedDoubleStar{3, 3}, options);
  bool saw_lift = false;
  for (const auto& a : report.assertions)
    if (a.name == "lift-iso") saw_lift = a.pass;
  CHECK(saw_lift);
  CHECK(report.all_pass);
}

TEST_CASE("sweeps are deterministic and pass on the default small grid") {
  SweepConfig config;
  config.max_n = 12;
  config.jobs = 4;
  auto reports = run_sweep(config);
  CHECK(!reports.empty());
  for (const auto& report : reports) CHECK(report.all_pass);

  SweepConfig sequential = config;
  sequential.jobs = 1;
  auto reports2 = run_sweep(sequential);
  REQUIRE(reports.size() == reports2.size());
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(family_to_string(reports[i].params) ==
          family_to_string(reports2[i].params));
    CHECK(reports[i].computed_order == reports2[i].computed_order);
    CHECK(reports[i].all_pass == reports2[i].all_pass);
  }

  auto table = sweep_table(reports);
  CHECK(table.find("pass") != std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);
}

TEST_CASE("every admissible parameter hits exactly one branch") {
  SweepConfig config;
  config.max_n = 20;
  config.max_r = 0;
  config.max_s = 0;
  config.max_t = 0;
  for (const auto& params : sweep_grid(config)) {
    auto row = predict(params);  // throws on a gap in the branch table
    if (row.label.kind != GroupLabel::Kind::Unknown)
      CHECK(predicted_order(row.label) > 0);
  }
}
