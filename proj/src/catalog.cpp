#include "dessins/catalog.hpp"

#include <numeric>
#include <sstream>

#include "dessins/lift.hpp"
#include "dessins/shabat.hpp"
#include "dessins/util.hpp"

namespace dessins {

namespace {

Passport star_passport(int r) {
  return Passport({r}, std::vector<int>(r, 1));
}

Passport path_passport(int n) {
  if (n % 2 == 1) {
    std::vector<int> parts((n - 1) / 2, 2);
    parts.push_back(1);
    return Passport(parts, parts);
  }
  std::vector<int> black(n / 2, 2);
  std::vector<int> white(n / 2 - 1, 2);
  white.push_back(1);
  white.push_back(1);
  return Passport(black, white);
}

Passport diam_four_passport(int r, int s, int t) {
  std::vector<int> black(r - 1, s);
  black.push_back(t);
  std::vector<int> white{r};
  for (int i = 0; i < (r - 1) * (s - 1) + (t - 1); ++i) white.push_back(1);
  return Passport(black, white);
}

Passport cleaned_double_star_passport(int r, int t) {
  std::vector<int> black{r, t};
  for (int i = 0; i < r + t - 2; ++i) black.push_back(1);
  return Passport(black, std::vector<int>(r + t - 1, 2));
}

Passport threestar_passport(int r) {
  std::vector<int> black{r, r};
  for (int i = 0; i < 4 * r - 3; ++i) black.push_back(1);
  return Passport(black, std::vector<int>(2 * r - 1, 3));
}

}  // namespace

RowPrediction predict(const FamilyParams& params) {
  RowPrediction row;
  row.params = params;
  row.shabat_id = family_name(params);

  struct Visitor {
    RowPrediction& row;

    void operator()(const Star& p) const {
      if (p.r < 1) throw std::invalid_argument("star requires r >= 1");
      row.n = p.r;
      row.m = row.n;
      row.passport = star_passport(p.r);
      row.label = GroupLabel::cyclic(p.r);
    }
    void operator()(const OddPath& p) const {
      if (p.r < 1) throw std::invalid_argument("odd-path requires r >= 1");
      row.n = 2 * p.r + 1;
      row.m = row.n;
      row.passport = path_passport(row.n);
      row.label = GroupLabel::dihedral(2 * row.n);
    }
    void operator()(const EvenPath& p) const {
      if (p.r < 1) throw std::invalid_argument("even-path requires r >= 1");
      row.n = 2 * p.r;
      row.m = row.n;
      row.passport = path_passport(row.n);
      // The 2-edge path degenerates: sigma1 is trivial and the group is Z_2.
      row.label = p.r == 1 ? GroupLabel::cyclic(2) : GroupLabel::dihedral(2 * row.n);
    }
    void operator()(const DiamFour& p) const {
      if (p.r < 2) throw std::invalid_argument("diam-four requires r > 1");
      if (p.s < 1 || p.t < 1)
        throw std::invalid_argument("diam-four requires s,t >= 1");
      row.n = p.s * (p.r - 1) + p.t;
      row.passport = diam_four_passport(p.r, p.s, p.t);
      if (p.s == p.t) {
        row.d = p.s;
        row.m = p.r;
        row.label = GroupLabel::wreath_cyclic(p.r, p.s);
        return;
      }
      row.d = std::gcd(p.s, p.t);
      row.m = row.n / row.d;
      if (std::gcd(row.d, row.m) != 1) {
        row.label = GroupLabel::unknown(0);  // the open cell
        return;
      }
      if (p.r % 2 == 0)
        row.label = GroupLabel::sym_wreath(row.m, row.d);
      else if ((p.t / row.d) % 2 == 0)
        row.label = GroupLabel::rtilde(row.m, row.d);
      else
        row.label = GroupLabel::alt_wreath(row.m, row.d);
    }
    void operator()(const CleanedDoubleStar& p) const {
      if (p.r < 2 || p.t < 2)
        throw std::invalid_argument("cleaned-double-star requires r,t > 1");
      row.n = 2 * (p.r + p.t - 1);
      row.d = 2;
      row.m = p.r + p.t - 1;
      row.passport = cleaned_double_star_passport(p.r, p.t);
      if (p.r == p.t)
        row.label = p.r % 2 ? GroupLabel::alt_cross2(2 * p.r - 1)
                            : GroupLabel::sym_cross2(2 * p.r - 1);
      else if (p.r % 2 && p.t % 2)
        row.label = GroupLabel::alt_wreath(row.m, 2);
      else if (p.r % 2 == 0 && p.t % 2 == 0)
        row.label = GroupLabel::r2(row.m);
      else
        row.label = GroupLabel::sym_wreath(row.m, 2);
    }
    void operator()(const ThreeStarComposite& p) const {
      if (p.r < 2)
        throw std::invalid_argument("three-star-composite requires r >= 2");
      row.n = 3 * (2 * p.r - 1);
      row.d = 3;
      row.m = 2 * p.r - 1;
      row.passport = threestar_passport(p.r);
      row.label = p.r % 2 ? GroupLabel::alt_wreath(row.m, 3)
                          : GroupLabel::r3(row.m);
    }
    void operator()(const Sporadic337&) const {
      row.n = 14;
      row.d = 2;
      row.m = 7;
      row.passport = Passport({3, 3, 3, 1, 1, 1, 1, 1},
                              std::vector<int>(7, 2));
      row.label = GroupLabel::alt_wreath(7, 2);
    }
  };
  std::visit(Visitor{row}, params);
  return row;
}

ExactPolynomial family_polynomial(const FamilyParams& params) {
  struct Visitor {
    ExactPolynomial operator()(const Star& p) const { return star_shabat(p.r); }
    ExactPolynomial operator()(const OddPath& p) const {
      return chebyshev_path(2 * p.r + 1);
    }
    ExactPolynomial operator()(const EvenPath& p) const {
      return chebyshev_path(2 * p.r);
    }
    ExactPolynomial operator()(const DiamFour& p) const {
      return adrianov_shabat(p.r, p.s, p.t);
    }
    ExactPolynomial operator()(const CleanedDoubleStar& p) const {
      return cleaned_double_star(p.r, p.t);
    }
    ExactPolynomial operator()(const ThreeStarComposite& p) const {
      return threestar_composite(p.r);
    }
    ExactPolynomial operator()(const Sporadic337&) const { return sporadic_337(); }
  };
  return std::visit(Visitor{}, params);
}

RowReport verify_row(const FamilyParams& params, const VerifyOptions& options) {
  RowReport report;
  report.params = params;
  report.prediction = predict(params);

  auto check = [&](const std::string& name, bool pass, std::string detail = "") {
    report.assertions.push_back({name, pass, std::move(detail)});
    if (!pass) report.all_pass = false;
  };

  Dessin D = canonical_family(params);
  {
    Passport actual = D.passport();
    check("passport", actual == report.prediction.passport,
          actual.to_string() + " vs " + report.prediction.passport.to_string());
  }
  check("tree", D.is_tree());
  check("edge-count", D.edge_count() == report.prediction.n);

  GroupHandle G = D.monodromy();
  report.computed_order = G.order();
  auto recognition = recognize_with_evidence(G);
  report.recognized = recognition.label;

  if (report.prediction.label.kind != GroupLabel::Kind::Unknown) {
    BigInt expected_order = predicted_order(report.prediction.label);
    {
      std::ostringstream detail;
      detail << report.computed_order << " vs predicted " << expected_order;
      check("group-order", report.computed_order == expected_order, detail.str());
    }
    GroupLabel expected_label = normalize_label(report.prediction.label);
    check("group-label", report.recognized == expected_label,
          label_to_string(report.recognized) + " vs predicted " +
              label_to_string(expected_label));
  } else {
    std::ostringstream note;
    note << "open case: no predicted group; computed order "
         << report.computed_order << ", recognizer says "
         << label_to_string(report.recognized);
    report.notes.push_back(note.str());
  }

  if (options.bfs_cap > 0 && report.computed_order <= options.bfs_cap) {
    auto bfs = brute_force_order(G.generators(), G.degree(), options.bfs_cap);
    check("bfs-oracle", bfs.has_value() && *bfs == report.computed_order,
          bfs ? bfs->str() : "cap exceeded");
  }

  ExactPolynomial F = family_polynomial(params);
  check("shabat", is_shabat(F));
  {
    Passport from_poly = passport_of(F);
    check("shabat-passport", from_poly == report.prediction.passport,
          from_poly.to_string());
  }

  if (options.with_lift) {
    if (F.degree() <= options.lift_max_degree) {
      Dessin traced = trace_dessin(F);
      check("lift-passport", traced.passport() == report.prediction.passport);
      check("lift-iso", are_isomorphic(traced, D).has_value());
    } else {
      report.notes.push_back("lift skipped: degree above the trace limit");
    }
  }
  return report;
}

std::vector<FamilyParams> sweep_grid(const SweepConfig& config) {
  const int N = config.max_n;
  auto capped = [](int value, int cap) { return cap > 0 ? std::min(value, cap) : value; };

  std::vector<FamilyParams> grid;
  for (int r = 1; r <= capped(N, config.max_r); ++r) grid.push_back(Star{r});
  for (int r = 1; 2 * r + 1 <= N && (config.max_r <= 0 || r <= config.max_r); ++r)
    grid.push_back(OddPath{r});
  for (int r = 1; 2 * r <= N && (config.max_r <= 0 || r <= config.max_r); ++r)
    grid.push_back(EvenPath{r});
  for (int r = 2; r <= N; ++r) {  // smallest diam-four instance is s = t = 1
    if (config.max_r > 0 && r > config.max_r) break;
    for (int s = 1; (r - 1) * s + 1 <= N; ++s) {
      if (config.max_s > 0 && s > config.max_s) break;
      for (int t = 1; (r - 1) * s + t <= N; ++t) {
        if (config.max_t > 0 && t > config.max_t) break;
        grid.push_back(DiamFour{r, s, t});
      }
    }
  }
  for (int r = 2; 2 * (r + 2 - 1) <= N; ++r) {
    if (config.max_r > 0 && r > config.max_r) break;
    for (int t = 2; 2 * (r + t - 1) <= N; ++t) {
      if (config.max_t > 0 && t > config.max_t) break;
      grid.push_back(CleanedDoubleStar{r, t});
    }
  }
  for (int r = 2; 3 * (2 * r - 1) <= N; ++r) {
    if (config.max_r > 0 && r > config.max_r) break;
    grid.push_back(ThreeStarComposite{r});
  }
  if (N >= 14) grid.push_back(Sporadic337{});
  return grid;
}

std::vector<RowReport> run_sweep(const SweepConfig& config) {
  auto grid = sweep_grid(config);
  std::vector<RowReport> reports(grid.size());
  parallel_for(grid.size(), config.jobs,
               [&](size_t i) { reports[i] = verify_row(grid[i], config.verify); });
  return reports;
}

std::string sweep_table(const std::vector<RowReport>& reports) {
  std::ostringstream out;
  out << "family                          passport                 group"
         "                     order            result\n";
  for (const auto& report : reports) {
    std::ostringstream family, group;
    family << family_to_string(report.params);
    if (report.prediction.label.kind == GroupLabel::Kind::Unknown)
      group << "?? (open)";
    else
      group << label_to_string(normalize_label(report.prediction.label));
    out << family.str();
    for (size_t i = family.str().size(); i < 32; ++i) out << ' ';
    std::string passport = report.prediction.passport.to_string();
    out << passport;
    for (size_t i = passport.size(); i < 25; ++i) out << ' ';
    out << group.str();
    for (size_t i = group.str().size(); i < 26; ++i) out << ' ';
    std::string order = report.computed_order.str();
    out << order << ' ';
    for (size_t i = order.size() + 1; i < 18; ++i) out << ' ';
    out << (report.all_pass ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

}  // namespace dessins
