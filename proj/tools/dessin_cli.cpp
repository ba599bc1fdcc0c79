// Command-line front end: parse passports and permutations, run the census
// verifications, emit JSON/DOT/SVG, drive sweeps.
//
// Exit codes: 0 success, 1 assertion/verification failure, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "dessins/catalog.hpp"
#include "dessins/dessin.hpp"
#include "dessins/io.hpp"
#include "dessins/lift.hpp"
#include "dessins/shabat.hpp"

using namespace dessins;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

OrderedJson load_json(const std::string& path) {
  try {
    return OrderedJson::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

int scan_max_point(const std::string& text) {
  int best = 0, current = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = current * 10 + (c - '0');
      in_number = true;
    } else if (in_number) {
      best = std::max(best, current);
      current = 0;
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, current);
  return best;
}

FamilyParams parse_family(const std::string& name, int r, int s, int t) {
  auto need = [&](int value, const char* flag) {
    if (value <= 0)
      throw std::invalid_argument(std::string("family '") + name +
                                  "' needs --" + flag);
    return value;
  };
  if (name == "star") return Star{need(r, "r")};
  if (name == "odd-path") return OddPath{need(r, "r")};
  if (name == "even-path") return EvenPath{need(r, "r")};
  if (name == "diam-four") return DiamFour{need(r, "r"), need(s, "s"), need(t, "t")};
  if (name == "cleaned-double-star")
    return CleanedDoubleStar{need(r, "r"), need(t, "t")};
  if (name == "three-star-composite") return ThreeStarComposite{need(r, "r")};
  if (name == "sporadic-337") return Sporadic337{};
  throw std::invalid_argument("unknown family: " + name);
}

// Flat key = value configuration, '#' comments, [section] lines ignored.
std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> config;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    config[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return config;
}

bool parse_bool(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("expected a boolean, got: " + value);
}

void print_json(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane-tree dessins with passports of size one: groups, Shabat "
               "polynomials, composition, enumeration, numerical lifts"};
  app.require_subcommand(1);

  auto* cmd_group = app.add_subcommand("group", "order, label and transitivity "
                                                "of <sigma0, sigma1>");
  std::string g_sigma0, g_sigma1;
  int g_degree = 0;
  cmd_group->add_option("--sigma0", g_sigma0, "cycle notation, e.g. \"(1,3,2)(4,7,5)\"")
      ->required();
  cmd_group->add_option("--sigma1", g_sigma1, "cycle notation")->required();
  cmd_group->add_option("--degree", g_degree,
                        "number of points (default: largest point mentioned)");

  auto* cmd_passport =
      app.add_subcommand("passport", "passport, genus and tree flag of a dessin");
  std::string p_dessin;
  cmd_passport->add_option("--dessin", p_dessin, "dessin JSON file")->required();

  auto* cmd_shabat =
      app.add_subcommand("shabat", "construct a family Shabat polynomial");
  std::string s_family, s_emit = "coeffs";
  int s_r = 0, s_s = 0, s_t = 0;
  cmd_shabat->add_option("--family", s_family, "family tag")->required();
  cmd_shabat->add_option("--r", s_r, "family parameter r");
  cmd_shabat->add_option("--s", s_s, "family parameter s");
  cmd_shabat->add_option("--t", s_t, "family parameter t");
  cmd_shabat->add_option("--emit", s_emit, "coeffs | passport")
      ->check(CLI::IsMember({"coeffs", "passport"}));

  auto* cmd_verify = app.add_subcommand("verify-row", "end-to-end census row check");
  std::string v_family;
  int v_r = 0, v_s = 0, v_t = 0;
  bool v_with_lift = false;
  std::uint64_t v_bfs_cap = 1000000;
  cmd_verify->add_option("--family", v_family, "family tag")->required();
  cmd_verify->add_option("--r", v_r, "family parameter r");
  cmd_verify->add_option("--s", v_s, "family parameter s");
  cmd_verify->add_option("--t", v_t, "family parameter t");
  cmd_verify->add_flag("--with-lift", v_with_lift, "also trace the polynomial");
  cmd_verify->add_option("--bfs-cap", v_bfs_cap,
                         "cross-check orders up to this size (0 = off)");

  auto* cmd_sweep = app.add_subcommand("sweep", "verify a parameter grid");
  std::string w_config, w_out;
  int w_jobs = 1;
  cmd_sweep->add_option("--config", w_config, "key = value configuration file");
  cmd_sweep->add_option("--jobs", w_jobs, "worker threads (DESSIN_JOBS overrides)");
  cmd_sweep->add_option("--out", w_out, "write the JSON report here");

  auto* cmd_enum =
      app.add_subcommand("enumerate", "count trees realizing a passport");
  std::string e_passport;
  int e_cap = 10;
  bool e_all_genus = false;
  cmd_enum->add_option("--passport", e_passport, "e.g. \"[3^3,1^5;2^7]\"")
      ->required();
  cmd_enum->add_option("--cap", e_cap, "edge-count cap (default 10)");
  cmd_enum->add_flag("--all-genus", e_all_genus,
                     "also count dessins of any genus (n <= 8)");

  auto* cmd_compose = app.add_subcommand("compose", "edge substitution P * Q");
  std::string c_p, c_q, c_out;
  int c_square = 0, c_triangle = 0;
  cmd_compose->add_option("--p", c_p, "dessin JSON for P")->required();
  cmd_compose->add_option("--square", c_square, "marked black vertex id of P")
      ->required();
  cmd_compose->add_option("--triangle", c_triangle, "second marked vertex id of P")
      ->required();
  cmd_compose->add_option("--q", c_q, "dessin JSON for Q")->required();
  cmd_compose->add_option("--out", c_out, "write the composed dessin here");

  auto* cmd_lift =
      app.add_subcommand("lift", "trace a Shabat polynomial back to its dessin");
  std::string l_poly, l_svg, l_graph;
  int l_steps = 256, l_jobs = 1;
  double l_eps = 1e-10;
  cmd_lift->add_option("--shabat", l_poly, "polynomial JSON file")->required();
  cmd_lift->add_option("--steps", l_steps, "continuation steps per half-edge");
  cmd_lift->add_option("--eps", l_eps, "Newton residual tolerance");
  cmd_lift->add_option("--svg", l_svg, "write traced arcs as SVG");
  cmd_lift->add_option("--graph-json", l_graph, "dump the traced graph as JSON");
  cmd_lift->add_option("--jobs", l_jobs, "worker threads for edge traces");

  auto* cmd_render = app.add_subcommand("render", "emit DOT or SVG for a dessin");
  std::string r_dessin, r_format = "dot";
  cmd_render->add_option("--dessin", r_dessin, "dessin JSON file")->required();
  cmd_render->add_option("--format", r_format, "dot | svg")
      ->check(CLI::IsMember({"dot", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_group)) {
      int degree = g_degree;
      if (degree <= 0)
        degree = std::max({1, scan_max_point(g_sigma0), scan_max_point(g_sigma1)});
      auto sigma0 = Permutation::parse_cycles(g_sigma0, degree);
      auto sigma1 = Permutation::parse_cycles(g_sigma1, degree);
      GroupHandle G({sigma0, sigma1}, degree);
      RecognitionResult rec;
      if (G.is_transitive())
        rec = recognize_with_evidence(G);
      else
        rec.label = GroupLabel::unknown(G.order());
      print_json(group_report_json(G, rec));
      return 0;
    }

    if (app.got_subcommand(cmd_passport)) {
      Dessin D = dessin_from_json(load_json(p_dessin));
      OrderedJson j;
      j["n"] = D.edge_count();
      j["passport"] = D.passport().to_string();
      j["genus"] = D.genus();
      j["tree"] = D.is_tree();
      OrderedJson verts = OrderedJson::array();
      for (const auto& v : vertices(D)) {
        OrderedJson entry;
        entry["id"] = v.id;
        entry["color"] = v.black ? "black" : "white";
        entry["edges"] = v.edges;
        verts.push_back(entry);
      }
      j["vertices"] = verts;
      print_json(j);
      return 0;
    }

    if (app.got_subcommand(cmd_shabat)) {
      auto params = parse_family(s_family, s_r, s_s, s_t);
      ExactPolynomial F = family_polynomial(params);
      if (s_emit == "coeffs") {
        print_json(poly_to_json(F));
      } else {
        OrderedJson j;
        j["family"] = family_to_string(params);
        j["degree"] = F.degree();
        j["passport"] = passport_of(F).to_string();
        print_json(j);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      auto params = parse_family(v_family, v_r, v_s, v_t);
      VerifyOptions options;
      options.with_lift = v_with_lift;
      options.bfs_cap = v_bfs_cap;
      RowReport report = verify_row(params, options);
      print_json(row_report_json(report));
      return report.all_pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_sweep)) {
      SweepConfig config;
      config.jobs = w_jobs;
      if (!w_config.empty()) {
        for (const auto& [key, value] : parse_config(read_file(w_config))) {
          if (key == "max_n") config.max_n = std::stoi(value);
          else if (key == "max_r") config.max_r = std::stoi(value);
          else if (key == "max_s") config.max_s = std::stoi(value);
          else if (key == "max_t") config.max_t = std::stoi(value);
          else if (key == "jobs") config.jobs = std::stoi(value);
          else if (key == "with_lift") config.verify.with_lift = parse_bool(value);
          else if (key == "lift_max_degree")
            config.verify.lift_max_degree = std::stoi(value);
          else if (key == "bfs_cap") config.verify.bfs_cap = std::stoull(value);
          else throw std::invalid_argument("unknown config key: " + key);
        }
      }
      if (w_jobs != 1) config.jobs = w_jobs;
      if (const char* env = std::getenv("DESSIN_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs > 0) config.jobs = jobs;
      }
      auto reports = run_sweep(config);
      OrderedJson j = sweep_report_json(reports);
      if (!w_out.empty()) {
        write_file(w_out, j.dump(2) + "\n");
        std::cout << sweep_table(reports);
      } else {
        print_json(j);
      }
      for (const auto& report : reports)
        if (!report.all_pass) return 1;
      return 0;
    }

    if (app.got_subcommand(cmd_enum)) {
      Passport passport = Passport::parse(e_passport);
      auto result = count_trees_with_passport(passport, e_cap, e_all_genus);
      OrderedJson j;
      j["passport"] = passport.to_string();
      j["n"] = passport.edges();
      j["tree_count"] = result.tree_count;
      if (result.all_dessin_count)
        j["all_dessin_count"] = *result.all_dessin_count;
      OrderedJson reps = OrderedJson::array();
      for (const auto& D : result.representatives) reps.push_back(dessin_to_json(D));
      j["representatives"] = reps;
      print_json(j);
      return 0;
    }

    if (app.got_subcommand(cmd_compose)) {
      Dessin P = dessin_from_json(load_json(c_p));
      Dessin Q = dessin_from_json(load_json(c_q));
      Dessin composed = compose(P, c_square, c_triangle, Q);
      OrderedJson j = dessin_to_json(composed);
      if (!c_out.empty()) write_file(c_out, j.dump(2) + "\n");
      print_json(j);
      return 0;
    }

    if (app.got_subcommand(cmd_lift)) {
      ExactPolynomial F = poly_from_json(load_json(l_poly));
      TraceOptions options;
      options.steps = l_steps;
      options.newton_eps = l_eps;
      options.jobs = l_jobs;
      TracedGraph graph = trace_graph(F, options);
      if (!l_svg.empty()) write_file(l_svg, traced_to_svg(graph));
      if (!l_graph.empty()) write_file(l_graph, traced_graph_json(graph).dump(2) + "\n");
      print_json(dessin_to_json(graph.to_dessin()));
      return 0;
    }

    if (app.got_subcommand(cmd_render)) {
      Dessin D = dessin_from_json(load_json(r_dessin));
      std::cout << (r_format == "dot" ? to_dot(D) : to_svg(D));
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
