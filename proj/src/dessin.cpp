#include "dessins/dessin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dessins {

Dessin::Dessin(Permutation sigma0, Permutation sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree())
    throw std::invalid_argument("sigma0 and sigma1 must have equal degree");
  if (sigma0_.degree() < 1)
    throw std::invalid_argument("a dessin needs at least one edge");
  // Connectedness: <sigma0, sigma1> transitive on the edges.
  const int n = sigma0_.degree();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {sigma0_(x), sigma1_(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        stack.push_back(y);
      }
    }
  }
  if (visited != n)
    throw std::invalid_argument("disconnected permutation pair");
}

Permutation Dessin::sigma_infinity() const {
  return (sigma0_ * sigma1_).inverse();
}

Passport Dessin::passport() const {
  return Passport(sigma0_.cycle_type(), sigma1_.cycle_type());
}

int Dessin::genus() const {
  const int n = edge_count();
  int cycles = sigma0_.num_cycles() + sigma1_.num_cycles() +
               sigma_infinity().num_cycles();
  int euler = cycles - n;  // = 2 - 2g
  if ((2 - euler) % 2 != 0 || euler > 2)
    throw std::logic_error("non-integral or negative genus");
  return (2 - euler) / 2;
}

bool Dessin::is_tree() const {
  return sigma_infinity().num_cycles() == 1 && genus() == 0;
}

GroupHandle Dessin::monodromy() const {
  return GroupHandle({sigma0_, sigma1_}, edge_count());
}

// ---------------------------------------------------------------------------
// Canonical families
// ---------------------------------------------------------------------------

std::string family_name(const FamilyParams& params) {
  struct Visitor {
    std::string operator()(const Star&) const { return "star"; }
    std::string operator()(const OddPath&) const { return "odd-path"; }
    std::string operator()(const EvenPath&) const { return "even-path"; }
    std::string operator()(const DiamFour&) const { return "diam-four"; }
    std::string operator()(const CleanedDoubleStar&) const { return "cleaned-double-star"; }
    std::string operator()(const ThreeStarComposite&) const { return "three-star-composite"; }
    std::string operator()(const Sporadic337&) const { return "sporadic-337"; }
  };
  return std::visit(Visitor{}, params);
}

std::string family_to_string(const FamilyParams& params) {
  std::ostringstream out;
  out << family_name(params);
  struct Visitor {
    std::ostringstream& out;
    void operator()(const Star& p) const { out << "(r=" << p.r << ")"; }
    void operator()(const OddPath& p) const { out << "(r=" << p.r << ")"; }
    void operator()(const EvenPath& p) const { out << "(r=" << p.r << ")"; }
    void operator()(const DiamFour& p) const {
      out << "(r=" << p.r << ",s=" << p.s << ",t=" << p.t << ")";
    }
    void operator()(const CleanedDoubleStar& p) const {
      out << "(r=" << p.r << ",t=" << p.t << ")";
    }
    void operator()(const ThreeStarComposite& p) const { out << "(r=" << p.r << ")"; }
    void operator()(const Sporadic337&) const {}
  };
  std::visit(Visitor{out}, params);
  return out.str();
}

namespace {

std::vector<int> run(int from, int length) {
  std::vector<int> cycle(length);
  std::iota(cycle.begin(), cycle.end(), from);
  return cycle;
}

Dessin make_star(int r) {
  if (r < 1) throw std::invalid_argument("star requires r >= 1");
  return Dessin(Permutation::from_cycles({run(1, r)}, r), Permutation(r));
}

Dessin make_path(int n) {
  std::vector<std::vector<int>> black, white;
  for (int a = 1; a + 1 <= n; a += 2) black.push_back({a, a + 1});
  for (int a = 2; a + 1 <= n; a += 2) white.push_back({a, a + 1});
  return Dessin(Permutation::from_cycles(black, n),
                Permutation::from_cycles(white, n));
}

Dessin make_diam_four(int r, int s, int t) {
  if (r < 2) throw std::invalid_argument("diam-four requires r > 1");
  if (s < 1 || t < 1) throw std::invalid_argument("diam-four requires s,t >= 1");
  const int n = s * (r - 1) + t;
  std::vector<std::vector<int>> black;
  if (t > 1) black.push_back(run(1, t));
  for (int j = 0; j < r - 1; ++j)
    if (s > 1) black.push_back(run(t + j * s + 1, s));
  std::vector<int> white_cycle{1};
  for (int j = 0; j < r - 1; ++j) white_cycle.push_back(t + j * s + 1);
  return Dessin(Permutation::from_cycles(black, n),
                Permutation::from_cycles({white_cycle}, n));
}

// Cleaning a tree (q0, q1): every edge e splits into e and e-bar = m + e,
// the white midpoints are the 2-cycles (e, e-bar), and the old rotations act
// on the two halves.
Dessin make_cleaned(const Dessin& Q) {
  const int m = Q.edge_count();
  std::vector<int> images(2 * m);
  for (int e = 1; e <= m; ++e) {
    images[e - 1] = Q.sigma0()(e);
    images[m + e - 1] = m + Q.sigma1()(e);
  }
  std::vector<std::vector<int>> white;
  for (int e = 1; e <= m; ++e) white.push_back({e, m + e});
  return Dessin(Permutation::from_images(std::move(images)),
                Permutation::from_cycles(white, 2 * m));
}

Dessin make_cleaned_double_star(int r, int t) {
  if (r < 2 || t < 2)
    throw std::invalid_argument("cleaned-double-star requires r,t > 1");
  const int m = r + t - 1;
  const int n = 2 * m;
  if (r != t) {
    // sigma0 = (1..r)(rbar, ..., (r+t-1)bar), sigma1 = (i, ibar); ibar = m+i.
    std::vector<std::vector<int>> black{run(1, r), run(m + r, t)};
    std::vector<std::vector<int>> white;
    for (int i = 1; i <= m; ++i) white.push_back({i, m + i});
    return Dessin(Permutation::from_cycles(black, n),
                  Permutation::from_cycles(white, n));
  }
  // r = t: sigma0 = (1..r)(1bar..rbar) and sigma1 pairs i with (r+i)bar,
  // r with rbar, and r+i with ibar.
  std::vector<std::vector<int>> black{run(1, r), run(m + 1, r)};
  std::vector<std::vector<int>> white;
  for (int i = 1; i <= r - 1; ++i) white.push_back({i, m + r + i});
  white.push_back({r, m + r});
  for (int i = 1; i <= r - 1; ++i) white.push_back({r + i, m + i});
  return Dessin(Permutation::from_cycles(black, n),
                Permutation::from_cycles(white, n));
}

Dessin make_threestar_composite(int r) {
  if (r < 2) throw std::invalid_argument("three-star-composite requires r >= 2");
  const int m = 2 * r - 1;
  const int n = 3 * m;
  // sigma0 = (1..r)(rbar..(2r-1)bar), sigma1 = (i, ibar, ihat);
  // ibar = m+i, ihat = 2m+i.
  std::vector<std::vector<int>> black{run(1, r), run(m + r, r)};
  std::vector<std::vector<int>> white;
  for (int i = 1; i <= m; ++i) white.push_back({i, m + i, 2 * m + i});
  return Dessin(Permutation::from_cycles(black, n),
                Permutation::from_cycles(white, n));
}

Dessin make_sporadic337() {
  // Cleaning of the diameter-four tree with r = 3, s = 3, t = 1 (the inner
  // polynomial of the degree-14 composite).
  return make_cleaned(make_diam_four(3, 3, 1));
}

}  // namespace

Dessin canonical_family(const FamilyParams& params) {
  struct Visitor {
    Dessin operator()(const Star& p) const { return make_star(p.r); }
    Dessin operator()(const OddPath& p) const {
      if (p.r < 1) throw std::invalid_argument("odd-path requires r >= 1");
      return make_path(2 * p.r + 1);
    }
    Dessin operator()(const EvenPath& p) const {
      if (p.r < 1) throw std::invalid_argument("even-path requires r >= 1");
      return make_path(2 * p.r);
    }
    Dessin operator()(const DiamFour& p) const { return make_diam_four(p.r, p.s, p.t); }
    Dessin operator()(const CleanedDoubleStar& p) const {
      return make_cleaned_double_star(p.r, p.t);
    }
    Dessin operator()(const ThreeStarComposite& p) const {
      return make_threestar_composite(p.r);
    }
    Dessin operator()(const Sporadic337&) const { return make_sporadic337(); }
  };
  return std::visit(Visitor{}, params);
}

// ---------------------------------------------------------------------------
// Vertices and composition
// ---------------------------------------------------------------------------

std::vector<DessinVertex> vertices(const Dessin& D) {
  std::vector<DessinVertex> result;
  int id = 1;
  for (const auto& cycle : D.sigma0().cycles(true))
    result.push_back({id++, true, cycle});
  for (const auto& cycle : D.sigma1().cycles(true))
    result.push_back({id++, false, cycle});
  return result;
}

namespace {

struct VertexTable {
  std::vector<DessinVertex> verts;
  std::vector<int> black_at;  // edge -> black vertex id
  std::vector<int> white_at;  // edge -> white vertex id

  explicit VertexTable(const Dessin& D)
      : verts(vertices(D)),
        black_at(D.edge_count() + 1, 0),
        white_at(D.edge_count() + 1, 0) {
    for (const auto& v : verts)
      for (int e : v.edges) (v.black ? black_at : white_at)[e] = v.id;
  }

  const DessinVertex& vertex(int id) const { return verts.at(id - 1); }
  int other_end(int edge, int vertex_id) const {
    return vertex(vertex_id).black ? white_at[edge] : black_at[edge];
  }
};

// Tree path between two vertices: edge list and vertex list.
std::pair<std::vector<int>, std::vector<int>> tree_path(const VertexTable& table,
                                                        int from, int to) {
  std::map<int, std::pair<int, int>> parent;  // vertex -> (parent vertex, edge)
  std::vector<int> queue{from};
  parent[from] = {0, 0};
  for (size_t qi = 0; qi < queue.size() && !parent.count(to); ++qi) {
    int v = queue[qi];
    for (int e : table.vertex(v).edges) {
      int w = table.other_end(e, v);
      if (!parent.count(w)) {
        parent[w] = {v, e};
        queue.push_back(w);
      }
    }
  }
  if (!parent.count(to)) throw std::logic_error("marked vertices not connected");
  std::vector<int> edges, verts{to};
  for (int v = to; v != from;) {
    auto [pv, pe] = parent[v];
    edges.push_back(pe);
    verts.push_back(pv);
    v = pv;
  }
  std::reverse(edges.begin(), edges.end());
  std::reverse(verts.begin(), verts.end());
  return {edges, verts};
}

// Rotate a cyclic list so that the given entry comes first.
std::vector<int> rotate_to_front(const std::vector<int>& cycle, int entry) {
  auto it = std::find(cycle.begin(), cycle.end(), entry);
  if (it == cycle.end()) throw std::logic_error("entry not in rotation");
  std::vector<int> rotated(it, cycle.end());
  rotated.insert(rotated.end(), cycle.begin(), it);
  return rotated;
}

}  // namespace

Dessin compose(const Dessin& P, int square_vertex, int triangle_vertex,
               const Dessin& Q) {
  if (!P.is_tree() || !Q.is_tree())
    throw std::invalid_argument("compose requires tree dessins");

  VertexTable tp(P);
  const int num_p_vertices = static_cast<int>(tp.verts.size());
  if (square_vertex < 1 || square_vertex > num_p_vertices ||
      triangle_vertex < 1 || triangle_vertex > num_p_vertices)
    throw std::invalid_argument("marked vertex id out of range");
  if (square_vertex == triangle_vertex)
    throw std::invalid_argument("square and triangle must differ");
  if (!tp.vertex(square_vertex).black)
    throw std::invalid_argument("the square mark must be a black vertex");

  auto [path_edges, path_verts] = tree_path(tp, square_vertex, triangle_vertex);

  // Split P's edges: the path, branches at interior path vertices (these
  // travel with every edge copy), and the residual branches at the two marks
  // (these are adjoined per incident edge of Q).
  std::vector<char> on_path(P.edge_count() + 1, 0);
  for (int e : path_edges) on_path[e] = 1;
  // anchor[v] = index into path_verts of the path vertex whose component v
  // falls in once the path edges are removed.
  std::vector<int> anchor(num_p_vertices + 1, -1);
  for (size_t i = 0; i < path_verts.size(); ++i) {
    int root = path_verts[i];
    if (anchor[root] != -1) continue;
    anchor[root] = static_cast<int>(i);
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : tp.vertex(v).edges) {
        if (on_path[e]) continue;
        int w = tp.other_end(e, v);
        if (anchor[w] == -1) {
          anchor[w] = static_cast<int>(i);
          stack.push_back(w);
        }
      }
    }
  }

  // Both endpoints of a non-path edge share one component, so its zone is
  // the anchor of either endpoint: 0 = square residual, 1 = core,
  // 2 = triangle residual.
  const int last = static_cast<int>(path_verts.size()) - 1;
  std::vector<int> zone(P.edge_count() + 1, 1);
  for (int e = 1; e <= P.edge_count(); ++e) {
    if (on_path[e]) {
      zone[e] = 1;
      continue;
    }
    int a = anchor[tp.black_at[e]];
    zone[e] = (a == 0) ? 0 : (a == last ? 2 : 1);
  }

  VertexTable tq(Q);

  // Composed edge keys -> 1..n_P*n_Q, cores first.
  std::map<std::pair<int, int>, int> core_edge;            // (q edge, p edge)
  std::map<std::tuple<int, int, int>, int> branch_edge;    // (q vertex, sector, p edge)
  int next_id = 1;
  for (int qe = 1; qe <= Q.edge_count(); ++qe)
    for (int pe = 1; pe <= P.edge_count(); ++pe)
      if (zone[pe] == 1) core_edge[{qe, pe}] = next_id++;
  for (const auto& qv : tq.verts) {
    int zone_wanted = qv.black ? 0 : 2;
    for (size_t sector = 0; sector < qv.edges.size(); ++sector)
      for (int pe = 1; pe <= P.edge_count(); ++pe)
        if (zone[pe] == zone_wanted)
          branch_edge[{qv.id, static_cast<int>(sector), pe}] = next_id++;
  }
  const int total_edges = next_id - 1;
  if (total_edges != P.edge_count() * Q.edge_count())
    throw std::logic_error("composition edge count mismatch");

  // Assemble rotations.
  std::vector<std::vector<int>> black_cycles, white_cycles;
  auto emit = [&](bool black, std::vector<int> cycle) {
    (black ? black_cycles : white_cycles).push_back(std::move(cycle));
  };

  // Interior core vertices, one copy per Q edge.
  for (const auto& pv : tp.verts) {
    if (anchor[pv.id] == 0 || anchor[pv.id] == last) continue;
    for (int qe = 1; qe <= Q.edge_count(); ++qe) {
      std::vector<int> cycle;
      for (int pe : pv.edges) cycle.push_back(core_edge.at({qe, pe}));
      emit(pv.black, std::move(cycle));
    }
  }
  // Residual-branch vertices, one copy per (Q vertex, sector).
  for (const auto& pv : tp.verts) {
    int a = anchor[pv.id];
    if (!(a == 0 || a == last)) continue;
    if (pv.id == square_vertex || pv.id == triangle_vertex) continue;
    bool from_square = (a == 0);
    for (const auto& qv : tq.verts) {
      if (qv.black != from_square) continue;
      for (size_t sector = 0; sector < qv.edges.size(); ++sector) {
        std::vector<int> cycle;
        for (int pe : pv.edges)
          cycle.push_back(branch_edge.at({qv.id, static_cast<int>(sector), pe}));
        emit(pv.black, std::move(cycle));
      }
    }
  }
  // Mark copies at the Q vertices.
  const auto square_rotation =
      rotate_to_front(tp.vertex(square_vertex).edges, path_edges.front());
  const auto triangle_rotation =
      rotate_to_front(tp.vertex(triangle_vertex).edges, path_edges.back());
  for (const auto& qv : tq.verts) {
    const auto& mark_rotation = qv.black ? square_rotation : triangle_rotation;
    const bool mark_black =
        qv.black ? true : tp.vertex(triangle_vertex).black;
    std::vector<int> cycle;
    for (size_t sector = 0; sector < qv.edges.size(); ++sector) {
      cycle.push_back(core_edge.at({qv.edges[sector], mark_rotation[0]}));
      for (size_t k = 1; k < mark_rotation.size(); ++k)
        cycle.push_back(
            branch_edge.at({qv.id, static_cast<int>(sector), mark_rotation[k]}));
    }
    emit(mark_black, std::move(cycle));
  }

  return Dessin(Permutation::from_cycles(black_cycles, total_edges),
                Permutation::from_cycles(white_cycles, total_edges));
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

std::optional<Permutation> are_isomorphic(const Dessin& D1, const Dessin& D2) {
  const int n = D1.edge_count();
  if (n != D2.edge_count()) return std::nullopt;
  const Permutation &a0 = D1.sigma0(), &a1 = D1.sigma1();
  const Permutation &b0 = D2.sigma0(), &b1 = D2.sigma1();

  for (int anchor = 1; anchor <= n; ++anchor) {
    std::vector<int> image(n + 1, 0);
    image[1] = anchor;
    std::vector<int> stack{1};
    bool ok = true;
    while (!stack.empty() && ok) {
      int x = stack.back();
      stack.pop_back();
      const std::pair<int, int> moves[2] = {{a0(x), b0(image[x])},
                                            {a1(x), b1(image[x])}};
      for (auto [y, target] : moves) {
        if (image[y] == 0) {
          image[y] = target;
          stack.push_back(y);
        } else if (image[y] != target) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> images(image.begin() + 1, image.end());
    Permutation pi = Permutation::from_images(images);  // transitivity fills all
    if (a0.conjugate(pi) == b0 && a1.conjugate(pi) == b1) return pi;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

Permutation canonical_of_type(const std::vector<int>& parts, int n) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : parts) {
    cycles.push_back(run(next, len));
    next += len;
  }
  return Permutation::from_cycles(cycles, n);
}

std::vector<Permutation> centralizer_generators(const std::vector<int>& parts, int n) {
  std::vector<Permutation> gens;
  int offset = 1;
  std::vector<std::pair<int, int>> starts;  // (length, first point)
  for (int len : parts) {
    if (len > 1)
      gens.push_back(Permutation::from_cycles({run(offset, len)}, n));
    starts.emplace_back(len, offset);
    offset += len;
  }
  for (size_t i = 0; i + 1 < starts.size(); ++i) {
    if (starts[i].first != starts[i + 1].first) continue;
    std::vector<std::vector<int>> swap_cycles;
    for (int k = 0; k < starts[i].first; ++k)
      swap_cycles.push_back({starts[i].second + k, starts[i + 1].second + k});
    gens.push_back(Permutation::from_cycles(swap_cycles, n));
  }
  return gens;
}

// Every permutation with the given cycle type, each exactly once: the
// smallest unplaced point anchors a cycle of each still-available distinct
// length, and the tail of the cycle is an ordered choice of the rest.
void enumerate_class(std::map<int, int>& remaining_lengths,
                     std::vector<char>& used, std::vector<int>& images, int n,
                     const std::function<void(const std::vector<int>&)>& visit) {
  int anchor = 0;
  for (int p = 1; p <= n; ++p) {
    if (!used[p]) {
      anchor = p;
      break;
    }
  }
  if (anchor == 0) {
    visit(images);
    return;
  }
  used[anchor] = 1;
  for (auto& [length, count] : remaining_lengths) {
    if (count == 0) continue;
    --count;
    std::vector<int> cycle{anchor};
    std::function<void()> extend = [&]() {
      if (static_cast<int>(cycle.size()) == length) {
        for (size_t i = 0; i < cycle.size(); ++i)
          images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
        enumerate_class(remaining_lengths, used, images, n, visit);
        return;
      }
      for (int p = anchor + 1; p <= n; ++p) {
        if (used[p]) continue;
        used[p] = 1;
        cycle.push_back(p);
        extend();
        cycle.pop_back();
        used[p] = 0;
      }
    };
    extend();
    ++count;
  }
  used[anchor] = 0;
}

bool pair_transitive(const Permutation& a, const Permutation& b) {
  const int n = a.degree();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {a(x), b(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        stack.push_back(y);
      }
    }
  }
  return visited == n;
}

long long orbit_count(const std::vector<std::vector<int>>& valid,
                      const std::vector<Permutation>& cgens,
                      std::vector<int>* representative_indices) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < valid.size(); ++i) index[valid[i]] = static_cast<int>(i);
  std::vector<int> parent(valid.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (size_t i = 0; i < valid.size(); ++i) {
    Permutation sigma1 = Permutation::from_images(valid[i]);
    for (const auto& c : cgens) {
      Permutation conj = sigma1.conjugate(c);
      auto it = index.find(conj.images());
      if (it == index.end())
        throw std::logic_error("centralizer conjugate left the candidate set");
      int a = find(static_cast<int>(i)), b = find(it->second);
      if (a != b) parent[b] = a;
    }
  }
  long long classes = 0;
  std::vector<int> reps;
  for (size_t i = 0; i < valid.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) {
      ++classes;
      reps.push_back(static_cast<int>(i));
    }
  }
  if (representative_indices) *representative_indices = reps;
  return classes;
}

}  // namespace

EnumerationResult count_trees_with_passport(const Passport& passport, int cap,
                                            bool with_all_genus) {
  const int n = passport.edges();
  if (n > cap)
    throw std::invalid_argument("edge count exceeds the enumeration cap");
  if (n < 1) throw std::invalid_argument("empty passport");

  EnumerationResult result;
  Permutation sigma0 = canonical_of_type(passport.black, n);
  auto cgens = centralizer_generators(passport.black, n);

  std::map<int, int> lengths;
  for (int len : passport.white) ++lengths[len];

  std::vector<std::vector<int>> tree_valid;
  std::vector<std::vector<int>> connected_valid;
  const bool want_all = with_all_genus && n <= 8;

  std::vector<char> used(n + 1, 0);
  std::vector<int> images(n);
  enumerate_class(lengths, used, images, n, [&](const std::vector<int>& im) {
    Permutation sigma1 = Permutation::from_images(im);
    Permutation product = sigma0 * sigma1;
    bool is_cycle = product.num_cycles() == 1;
    if (is_cycle) {
      int c0 = sigma0.num_cycles(), c1 = sigma1.num_cycles();
      if (c0 + c1 == n + 1) tree_valid.push_back(im);
      if (want_all) connected_valid.push_back(im);  // one face, any genus
    }
    if (want_all && !is_cycle && pair_transitive(sigma0, sigma1))
      connected_valid.push_back(im);
  });

  std::vector<int> reps;
  result.tree_count = orbit_count(tree_valid, cgens, &reps);
  for (int idx : reps)
    result.representatives.emplace_back(sigma0,
                                        Permutation::from_images(tree_valid[idx]));
  if (want_all)
    result.all_dessin_count = orbit_count(connected_valid, cgens, nullptr);
  return result;
}

}  // namespace dessins
