#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dessins/dessin.hpp"

namespace dessins {

namespace {

struct Layout {
  std::map<int, std::pair<double, double>> pos;  // vertex id -> (x, y)
};

struct Incidence {
  std::vector<DessinVertex> verts;
  std::map<int, std::pair<int, int>> ends;  // edge -> (black id, white id)

  explicit Incidence(const Dessin& D) : verts(vertices(D)) {
    for (const auto& v : verts)
      for (int e : v.edges) {
        auto& entry = ends[e];
        (v.black ? entry.first : entry.second) = v.id;
      }
  }
  int other(int edge, int vid) const {
    const auto& [b, w] = ends.at(edge);
    return vid == b ? w : b;
  }
};

int subtree_edges(const Incidence& inc, int vertex, int in_edge) {
  int count = 0;
  for (int e : inc.verts[vertex - 1].edges) {
    if (e == in_edge) continue;
    ++count;
    count += subtree_edges(inc, inc.other(e, vertex), e);
  }
  return count;
}

void place_subtree(const Incidence& inc, int vertex, int in_edge, double lo,
                   double hi, int depth, Layout& layout) {
  const auto& v = inc.verts[vertex - 1];
  std::vector<int> order = v.edges;
  if (in_edge != 0) {
    auto it = std::find(order.begin(), order.end(), in_edge);
    std::rotate(order.begin(), it, order.end());
    order.erase(order.begin());
  }
  int total = 0;
  std::vector<int> weights;
  for (int e : order) {
    int w = 1 + subtree_edges(inc, inc.other(e, vertex), e);
    weights.push_back(w);
    total += w;
  }
  double angle = lo;
  for (size_t i = 0; i < order.size(); ++i) {
    double span = (hi - lo) * weights[i] / std::max(total, 1);
    double mid = angle + span / 2;
    int child = inc.other(order[i], vertex);
    layout.pos[child] = {layout.pos[vertex].first + std::cos(mid),
                         layout.pos[vertex].second + std::sin(mid)};
    place_subtree(inc, child, order[i], mid - span / 3, mid + span / 3, depth + 1,
                  layout);
    angle += span;
  }
}

Layout layout_dessin(const Dessin& D, const Incidence& inc) {
  Layout layout;
  if (D.is_tree()) {
    layout.pos[1] = {0.0, 0.0};
    place_subtree(inc, 1, 0, 0.0, 2 * M_PI, 1, layout);
  } else {
    const double n = static_cast<double>(inc.verts.size());
    for (size_t i = 0; i < inc.verts.size(); ++i) {
      double a = 2 * M_PI * static_cast<double>(i) / n;
      layout.pos[inc.verts[i].id] = {std::cos(a), std::sin(a)};
    }
  }
  return layout;
}

}  // namespace

std::string to_dot(const Dessin& D) {
  Incidence inc(D);
  std::ostringstream out;
  out << "graph dessin {\n";
  out << "  node [shape=circle fixedsize=true width=0.25 label=\"\"];\n";
  for (const auto& v : inc.verts) {
    out << "  v" << v.id;
    if (v.black)
      out << " [style=filled fillcolor=black]";
    else
      out << " [style=filled fillcolor=white]";
    out << ";\n";
  }
  for (const auto& [edge, ends] : inc.ends)
    out << "  v" << ends.first << " -- v" << ends.second << " [label=\"" << edge
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_svg(const Dessin& D) {
  Incidence inc(D);
  Layout layout = layout_dessin(D, inc);

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [id, p] : layout.pos) {
    min_x = std::min(min_x, p.first);
    max_x = std::max(max_x, p.first);
    min_y = std::min(min_y, p.second);
    max_y = std::max(max_y, p.second);
  }
  const double margin = 0.5;
  const double scale = 80.0;
  auto X = [&](double x) { return (x - min_x + margin) * scale; };
  auto Y = [&](double y) { return (y - min_y + margin) * scale; };
  const double width = (max_x - min_x + 2 * margin) * scale;
  const double height = (max_y - min_y + 2 * margin) * scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  for (const auto& [edge, ends] : inc.ends) {
    auto a = layout.pos.at(ends.first);
    auto b = layout.pos.at(ends.second);
    out << "  <line x1=\"" << X(a.first) << "\" y1=\"" << Y(a.second)
        << "\" x2=\"" << X(b.first) << "\" y2=\"" << Y(b.second)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << (X(a.first) + X(b.first)) / 2 + 3 << "\" y=\""
        << (Y(a.second) + Y(b.second)) / 2 - 3 << "\" font-size=\"10\">" << edge
        << "</text>\n";
  }
  for (const auto& v : inc.verts) {
    auto p = layout.pos.at(v.id);
    out << "  <circle cx=\"" << X(p.first) << "\" cy=\"" << Y(p.second)
        << "\" r=\"5\" fill=\"" << (v.black ? "black" : "white")
        << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dessins
