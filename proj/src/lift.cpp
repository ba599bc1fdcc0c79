#include "dessins/lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dessins/shabat.hpp"
#include "dessins/util.hpp"

namespace dessins {

std::complex<double> scalar_to_complex(const ExactScalar& s) {
  const double sqrt3 = std::sqrt(3.0);
  return {s.rat().convert_to<double>(), s.irr().convert_to<double>() * sqrt3};
}

namespace {

using Complex = std::complex<double>;

struct NumericPoly {
  std::vector<Complex> coeffs;  // ascending
  std::vector<Complex> deriv;
  double abs_sum = 0.0;

  explicit NumericPoly(const ExactPolynomial& p) {
    coeffs.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i)
      coeffs.push_back(scalar_to_complex(p.coeff(i)));
    for (size_t i = 1; i < coeffs.size(); ++i)
      deriv.push_back(coeffs[i] * static_cast<double>(i));
    for (const auto& c : coeffs) abs_sum += std::abs(c);
  }
  Complex eval(Complex z) const {
    Complex acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
  }
  Complex eval_deriv(Complex z) const {
    Complex acc = 0;
    for (size_t i = deriv.size(); i-- > 0;) acc = acc * z + deriv[i];
    return acc;
  }
  // sum |c_i| r^i: a backward-error scale for evaluations at |z| = r.
  double abs_eval(double r) const {
    double acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * r + std::abs(coeffs[i]);
    return acc;
  }
};

std::vector<Complex> durand_kerner(const std::vector<Complex>& ascending,
                                   double eps) {
  const int degree = static_cast<int>(ascending.size()) - 1;
  if (degree < 1) return {};
  std::vector<Complex> monic(ascending.size());
  for (size_t i = 0; i < ascending.size(); ++i)
    monic[i] = ascending[i] / ascending.back();

  // Fujiwara root bound: 2 max_k |c_{d-k}|^{1/k}; far tighter than the
  // Cauchy bound when the trailing coefficients dominate.
  double radius = 0.0;
  for (int k = 1; k <= degree; ++k)
    radius = std::max(radius,
                      std::pow(std::abs(monic[degree - k]), 1.0 / k));
  radius = 2.0 * radius + 1.0;

  std::vector<Complex> roots(degree);
  const Complex seed(0.4, 0.9);
  Complex power = seed;
  for (int k = 0; k < degree; ++k) {
    roots[k] = power * radius;
    power *= seed;
  }

  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
    return acc;
  };

  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < degree; ++k) {
      Complex denom = 1;
      for (int j = 0; j < degree; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      Complex delta = eval(roots[k]) / denom;
      roots[k] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < eps * std::max(1.0, radius)) break;
  }
  double abs_sum = 0.0;
  for (const auto& c : monic) abs_sum += std::abs(c);
  for (const auto& root : roots) {
    double scale = abs_sum * std::pow(std::max(1.0, std::abs(root)),
                                      static_cast<double>(degree));
    if (std::abs(eval(root)) > 1e-9 * scale)
      throw std::runtime_error("root finder did not converge");
  }
  return roots;
}

struct LabeledRoot {
  Complex position;
  int multiplicity;
};

std::vector<LabeledRoot> roots_with_multiplicity(const ExactPolynomial& F,
                                                 double eps) {
  std::vector<LabeledRoot> result;
  for (const auto& [factor, multiplicity] : square_free_decomposition(F)) {
    NumericPoly nf(factor);
    for (const auto& root : durand_kerner(nf.coeffs, eps))
      result.push_back({root, multiplicity});
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.position.real() != b.position.real())
      return a.position.real() < b.position.real();
    return a.position.imag() < b.position.imag();
  });
  return result;
}

// Plain Newton from a point already on an arc into a root: near a root of
// multiplicity m the map contracts radially by (m-1)/m, so this walks the
// remaining distance into the vertex.  A step-size guard stops the walk if
// evaluation noise ever produces a jump that would leave the neighborhood.
Complex polish_to_root(const NumericPoly& F, Complex z, double tol,
                       double extent) {
  for (int iter = 0; iter < 400; ++iter) {
    Complex slope = F.eval_deriv(z);
    if (std::abs(slope) == 0.0) break;
    Complex step = F.eval(z) / slope;
    if (std::abs(step) > 0.25 * extent) break;
    z -= step;
    if (std::abs(step) < tol) break;
  }
  return z;
}

Complex newton_solve(const NumericPoly& F, Complex start, Complex target,
                     double eps) {
  Complex z = start;
  for (int iter = 0; iter < 300; ++iter) {
    Complex residual = F.eval(z) - target;
    if (std::abs(residual) <= eps * std::max(F.abs_eval(std::abs(z)), 1e-30))
      return z;
    Complex slope = F.eval_deriv(z);
    if (std::abs(slope) == 0.0)
      throw std::runtime_error("Newton hit a critical point during continuation");
    Complex step = residual / slope;
    z -= step;
    // Double precision cannot push the residual further than this.
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
  }
  throw std::runtime_error("Newton correction did not converge");
}

}  // namespace

std::vector<Complex> complex_roots(const ExactPolynomial& F, double eps) {
  if (F.is_zero()) throw std::invalid_argument("complex_roots of the zero polynomial");
  std::vector<Complex> flat;
  for (const auto& root : roots_with_multiplicity(F, eps))
    flat.push_back(root.position);
  return flat;
}

TracedGraph trace_graph(const ExactPolynomial& F, const TraceOptions& options) {
  if (!is_shabat(F))
    throw std::invalid_argument("trace_graph requires a Shabat polynomial");
  const int n = F.degree();

  auto black_roots = roots_with_multiplicity(F, 1e-12);
  auto white_roots =
      roots_with_multiplicity(F - ExactPolynomial::constant(1), 1e-12);

  TracedGraph graph;
  for (const auto& r : black_roots)
    graph.vertices.push_back({r.position, true, r.multiplicity, 0.0});
  for (const auto& r : white_roots)
    graph.vertices.push_back({r.position, false, r.multiplicity, 0.0});

  // The deg F preimages of 1/2 are all simple (1/2 is a regular value), one
  // per edge; sorted for a deterministic edge numbering.
  NumericPoly nf(F);
  ExactPolynomial f_half = F - ExactPolynomial::constant(ExactScalar(Rational(1, 2)));
  NumericPoly nhalf(f_half);
  auto starts = durand_kerner(nhalf.coeffs, 1e-12);
  if (static_cast<int>(starts.size()) != n)
    throw std::runtime_error("wrong number of midpoints");
  std::sort(starts.begin(), starts.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const int steps = std::max(2, options.steps);
  const double rho = std::pow(2.0 * options.t_end, 1.0 / steps);

  struct HalfTrace {
    std::vector<Complex> samples;  // from t = 1/2 toward the endpoint
  };
  std::vector<HalfTrace> to_black(n), to_white(n);

  parallel_for(static_cast<size_t>(n), options.jobs, [&](size_t e) {
    Complex z = starts[e];
    // Refine the start.
    z = newton_solve(nf, z, Complex(0.5, 0.0), options.newton_eps);
    to_black[e].samples.push_back(z);
    to_white[e].samples.push_back(z);
    Complex zb = z, zw = z;
    double level = 0.5;
    for (int k = 1; k <= steps; ++k) {
      level *= rho;
      zb = newton_solve(nf, zb, Complex(level, 0.0), options.newton_eps);
      to_black[e].samples.push_back(zb);
      zw = newton_solve(nf, zw, Complex(1.0 - level, 0.0), options.newton_eps);
      to_white[e].samples.push_back(zw);
    }
  });

  // Disjoint-arc monitor: away from the vertices (parameter level >= 1e-4)
  // distinct arcs must stay separated, so a near-collision at equal
  // parameter values signals numerical failure.  The deep tail is excluded:
  // edges sharing an endpoint legitimately converge there.
  double extent = 1.0;
  for (const auto& v : graph.vertices)
    extent = std::max(extent, std::abs(v.position));
  const double collision_tol = 1e-6 * extent;
  int monitored_steps = 0;
  for (double level = 0.5; level >= 1e-4 && monitored_steps < steps;
       level *= rho)
    ++monitored_steps;
  for (int k = 0; k <= monitored_steps; ++k) {
    for (int e1 = 0; e1 < n; ++e1) {
      for (int e2 = e1 + 1; e2 < n; ++e2) {
        if (std::abs(to_black[e1].samples[k] - to_black[e2].samples[k]) <
                collision_tol ||
            std::abs(to_white[e1].samples[k] - to_white[e2].samples[k]) <
                collision_tol)
          throw std::runtime_error("continuation paths nearly collided");
      }
    }
  }

  auto nearest_vertex = [&](Complex z, bool black) {
    int best = -1;
    double best_dist = 0.0;
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
      if (graph.vertices[i].black != black) continue;
      double dist = std::abs(graph.vertices[i].position - z);
      if (best == -1 || dist < best_dist) {
        best = static_cast<int>(i);
        best_dist = dist;
      }
    }
    return std::pair<int, double>(best, best_dist);
  };

  // Endpoint polish, two stages: Newton on F itself walks into the right
  // multiple-root basin; Newton on the square-free part then converges
  // quadratically because its roots are simple.
  NumericPoly nf_minus_1(F - ExactPolynomial::constant(1));
  auto square_free_part = [](const ExactPolynomial& p) {
    ExactPolynomial sf = ExactPolynomial::constant(1);
    for (const auto& [factor, multiplicity] : square_free_decomposition(p))
      sf = sf * factor;
    return sf;
  };
  NumericPoly sf_black(square_free_part(F));
  NumericPoly sf_white(square_free_part(F - ExactPolynomial::constant(1)));
  const double coarse_tol = 1e-9 * extent;
  const double polish_tol = 1e-14 * extent;
  for (int e = 0; e < n; ++e) {
    Complex black_end =
        polish_to_root(nf, to_black[e].samples.back(), coarse_tol, extent);
    black_end = polish_to_root(sf_black, black_end, polish_tol, extent);
    Complex white_end = polish_to_root(nf_minus_1, to_white[e].samples.back(),
                                       coarse_tol, extent);
    white_end = polish_to_root(sf_white, white_end, polish_tol, extent);
    auto [bi, bdist] = nearest_vertex(black_end, true);
    auto [wi, wdist] = nearest_vertex(white_end, false);
    graph.vertices[bi].cluster_radius =
        std::max(graph.vertices[bi].cluster_radius, bdist);
    graph.vertices[wi].cluster_radius =
        std::max(graph.vertices[wi].cluster_radius, wdist);
    TracedEdge edge;
    edge.black_vertex = bi + 1;
    edge.white_vertex = wi + 1;
    edge.path.assign(to_black[e].samples.rbegin(), to_black[e].samples.rend());
    edge.path.insert(edge.path.end(), to_white[e].samples.begin() + 1,
                     to_white[e].samples.end());
    graph.edges.push_back(std::move(edge));
  }

  // Cluster-separation sanity: vertices must sit far apart relative to how
  // loosely the endpoints landed.
  double max_radius = 0.0;
  for (const auto& v : graph.vertices)
    max_radius = std::max(max_radius, v.cluster_radius);
  double min_dist = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < graph.vertices.size(); ++i)
    for (size_t j = i + 1; j < graph.vertices.size(); ++j)
      min_dist = std::min(min_dist, std::abs(graph.vertices[i].position -
                                             graph.vertices[j].position));
  if (graph.vertices.size() > 1 && min_dist <= 10.0 * max_radius) {
    std::ostringstream msg;
    msg << "cluster ambiguity: min vertex distance " << min_dist
        << " vs max cluster radius " << max_radius;
    throw std::runtime_error(msg.str());
  }

  // Rotations: counterclockwise by arrival angle of the last path segment,
  // ties broken by earlier samples.
  graph.rotations.assign(graph.vertices.size(), {});
  for (size_t vi = 0; vi < graph.vertices.size(); ++vi) {
    const auto& vertex = graph.vertices[vi];
    std::vector<std::pair<std::vector<double>, int>> order;
    for (size_t ei = 0; ei < graph.edges.size(); ++ei) {
      const auto& edge = graph.edges[ei];
      bool incident = vertex.black ? edge.black_vertex == static_cast<int>(vi) + 1
                                   : edge.white_vertex == static_cast<int>(vi) + 1;
      if (!incident) continue;
      const auto& samples =
          vertex.black ? to_black[ei].samples : to_white[ei].samples;
      std::vector<double> angles;
      for (size_t back : {size_t(0), size_t(8), size_t(32)}) {
        size_t idx = samples.size() - 1 - std::min(back, samples.size() - 1);
        angles.push_back(std::arg(samples[idx] - vertex.position));
      }
      order.emplace_back(std::move(angles), static_cast<int>(ei) + 1);
    }
    std::sort(order.begin(), order.end());
    for (auto& [angles, id] : order) graph.rotations[vi].push_back(id);
    if (static_cast<int>(order.size()) != vertex.multiplicity)
      throw std::runtime_error("vertex degree does not match root multiplicity");
  }

  return graph;
}

Dessin TracedGraph::to_dessin() const {
  std::vector<std::vector<int>> black_cycles, white_cycles;
  for (size_t vi = 0; vi < vertices.size(); ++vi)
    (vertices[vi].black ? black_cycles : white_cycles).push_back(rotations[vi]);
  const int n = static_cast<int>(edges.size());
  return Dessin(Permutation::from_cycles(black_cycles, n),
                Permutation::from_cycles(white_cycles, n));
}

Dessin trace_dessin(const ExactPolynomial& F, const TraceOptions& options) {
  return trace_graph(F, options).to_dessin();
}

std::string traced_to_svg(const TracedGraph& graph) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& v : graph.vertices) {
    min_x = std::min(min_x, v.position.real());
    max_x = std::max(max_x, v.position.real());
    min_y = std::min(min_y, v.position.imag());
    max_y = std::max(max_y, v.position.imag());
  }
  const double margin = 0.4, scale = 160.0;
  auto X = [&](double x) { return (x - min_x + margin) * scale; };
  auto Y = [&](double y) { return (max_y - y + margin) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << (max_x - min_x + 2 * margin) * scale << "\" height=\""
      << (max_y - min_y + 2 * margin) * scale << "\">\n";
  for (const auto& edge : graph.edges) {
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (size_t k = 0; k < edge.path.size(); k += 4)
      out << X(edge.path[k].real()) << "," << Y(edge.path[k].imag()) << " ";
    out << X(edge.path.back().real()) << "," << Y(edge.path.back().imag());
    out << "\"/>\n";
  }
  for (const auto& v : graph.vertices)
    out << "  <circle cx=\"" << X(v.position.real()) << "\" cy=\""
        << Y(v.position.imag()) << "\" r=\"4\" fill=\""
        << (v.black ? "black" : "white") << "\" stroke=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace dessins
