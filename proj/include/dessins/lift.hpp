#ifndef DESSINS_LIFT_HPP
#define DESSINS_LIFT_HPP

#include <complex>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/exact.hpp"

namespace dessins {

/// Numerical embedding of a + b*sqrt(-3) with sqrt(-3) = i*sqrt(3).
std::complex<double> scalar_to_complex(const ExactScalar& s);

/// One approximation per distinct root, obtained by Durand-Kerner iteration
/// on each square-free factor.  Throws on non-convergence.
std::vector<std::complex<double>> complex_roots(const ExactPolynomial& F,
                                                double eps = 1e-12);

struct TracedVertex {
  std::complex<double> position;
  bool black = false;
  int multiplicity = 0;
  double cluster_radius = 0.0;
};

struct TracedEdge {
  int black_vertex = 0;  // 1-based ids into vertices
  int white_vertex = 0;
  std::vector<std::complex<double>> path;  // black end to white end
};

struct TracedGraph {
  std::vector<TracedVertex> vertices;
  std::vector<TracedEdge> edges;
  /// Counterclockwise incident-edge order per vertex (1-based edge ids).
  std::vector<std::vector<int>> rotations;

  Dessin to_dessin() const;
};

struct TraceOptions {
  int steps = 256;          // continuation steps per half-edge
  double newton_eps = 1e-10;
  double t_end = 1e-12;     // parameter distance kept from the endpoints
  int jobs = 1;             // worker threads for the per-edge traces
};

/// Follows the deg F preimages of 1/2 down to 0 and up to 1 along real
/// values of F, clusters the endpoints onto the roots of F and F-1, and
/// reads the rotations off the arrival angles.  Requires is_shabat(F)
/// (checked exactly first).  Aborts with a diagnostic on cluster ambiguity
/// or Newton divergence; never guesses.
TracedGraph trace_graph(const ExactPolynomial& F, const TraceOptions& options = {});
Dessin trace_dessin(const ExactPolynomial& F, const TraceOptions& options = {});

/// Debug rendering of the traced arcs.
std::string traced_to_svg(const TracedGraph& graph);

}  // namespace dessins

#endif
