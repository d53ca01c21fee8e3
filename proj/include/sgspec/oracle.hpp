#pragma once

// Independent ground truth for the decimation sets: the level-m gasket graph
// is built by recursive cell refinement on the triangular lattice (dyadic
// integer coordinates, midpoint identification), the matrix of -Delta_m is
// assembled under either boundary condition and diagonalized by cyclic
// Jacobi rotations in machine doubles.
//
// Sign convention: the assembled matrix is -Delta_m, so its spectrum is
// non-negative and comparable to the decimation values in [0,6].
//
// Neumann convention: boundary rows act with coefficient 2 on each
// difference term (the plain triangle would give {0,3,3}; the doubled form
// gives {0,6,6}, the level-0 set). The doubled operator W^{-1} L with
// w = 1/2 at the three corners is similar, not symmetric; what is stored is
// the symmetric matrix S = W^{-1/2} L W^{-1/2} with the same spectrum,
// together with the weights, so the operator rows (zero row sums, constant
// kernel) remain reconstructible via operator_entry().

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <vector>

#include "sgspec/spectra.hpp"

namespace sgspec {

struct GasketGraph {
  int level = 0;
  std::vector<std::array<long, 2>> vertices;  // lattice coordinates, scale 2^level
  std::vector<std::pair<int, int>> edges;     // u < v
  std::array<int, 3> boundary{};              // ids of the V_0 corners

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool is_boundary(int v) const {
    return v == boundary[0] || v == boundary[1] || v == boundary[2];
  }
};

inline GasketGraph build_graph(int m) {
  if (m < 0) throw DomainError("build_graph: level must be >= 0");
  if (m > 18) throw DomainError("build_graph: level too large for dense assembly");
  using Cell = std::array<std::array<long, 2>, 3>;
  long side = 1L << m;
  std::vector<Cell> cells{{{{{0, 0}}, {{side, 0}}, {{0, side}}}}};
  for (int r = 0; r < m; ++r) {
    std::vector<Cell> next;
    next.reserve(3 * cells.size());
    for (const Cell& c : cells) {
      auto mid = [](const std::array<long, 2>& a, const std::array<long, 2>& b) {
        return std::array<long, 2>{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
      };
      std::array<long, 2> ab = mid(c[0], c[1]), ac = mid(c[0], c[2]), bc = mid(c[1], c[2]);
      next.push_back(Cell{c[0], ab, ac});
      next.push_back(Cell{ab, c[1], bc});
      next.push_back(Cell{ac, bc, c[2]});
    }
    cells = std::move(next);
  }
  GasketGraph g;
  g.level = m;
  std::map<std::array<long, 2>, int> ids;
  auto vertex_id = [&](const std::array<long, 2>& p) {
    auto [it, inserted] = ids.emplace(p, static_cast<int>(g.vertices.size()));
    if (inserted) g.vertices.push_back(p);
    return it->second;
  };
  for (const Cell& c : cells) {
    int a = vertex_id(c[0]), b = vertex_id(c[1]), d = vertex_id(c[2]);
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
    g.edges.emplace_back(std::min(a, d), std::max(a, d));
    g.edges.emplace_back(std::min(b, d), std::max(b, d));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.boundary = {vertex_id({0, 0}), vertex_id({side, 0}), vertex_id({0, side})};
  return g;
}

struct LaplacianMatrix {
  int dimension = 0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  std::vector<double> entries;  // symmetric, row-major
  std::vector<double> weights;  // similarity weights (all 1 for Dirichlet)

  double sym(int i, int j) const { return entries[static_cast<std::size_t>(i) * dimension + j]; }

  // Row of the doubled-boundary operator W^{-1} L; zero row sums under
  // Neumann conditions.
  double operator_entry(int i, int j) const {
    return sym(i, j) * std::sqrt(weights[j] / weights[i]);
  }
};

inline LaplacianMatrix laplacian_matrix(const GasketGraph& g, BoundaryCondition bc) {
  int n = g.vertex_count();
  std::vector<double> lap(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [u, v] : g.edges) {
    lap[static_cast<std::size_t>(u) * n + u] += 1.0;
    lap[static_cast<std::size_t>(v) * n + v] += 1.0;
    lap[static_cast<std::size_t>(u) * n + v] -= 1.0;
    lap[static_cast<std::size_t>(v) * n + u] -= 1.0;
  }
  LaplacianMatrix out;
  out.bc = bc;
  if (bc == BoundaryCondition::Dirichlet) {
    std::vector<int> keep;
    keep.reserve(n - 3);
    for (int v = 0; v < n; ++v) {
      if (!g.is_boundary(v)) keep.push_back(v);
    }
    out.dimension = static_cast<int>(keep.size());
    out.entries.resize(static_cast<std::size_t>(out.dimension) * out.dimension);
    out.weights.assign(out.dimension, 1.0);
    for (int i = 0; i < out.dimension; ++i) {
      for (int j = 0; j < out.dimension; ++j) {
        out.entries[static_cast<std::size_t>(i) * out.dimension + j] =
            lap[static_cast<std::size_t>(keep[i]) * n + keep[j]];
      }
    }
    return out;
  }
  out.dimension = n;
  out.weights.assign(n, 1.0);
  for (int v : g.boundary) out.weights[v] = 0.5;
  out.entries.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.entries[static_cast<std::size_t>(i) * n + j] =
          lap[static_cast<std::size_t>(i) * n + j] / std::sqrt(out.weights[i] * out.weights[j]);
    }
  }
  return out;
}

// All eigenvalues of a dense symmetric matrix by cyclic Jacobi sweeps,
// row-cyclic order, until the off-diagonal Frobenius norm drops below
// tol * ||A||_F. Deterministic; backward error <= tol * ||A||.
inline std::vector<double> dense_eigenvalues(std::vector<double> a, int n, double tol = 1e-12,
                                             int max_sweeps = 64) {
  if (n == 0) return {};
  if (static_cast<std::size_t>(n) * n != a.size()) {
    throw DomainError("dense_eigenvalues: dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = a[static_cast<std::size_t>(i) * n + j] - a[static_cast<std::size_t>(j) * n + i];
      if (std::abs(d) > 1e-12) throw DomainError("dense_eigenvalues: matrix not symmetric");
    }
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  if (fro == 0.0) return std::vector<double>(n, 0.0);
  const double stop = tol * fro;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) <= stop) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
      }
    }
  }
  throw NoConvergence("dense_eigenvalues: Jacobi sweep cap reached");
}

inline std::vector<double> dense_eigenvalues(const LaplacianMatrix& m, double tol = 1e-12) {
  return dense_eigenvalues(m.entries, m.dimension, tol);
}

struct CrossCheckReport {
  int level = 0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  double tolerance = 0.0;
  struct Row {
    double decimation_value = 0.0;  // midpoint of the certified enclosure
    double oracle_value = 0.0;      // nearest oracle eigenvalue
    int multiplicity = 0;           // oracle eigenvalues clustered to this value
    double distance = 0.0;
  };
  std::vector<Row> rows;
  double hausdorff = 0.0;
  bool match = false;
};

// Compares the oracle spectrum of -Delta_m with the decimation set A_m^{bc};
// multiplicities are informational only.
inline CrossCheckReport cross_check(int m, BoundaryCondition bc, double tol = 1e-8,
                                    mpfr_prec_t precision = Ball::kDefaultPrecision) {
  GasketGraph g = build_graph(m);
  LaplacianMatrix lap = laplacian_matrix(g, bc);
  // 1e-12 * ||A|| backward error; tighter stops sit below the double
  // rounding floor of a 366x366 sweep.
  std::vector<double> oracle = dense_eigenvalues(lap, 1e-12);
  SpectrumPtr spectrum = finite_spectrum(m, bc, precision);

  CrossCheckReport report;
  report.level = m;
  report.bc = bc;
  report.tolerance = tol;

  double forward = 0.0;  // decimation -> oracle
  for (const auto& e : spectrum->entries()) {
    double v = e.value.mid_double();
    double best = std::numeric_limits<double>::infinity();
    double best_val = 0.0;
    int mult = 0;
    for (double o : oracle) {
      double d = std::abs(o - v);
      if (d < best) {
        best = d;
        best_val = o;
      }
      if (d <= tol) ++mult;
    }
    report.rows.push_back(CrossCheckReport::Row{v, best_val, mult, best});
    forward = std::max(forward, best);
  }
  double backward = 0.0;  // oracle -> decimation
  for (double o : oracle) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : spectrum->entries()) {
      best = std::min(best, std::abs(o - e.value.mid_double()));
    }
    backward = std::max(backward, best);
  }
  report.hausdorff = std::max(forward, backward);
  report.match = report.hausdorff <= tol;
  return report;
}

// Throwing form used where a mismatch is a hard error.
inline CrossCheckReport assert_cross_check(int m, BoundaryCondition bc, double tol = 1e-8,
                                           mpfr_prec_t precision = Ball::kDefaultPrecision) {
  CrossCheckReport r = cross_check(m, bc, tol, precision);
  if (!r.match) {
    double worst = 0.0, worst_val = 0.0;
    for (const auto& row : r.rows) {
      if (row.distance > worst) {
        worst = row.distance;
        worst_val = row.decimation_value;
      }
    }
    throw MismatchError("cross_check: Hausdorff distance " + std::to_string(r.hausdorff) +
                        " above tolerance, offending value near " + std::to_string(worst_val));
  }
  return r;
}

// Edge-list export: `# level m, vertices n` header then one `u v` per line.
inline void write_graph(std::ostream& os, const GasketGraph& g) {
  os << "# level " << g.level << ", vertices " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges) os << u << " " << v << "\n";
}

// Dense rows, space-separated.
inline void write_matrix(std::ostream& os, const LaplacianMatrix& m) {
  char buf[32];
  for (int i = 0; i < m.dimension; ++i) {
    for (int j = 0; j < m.dimension; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m.sym(i, j));
      os << (j ? " " : "") << buf;
    }
    os << "\n";
  }
}

}  // namespace sgspec
