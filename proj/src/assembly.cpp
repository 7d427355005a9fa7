#include "helmdg/assembly.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "helmdg/basis.hpp"
#include "helmdg/quadrature.hpp"

namespace helmdg {

PenaltyValues penalty_defaults(double k, double h_e) {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("penalty_defaults: k must be > 0");
  if (!(h_e > 0.0) || !std::isfinite(h_e)) throw std::invalid_argument("penalty_defaults: h_e must be > 0");
  constexpr double gamma1 = 0.1;
  return {std::pow(k * k * h_e, 2.0 / 3.0) * std::cbrt(gamma1), gamma1, 1.0};
}

PenaltyParams PenaltyParams::defaults(double k) {
  PenaltyParams p;
  p.gamma1 = 0.1;
  p.beta1 = 1.0;
  p.gamma0_of = [k](double h_e) { return penalty_defaults(k, h_e).gamma0; };
  return p;
}

PenaltyParams PenaltyParams::constant(double gamma0, double gamma1, double beta1) {
  PenaltyParams p;
  p.gamma1 = gamma1;
  p.beta1 = beta1;
  p.gamma0_of = [gamma0](double) { return gamma0; };
  return p;
}

PenaltyValues PenaltyParams::at(double h_e) const {
  if (!gamma0_of) throw std::invalid_argument("penalty rule has no gamma0");
  const PenaltyValues v{gamma0_of(h_e), gamma1, beta1};
  if (!(v.gamma0 > 0.0) || !(v.gamma1 > 0.0) || !(v.beta1 > 0.0)) {
    throw std::invalid_argument("penalty parameters must be strictly positive");
  }
  return v;
}

ProblemParams ProblemParams::defaults(double k, int p) {
  ProblemParams params;
  params.k = k;
  params.p = p;
  params.penalties = PenaltyParams::defaults(k);
  return params;
}

void set_planewave_sources(ProblemParams& params, Point2 direction) {
  const double k = params.k;
  params.f = [](Point2) { return Complex(0.0, 0.0); };
  params.g = [k, direction](Point2 x, Point2 normal) {
    const Complex ik(0.0, k);
    return ik * (dot(direction, normal) + 1.0) * std::exp(ik * dot(direction, x));
  };
}

namespace {

constexpr double kMinArea = 1e-14;
constexpr int kMaxLocal = 2 * kMaxBasis;

struct TermWeights {
  Complex gradient, consistency, mass, robin, jump_value, jump_normal, jump_tangent;
};

TermWeights full_form(double k) {
  const Complex i(0.0, 1.0);
  return {1.0, 1.0, -k * k, i * k, i, i, i};
}

TermWeights single_term(FormTerm term) {
  TermWeights w{};
  switch (term) {
    case FormTerm::Gradient: w.gradient = 1.0; break;
    case FormTerm::Consistency: w.consistency = 1.0; break;
    case FormTerm::Mass: w.mass = 1.0; break;
    case FormTerm::RobinMass: w.robin = 1.0; break;
    case FormTerm::JumpValue: w.jump_value = 1.0; break;
    case FormTerm::JumpNormal: w.jump_normal = 1.0; break;
    case FormTerm::JumpTangent: w.jump_tangent = 1.0; break;
  }
  return w;
}

/// Dense local matrix over the DOFs of one cell or one edge's neighbours.
struct LocalBlock {
  int size = 0;
  std::array<Index, kMaxLocal> dofs{};
  std::array<Complex, kMaxLocal * kMaxLocal> values{};

  Complex& at(int row, int col) { return values[row * kMaxLocal + col]; }
  Complex at(int row, int col) const { return values[row * kMaxLocal + col]; }

  void emit(Triplets& out) const {
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) out.add(dofs[a], dofs[b], at(a, b));
    }
  }
};

using RealBlock = std::array<double, kMaxLocal * kMaxLocal>;

class FormKernel {
 public:
  FormKernel(const Mesh& mesh, const ProblemParams& params, TermWeights weights, int element_exactness,
             int edge_exactness)
      : mesh_(mesh),
        params_(params),
        weights_(weights),
        ref_(params.p),
        volume_rule_(element_quadrature(element_exactness)),
        edge_rule_(edge_quadrature(edge_exactness)) {
    if (!std::isfinite(params.k) || params.k < 0.0) {
      throw std::invalid_argument("wave number must be finite and non-negative");
    }
    maps_.reserve(mesh.triangles().size());
    for (const Triangle& t : mesh.triangles()) {
      const auto v = mesh.vertices();
      maps_.emplace_back(v[t.vertices[0]], v[t.vertices[1]], v[t.vertices[2]]);
      if (maps_.back().area() < kMinArea) {
        throw std::runtime_error("degenerate triangle " + std::to_string(t.label) + " (area " +
                                 std::to_string(maps_.back().area()) + ")");
      }
    }
    for (const Point2& q : volume_rule_.points) volume_samples_.push_back(ref_.evaluate(q));
  }

  std::size_t block_count() const { return mesh_.triangles().size() + mesh_.edges().size(); }

  void block(std::size_t b, LocalBlock& out) const {
    const std::size_t nt = mesh_.triangles().size();
    if (b < nt) {
      volume_block(static_cast<Index>(b), out);
    } else {
      edge_block(static_cast<Index>(b - nt), out);
    }
  }

  std::size_t n_dofs() const { return mesh_.triangles().size() * static_cast<std::size_t>(ref_.n_basis()); }

 private:
  const Mesh& mesh_;
  const ProblemParams& params_;
  TermWeights weights_;
  ReferenceElement ref_;
  QuadratureRule volume_rule_;
  QuadratureRule edge_rule_;
  std::vector<AffineMap> maps_;
  std::vector<BasisSample> volume_samples_;

  void volume_block(Index t, LocalBlock& out) const {
    const int d = ref_.n_basis();
    const AffineMap& map = maps_[t];
    RealBlock grad{}, mass{};
    std::array<Point2, kMaxBasis> g{};
    for (std::size_t q = 0; q < volume_rule_.size(); ++q) {
      const BasisSample& s = volume_samples_[q];
      const double w = volume_rule_.weights[q] * map.det();
      for (int i = 0; i < d; ++i) g[i] = map.push_gradient(s.gradient[i]);
      for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
          grad[a * kMaxLocal + b] += w * dot(g[a], g[b]);
          mass[a * kMaxLocal + b] += w * s.value[a] * s.value[b];
        }
      }
    }
    out.size = d;
    for (int a = 0; a < d; ++a) out.dofs[a] = t * d + a;
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        const int k = a * kMaxLocal + b;
        const Complex v = weights_.gradient * grad[k] + weights_.mass * mass[k];
        out.at(a, b) = v;
        out.at(b, a) = v;
      }
    }
  }

  int local_vertex(const Triangle& t, Index v) const {
    for (int i = 0; i < 3; ++i) {
      if (t.vertices[i] == v) return i;
    }
    throw std::logic_error("edge vertex not found in adjacent triangle");
  }

  void edge_block(Index e_id, LocalBlock& out) const {
    const Edge& e = mesh_.edges()[e_id];
    const int d = ref_.n_basis();
    const int sides = e.is_boundary() ? 1 : 2;
    const int m = sides * d;
    const double h = e.length;
    const bool interior = e.kind == EdgeKind::Interior;
    const bool robin = e.kind == EdgeKind::Robin;

    // Reference-coordinate endpoints of the edge in each neighbour.
    std::array<Point2, 2> ref_a{}, ref_b{};
    for (int s = 0; s < sides; ++s) {
      const Triangle& tri = mesh_.triangles()[e.cells[s]];
      ref_a[s] = ref_.node(local_vertex(tri, e.vertices[0]));
      ref_b[s] = ref_.node(local_vertex(tri, e.vertices[1]));
    }

    // Jump sign: + on the side the normal points out of, − on the other.
    // Average factor: 1/2 inside, 1 on the boundary.
    const double avg = interior ? 0.5 : 1.0;
    std::array<double, kMaxLocal> jump{};
    for (int a = 0; a < m; ++a) jump[a] = a < d ? 1.0 : -1.0;

    RealBlock consistency{}, j0{}, j1{}, l1{}, rmass{};
    std::array<double, kMaxLocal> val{}, dn{}, dt{};
    for (std::size_t q = 0; q < edge_rule_.size(); ++q) {
      const double s_param = edge_rule_.points[q].x;
      const double w = edge_rule_.weights[q] * h;
      for (int s = 0; s < sides; ++s) {
        const Point2 rp = ref_a[s] + s_param * (ref_b[s] - ref_a[s]);
        const BasisSample sample = ref_.evaluate(rp);
        const AffineMap& map = maps_[e.cells[s]];
        for (int i = 0; i < d; ++i) {
          const Point2 g = map.push_gradient(sample.gradient[i]);
          val[s * d + i] = sample.value[i];
          dn[s * d + i] = dot(g, e.normal);
          dt[s * d + i] = dot(g, e.tangent);
        }
      }
      for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
          const int k = a * kMaxLocal + b;
          if (robin) {
            rmass[k] += w * val[a] * val[b];
            continue;
          }
          consistency[k] -= w * (avg * dn[a] * jump[b] * val[b] + jump[a] * val[a] * avg * dn[b]);
          j0[k] += w * (jump[a] * val[a]) * (jump[b] * val[b]);
          l1[k] += w * (jump[a] * dt[a]) * (jump[b] * dt[b]);
          if (interior) j1[k] += w * (jump[a] * dn[a]) * (jump[b] * dn[b]);
        }
      }
    }

    PenaltyValues pen{};
    if (!robin) pen = params_.penalties.at(h);

    out.size = m;
    for (int s = 0; s < sides; ++s) {
      for (int i = 0; i < d; ++i) out.dofs[s * d + i] = e.cells[s] * d + i;
    }
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        const int k = a * kMaxLocal + b;
        const Complex v = weights_.consistency * consistency[k] +
                          weights_.jump_value * (pen.gamma0 / h * j0[k]) +
                          weights_.jump_normal * (pen.gamma1 * h * j1[k]) +
                          weights_.jump_tangent * (pen.beta1 / h * l1[k]) + weights_.robin * rmass[k];
        out.at(a, b) = v;
        out.at(b, a) = v;
      }
    }
  }
};

Index checked_dimension(std::size_t n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Index>::max())) {
    throw std::length_error("too many degrees of freedom");
  }
  return static_cast<Index>(n);
}

SparseComplexMatrix assemble_parallel(const FormKernel& kernel) {
  const std::size_t count = kernel.block_count();
  std::vector<LocalBlock> blocks(count);
  const auto n = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < n; ++b) {
    kernel.block(static_cast<std::size_t>(b), blocks[b]);
  }

  Triplets triplets(checked_dimension(kernel.n_dofs()));
  std::size_t total = 0;
  for (const LocalBlock& blk : blocks) total += static_cast<std::size_t>(blk.size) * blk.size;
  triplets.reserve(total);
  for (const LocalBlock& blk : blocks) blk.emit(triplets);
  return compress(triplets);
}

SparseComplexMatrix assemble_sequential(const FormKernel& kernel) {
  Triplets triplets(checked_dimension(kernel.n_dofs()));
  LocalBlock blk;
  for (std::size_t b = 0; b < kernel.block_count(); ++b) {
    kernel.block(b, blk);
    blk.emit(triplets);
  }
  return compress(triplets);
}

int default_exactness(int p) { return 2 * p + 2; }

}  // namespace

SparseComplexMatrix assemble(const Mesh& mesh, const ProblemParams& params) {
  const FormKernel kernel(mesh, params, full_form(params.k), default_exactness(params.p),
                          default_exactness(params.p));
  return assemble_parallel(kernel);
}

SparseComplexMatrix assemble_serial(const Mesh& mesh, const ProblemParams& params) {
  const FormKernel kernel(mesh, params, full_form(params.k), default_exactness(params.p),
                          default_exactness(params.p));
  return assemble_sequential(kernel);
}

SparseComplexMatrix assemble_term(const Mesh& mesh, const ProblemParams& params, FormTerm term) {
  const FormKernel kernel(mesh, params, single_term(term), default_exactness(params.p),
                          default_exactness(params.p));
  return assemble_parallel(kernel);
}

SparseComplexMatrix assemble_with_quadrature(const Mesh& mesh, const ProblemParams& params,
                                             int element_exactness, int edge_exactness) {
  const FormKernel kernel(mesh, params, full_form(params.k), element_exactness, edge_exactness);
  return assemble_parallel(kernel);
}

RhsVector assemble_rhs(const Mesh& mesh, const ProblemParams& params) {
  const ReferenceElement ref(params.p);
  const int d = ref.n_basis();
  RhsVector rhs;
  rhs.values.assign(mesh.triangles().size() * static_cast<std::size_t>(d), Complex{});
  if (!params.f && !params.g) {
    rhs.sources_missing = true;
    return rhs;
  }

  const auto vertices = mesh.vertices();
  if (params.f) {
    const QuadratureRule rule = element_quadrature(default_exactness(params.p));
    for (const Triangle& t : mesh.triangles()) {
      const AffineMap map(vertices[t.vertices[0]], vertices[t.vertices[1]], vertices[t.vertices[2]]);
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const BasisSample s = ref.evaluate(rule.points[q]);
        const Complex fw = params.f(map.to_physical(rule.points[q])) * (rule.weights[q] * map.det());
        for (int i = 0; i < d; ++i) rhs.values[t.label * d + i] += fw * s.value[i];
      }
    }
  }

  if (params.g) {
    const QuadratureRule rule = edge_quadrature(default_exactness(params.p));
    for (const Edge& e : mesh.edges()) {
      if (e.kind != EdgeKind::Robin) continue;
      const Triangle& t = mesh.triangles()[e.cells[0]];
      const AffineMap map(vertices[t.vertices[0]], vertices[t.vertices[1]], vertices[t.vertices[2]]);
      const Point2 a = vertices[e.vertices[0]];
      const Point2 b = vertices[e.vertices[1]];
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Point2 x = a + rule.points[q].x * (b - a);
        const BasisSample s = ref.evaluate(map.to_reference(x));
        const Complex gw = params.g(x, e.normal) * (rule.weights[q] * e.length);
        for (int i = 0; i < d; ++i) rhs.values[t.label * d + i] += gw * s.value[i];
      }
    }
  }
  return rhs;
}

}  // namespace helmdg
