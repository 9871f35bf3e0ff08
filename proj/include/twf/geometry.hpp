// Simplices with exact-rational vertices, orthogonal (unnormalized) face
// frames, and the trace operators: pullback, restriction, and the
// tangential/normal component projections between them.
//
// Every simplex is handled in its own chart coordinates (vertex 0 at the
// origin, vertex i at the i-th coordinate vector); the embedding enters only
// through the pullback metric and through the ambient candidate vectors used
// to seed the normal frames. Frames of a face shared by two cells therefore
// consist of the same geometric vectors regardless of which cell built them.

#ifndef TWF_GEOMETRY_HPP
#define TWF_GEOMETRY_HPP

#include <map>
#include <memory>
#include <vector>

#include "twf/exterior.hpp"
#include "twf/linalg.hpp"
#include "twf/polyform.hpp"

namespace twf {

/// Frame of a face inside a simplex: tangent block from the sorted edge
/// vectors, normal block completed by Gram-Schmidt against the metric
/// (orthogonal, never normalized). Inner products of trace components go
/// through the dual Gram blocks.
struct FaceFrame {
  Tuple face;  // vertex ids
  int d = 0;   // world dimension
  int m = 0;   // face dimension
  Matrix A;        // columns: tangent then normal vectors, world coordinates
  Matrix A_inv;    // rows: dual covectors
  Matrix gram_t;   // dual tangential Gram block, m x m
  Matrix gram_n;   // dual normal Gram block, (d-m) x (d-m)
};

class Simplex {
public:
  /// Simplex from exact vertex coordinates; throws on affine degeneracy.
  explicit Simplex(std::vector<Vec> vertices);
  static Simplex reference(int d);

  int ambient() const { return ambient_; }
  int dim() const { return d_; }
  const std::vector<Vec>& vertices() const { return verts_; }

  /// Chart tangents as columns (ambient x dim).
  const Matrix& chart() const { return chart_; }
  /// Pullback metric of the chart (identity for the reference simplex).
  const Matrix& metric() const { return metric_; }

  /// All m-faces as sorted vertex-id tuples.
  std::vector<Tuple> faces(int m) const;

  /// Frame of a face; memoized per face.
  const FaceFrame& frame(const Tuple& face_ids) const;

  /// The sub-simplex spanned by the given vertices, as its own world.
  Simplex face_simplex(const Tuple& face_ids) const;

private:
  int ambient_ = 0, d_ = 0;
  std::vector<Vec> verts_;
  Matrix chart_;
  Matrix metric_;
  Matrix candidates_;  // world-coordinate seeds for normal completion
  mutable std::map<Tuple, FaceFrame> frames_;
};

/// Re-expresses a constant ambient double form in the simplex's own chart
/// coordinates (the wedge minors of the inverse chart).
PolyForm ambient_const_to_world(const Simplex& S, const ConstForm& w);

/// One component table of a generalized trace on a face: coefficients over
/// (face barycentric monomial) x (slot-1 tangential/normal wedge labels) x
/// (slot-2 labels). Tangential labels index the frame tangents 1..m, normal
/// labels the frame normals 1..d-m.
struct TraceKey {
  BaryExp alpha;  // size m+1
  Tuple T1, N1;
  Tuple T2, N2;

  bool operator<(const TraceKey& o) const;
  bool operator==(const TraceKey& o) const {
    return alpha == o.alpha && T1 == o.T1 && N1 == o.N1 && T2 == o.T2 && N2 == o.N2;
  }
};

struct TraceValue {
  int d = 0, m = 0, k = 0, l = 0;
  std::map<TraceKey, Rational> terms;

  void add(const TraceKey& key, const Rational& c);
  bool is_zero() const { return terms.empty(); }
};

/// Full restriction: every tangential/normal component of both slots.
TraceValue rho_star(const Simplex& S, const Tuple& face, const PolyForm& w);

/// Pullback to the face: only the fully tangential components survive.
TraceValue iota_star(const Simplex& S, const Tuple& face, const PolyForm& w);

/// Component with exactly q tangential slots in the first index
/// (single-slot forms, l = 0).
TraceValue vartheta(const Simplex& S, const Tuple& face, int q, const PolyForm& w);

/// Sum of the vartheta components with at least m-p+1 tangential slots
/// (single-slot forms, l = 0).
TraceValue jstar_p(const Simplex& S, const Tuple& face, int p, const PolyForm& w);

/// Double traces for (k,l)-forms: pullback on the first slot, pullback or
/// generalized trace on the value slot.
TraceValue double_trace_ii(const Simplex& S, const Tuple& face, const PolyForm& w);
TraceValue double_trace_ij_p(const Simplex& S, const Tuple& face, int p, const PolyForm& w);

/// Combinatorial double pullback producing a form on the face's own
/// reference world (metric-free; commutes with affine charts).
PolyForm pullback_to_face(const Simplex& S, const Tuple& face, const PolyForm& w);

/// Integral of the barycentric monomial over the face, with the measure
/// normalized so the face has unit volume.
Rational face_integral(const BaryExp& alpha);

/// Determinant of the Gram submatrix with the given rows/columns (1-based
/// labels); empty tuples give 1.
Rational gram_minor(const Matrix& g, const Tuple& rows, const Tuple& cols);

}  // namespace twf

#endif
