// Simplicial meshes with exact vertex coordinates: face enumeration,
// boundary classification, global degree-of-freedom and distributional
// counts, and the Euler-characteristic / Dehn-Sommerville audits.

#ifndef TWF_MESHCOMPLEX_HPP
#define TWF_MESHCOMPLEX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "twf/elements.hpp"

namespace twf {

class SimplicialComplex {
public:
  /// Validates and builds the face lattice. Cells are vertex-id lists (any
  /// order; stored sorted). Throws on duplicate cells, non-manifold facet
  /// sharing, or affinely degenerate cells.
  SimplicialComplex(int cell_dim, std::vector<Vec> verts, std::vector<Tuple> cells);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Tuple>& cells() const { return cells_; }

  const std::vector<Tuple>& faces(int m) const { return faces_[m]; }
  bool is_interior(int m, int index) const { return interior_[m][index]; }

  /// Face counts by dimension (f-vector) and interior face counts.
  std::vector<long> f_vector() const;
  std::vector<long> f_interior() const;

  /// true when every facet is shared by exactly two cells (closed complex).
  bool is_closed() const;

private:
  int ambient_ = 0, dim_ = 0;
  std::vector<Vec> verts_;
  std::vector<Tuple> cells_;
  std::vector<std::vector<Tuple>> faces_;
  std::vector<std::vector<bool>> interior_;
};

/// Plain text mesh document: `dim d`, `vertices N` followed by N coordinate
/// rows (integers or "p/q"), `cells M` followed by M rows of d+1 vertex ids.
/// Lines starting with '#' are comments.
SimplicialComplex load_complex(std::istream& in);
SimplicialComplex load_complex_file(const std::string& path);
void save_complex(const SimplicialComplex& cx, std::ostream& out);

/// Sum of the per-face element DoF counts over the whole mesh (boundary
/// faces included), with the per-dimension breakdown.
struct GlobalDofCount {
  long total = 0;
  std::vector<long> by_dim;
};
GlobalDofCount global_dof_count(const SimplicialComplex& cx, Family family, PolyFamily pf, int k,
                                int l, int p = 1, int r = 1);

/// Dimension of the distributional space of generalized-trace functionals of
/// the degree-(k,l) symmetric space (own indices, k >= l+p-1): interior
/// (n-k)-faces carry sum_{s<p} dim Alt^{n-k-s}(sigma) x Alt^{k-l+s}(sigma-
/// perp) functionals each.
struct DistributionCount {
  long total = 0;
  long per_face = 0;
  long face_count = 0;
};
DistributionCount distribution_dim(const SimplicialComplex& cx, int k, int l, int p);

/// Euler-characteristic audit of the sequence linking value degrees l and
/// l+p: alternating sum of the element space dimensions and distributional
/// dimensions minus the constant-field count C(n,l) + (-1)^{p-1} C(n,l+p).
/// Zero residual on triangulations of contractible domains; contractibility
/// is the caller's hypothesis and is not verified here.
long euler_residual(const SimplicialComplex& cx, int l, int p);

/// The same identity evaluated from the f-vectors alone (skeletal counting).
long skeletal_identity_residual(const SimplicialComplex& cx, int l, int p);

/// Dehn-Sommerville relation for a closed simplicial sphere, applied with
/// the polytope dimension d = (complex dimension) + 1; valid for 0 <= p <= d.
long dehn_sommerville_residual(const SimplicialComplex& cx, int p);

/// Curated contractible test meshes.
SimplicialComplex single_simplex_mesh(int n);
SimplicialComplex two_cell_mesh(int n);
/// Cone over the boundary of the reference simplex from its barycenter.
SimplicialComplex starred_simplex_mesh(int n);
/// Solid cone over an arbitrary complex from a new apex one dimension up
/// (a contractible (d+1)-complex).
SimplicialComplex cone_mesh(const SimplicialComplex& cx);
/// Cone completion: the complex together with the cone over its boundary
/// from an apex one coordinate up. Closes a ball into a sphere; satisfies
/// f^C_i = f_i + (boundary f)_{i-1} with the empty face counted once.
SimplicialComplex cone_completion_mesh(const SimplicialComplex& cx);
/// Boundary of the (d+1)-simplex as a closed d-sphere.
SimplicialComplex simplex_boundary_mesh(int d);
/// Boundary of the octahedron (a closed 2-sphere).
SimplicialComplex octahedron_boundary_mesh();

}  // namespace twf

#endif
