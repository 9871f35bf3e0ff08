// The element catalog: shape bases paired with degree-of-freedom
// functionals for every family, exact unisolvency certificates, and
// two-cell conformity patch checks.

#ifndef TWF_ELEMENTS_HPP
#define TWF_ELEMENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "twf/bubbles.hpp"
#include "twf/geometry.hpp"

namespace twf {

/// Element families: double-pullback conforming spaces over the full or
/// symmetry-reduced shape spaces, their generalized-trace variants, and the
/// piecewise-constant construction with mirrored test spaces.
enum class Family {
  ii_alt,   // double pullback, full space
  ii_W,     // double pullback, kernel space (p = 1)
  ij_alt,   // generalized value trace, full space (p = 1)
  ij_W,     // generalized value trace, kernel space (p = 1)
  ijp_alt,  // generalized value trace of order p, full space
  ijp_W,    // generalized value trace of order p, kernel space
  ii_Wp,    // double pullback, kernel space of order p
  const_W   // constant kernel shape space with mirrored tests
};

const char* family_name(Family f);
Family family_from_string(const std::string& s);

/// A linear functional on polynomial double forms, attached to a face.
/// Skeletal functionals pair a generalized-trace component against a
/// constant tangential/normal test wedge (weighted by a polynomial k-form
/// factor for the high-order families); bubble functionals pair the double
/// pullback against a polynomial test form on the face.
struct DoFFunctional {
  Tuple face;     // vertex ids within the cell
  bool skeletal = false;
  int s = 0;      // component shift (skeletal)
  PolyForm b1;    // face-world polynomial factor (k-form or (k,l)-bubble)
  Tuple t2, n2;   // constant test wedge labels (skeletal)
};

struct ElementSpec {
  Family family = Family::ii_alt;
  PolyFamily pf = PolyFamily::Pminus;
  int n = 0, k = 0, l = 0, p = 1, r = 1, q = 1;
  std::vector<PolyForm> shape;  // on the reference n-simplex
  std::vector<DoFFunctional> dofs;
  long expected_dim = 0;
  std::string name;  // catalogued proxy name when one exists

  int dim() const { return static_cast<int>(shape.size()); }
};

/// Builds the named family instance. q is the trace order of the mixed
/// variant (q <= p); by default q = p. The mixed variants with q < p are
/// constructed from their stated dof lists and certified unisolvent, but no
/// conformity claim is attached to them. Throws std::invalid_argument naming
/// the violated constraint.
ElementSpec build_element(Family family, PolyFamily pf, int n, int k, int l, int p = 1, int r = 1,
                          int q = -1);

/// The constant-shape construction (family const_W).
ElementSpec constant_element(int n, int k, int l, int p);

/// Exact evaluation of one functional on a form over the given cell.
Rational evaluate_dof(const Simplex& cell, const DoFFunctional& dof, const PolyForm& w);

/// Square matrix dof_i(shape_j) over the given cell.
Matrix dof_matrix(const ElementSpec& spec, const Simplex& cell);

struct UnisolvencyReport {
  bool structural_ok = false;  // |dofs| == |shape| == expected dimension
  long dim = 0;
  long rank = 0;
  bool has_det = false;
  Rational det;
  bool pass = false;
};

UnisolvencyReport unisolvency_check(const ElementSpec& spec, const Simplex& cell);
UnisolvencyReport unisolvency_check(const ElementSpec& spec);

/// Per-face-dimension DoF counts of one face of each dimension, from the
/// closed-form bubble/skeletal counts (ambient dimension n).
std::map<int, long> dof_table(Family family, PolyFamily pf, int n, int k, int l, int p = 1,
                              int r = 1, int q = -1);

/// Two n-cells sharing a facet, with exact global vertex coordinates.
struct Patch {
  std::vector<Vec> verts;
  Tuple cell1, cell2;  // sorted global vertex ids
};

/// Reference cell glued to its reflection through the last facet.
Patch two_cell_patch(int n);

struct ConformityReport {
  bool determination_ok = false;  // traces determined by face-local dofs
  bool single_valued = false;     // global interpolants agree on shared traces
  bool pass = false;
};

/// Verifies that the family's generalized trace is single-valued across the
/// shared facet and all of its subfaces.
ConformityReport conformity_check(const ElementSpec& spec, const Patch& patch);

/// Catalogued human-readable element name ("Regge", "HHJ", ...) or empty.
std::string element_name(Family family, int n, int k, int l, int p, int r);

}  // namespace twf

#endif
