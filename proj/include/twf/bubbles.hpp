// Bubble spaces of double forms on the reference simplex: the auxiliary
// constant-form spaces N^l, the structural bubble bases built from attributed
// k-form bases, and their symmetry-reduced kernels. Bubbles are intrinsic to
// the face dimension, so everything here is computed once per dimension and
// reused for every mesh face.

#ifndef TWF_BUBBLES_HPP
#define TWF_BUBBLES_HPP

#include <vector>

#include "twf/exterior.hpp"
#include "twf/geometry.hpp"
#include "twf/polyform.hpp"

namespace twf {

/// Polynomial family selector for the bubble machinery.
enum class PolyFamily {
  Pminus,    // lowest order (Whitney tensor construction, r = 1)
  Pr_minus,  // incomplete family of degree r
  Pr         // full polynomial family of degree r
};

/// Constant l-forms on K whose pullback vanishes on every codimension-one
/// face of K containing sigma. Returned as constant forms of degree (l, 0)
/// in K's world coordinates.
std::vector<ConstForm> n_space(const Simplex& K, const Tuple& sigma, int l);

long n_space_dim(int sigma_dim, int cell_dim, int l);

/// Bubble basis of the degree-(k,l) space on the reference dim-simplex:
/// attributed k-form basis elements of each face tensored with the face's
/// N^l space. For the chosen tie-break this is a genuine basis.
std::vector<PolyForm> bubble_basis(int dim, PolyFamily pf, int r, int k, int l);

/// Kernel of the p-fold dagger shuffle restricted to the bubble basis.
std::vector<PolyForm> bubble_W_basis(int dim, PolyFamily pf, int r, int k, int l, int p);

/// Closed-form bubble dimensions.
long bubble_dim(int dim, PolyFamily pf, int r, int k, int l);
long bubble_W_dim(int dim, PolyFamily pf, int r, int k, int l, int p);

/// Bubbles defined directly by the vanishing of the double pullback on every
/// codimension-one face; the oracle the structural bases are tested against.
std::vector<PolyForm> bubble_basis_by_constraints(int dim, PolyFamily pf, int r, int k, int l);

/// Cached accessors (per-process, build once).
const std::vector<PolyForm>& cached_bubble_basis(int dim, PolyFamily pf, int r, int k, int l);
const std::vector<PolyForm>& cached_bubble_W_basis(int dim, PolyFamily pf, int r, int k, int l,
                                                   int p);
const std::vector<PolyForm>& cached_k_basis_top(int dim, PolyFamily pf, int r, int k);

}  // namespace twf

#endif
