// Connecting maps S and S-dagger between double forms, their iterates,
// the symmetric kernel spaces W, and the algebraic decompositions built
// from them (telescope splitting, Bianchi projection, flip isomorphism).

#ifndef TWF_BGG_HPP
#define TWF_BGG_HPP

#include <string>
#include <vector>

#include "twf/exterior.hpp"
#include "twf/linalg.hpp"

namespace twf {

/// Linear map between constant form spaces, stored as an exact matrix over
/// the lexicographic pair bases (rows: codomain, columns: domain).
struct LinearMap {
  int n = 0;
  int k_dom = 0, l_dom = 0;
  int k_cod = 0, l_cod = 0;
  Matrix mat;
};

/// S^{k,l} : Alt^{k,l} -> Alt^{k+1,l-1}; moves one value-slot index into the
/// form slot with a shuffle sign. Out-of-range degrees give the zero map of
/// the correct (possibly empty) shape.
LinearMap build_S(int n, int k, int l);

/// Adjoint map Alt^{k,l} -> Alt^{k-1,l+1}.
LinearMap build_S_dagger(int n, int k, int l);

/// p-fold iterates (plain compositions; p = 0 is the identity).
LinearMap build_S_iter(int n, int k, int l, int p);
LinearMap build_S_dagger_iter(int n, int k, int l, int p);

/// Exact rank of the iterated maps computed blockwise through the
/// (union, intersection) decomposition of the pair basis; agrees with
/// mat.rank() but stays cheap for n = 5, 6.
long rank_S_iter(int n, int k, int l, int p);
long rank_S_dagger_iter(int n, int k, int l, int p);

/// dim W^{k,l}_{[p]} = dim ker S_{dagger,[p]}^{k,l} from the surjectivity
/// count (valid for k <= l+p-1).
long w_space_dim(int n, int k, int l, int p);

/// Basis of W^{k,l}_{[p]} = ker(S_{dagger,[p]}^{k,l}) as coefficient vectors
/// over the pair basis.
struct SymmetricSpaceBasis {
  int n = 0, k = 0, l = 0, p = 1;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  ConstForm form(int i) const { return ConstForm::from_vec(n, k, l, basis[i]); }
};

SymmetricSpaceBasis symmetric_space(int n, int k, int l, int p);

/// Kernel of S_{[p]}^{k,l} (the distributional-side symmetric space).
SymmetricSpaceBasis symmetric_space_tilde(int n, int k, int l, int p);

/// Orthogonal telescope splitting of W^{k,l}_{[p]}: blocks
/// W^{k,l}, S W^{k-1,l+1}, ..., S_{[p-1]} W^{k-p+1,l+p-1}.
std::vector<std::vector<Vec>> telescope_decompose(int n, int k, int l, int p);

/// Pair-swap symmetrizer of Alt^{k,k} (matrix of w -> (w + w^T)/2).
Matrix pair_symmetrizer(int n, int k);

/// Bianchi projection of Alt^{2,2}: B = include ∘ b ∘ sym where b is the
/// cyclic average landing in Alt^4. B is idempotent and its kernel inside
/// the pair-symmetric subspace is W^{2,2}.
LinearMap bianchi_map(int n);

/// Matrix of the cyclic Bianchi average sym Alt^{2,2} -> Alt^{0,4}
/// (precomposed with sym, defined on all of Alt^{2,2}).
Matrix bianchi_to_alt4(int n);

/// Flip isomorphism data: S_{dagger,[l-k]}^{l,k} restricted to
/// W^{l,k}_{[1+l-k]} maps bijectively onto W^{k,l}. Returns the images of the
/// restricted basis (coefficient vectors in Alt^{k,l}).
std::vector<Vec> flip_images(int n, int k, int l);

/// The pair of mutually adjoint maps inducing the flip isomorphism:
/// S_{dagger,[l-k]}^{l,k} and S_{[l-k]}^{k,l}.
std::pair<LinearMap, LinearMap> flip_isomorphism(int n, int k, int l);

/// Human-readable proxy name of W^{k,l} in dimensions 3 and 4 ("S", "T",
/// "AC", ...), empty when none is catalogued.
std::string w_proxy_name(int n, int k, int l);
long w_proxy_dim(int n, int k, int l);

}  // namespace twf

#endif
