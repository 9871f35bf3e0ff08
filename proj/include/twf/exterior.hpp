// Constant alternating forms with two degree slots, and the free-group
// index maps whose rank thresholds drive every injectivity/surjectivity
// statement in the library.

#ifndef TWF_EXTERIOR_HPP
#define TWF_EXTERIOR_HPP

#include <map>
#include <utility>
#include <vector>

#include "twf/combin.hpp"
#include "twf/linalg.hpp"
#include "twf/rational.hpp"

namespace twf {

using PairKey = std::pair<Tuple, Tuple>;

/// Constant element of Alt^{k,l}(R^n): exact-rational coefficients over the
/// basis dx^I ⊗ dx^J with I, J increasing tuples in [1..n]. Absent pairs mean
/// zero. Degree-(k,0) forms double as plain alternating k-forms.
struct ConstForm {
  int n = 0, k = 0, l = 0;
  std::map<PairKey, Rational> coeffs;

  ConstForm() = default;
  ConstForm(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {}

  static ConstForm basis(int n, const Tuple& I, const Tuple& J);

  void add_term(const Tuple& I, const Tuple& J, const Rational& c);
  bool is_zero() const;
  ConstForm operator+(const ConstForm& o) const;
  ConstForm operator-(const ConstForm& o) const;
  ConstForm operator*(const Rational& c) const;

  /// Coefficient vector over the lexicographic (I, J) pair basis.
  Vec to_vec() const;
  static ConstForm from_vec(int n, int k, int l, const Vec& v);
};

/// Pair basis of Alt^{k,l}(R^n): lexicographic on I, then on J.
const std::vector<PairKey>& pair_basis(int n, int k, int l);
int pair_index(int n, int k, int l, const Tuple& I, const Tuple& J);

/// Wedge of two value-free forms (degrees (k,0) and (k',0)).
ConstForm wedge(const ConstForm& a, const ConstForm& b);

/// Frobenius inner product; the (I, J) pair basis is orthonormal.
Rational frobenius(const ConstForm& a, const ConstForm& b);

/// Hodge star in one slot: dx^I -> sign * dx^{complement}; slot 0 acts on the
/// first index, slot 1 on the second. Orientation is dx^1 ∧ ... ∧ dx^n.
ConstForm hodge_star(const ConstForm& a, int slot);

/// Element of the free abelian group FX(n,k) (single index) or FX(n,k,l)
/// (double index, second degree >= 0). Single-index keys carry an empty
/// second tuple.
struct FreeGroupElement {
  int n = 0;
  int k = 0;
  int l = -1;  // -1 marks single-index elements
  std::map<PairKey, Rational> coeffs;

  static FreeGroupElement single(int n, const Tuple& I);
  static FreeGroupElement pair(int n, const Tuple& I, const Tuple& J);

  bool is_zero() const;
  void add_term(const Tuple& I, const Tuple& J, const Rational& c);
};

/// s_{[p]} : [I] -> sum over p-subsets P of the complement of [I ∪ P], or on
/// pairs [I,J] -> sum over p-subsets P of J \ I of [I ∪ P, J \ P].
FreeGroupElement s_map(const FreeGroupElement& x, int p);

/// Adjoint map: [J] -> sum over p-subsets P of J of [J \ P], or on pairs
/// [I,J] -> sum over p-subsets P of I \ J of [I \ P, J ∪ P].
FreeGroupElement s_dagger_map(const FreeGroupElement& x, int p);

/// Matrix of s_{[p]} : FX(n,k) -> FX(n,k+p) over the lexicographic bases.
Matrix s_matrix(int n, int k, int p);
Matrix s_dagger_matrix(int n, int k, int p);

/// Matrices of the double-index maps on all of FX(n,k,l).
Matrix s_pair_matrix(int n, int k, int l, int p);
Matrix s_dagger_pair_matrix(int n, int k, int l, int p);

/// The block Y_{F,G}(n,k,l): pairs (I,J) with I ∪ J = F and I ∩ J = G.
std::vector<PairKey> y_block(int n, int k, int l, const Tuple& F, const Tuple& G);

/// Matrix of s_{[p]} restricted to a Y_{F,G} block (columns: block of
/// X(n,k,l), rows: block of X(n,k+p,l-p)).
Matrix s_block_matrix(int n, int k, int l, int p, const Tuple& F, const Tuple& G);

}  // namespace twf

#endif
