// Polynomial double forms on a reference simplex: barycentric-monomial
// coefficients over constant wedge pairs, the Whitney and high-order bases,
// the Koszul contraction, and the symbolic slot-shuffle operators.
//
// A PolyForm lives on the reference d-simplex (vertex 0 at the origin,
// vertex i at the i-th unit vector, so lambda_0 = 1 - sum x_i and
// lambda_i = x_i). Forms on mesh cells are these reference forms read
// through the cell's affine chart; barycentric data transports verbatim.

#ifndef TWF_POLYFORM_HPP
#define TWF_POLYFORM_HPP

#include <map>
#include <vector>

#include "twf/combin.hpp"
#include "twf/linalg.hpp"
#include "twf/rational.hpp"

namespace twf {

/// Multi-exponent over the vertices 0..d of the reference simplex.
using BaryExp = std::vector<int>;

struct PolyTerm {
  BaryExp alpha;  // size d+1
  Tuple I, J;     // increasing tuples over the coordinate labels 1..d

  bool operator<(const PolyTerm& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    if (I != o.I) return I < o.I;
    return J < o.J;
  }
};

class PolyForm {
public:
  PolyForm() = default;
  PolyForm(int dim, int k, int l) : dim_(dim), k_(k), l_(l) {}

  int dim() const { return dim_; }
  int k() const { return k_; }
  int l() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PolyTerm, Rational>& terms() const { return terms_; }

  void add_term(const BaryExp& alpha, const Tuple& I, const Tuple& J, const Rational& c);
  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator*(const Rational& c) const;

  /// Multiplication by the barycentric monomial lambda^alpha.
  PolyForm times_monomial(const BaryExp& alpha) const;

private:
  int dim_ = 0, k_ = 0, l_ = 0;
  std::map<PolyTerm, Rational> terms_;
};

/// Expansion of dlambda_{v1} ∧ ... ∧ dlambda_{vk} over the dx wedge basis
/// (vertices may include 0; dlambda_0 = -sum dx^i).
std::map<Tuple, Rational> dlambda_wedge(int dim, const Tuple& verts);

/// Whitney k-form of the face with vertex set sigma (0-based ids, |sigma| = k+1).
PolyForm whitney_form(int dim, const Tuple& sigma);

/// One attributed basis element: the form plus the vertex set of the face it
/// belongs to.
struct AttributedForm {
  PolyForm form;
  Tuple face;  // vertex ids
};

/// Basis of the incomplete family of polynomial k-forms of degree r on the
/// reference dim-simplex, dual to the face degrees of freedom: elements
/// lambda^alpha phi_I with |alpha| = r-1, supp(alpha) ∪ I equal to the face,
/// and alpha_i = 0 for i < min I.
std::vector<AttributedForm> basis_Pr_minus(int dim, int r, int k);

/// Basis of the full polynomial family: lambda^alpha dlambda_I with
/// |alpha| = r, supp(alpha) ∪ I equal to the face (of dimension >= k), and
/// alpha_i = 0 for i < min(face \ I).
std::vector<AttributedForm> basis_Pr(int dim, int r, int k);

long dim_Pr_minus_alt(int n, int r, int k, int l);
long dim_Pr_alt(int n, int r, int k, int l);

/// Koszul contraction of the first slot with the position field of the
/// reference simplex; degree (k,l) -> (k-1,l), polynomial degree +1.
PolyForm koszul(const PolyForm& w);

/// Slot-shuffle operators acting on the constant pair of every term.
PolyForm apply_S(const PolyForm& w);
PolyForm apply_S_dagger(const PolyForm& w);
PolyForm apply_S_iter(const PolyForm& w, int p);
PolyForm apply_S_dagger_iter(const PolyForm& w, int p);

/// Canonical coordinates: barycentric monomials are expanded through
/// lambda_0 = 1 - sum x_i into genuine monomials, removing the projective
/// redundancy. Used for all rank / kernel computations on form spaces.
struct CanonKey {
  std::vector<int> beta;  // x-exponents, size d
  Tuple I, J;

  bool operator<(const CanonKey& o) const {
    if (beta != o.beta) return beta < o.beta;
    if (I != o.I) return I < o.I;
    return J < o.J;
  }
  bool operator==(const CanonKey& o) const {
    return beta == o.beta && I == o.I && J == o.J;
  }
};

std::map<CanonKey, Rational> to_canonical(const PolyForm& w);

/// Coefficient matrix of a list of forms over the union of their canonical
/// keys (one column per form).
Matrix canonical_matrix(const std::vector<PolyForm>& forms);

bool poly_equal(const PolyForm& a, const PolyForm& b);

PolyForm linear_combination(const std::vector<PolyForm>& forms, const Vec& coeff);

/// Tensor basis of the degree-(k,l) incomplete/full polynomial space on the
/// reference n-simplex (k-form basis elements tensored with constant dx^J).
std::vector<PolyForm> space_Pr_minus_alt(int n, int r, int k, int l);
std::vector<PolyForm> space_Pr_alt(int n, int r, int k, int l);

/// Exact kernel of the iterated dagger shuffle inside the incomplete (or
/// full) polynomial space; the computational definition of the symmetric
/// polynomial spaces.
std::vector<PolyForm> kernel_space_PrW(int n, int r, int k, int l, int p, bool full_family = false);

}  // namespace twf

#endif
