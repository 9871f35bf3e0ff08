#include "twf/polyform.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace twf {

void PolyForm::add_term(const BaryExp& alpha, const Tuple& I, const Tuple& J, const Rational& c) {
  if (c.is_zero()) return;
  PolyTerm t{alpha, I, J};
  Rational& slot = terms_[t];
  slot += c;
  if (slot.is_zero()) terms_.erase(t);
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  PolyForm r(*this);
  for (const auto& [t, c] : o.terms_) r.add_term(t.alpha, t.I, t.J, c);
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
  PolyForm r(*this);
  for (const auto& [t, c] : o.terms_) r.add_term(t.alpha, t.I, t.J, -c);
  return r;
}

PolyForm PolyForm::operator*(const Rational& c) const {
  PolyForm r(dim_, k_, l_);
  if (c.is_zero()) return r;
  for (const auto& [t, x] : terms_) r.terms_[t] = x * c;
  return r;
}

PolyForm PolyForm::times_monomial(const BaryExp& alpha) const {
  PolyForm r(dim_, k_, l_);
  for (const auto& [t, c] : terms_) {
    BaryExp a = t.alpha;
    for (size_t i = 0; i < a.size(); ++i) a[i] += alpha[i];
    r.add_term(a, t.I, t.J, c);
  }
  return r;
}

std::map<Tuple, Rational> dlambda_wedge(int dim, const Tuple& verts) {
  std::map<Tuple, Rational> acc;
  acc[{}] = Rational(1);
  for (int v : verts) {
    std::map<Tuple, Rational> next;
    for (const auto& [T, c] : acc) {
      auto push = [&](int coord, const Rational& factor) {
        int sign = merge_sign(T, {coord});
        if (sign == 0) return;
        Tuple merged = tuple_union(T, {coord});
        Rational& slot = next[merged];
        slot += c * factor * Rational(sign);
        if (slot.is_zero()) next.erase(merged);
      };
      if (v == 0) {
        for (int i = 1; i <= dim; ++i) push(i, Rational(-1));
      } else {
        push(v, Rational(1));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

PolyForm whitney_form(int dim, const Tuple& sigma) {
  int k = static_cast<int>(sigma.size()) - 1;
  PolyForm w(dim, k, 0);
  for (int j = 0; j <= k; ++j) {
    Tuple rest;
    for (int i = 0; i <= k; ++i)
      if (i != j) rest.push_back(sigma[i]);
    BaryExp alpha(dim + 1, 0);
    alpha[sigma[j]] = 1;
    Rational sign((j % 2 == 0) ? 1 : -1);
    for (const auto& [T, c] : dlambda_wedge(dim, rest)) w.add_term(alpha, T, {}, c * sign);
  }
  return w;
}

namespace {

// Multi-exponents alpha with |alpha| = deg, supp(alpha) ⊆ allowed,
// supp(alpha) ⊇ required, alpha_i = 0 for i < minfree.
void gen_exponents(const Tuple& allowed, const Tuple& required, int minfree, int deg, int nverts,
                   std::vector<BaryExp>& out) {
  std::vector<int> usable;
  for (int v : allowed)
    if (v >= minfree) usable.push_back(v);
  for (int v : required)
    if (v < minfree) return;  // cannot cover a forbidden vertex
  std::vector<int> expo(usable.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == usable.size()) {
      if (left != 0) return;
      BaryExp a(nverts, 0);
      for (size_t j = 0; j < usable.size(); ++j) a[usable[j]] = expo[j];
      for (int v : required)
        if (a[v] == 0) return;
      out.push_back(a);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      expo[i] = e;
      rec(i + 1, left - e);
    }
    expo[i] = 0;
  };
  rec(0, deg);
}

}  // namespace

std::vector<AttributedForm> basis_Pr_minus(int dim, int r, int k) {
  std::vector<AttributedForm> out;
  if (r < 1 || k < 0 || k > dim) return out;
  Tuple all;
  for (int v = 0; v <= dim; ++v) all.push_back(v);
  for (int fdim = k; fdim <= dim; ++fdim) {
    for (const Tuple& face : subsets_of(all, fdim + 1)) {
      for (const Tuple& I : subsets_of(face, k + 1)) {
        Tuple required = tuple_minus(face, I);
        std::vector<BaryExp> alphas;
        gen_exponents(face, required, I[0], r - 1, dim + 1, alphas);
        PolyForm phi = whitney_form(dim, I);
        for (const BaryExp& a : alphas) out.push_back({phi.times_monomial(a), face});
      }
    }
  }
  return out;
}

std::vector<AttributedForm> basis_Pr(int dim, int r, int k) {
  std::vector<AttributedForm> out;
  if (r < 1 || k < 0 || k > dim) return out;
  Tuple all;
  for (int v = 0; v <= dim; ++v) all.push_back(v);
  for (int fdim = k; fdim <= dim; ++fdim) {
    for (const Tuple& face : subsets_of(all, fdim + 1)) {
      for (const Tuple& I : subsets_of(face, k)) {
        Tuple free = tuple_minus(face, I);
        if (free.empty()) continue;  // needs a vertex outside I to anchor the monomial rule
        Tuple required = free;
        std::vector<BaryExp> alphas;
        gen_exponents(face, required, free[0], r, dim + 1, alphas);
        std::map<Tuple, Rational> dlI = dlambda_wedge(dim, I);
        for (const BaryExp& a : alphas) {
          PolyForm f(dim, k, 0);
          for (const auto& [T, c] : dlI) f.add_term(a, T, {}, c);
          out.push_back({f, face});
        }
      }
    }
  }
  return out;
}

long dim_Pr_minus_alt(int n, int r, int k, int l) {
  return binom(n + r, k + r) * binom(r + k - 1, k) * binom(n, l);
}

long dim_Pr_alt(int n, int r, int k, int l) {
  return binom(n + r, n) * binom(n, k) * binom(n, l);
}

PolyForm koszul(const PolyForm& w) {
  PolyForm r(w.dim(), w.k() - 1, w.l());
  if (w.k() == 0) return r;
  for (const auto& [t, c] : w.terms()) {
    for (size_t j = 0; j < t.I.size(); ++j) {
      BaryExp a = t.alpha;
      a[t.I[j]] += 1;  // coordinate x_i is lambda_i on the reference simplex
      Tuple rest;
      for (size_t i = 0; i < t.I.size(); ++i)
        if (i != j) rest.push_back(t.I[i]);
      Rational sign((j % 2 == 0) ? 1 : -1);
      r.add_term(a, rest, t.J, c * sign);
    }
  }
  return r;
}

namespace {

int move_sign(const Tuple& I, const Tuple& J, int x) {
  int c = 0;
  for (int v : I)
    if (v < x) ++c;
  for (int v : J)
    if (v < x) ++c;
  return (c % 2 == 0) ? 1 : -1;
}

}  // namespace

PolyForm apply_S(const PolyForm& w) {
  PolyForm r(w.dim(), w.k() + 1, w.l() - 1);
  if (w.l() - 1 < 0 || w.k() + 1 > w.dim()) return r;
  for (const auto& [t, c] : w.terms()) {
    for (int x : t.J) {
      if (tuple_contains(t.I, x)) continue;
      Tuple inew;
      insert_sign(t.I, x, inew);
      Tuple jnew = tuple_minus(t.J, {x});
      r.add_term(t.alpha, inew, jnew, c * Rational(move_sign(t.I, jnew, x)));
    }
  }
  return r;
}

PolyForm apply_S_dagger(const PolyForm& w) {
  PolyForm r(w.dim(), w.k() - 1, w.l() + 1);
  if (w.k() - 1 < 0 || w.l() + 1 > w.dim()) return r;
  for (const auto& [t, c] : w.terms()) {
    for (int x : t.I) {
      if (tuple_contains(t.J, x)) continue;
      Tuple inew = tuple_minus(t.I, {x});
      Tuple jnew;
      insert_sign(t.J, x, jnew);
      r.add_term(t.alpha, inew, jnew, c * Rational(move_sign(inew, t.J, x)));
    }
  }
  return r;
}

PolyForm apply_S_iter(const PolyForm& w, int p) {
  PolyForm r = w;
  for (int i = 0; i < p; ++i) r = apply_S(r);
  return r;
}

PolyForm apply_S_dagger_iter(const PolyForm& w, int p) {
  PolyForm r = w;
  for (int i = 0; i < p; ++i) r = apply_S_dagger(r);
  return r;
}

std::map<CanonKey, Rational> to_canonical(const PolyForm& w) {
  std::map<CanonKey, Rational> out;
  int d = w.dim();
  for (const auto& [t, c] : w.terms()) {
    // expand lambda_0^{a0} = (1 - sum_i x_i)^{a0}
    std::map<std::vector<int>, Rational> poly;
    std::vector<int> base(t.alpha.begin() + 1, t.alpha.end());
    poly[base] = c;
    for (int rep = 0; rep < t.alpha[0]; ++rep) {
      std::map<std::vector<int>, Rational> next;
      for (const auto& [b, x] : poly) {
        auto& slot = next[b];
        slot += x;
        if (slot.is_zero()) next.erase(b);
        for (int i = 0; i < d; ++i) {
          std::vector<int> b2 = b;
          b2[i] += 1;
          auto& s2 = next[b2];
          s2 -= x;
          if (s2.is_zero()) next.erase(b2);
        }
      }
      poly = std::move(next);
    }
    for (const auto& [b, x] : poly) {
      CanonKey key{b, t.I, t.J};
      Rational& slot = out[key];
      slot += x;
      if (slot.is_zero()) out.erase(key);
    }
  }
  return out;
}

Matrix canonical_matrix(const std::vector<PolyForm>& forms) {
  std::vector<std::map<CanonKey, Rational>> canon;
  canon.reserve(forms.size());
  std::set<CanonKey> keys;
  for (const PolyForm& f : forms) {
    canon.push_back(to_canonical(f));
    for (const auto& [key, c] : canon.back()) keys.insert(key);
  }
  std::map<CanonKey, int> index;
  int row = 0;
  for (const CanonKey& key : keys) index[key] = row++;
  Matrix m(row, static_cast<int>(forms.size()));
  for (size_t j = 0; j < canon.size(); ++j)
    for (const auto& [key, c] : canon[j]) m.at(index[key], static_cast<int>(j)) = c;
  return m;
}

bool poly_equal(const PolyForm& a, const PolyForm& b) {
  return to_canonical(a) == to_canonical(b);
}

PolyForm linear_combination(const std::vector<PolyForm>& forms, const Vec& coeff) {
  if (forms.size() != coeff.size()) throw std::invalid_argument("length mismatch");
  PolyForm r;
  bool seeded = false;
  for (size_t i = 0; i < forms.size(); ++i) {
    if (!seeded) {
      r = PolyForm(forms[i].dim(), forms[i].k(), forms[i].l());
      seeded = true;
    }
    if (coeff[i].is_zero()) continue;
    r = r + forms[i] * coeff[i];
  }
  return r;
}

namespace {

std::vector<PolyForm> tensor_with_value_slot(const std::vector<AttributedForm>& kbasis, int n,
                                             int l) {
  std::vector<PolyForm> out;
  for (const AttributedForm& af : kbasis) {
    for (const Tuple& J : increasing_tuples(n, l)) {
      PolyForm f(n, af.form.k(), l);
      for (const auto& [t, c] : af.form.terms()) f.add_term(t.alpha, t.I, J, c);
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::vector<PolyForm> space_Pr_minus_alt(int n, int r, int k, int l) {
  if (l < 0 || l > n) return {};
  return tensor_with_value_slot(basis_Pr_minus(n, r, k), n, l);
}

std::vector<PolyForm> space_Pr_alt(int n, int r, int k, int l) {
  if (l < 0 || l > n) return {};
  return tensor_with_value_slot(basis_Pr(n, r, k), n, l);
}

std::vector<PolyForm> kernel_space_PrW(int n, int r, int k, int l, int p, bool full_family) {
  std::vector<PolyForm> basis =
      full_family ? space_Pr_alt(n, r, k, l) : space_Pr_minus_alt(n, r, k, l);
  std::vector<PolyForm> images;
  images.reserve(basis.size());
  for (const PolyForm& f : basis) images.push_back(apply_S_dagger_iter(f, p));
  Matrix m = canonical_matrix(images);
  std::vector<PolyForm> kernel;
  for (const Vec& v : m.nullspace()) kernel.push_back(linear_combination(basis, v));
  return kernel;
}

}  // namespace twf
