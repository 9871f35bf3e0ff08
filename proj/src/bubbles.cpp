#include "twf/bubbles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace twf {

std::vector<ConstForm> n_space(const Simplex& K, const Tuple& sigma, int l) {
  int d = K.dim();
  const auto& basis = increasing_tuples(d, l);
  if (basis.empty()) return {};
  // constraint rows: vanishing pullback on each codimension-one face
  // containing sigma (combinatorial, metric-free)
  std::vector<Vec> rows;
  for (const Tuple& face : K.faces(d - 1)) {
    if (!tuple_subset(sigma, face)) continue;
    // tangent vectors of the face in world coordinates
    std::vector<Vec> tg;
    auto world = [&](int v) {
      Vec y(d);
      if (v >= 1) y[v - 1] = Rational(1);
      return y;
    };
    for (size_t j = 1; j < face.size(); ++j) {
      Vec t = world(face[j]);
      Vec b = world(face[0]);
      for (int i = 0; i < d; ++i) t[i] -= b[i];
      tg.push_back(std::move(t));
    }
    for (const Tuple& cols : increasing_tuples(static_cast<int>(tg.size()), l)) {
      Vec row(basis.size());
      for (size_t bi = 0; bi < basis.size(); ++bi) {
        // dy^{basis[bi]} evaluated on the chosen tangent wedge
        int ll = static_cast<int>(basis[bi].size());
        Matrix sub(ll, ll);
        for (int a = 0; a < ll; ++a)
          for (int b2 = 0; b2 < ll; ++b2) sub.at(a, b2) = tg[cols[b2] - 1][basis[bi][a] - 1];
        row[bi] = sub.det();
      }
      rows.push_back(std::move(row));
    }
  }
  Matrix constraints(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      constraints.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  std::vector<ConstForm> out;
  for (const Vec& v : constraints.nullspace()) {
    ConstForm f(d, l, 0);
    for (size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) f.coeffs[{basis[j], {}}] = v[j];
    out.push_back(std::move(f));
  }
  return out;
}

long n_space_dim(int sigma_dim, int cell_dim, int l) {
  return binom(sigma_dim, l + sigma_dim - cell_dim);
}

namespace {

// Attributed k-form basis of the requested family grouped by face.
std::vector<AttributedForm> attributed_basis(int dim, PolyFamily pf, int r, int k) {
  switch (pf) {
    case PolyFamily::Pminus:
      return basis_Pr_minus(dim, 1, k);
    case PolyFamily::Pr_minus:
      return basis_Pr_minus(dim, r, k);
    case PolyFamily::Pr:
      return basis_Pr(dim, r, k);
  }
  throw std::logic_error("unreachable");
}

long k_bubble_dim(PolyFamily pf, int r, int face_dim, int k) {
  switch (pf) {
    case PolyFamily::Pminus:
      return face_dim == k ? 1 : 0;
    case PolyFamily::Pr_minus:
      return binom(r + k - 1, r - 1) * binom(r - 1, face_dim - k);
    case PolyFamily::Pr:
      return binom(r + k, r) * binom(r - 1, face_dim - k);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<PolyForm> bubble_basis(int dim, PolyFamily pf, int r, int k, int l) {
  std::vector<PolyForm> out;
  if (l < 0 || l > dim) return out;
  Simplex ref = Simplex::reference(dim);
  std::vector<AttributedForm> kbasis = attributed_basis(dim, pf, r, k);
  // group N^l spaces per face
  std::map<Tuple, std::vector<ConstForm>> nspaces;
  for (const AttributedForm& af : kbasis) {
    auto it = nspaces.find(af.face);
    if (it == nspaces.end())
      it = nspaces.emplace(af.face, n_space(ref, af.face, l)).first;
    for (const ConstForm& w : it->second) {
      PolyForm f(dim, af.form.k(), l);
      for (const auto& [t, c] : af.form.terms())
        for (const auto& [key, cw] : w.coeffs) f.add_term(t.alpha, t.I, key.first, c * cw);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<PolyForm> bubble_W_basis(int dim, PolyFamily pf, int r, int k, int l, int p) {
  const std::vector<PolyForm>& basis = cached_bubble_basis(dim, pf, r, k, l);
  if (basis.empty()) return {};
  std::vector<PolyForm> images;
  images.reserve(basis.size());
  for (const PolyForm& f : basis) images.push_back(apply_S_dagger_iter(f, p));
  Matrix m = canonical_matrix(images);
  std::vector<PolyForm> kernel;
  for (const Vec& v : m.nullspace()) kernel.push_back(linear_combination(basis, v));
  return kernel;
}

long bubble_dim(int dim, PolyFamily pf, int r, int k, int l) {
  if (k < 0 || k > dim || l < 0 || l > dim) return 0;
  long total = 0;
  for (int m = k; m <= dim; ++m)
    total += binom(dim + 1, m + 1) * k_bubble_dim(pf, r, m, k) * n_space_dim(m, dim, l);
  return total;
}

long bubble_W_dim(int dim, PolyFamily pf, int r, int k, int l, int p) {
  return bubble_dim(dim, pf, r, k, l) - bubble_dim(dim, pf, r, k - p, l + p);
}

std::vector<PolyForm> bubble_basis_by_constraints(int dim, PolyFamily pf, int r, int k, int l) {
  std::vector<PolyForm> span;
  switch (pf) {
    case PolyFamily::Pminus:
      span = space_Pr_minus_alt(dim, 1, k, l);
      break;
    case PolyFamily::Pr_minus:
      span = space_Pr_minus_alt(dim, r, k, l);
      break;
    case PolyFamily::Pr:
      span = space_Pr_alt(dim, r, k, l);
      break;
  }
  if (span.empty()) return {};
  Simplex ref = Simplex::reference(dim);
  // stack the double pullbacks on all codimension-one faces and take the
  // common kernel
  std::vector<PolyForm> traces;
  std::vector<std::vector<PolyForm>> per_face;
  for (const Tuple& face : ref.faces(dim - 1)) {
    std::vector<PolyForm> tr;
    tr.reserve(span.size());
    for (const PolyForm& f : span) tr.push_back(pullback_to_face(ref, face, f));
    per_face.push_back(std::move(tr));
  }
  // build one big coefficient matrix: rows = canonical keys per face block
  std::vector<Matrix> blocks;
  int cols = static_cast<int>(span.size());
  int total_rows = 0;
  for (const auto& tr : per_face) {
    blocks.push_back(canonical_matrix(tr));
    total_rows += blocks.back().rows();
  }
  Matrix big(total_rows, cols);
  int at = 0;
  for (const Matrix& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) big.at(at + i, j) = b.at(i, j);
    at += b.rows();
  }
  std::vector<PolyForm> kernel;
  for (const Vec& v : big.nullspace()) kernel.push_back(linear_combination(span, v));
  return kernel;
}

namespace {

using BubbleKey = std::tuple<int, int, int, int, int, int>;
std::map<BubbleKey, std::vector<PolyForm>> g_bubble_cache;
std::map<BubbleKey, std::vector<PolyForm>> g_bubble_w_cache;
std::map<BubbleKey, std::vector<PolyForm>> g_kbasis_cache;
std::mutex g_bubble_mutex;

}  // namespace

const std::vector<PolyForm>& cached_bubble_basis(int dim, PolyFamily pf, int r, int k, int l) {
  BubbleKey key{dim, static_cast<int>(pf), r, k, l, 0};
  {
    std::lock_guard<std::mutex> lock(g_bubble_mutex);
    auto it = g_bubble_cache.find(key);
    if (it != g_bubble_cache.end()) return it->second;
  }
  std::vector<PolyForm> value = bubble_basis(dim, pf, r, k, l);
  std::lock_guard<std::mutex> lock(g_bubble_mutex);
  return g_bubble_cache.emplace(key, std::move(value)).first->second;
}

const std::vector<PolyForm>& cached_bubble_W_basis(int dim, PolyFamily pf, int r, int k, int l,
                                                   int p) {
  {
    std::lock_guard<std::mutex> lock(g_bubble_mutex);
    BubbleKey key{dim, static_cast<int>(pf), r, k, l, p};
    auto it = g_bubble_w_cache.find(key);
    if (it != g_bubble_w_cache.end()) return it->second;
  }
  std::vector<PolyForm> value = bubble_W_basis(dim, pf, r, k, l, p);
  std::lock_guard<std::mutex> lock(g_bubble_mutex);
  BubbleKey key{dim, static_cast<int>(pf), r, k, l, p};
  return g_bubble_w_cache.emplace(key, std::move(value)).first->second;
}

const std::vector<PolyForm>& cached_k_basis_top(int dim, PolyFamily pf, int r, int k) {
  std::lock_guard<std::mutex> lock(g_bubble_mutex);
  BubbleKey key{dim, static_cast<int>(pf), r, k, -1, 0};
  auto it = g_kbasis_cache.find(key);
  if (it != g_kbasis_cache.end()) return it->second;
  std::vector<PolyForm> value;
  Tuple top;
  for (int v = 0; v <= dim; ++v) top.push_back(v);
  for (const AttributedForm& af : attributed_basis(dim, pf, r, k))
    if (af.face == top) value.push_back(af.form);
  return g_kbasis_cache.emplace(key, std::move(value)).first->second;
}

}  // namespace twf
