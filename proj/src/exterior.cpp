#include "twf/exterior.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace twf {

ConstForm ConstForm::basis(int n, const Tuple& I, const Tuple& J) {
  ConstForm f(n, static_cast<int>(I.size()), static_cast<int>(J.size()));
  f.coeffs[{I, J}] = Rational(1);
  return f;
}

void ConstForm::add_term(const Tuple& I, const Tuple& J, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = coeffs[{I, J}];
  slot += c;
  if (slot.is_zero()) coeffs.erase({I, J});
}

bool ConstForm::is_zero() const { return coeffs.empty(); }

ConstForm ConstForm::operator+(const ConstForm& o) const {
  ConstForm r(*this);
  for (const auto& [key, c] : o.coeffs) r.add_term(key.first, key.second, c);
  return r;
}

ConstForm ConstForm::operator-(const ConstForm& o) const {
  ConstForm r(*this);
  for (const auto& [key, c] : o.coeffs) r.add_term(key.first, key.second, -c);
  return r;
}

ConstForm ConstForm::operator*(const Rational& c) const {
  ConstForm r(n, k, l);
  if (c.is_zero()) return r;
  for (const auto& [key, x] : coeffs) r.coeffs[key] = x * c;
  return r;
}

namespace {
std::map<std::tuple<int, int, int>, std::vector<PairKey>> g_pair_cache;
std::mutex g_pair_mutex;
}  // namespace

const std::vector<PairKey>& pair_basis(int n, int k, int l) {
  std::lock_guard<std::mutex> lock(g_pair_mutex);
  auto key = std::make_tuple(n, k, l);
  auto it = g_pair_cache.find(key);
  if (it != g_pair_cache.end()) return it->second;
  std::vector<PairKey> out;
  for (const Tuple& I : increasing_tuples(n, k))
    for (const Tuple& J : increasing_tuples(n, l)) out.emplace_back(I, J);
  return g_pair_cache.emplace(key, std::move(out)).first->second;
}

int pair_index(int n, int /*k*/, int l, const Tuple& I, const Tuple& J) {
  return tuple_rank(n, I) * static_cast<int>(binom(n, l)) + tuple_rank(n, J);
}

Vec ConstForm::to_vec() const {
  Vec v(binom(n, k) * binom(n, l));
  for (const auto& [key, c] : coeffs) v[pair_index(n, k, l, key.first, key.second)] = c;
  return v;
}

ConstForm ConstForm::from_vec(int n, int k, int l, const Vec& v) {
  ConstForm f(n, k, l);
  const auto& basis = pair_basis(n, k, l);
  if (v.size() != basis.size()) throw std::invalid_argument("coefficient vector length mismatch");
  for (size_t i = 0; i < basis.size(); ++i)
    if (!v[i].is_zero()) f.coeffs[basis[i]] = v[i];
  return f;
}

ConstForm wedge(const ConstForm& a, const ConstForm& b) {
  if (a.n != b.n) throw std::invalid_argument("wedge: ambient dimension mismatch");
  if (a.l != 0 || b.l != 0) throw std::invalid_argument("wedge: value slots must be trivial");
  ConstForm r(a.n, a.k + b.k, 0);
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      int sign = merge_sign(ka.first, kb.first);
      if (sign == 0) continue;
      Tuple merged = tuple_union(ka.first, kb.first);
      r.add_term(merged, {}, ca * cb * Rational(sign));
    }
  return r;
}

Rational frobenius(const ConstForm& a, const ConstForm& b) {
  if (a.n != b.n || a.k != b.k || a.l != b.l)
    throw std::invalid_argument("frobenius: degree mismatch");
  Rational s;
  const auto* small = &a.coeffs;
  const auto* large = &b.coeffs;
  if (large->size() < small->size()) std::swap(small, large);
  for (const auto& [key, c] : *small) {
    auto it = large->find(key);
    if (it != large->end()) s += c * it->second;
  }
  return s;
}

ConstForm hodge_star(const ConstForm& a, int slot) {
  Tuple full;
  for (int i = 1; i <= a.n; ++i) full.push_back(i);
  ConstForm r(a.n, slot == 0 ? a.n - a.k : a.k, slot == 1 ? a.n - a.l : a.l);
  for (const auto& [key, c] : a.coeffs) {
    const Tuple& t = slot == 0 ? key.first : key.second;
    Tuple comp = tuple_minus(full, t);
    int sign = merge_sign(t, comp);
    if (slot == 0)
      r.add_term(comp, key.second, c * Rational(sign));
    else
      r.add_term(key.first, comp, c * Rational(sign));
  }
  return r;
}

FreeGroupElement FreeGroupElement::single(int n, const Tuple& I) {
  FreeGroupElement x;
  x.n = n;
  x.k = static_cast<int>(I.size());
  x.l = -1;
  x.coeffs[{I, {}}] = Rational(1);
  return x;
}

FreeGroupElement FreeGroupElement::pair(int n, const Tuple& I, const Tuple& J) {
  FreeGroupElement x;
  x.n = n;
  x.k = static_cast<int>(I.size());
  x.l = static_cast<int>(J.size());
  x.coeffs[{I, J}] = Rational(1);
  return x;
}

bool FreeGroupElement::is_zero() const { return coeffs.empty(); }

void FreeGroupElement::add_term(const Tuple& I, const Tuple& J, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = coeffs[{I, J}];
  slot += c;
  if (slot.is_zero()) coeffs.erase({I, J});
}

FreeGroupElement s_map(const FreeGroupElement& x, int p) {
  FreeGroupElement r;
  r.n = x.n;
  r.k = x.k + p;
  r.l = x.l < 0 ? -1 : x.l - p;
  if (x.l < 0 && x.k + p > x.n) return r;  // degenerate degree
  if (x.l >= 0 && x.l - p < 0) return r;
  for (const auto& [key, c] : x.coeffs) {
    Tuple pool;
    if (x.l < 0) {
      Tuple full;
      for (int i = 1; i <= x.n; ++i) full.push_back(i);
      pool = tuple_minus(full, key.first);
    } else {
      pool = tuple_minus(key.second, key.first);
    }
    for (const Tuple& P : subsets_of(pool, p)) {
      Tuple inew = tuple_union(key.first, P);
      Tuple jnew = x.l < 0 ? Tuple{} : tuple_minus(key.second, P);
      r.add_term(inew, jnew, c);
    }
  }
  return r;
}

FreeGroupElement s_dagger_map(const FreeGroupElement& x, int p) {
  FreeGroupElement r;
  r.n = x.n;
  r.k = x.k - p;
  r.l = x.l < 0 ? -1 : x.l + p;
  if (x.k - p < 0) return r;  // degenerate degree
  for (const auto& [key, c] : x.coeffs) {
    Tuple pool = x.l < 0 ? key.first : tuple_minus(key.first, key.second);
    for (const Tuple& P : subsets_of(pool, p)) {
      Tuple inew = tuple_minus(key.first, P);
      Tuple jnew = x.l < 0 ? Tuple{} : tuple_union(key.second, P);
      r.add_term(inew, jnew, c);
    }
  }
  return r;
}

Matrix s_matrix(int n, int k, int p) {
  const auto& dom = increasing_tuples(n, k);
  const auto& cod = increasing_tuples(n, k + p);
  Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    FreeGroupElement img = s_map(FreeGroupElement::single(n, dom[j]), p);
    for (const auto& [key, c] : img.coeffs)
      m.at(tuple_rank(n, key.first), static_cast<int>(j)) = c;
  }
  return m;
}

Matrix s_dagger_matrix(int n, int k, int p) {
  const auto& dom = increasing_tuples(n, k);
  const auto& cod = increasing_tuples(n, k - p);
  Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    FreeGroupElement img = s_dagger_map(FreeGroupElement::single(n, dom[j]), p);
    for (const auto& [key, c] : img.coeffs)
      m.at(tuple_rank(n, key.first), static_cast<int>(j)) = c;
  }
  return m;
}

Matrix s_pair_matrix(int n, int k, int l, int p) {
  const auto& dom = pair_basis(n, k, l);
  Matrix m(static_cast<int>(binom(n, k + p) * binom(n, l - p)), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    FreeGroupElement img = s_map(FreeGroupElement::pair(n, dom[j].first, dom[j].second), p);
    for (const auto& [key, c] : img.coeffs)
      m.at(pair_index(n, k + p, l - p, key.first, key.second), static_cast<int>(j)) = c;
  }
  return m;
}

Matrix s_dagger_pair_matrix(int n, int k, int l, int p) {
  const auto& dom = pair_basis(n, k, l);
  Matrix m(static_cast<int>(binom(n, k - p) * binom(n, l + p)), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    FreeGroupElement img = s_dagger_map(FreeGroupElement::pair(n, dom[j].first, dom[j].second), p);
    for (const auto& [key, c] : img.coeffs)
      m.at(pair_index(n, k - p, l + p, key.first, key.second), static_cast<int>(j)) = c;
  }
  return m;
}

std::vector<PairKey> y_block(int /*n*/, int k, int l, const Tuple& F, const Tuple& G) {
  std::vector<PairKey> out;
  if (!tuple_subset(G, F)) return out;
  int extra = k - static_cast<int>(G.size());
  Tuple pool = tuple_minus(F, G);
  if (extra < 0 || extra > static_cast<int>(pool.size())) return out;
  for (const Tuple& A : subsets_of(pool, extra)) {
    Tuple I = tuple_union(G, A);
    Tuple J = tuple_union(G, tuple_minus(pool, A));
    if (static_cast<int>(J.size()) == l) out.emplace_back(I, J);
  }
  return out;
}

Matrix s_block_matrix(int n, int k, int l, int p, const Tuple& F, const Tuple& G) {
  std::vector<PairKey> dom = y_block(n, k, l, F, G);
  std::vector<PairKey> cod = y_block(n, k + p, l - p, F, G);
  std::map<PairKey, int> cod_index;
  for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    FreeGroupElement img = s_map(FreeGroupElement::pair(n, dom[j].first, dom[j].second), p);
    for (const auto& [key, c] : img.coeffs) {
      auto it = cod_index.find(key);
      if (it == cod_index.end()) throw std::logic_error("block invariance violated");
      m.at(it->second, static_cast<int>(j)) = c;
    }
  }
  return m;
}

}  // namespace twf
