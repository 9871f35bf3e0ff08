#include "twf/geometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twf {

namespace {

Rational dot(const Matrix& g, const Vec& a, const Vec& b) {
  Rational s;
  for (int i = 0; i < g.rows(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < g.cols(); ++j) {
      if (g.at(i, j).is_zero() || b[j].is_zero()) continue;
      s += a[i] * g.at(i, j) * b[j];
    }
  }
  return s;
}

}  // namespace

Simplex::Simplex(std::vector<Vec> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("simplex needs vertices");
  ambient_ = static_cast<int>(verts_[0].size());
  d_ = static_cast<int>(verts_.size()) - 1;
  for (const Vec& v : verts_)
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("inconsistent vertex coordinates");
  // chart tangents
  chart_ = Matrix(ambient_, d_);
  for (int j = 1; j <= d_; ++j)
    for (int i = 0; i < ambient_; ++i) chart_.at(i, j - 1) = verts_[j][i] - verts_[0][i];
  metric_ = chart_.transpose() * chart_;
  if (metric_.det().is_zero()) throw std::invalid_argument("degenerate simplex");
  if (d_ == ambient_) {
    // ambient coordinate vectors expressed in world coordinates, so that
    // shared faces of different cells receive identical normal frames
    candidates_ = chart_.inverse();
  } else {
    candidates_ = Matrix::identity(d_);
  }
}

Simplex Simplex::reference(int d) {
  std::vector<Vec> verts(d + 1, Vec(d));
  for (int i = 1; i <= d; ++i) verts[i][i - 1] = Rational(1);
  return Simplex(std::move(verts));
}

std::vector<Tuple> Simplex::faces(int m) const {
  std::vector<Tuple> out;
  if (m < 0 || m > d_) return out;
  Tuple all;
  for (int v = 0; v <= d_; ++v) all.push_back(v);
  return subsets_of(all, m + 1);
}

const FaceFrame& Simplex::frame(const Tuple& face_ids) const {
  auto it = frames_.find(face_ids);
  if (it != frames_.end()) return it->second;

  FaceFrame f;
  f.face = face_ids;
  f.d = d_;
  f.m = static_cast<int>(face_ids.size()) - 1;

  std::vector<Vec> cols;
  // tangent block: edge vectors out of the lowest-index vertex, in world
  // coordinates vertex v is e_v (v >= 1) or the origin (v = 0)
  auto world_coord = [&](int v) {
    Vec y(d_);
    if (v >= 1) y[v - 1] = Rational(1);
    return y;
  };
  Vec base = world_coord(face_ids[0]);
  for (size_t j = 1; j < face_ids.size(); ++j) {
    Vec t = world_coord(face_ids[j]);
    for (int i = 0; i < d_; ++i) t[i] -= base[i];
    cols.push_back(std::move(t));
  }
  int m = f.m;
  // normal block: Gram-Schmidt of the ambient candidates against the tangent
  // span and the previously accepted normals (metric inner products, no
  // normalization)
  for (int cand = 0; cand < candidates_.cols() && static_cast<int>(cols.size()) < d_; ++cand) {
    Vec v = candidates_.col(cand);
    Vec w = v;
    // project out the tangent span exactly via the normal equations
    if (m > 0) {
      Matrix tg(m, m);
      Vec rhs(m);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) tg.at(a, b) = dot(metric_, cols[a], cols[b]);
        rhs[a] = dot(metric_, cols[a], v);
      }
      Vec coef = tg.solve(rhs);
      for (int a = 0; a < m; ++a)
        for (int i = 0; i < d_; ++i) w[i] -= coef[a] * cols[a][i];
    }
    // then orthogonalize against previously accepted normals
    for (size_t j = m; j < cols.size(); ++j) {
      Rational den = dot(metric_, cols[j], cols[j]);
      Rational num = dot(metric_, cols[j], w);
      if (num.is_zero()) continue;
      Rational ratio = num / den;
      for (int i = 0; i < d_; ++i) w[i] -= ratio * cols[j][i];
    }
    bool zero = true;
    for (const Rational& x : w)
      if (!x.is_zero()) zero = false;
    if (!zero) cols.push_back(std::move(w));
  }
  if (static_cast<int>(cols.size()) != d_) throw std::runtime_error("frame completion failed");

  f.A = Matrix::from_columns(cols);
  f.A_inv = f.A.inverse();
  Matrix dual_gram = (f.A.transpose() * metric_ * f.A).inverse();
  f.gram_t = Matrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) f.gram_t.at(i, j) = dual_gram.at(i, j);
  f.gram_n = Matrix(d_ - m, d_ - m);
  for (int i = 0; i < d_ - m; ++i)
    for (int j = 0; j < d_ - m; ++j) f.gram_n.at(i, j) = dual_gram.at(m + i, m + j);
  return frames_.emplace(face_ids, std::move(f)).first->second;
}

Simplex Simplex::face_simplex(const Tuple& face_ids) const {
  std::vector<Vec> verts;
  for (int v : face_ids) verts.push_back(verts_[v]);
  return Simplex(std::move(verts));
}

bool TraceKey::operator<(const TraceKey& o) const {
  if (alpha != o.alpha) return alpha < o.alpha;
  if (T1 != o.T1) return T1 < o.T1;
  if (N1 != o.N1) return N1 < o.N1;
  if (T2 != o.T2) return T2 < o.T2;
  return N2 < o.N2;
}

void TraceValue::add(const TraceKey& key, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = terms[key];
  slot += c;
  if (slot.is_zero()) terms.erase(key);
}

namespace {

// Minor det(A[rows I, cols]) with 1-based labels.
Rational frame_minor(const Matrix& A, const Tuple& I, const Tuple& cols) {
  int k = static_cast<int>(I.size());
  Matrix sub(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub.at(a, b) = A.at(I[a] - 1, cols[b] - 1);
  return sub.det();
}

struct SlotExpansion {
  Tuple T, N;
  Rational coeff;
};

// Wedge dy^I expanded over the frame's dual wedges; split into tangential
// and normal label tuples (tangential labels come first, so no extra sign).
std::vector<SlotExpansion> expand_slot(const FaceFrame& fr, const Tuple& I,
                                       std::map<Tuple, Rational>& minor_cache) {
  std::vector<SlotExpansion> out;
  int k = static_cast<int>(I.size());
  for (const Tuple& cols : increasing_tuples(fr.d, k)) {
    auto it = minor_cache.find(cols);
    Rational det;
    if (it != minor_cache.end()) {
      det = it->second;
    } else {
      det = frame_minor(fr.A, I, cols);
      minor_cache.emplace(cols, det);
    }
    if (det.is_zero()) continue;
    SlotExpansion e;
    for (int c : cols) {
      if (c <= fr.m)
        e.T.push_back(c);
      else
        e.N.push_back(c - fr.m);
    }
    e.coeff = det;
    out.push_back(std::move(e));
  }
  return out;
}

TraceValue full_trace(const Simplex& S, const Tuple& face, const PolyForm& w) {
  const FaceFrame& fr = S.frame(face);
  TraceValue tv;
  tv.d = S.dim();
  tv.m = fr.m;
  tv.k = w.k();
  tv.l = w.l();
  std::map<Tuple, std::map<Tuple, Rational>> cache1_by_I;  // per slot tuple
  for (const auto& [t, c] : w.terms()) {
    // restrict the barycentric monomial: vanishes unless supported on the face
    bool supported = true;
    for (size_t v = 0; v < t.alpha.size(); ++v)
      if (t.alpha[v] > 0 && !tuple_contains(face, static_cast<int>(v))) supported = false;
    if (!supported) continue;
    BaryExp local(face.size(), 0);
    for (size_t j = 0; j < face.size(); ++j) local[j] = t.alpha[face[j]];

    auto e1 = expand_slot(fr, t.I, cache1_by_I[t.I]);
    auto e2 = expand_slot(fr, t.J, cache1_by_I[t.J]);
    for (const auto& a : e1)
      for (const auto& b : e2)
        tv.add(TraceKey{local, a.T, a.N, b.T, b.N}, c * a.coeff * b.coeff);
  }
  return tv;
}

TraceValue filter_trace(const TraceValue& tv,
                        const std::function<bool(const TraceKey&)>& keep) {
  TraceValue out;
  out.d = tv.d;
  out.m = tv.m;
  out.k = tv.k;
  out.l = tv.l;
  for (const auto& [key, c] : tv.terms)
    if (keep(key)) out.terms.emplace(key, c);
  return out;
}

}  // namespace

TraceValue rho_star(const Simplex& S, const Tuple& face, const PolyForm& w) {
  return full_trace(S, face, w);
}

TraceValue iota_star(const Simplex& S, const Tuple& face, const PolyForm& w) {
  return filter_trace(full_trace(S, face, w),
                      [](const TraceKey& k) { return k.N1.empty() && k.N2.empty(); });
}

TraceValue vartheta(const Simplex& S, const Tuple& face, int q, const PolyForm& w) {
  if (w.l() != 0) throw std::invalid_argument("vartheta acts on single-slot forms");
  return filter_trace(full_trace(S, face, w), [q](const TraceKey& k) {
    return static_cast<int>(k.T1.size()) == q;
  });
}

TraceValue jstar_p(const Simplex& S, const Tuple& face, int p, const PolyForm& w) {
  if (p < 1) throw std::invalid_argument("jstar_p needs p >= 1");
  if (w.l() != 0) throw std::invalid_argument("jstar_p acts on single-slot forms");
  int m = static_cast<int>(face.size()) - 1;
  return filter_trace(full_trace(S, face, w), [m, p](const TraceKey& k) {
    return static_cast<int>(k.T1.size()) >= m - p + 1;
  });
}

TraceValue double_trace_ii(const Simplex& S, const Tuple& face, const PolyForm& w) {
  return iota_star(S, face, w);
}

TraceValue double_trace_ij_p(const Simplex& S, const Tuple& face, int p, const PolyForm& w) {
  if (p < 1) throw std::invalid_argument("generalized trace needs p >= 1");
  int m = static_cast<int>(face.size()) - 1;
  return filter_trace(full_trace(S, face, w), [m, p](const TraceKey& k) {
    return k.N1.empty() && static_cast<int>(k.T2.size()) >= m - p + 1;
  });
}

PolyForm pullback_to_face(const Simplex& S, const Tuple& face, const PolyForm& w) {
  TraceValue tv = iota_star(S, face, w);
  int m = static_cast<int>(face.size()) - 1;
  PolyForm out(m, w.k(), w.l());
  for (const auto& [key, c] : tv.terms) out.add_term(key.alpha, key.T1, key.T2, c);
  return out;
}

Rational face_integral(const BaryExp& alpha) {
  long d = static_cast<long>(alpha.size()) - 1;
  long total = 0;
  Integer num = factorial(d);
  for (int a : alpha) {
    total += a;
    num = num * factorial(a);
  }
  return Rational(num, factorial(total + d));
}

PolyForm ambient_const_to_world(const Simplex& S, const ConstForm& w) {
  if (w.n != S.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  if (S.dim() != S.ambient())
    throw std::invalid_argument("conversion requires a full-dimensional simplex");
  // dx^i = sum_j chart_{ij} dy^j, so dx^I expands with the chart minors
  const Matrix& T = S.chart();
  PolyForm out(S.dim(), w.k, w.l);
  BaryExp zero(S.dim() + 1, 0);
  auto expand = [&](const Tuple& I) {
    std::map<Tuple, Rational> terms;
    for (const Tuple& cols : increasing_tuples(S.dim(), static_cast<int>(I.size()))) {
      int kk = static_cast<int>(I.size());
      Matrix sub(kk, kk);
      for (int a = 0; a < kk; ++a)
        for (int b = 0; b < kk; ++b) sub.at(a, b) = T.at(I[a] - 1, cols[b] - 1);
      Rational det = sub.det();
      if (!det.is_zero()) terms[cols] = det;
    }
    return terms;
  };
  for (const auto& [key, c] : w.coeffs) {
    auto e1 = expand(key.first);
    auto e2 = expand(key.second);
    for (const auto& [i1, c1] : e1)
      for (const auto& [i2, c2] : e2) out.add_term(zero, i1, i2, c * c1 * c2);
  }
  return out;
}

Rational gram_minor(const Matrix& g, const Tuple& rows, const Tuple& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("gram_minor shape mismatch");
  int k = static_cast<int>(rows.size());
  if (k == 0) return Rational(1);
  Matrix sub(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub.at(a, b) = g.at(rows[a] - 1, cols[b] - 1);
  return sub.det();
}

}  // namespace twf
