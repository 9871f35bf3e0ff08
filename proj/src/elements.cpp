#include "twf/elements.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twf/bgg.hpp"

namespace twf {

const char* family_name(Family f) {
  switch (f) {
    case Family::ii_alt: return "ii_alt";
    case Family::ii_W: return "ii_W";
    case Family::ij_alt: return "ij_alt";
    case Family::ij_W: return "ij_W";
    case Family::ijp_alt: return "ijp_alt";
    case Family::ijp_W: return "ijp_W";
    case Family::ii_Wp: return "ii_Wp";
    case Family::const_W: return "const_W";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W, Family::ijp_alt,
                   Family::ijp_W, Family::ii_Wp, Family::const_W})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + s);
}

namespace {

struct FamilyTraits {
  bool reduced;       // kernel shape space
  bool moving;        // skeletal dofs from redistributed traces
  bool constant;      // const_W construction
};

FamilyTraits traits(Family f) {
  switch (f) {
    case Family::ii_alt: return {false, false, false};
    case Family::ii_W: return {true, false, false};
    case Family::ij_alt: return {false, true, false};
    case Family::ij_W: return {true, true, false};
    case Family::ijp_alt: return {false, true, false};
    case Family::ijp_W: return {true, true, false};
    case Family::ii_Wp: return {true, false, false};
    case Family::const_W: return {true, false, true};
  }
  return {false, false, false};
}

int effective_p(Family f, int p) {
  switch (f) {
    case Family::ii_W:
    case Family::ij_alt:
    case Family::ij_W:
      return 1;
    default:
      return p;
  }
}

// polynomial factor range for the skeletal dofs on an m-face
const std::vector<PolyForm>& skeletal_b1_basis(int m, PolyFamily pf, int r, int k) {
  return cached_k_basis_top(m, pf, pf == PolyFamily::Pminus ? 1 : r, k);
}

PolyForm volume_wedge(int m) {
  PolyForm f(m, m, 0);
  Tuple full;
  for (int i = 1; i <= m; ++i) full.push_back(i);
  f.add_term(BaryExp(m + 1, 0), full, {}, Rational(1));
  return f;
}

// mirror test space of the constant construction on the reference m-simplex
std::vector<PolyForm> const_mirror_tests(int m, int k, int l, int p) {
  std::vector<PolyForm> out;
  for (int s = 0; s < p; ++s) {
    int qs = l - k + 2 * s + 1;
    if (k - s < 0 || l + s > m) continue;
    const auto& wb = cached_bubble_W_basis(m, PolyFamily::Pminus, 1, l + s, k - s, qs);
    for (const PolyForm& b : wb) {
      PolyForm img = apply_S_iter(apply_S_dagger_iter(b, l - k + 2 * s), s);
      if (!img.is_zero()) out.push_back(std::move(img));
    }
  }
  return out;
}

void append_skeletal_dofs(std::vector<DoFFunctional>& dofs, const Tuple& face, int n,
                          PolyFamily pf, int r, int k, int l, int q) {
  int m = static_cast<int>(face.size()) - 1;
  std::vector<PolyForm> b1s;
  if (pf == PolyFamily::Pminus) {
    if (m == k) b1s.push_back(volume_wedge(m));
  } else {
    b1s = skeletal_b1_basis(m, pf, r, k);
  }
  if (b1s.empty()) return;
  for (int s = 0; s < q; ++s) {
    const auto& t2s = increasing_tuples(m, m - s);
    const auto& n2s = increasing_tuples(n - m, l - m + s);
    // degenerate component: one of the wedge factors is the zero space, so
    // this shift contributes no functionals on this face
    if (t2s.empty() || n2s.empty()) continue;
    for (const PolyForm& b1 : b1s)
      for (const Tuple& t2 : t2s)
        for (const Tuple& n2 : n2s) {
          DoFFunctional dof;
          dof.face = face;
          dof.skeletal = true;
          dof.s = s;
          dof.b1 = b1;
          dof.t2 = t2;
          dof.n2 = n2;
          dofs.push_back(std::move(dof));
        }
  }
}

void append_bubble_dofs(std::vector<DoFFunctional>& dofs, const Tuple& face,
                        const std::vector<PolyForm>& tests) {
  for (const PolyForm& b : tests) {
    DoFFunctional dof;
    dof.face = face;
    dof.skeletal = false;
    dof.b1 = b;
    dofs.push_back(dof);
  }
}

}  // namespace

ElementSpec build_element(Family family, PolyFamily pf, int n, int k, int l, int p, int r,
                          int q) {
  FamilyTraits t = traits(family);
  p = effective_p(family, p);
  if (q < 0) q = p;
  if (k < 0 || k > n || l < 0 || l > n)
    throw std::invalid_argument("requires 0 <= k, l <= n");
  if (p < 1) throw std::invalid_argument("requires p >= 1");
  if (q < 1 || q > p) throw std::invalid_argument("requires 1 <= q <= p");
  if (r < 1) throw std::invalid_argument("requires r >= 1");
  if (pf == PolyFamily::Pminus && r != 1)
    throw std::invalid_argument("the lowest-order family requires r = 1");
  if (t.constant) {
    if (!(p <= k && k <= l && l <= n - p))
      throw std::invalid_argument("constant construction requires p <= k <= l <= n - p");
  } else if (t.reduced) {
    if (k > l + p - 1)
      throw std::invalid_argument("symmetric families require k <= l + p - 1");
  } else if (t.moving && p == 1 && k > l) {
    throw std::invalid_argument("value-trace redistribution requires k <= l when p = 1");
  }

  ElementSpec spec;
  spec.family = family;
  spec.pf = pf;
  spec.n = n;
  spec.k = k;
  spec.l = l;
  spec.p = p;
  spec.r = r;
  spec.q = q;
  spec.name = element_name(family, n, k, l, p, r);

  // shape space
  if (t.constant) {
    SymmetricSpaceBasis w = symmetric_space(n, k, l, p);
    for (int i = 0; i < w.dim(); ++i) {
      ConstForm cf = w.form(i);
      PolyForm f(n, k, l);
      for (const auto& [key, c] : cf.coeffs) f.add_term(BaryExp(n + 1, 0), key.first, key.second, c);
      spec.shape.push_back(std::move(f));
    }
  } else if (t.reduced) {
    spec.shape = kernel_space_PrW(n, pf == PolyFamily::Pminus ? 1 : r, k, l, p,
                                  pf == PolyFamily::Pr);
  } else {
    spec.shape = pf == PolyFamily::Pr ? space_Pr_alt(n, r, k, l)
                                      : space_Pr_minus_alt(n, pf == PolyFamily::Pminus ? 1 : r, k, l);
  }
  spec.expected_dim = static_cast<long>(spec.shape.size());

  // degrees of freedom, face by face
  Simplex ref = Simplex::reference(n);
  int rr = pf == PolyFamily::Pminus ? 1 : r;
  for (int m = 0; m <= n; ++m) {
    for (const Tuple& face : ref.faces(m)) {
      if (t.constant) {
        append_bubble_dofs(spec.dofs, face, const_mirror_tests(m, k, l, p));
        continue;
      }
      if (t.moving) {
        if (m >= k && m <= l + q - 1) append_skeletal_dofs(spec.dofs, face, n, pf, rr, k, l, q);
        if (m >= l + q) {
          if (!t.reduced || m <= l + p - 1)
            append_bubble_dofs(spec.dofs, face, cached_bubble_basis(m, pf, rr, k, l));
          else
            append_bubble_dofs(spec.dofs, face, cached_bubble_W_basis(m, pf, rr, k, l, p));
        }
      } else {
        if (t.reduced)
          append_bubble_dofs(spec.dofs, face, cached_bubble_W_basis(m, pf, rr, k, l, p));
        else
          append_bubble_dofs(spec.dofs, face, cached_bubble_basis(m, pf, rr, k, l));
      }
    }
  }
  return spec;
}

ElementSpec constant_element(int n, int k, int l, int p) {
  return build_element(Family::const_W, PolyFamily::Pminus, n, k, l, p, 1);
}

namespace {

Rational pair_dof(const FaceFrame& fr, const DoFFunctional& dof, const TraceValue& tv) {
  Rational acc;
  for (const auto& [key, c] : tv.terms) {
    if (dof.skeletal) {
      if (!key.N1.empty()) continue;
      if (key.T2.size() != dof.t2.size() || key.N2.size() != dof.n2.size()) continue;
      Rational g2 = gram_minor(fr.gram_t, key.T2, dof.t2);
      if (g2.is_zero()) continue;
      Rational g3 = gram_minor(fr.gram_n, key.N2, dof.n2);
      if (g3.is_zero()) continue;
      for (const auto& [bt, cb] : dof.b1.terms()) {
        if (bt.I.size() != key.T1.size()) continue;
        Rational g1 = gram_minor(fr.gram_t, key.T1, bt.I);
        if (g1.is_zero()) continue;
        BaryExp total = key.alpha;
        for (size_t i = 0; i < total.size(); ++i) total[i] += bt.alpha[i];
        acc += c * cb * g1 * g2 * g3 * face_integral(total);
      }
    } else {
      if (!key.N1.empty() || !key.N2.empty()) continue;
      for (const auto& [bt, cb] : dof.b1.terms()) {
        if (bt.I.size() != key.T1.size() || bt.J.size() != key.T2.size()) continue;
        Rational g1 = gram_minor(fr.gram_t, key.T1, bt.I);
        if (g1.is_zero()) continue;
        Rational g2 = gram_minor(fr.gram_t, key.T2, bt.J);
        if (g2.is_zero()) continue;
        BaryExp total = key.alpha;
        for (size_t i = 0; i < total.size(); ++i) total[i] += bt.alpha[i];
        acc += c * cb * g1 * g2 * face_integral(total);
      }
    }
  }
  return acc;
}

}  // namespace

Rational evaluate_dof(const Simplex& cell, const DoFFunctional& dof, const PolyForm& w) {
  return pair_dof(cell.frame(dof.face), dof, rho_star(cell, dof.face, w));
}

Matrix dof_matrix(const ElementSpec& spec, const Simplex& cell) {
  int nd = static_cast<int>(spec.dofs.size());
  int ns = static_cast<int>(spec.shape.size());
  Matrix m(nd, ns);
  // group by face so each trace is computed once per shape function
  std::map<Tuple, std::vector<int>> by_face;
  for (int i = 0; i < nd; ++i) by_face[spec.dofs[i].face].push_back(i);
  for (const auto& [face, idxs] : by_face) {
    const FaceFrame& fr = cell.frame(face);
    for (int j = 0; j < ns; ++j) {
      TraceValue tv = rho_star(cell, face, spec.shape[j]);
      for (int i : idxs) m.at(i, j) = pair_dof(fr, spec.dofs[i], tv);
    }
  }
  return m;
}

UnisolvencyReport unisolvency_check(const ElementSpec& spec, const Simplex& cell) {
  UnisolvencyReport rep;
  rep.dim = spec.expected_dim;
  rep.structural_ok = spec.dofs.size() == spec.shape.size() &&
                      static_cast<long>(spec.shape.size()) == spec.expected_dim;
  if (!rep.structural_ok) {
    rep.pass = false;
    return rep;
  }
  Matrix m = dof_matrix(spec, cell);
  rep.rank = m.rank();
  if (m.rows() == m.cols() && m.rows() <= 64) {
    rep.has_det = true;
    rep.det = m.det();
  }
  rep.pass = rep.rank == rep.dim;
  return rep;
}

UnisolvencyReport unisolvency_check(const ElementSpec& spec) {
  return unisolvency_check(spec, Simplex::reference(spec.n));
}

std::map<int, long> dof_table(Family family, PolyFamily pf, int n, int k, int l, int p, int r,
                              int q) {
  FamilyTraits t = traits(family);
  p = effective_p(family, p);
  if (q < 0) q = p;
  int rr = pf == PolyFamily::Pminus ? 1 : r;
  std::map<int, long> counts;
  auto k_factor = [&](int m) -> long {
    if (pf == PolyFamily::Pminus) return m == k ? 1 : 0;
    if (pf == PolyFamily::Pr_minus) return binom(rr + k - 1, rr - 1) * binom(rr - 1, m - k);
    return binom(rr + k, rr) * binom(rr - 1, m - k);
  };
  for (int m = 0; m <= n; ++m) {
    long c = 0;
    if (t.constant) {
      for (int s = 0; s < p; ++s)
        c += bubble_W_dim(m, PolyFamily::Pminus, 1, l + s, k - s, l - k + 2 * s + 1);
    } else if (t.moving) {
      if (m >= k && m <= l + q - 1)
        for (int s = 0; s < q; ++s) c += k_factor(m) * binom(m, m - s) * binom(n - m, l - m + s);
      if (m >= l + q) {
        if (!t.reduced || m <= l + p - 1)
          c += bubble_dim(m, pf, rr, k, l);
        else
          c += bubble_W_dim(m, pf, rr, k, l, p);
      }
    } else {
      c += t.reduced ? bubble_W_dim(m, pf, rr, k, l, p) : bubble_dim(m, pf, rr, k, l);
    }
    counts[m] = c;
  }
  return counts;
}

Patch two_cell_patch(int n) {
  Patch patch;
  patch.verts.assign(n + 2, Vec(n));
  for (int i = 1; i <= n; ++i) patch.verts[i][i - 1] = Rational(1);
  patch.verts[n + 1][n - 1] = Rational(-1);
  for (int v = 0; v <= n; ++v) patch.cell1.push_back(v);
  for (int v = 0; v <= n - 1; ++v) patch.cell2.push_back(v);
  patch.cell2.push_back(n + 1);
  return patch;
}

namespace {

// local vertex ids of the global tuple `sub` inside the sorted cell tuple
Tuple local_ids(const Tuple& cell, const Tuple& sub) {
  Tuple out;
  for (int g : sub) {
    auto it = std::lower_bound(cell.begin(), cell.end(), g);
    out.push_back(static_cast<int>(it - cell.begin()));
  }
  return out;
}

Simplex cell_simplex(const Patch& patch, const Tuple& cell) {
  std::vector<Vec> verts;
  for (int g : cell) verts.push_back(patch.verts[g]);
  return Simplex(std::move(verts));
}

// family trace on one face: the components that must be single-valued
std::map<TraceKey, Rational> family_trace(const ElementSpec& spec, const Simplex& cell,
                                          const Tuple& local_face, const PolyForm& w) {
  FamilyTraits t = traits(spec.family);
  int m = static_cast<int>(local_face.size()) - 1;
  TraceValue tv;
  if (t.moving && m <= spec.l + spec.q - 1)
    tv = double_trace_ij_p(cell, local_face, spec.q, w);
  else
    tv = double_trace_ii(cell, local_face, w);
  return tv.terms;
}

}  // namespace

ConformityReport conformity_check(const ElementSpec& spec, const Patch& patch) {
  ConformityReport rep;
  Tuple shared;
  std::set_intersection(patch.cell1.begin(), patch.cell1.end(), patch.cell2.begin(),
                        patch.cell2.end(), std::back_inserter(shared));
  if (static_cast<int>(shared.size()) != spec.n)
    throw std::invalid_argument("patch cells must share a facet");

  Simplex s1 = cell_simplex(patch, patch.cell1);
  Simplex s2 = cell_simplex(patch, patch.cell2);

  // all shared faces (the facet and its subfaces)
  std::vector<Tuple> shared_faces;
  for (int m = 0; m < static_cast<int>(shared.size()); ++m)
    for (const Tuple& f : subsets_of(shared, m + 1)) shared_faces.push_back(f);

  // (1) per-cell determination: a shape function with vanishing dofs on the
  // face and its subfaces has vanishing family trace on the face
  rep.determination_ok = true;
  struct CellData {
    const Simplex* cell;
    const Tuple* global;
  };
  CellData cds[2] = {{&s1, &patch.cell1}, {&s2, &patch.cell2}};
  int ns = static_cast<int>(spec.shape.size());
  for (const CellData& cd : cds) {
    for (const Tuple& gface : shared_faces) {
      Tuple lface = local_ids(*cd.global, gface);
      // dof rows attached to the face or its subfaces
      std::vector<Vec> rows;
      for (const DoFFunctional& dof : spec.dofs) {
        Tuple gdof;  // dof face in global ids
        for (int v : dof.face) gdof.push_back((*cd.global)[v]);
        if (!tuple_subset(gdof, gface)) continue;
        Vec row(ns);
        for (int j = 0; j < ns; ++j) row[j] = evaluate_dof(*cd.cell, dof, spec.shape[j]);
        rows.push_back(std::move(row));
      }
      // trace rows
      std::set<TraceKey> keys;
      std::vector<std::map<TraceKey, Rational>> traces;
      for (int j = 0; j < ns; ++j) {
        traces.push_back(family_trace(spec, *cd.cell, lface, spec.shape[j]));
        for (const auto& [key, c] : traces.back()) keys.insert(key);
      }
      std::vector<Vec> trows;
      for (const TraceKey& key : keys) {
        Vec row(ns);
        for (int j = 0; j < ns; ++j) {
          auto it = traces[j].find(key);
          if (it != traces[j].end()) row[j] = it->second;
        }
        trows.push_back(std::move(row));
      }
      if (trows.empty()) continue;
      Matrix d = Matrix::from_columns(rows).transpose();
      Matrix tmat = Matrix::from_columns(trows).transpose();
      if (rows.empty()) {
        if (!tmat.is_zero()) rep.determination_ok = false;
        continue;
      }
      int rd = d.rank();
      if (d.vstack(tmat).rank() != rd) rep.determination_ok = false;
    }
  }

  // (2) single-valuedness of the interpolant across the patch: identify the
  // shared dofs, interpolate every global assignment on both cells, and
  // compare the family traces exactly
  Matrix m1 = dof_matrix(spec, s1);
  Matrix m2 = dof_matrix(spec, s2);
  Matrix inv1 = m1.inverse();
  Matrix inv2 = m2.inverse();

  // global identity of each local dof: (global face ids, index within the
  // face's block); blocks are built identically on both cells
  auto global_ids = [&](const Tuple& cell) {
    std::vector<std::pair<Tuple, int>> ids;
    std::map<Tuple, int> counter;
    for (const DoFFunctional& dof : spec.dofs) {
      Tuple g;
      for (int v : dof.face) g.push_back(cell[v]);
      ids.emplace_back(g, counter[g]++);
    }
    return ids;
  };
  auto ids1 = global_ids(patch.cell1);
  auto ids2 = global_ids(patch.cell2);
  std::map<std::pair<Tuple, int>, int> global_index;
  for (const auto& id : ids1)
    if (!global_index.count(id)) {
      int next = static_cast<int>(global_index.size());
      global_index[id] = next;
    }
  for (const auto& id : ids2)
    if (!global_index.count(id)) {
      int next = static_cast<int>(global_index.size());
      global_index[id] = next;
    }

  rep.single_valued = true;
  int nglobal = static_cast<int>(global_index.size());
  for (int g = 0; g < nglobal && rep.single_valued; ++g) {
    Vec rhs1(spec.dofs.size()), rhs2(spec.dofs.size());
    for (size_t i = 0; i < ids1.size(); ++i)
      if (global_index[ids1[i]] == g) rhs1[i] = Rational(1);
    for (size_t i = 0; i < ids2.size(); ++i)
      if (global_index[ids2[i]] == g) rhs2[i] = Rational(1);
    Vec c1 = inv1.apply(rhs1);
    Vec c2 = inv2.apply(rhs2);
    PolyForm w1 = linear_combination(spec.shape, c1);
    PolyForm w2 = linear_combination(spec.shape, c2);
    for (const Tuple& gface : shared_faces) {
      auto t1 = family_trace(spec, s1, local_ids(patch.cell1, gface), w1);
      auto t2 = family_trace(spec, s2, local_ids(patch.cell2, gface), w2);
      if (t1 != t2) {
        rep.single_valued = false;
        break;
      }
    }
  }
  rep.pass = rep.determination_ok && rep.single_valued;
  return rep;
}

std::string element_name(Family family, int n, int k, int l, int p, int r) {
  if (r != 1) return "";
  FamilyTraits t = traits(family);
  p = effective_p(family, p);
  if (family == Family::const_W) {
    if (n == 3 && k == 1 && l == 2 && p == 1) return "constant MCS^T";
    return "";
  }
  if (n == 3) {
    if (k == 1 && l == 1 && p == 1) return t.reduced ? "Regge" : "full Regge";
    if (k == 2 && l == 2 && p == 1) return t.reduced ? "HHJ" : "full HHJ";
    if (k == 1 && l == 2 && p == 1) {
      if (!t.reduced) return "full MCS^T";
      return t.moving ? "HLZ" : "MCS^T";
    }
    if (k == 2 && l == 1 && p == 2) return t.reduced ? "MCS" : "full MCS";
    if (k == 0 && l == 1 && p == 1) return t.moving ? "vector Lagrange" : "Nedelec-2 (vector)";
    if (k == 0 && l == 0) return "Lagrange";
    if (k == 1 && l == 0) return "Nedelec-1";
    if (k == 2 && l == 0) return "Raviart-Thomas";
    if (k == 3 && l == 0) return "DG";
  }
  if (n == 4) {
    if (k == 1 && l == 1 && p == 1 && t.reduced) return "Regge (4D)";
    if (k == 3 && l == 3 && p == 1 && t.reduced) return "HHJ (4D)";
    if (k == 2 && l == 2 && p == 1 && t.reduced) return "curvature element (4D)";
  }
  if (n == 2 && k == 1 && l == 1 && p == 1) return t.reduced ? "Regge (2D)" : "full Regge (2D)";
  return "";
}

}  // namespace twf
