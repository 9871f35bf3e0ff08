// Acceptance suite: one pass/fail line per criterion, all checks exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "twf/bgg.hpp"
#include "twf/elements.hpp"
#include "twf/meshcomplex.hpp"
#include "twf/polyform.hpp"
#include "twf/suites.hpp"

using namespace twf;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& text, const std::function<bool()>& body) {
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    ok = false;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[criterion %2d] %s  %s  (%lld ms)\n", number, ok ? "PASS" : "FAIL", text.c_str(),
              static_cast<long long>(ms));
  if (!ok) ++g_failures;
}

bool check_dimension_formulas() {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int k = 0; k <= n; ++k) {
        long kminus = static_cast<long>(basis_Pr_minus(n, r, k).size());
        long kfull = static_cast<long>(basis_Pr(n, r, k).size());
        if (kminus != binom(n + r, k + r) * binom(r + k - 1, k)) return false;
        if (kfull != binom(n + r, n) * binom(n, k)) return false;
        for (int l = 0; l <= n; ++l) {
          if (kminus * binom(n, l) != dim_Pr_minus_alt(n, r, k, l)) return false;
          if (kfull * binom(n, l) != dim_Pr_alt(n, r, k, l)) return false;
        }
      }
  return true;
}

bool check_named_dimensions() {
  struct Want {
    Family fam;
    int n, k, l, p;
    long dim;
  };
  for (const Want& w : std::vector<Want>{{Family::ii_W, 3, 1, 1, 1, 6},
                                         {Family::ii_alt, 3, 1, 1, 1, 18},
                                         {Family::ij_W, 3, 2, 2, 1, 6},
                                         {Family::ijp_W, 3, 2, 1, 2, 8},
                                         {Family::ij_W, 3, 1, 2, 1, 14},
                                         {Family::ij_W, 4, 3, 3, 1, 10},
                                         {Family::ii_W, 4, 2, 2, 1, 20},
                                         {Family::const_W, 4, 2, 2, 2, 35}}) {
    ElementSpec spec = build_element(w.fam, PolyFamily::Pminus, w.n, w.k, w.l, w.p);
    if (spec.expected_dim != w.dim) return false;
    if (!unisolvency_check(spec).pass) return false;
  }
  return true;
}

bool check_euler() {
  for (int n = 2; n <= 4; ++n) {
    std::vector<SimplicialComplex> meshes;
    meshes.push_back(single_simplex_mesh(n));
    meshes.push_back(two_cell_mesh(n));
    meshes.push_back(starred_simplex_mesh(n));
    for (const SimplicialComplex& cx : meshes)
      for (int l = 0; l <= n; ++l)
        for (int p = 1; l + p <= n; ++p) {
          if (euler_residual(cx, l, p) != 0) return false;
          if (skeletal_identity_residual(cx, l, p) != 0) return false;
        }
  }
  return true;
}

bool check_dehn_sommerville() {
  for (int d = 1; d <= 4; ++d) {
    SimplicialComplex sphere = simplex_boundary_mesh(d);
    for (int p = 0; p <= d + 1; ++p)
      if (dehn_sommerville_residual(sphere, p) != 0) return false;
  }
  SimplicialComplex octa = octahedron_boundary_mesh();
  for (int p = 0; p <= 3; ++p)
    if (dehn_sommerville_residual(octa, p) != 0) return false;
  return true;
}

bool check_high_order_regge_identity() {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 5; ++r) {
      long lhs = bubble_dim(n, PolyFamily::Pr, r, 1, 1) - bubble_dim(n, PolyFamily::Pr, r, 0, 2);
      if (lhs != binom(n + 1, 2) * binom(r + 1, n)) return false;
    }
  return true;
}

bool check_worked_dimensions() {
  struct Want {
    int n, r, k, l, p;
    bool full;
    long dim;
  };
  const std::vector<Want> wants = {
      // symmetric matrix fields, incomplete family
      {3, 1, 1, 1, 1, false, 6},
      {3, 2, 1, 1, 1, false, 30},
      {3, 3, 1, 1, 1, false, 75},
      {2, 1, 1, 1, 1, false, 3},
      {2, 2, 1, 1, 1, false, 10},
      {2, 3, 1, 1, 1, false, 20},
      // symmetric matrix fields, full family
      {3, 1, 1, 1, 1, true, 24},
      {3, 2, 1, 1, 1, true, 60},
      {3, 3, 1, 1, 1, true, 120},
      {2, 1, 1, 1, 1, true, 9},
      {2, 2, 1, 1, 1, true, 18},
      {2, 3, 1, 1, 1, true, 30},
      // traceless fields (1,2)
      {3, 1, 1, 2, 1, false, 14},
      {3, 2, 1, 2, 1, false, 50},
      {3, 3, 1, 2, 1, false, 115},
      {3, 1, 1, 2, 1, true, 32},
      {3, 2, 1, 2, 1, true, 80},
      {3, 3, 1, 2, 1, true, 160},
      // (2,2) fields
      {3, 1, 2, 2, 1, false, 6},
      {3, 2, 2, 2, 1, false, 25},
      {3, 3, 2, 2, 1, false, 63},
      {3, 1, 2, 2, 1, true, 24},
      {3, 2, 2, 2, 1, true, 60},
      {3, 3, 2, 2, 1, true, 120},
      // (2,1) order-2 fields
      {3, 1, 2, 1, 2, false, 8},
      {3, 2, 2, 1, 2, false, 35},
      {3, 3, 2, 1, 2, false, 88},
      {3, 1, 2, 1, 2, true, 32},
      {3, 2, 2, 1, 2, true, 80},
      {3, 3, 2, 1, 2, true, 160},
  };
  for (const Want& w : wants) {
    long got = static_cast<long>(kernel_space_PrW(w.n, w.r, w.k, w.l, w.p, w.full).size());
    if (got != w.dim) {
      std::fprintf(stderr, "worked dimension mismatch: n=%d r=%d k=%d l=%d p=%d %s: got %ld want %ld\n",
                   w.n, w.r, w.k, w.l, w.p, w.full ? "full" : "incomplete", got, w.dim);
      return false;
    }
  }
  return true;
}

bool check_koszul_commutation() {
  int n = 3;
  // monomial basis of the degree-2 polynomial space in the coordinates
  std::vector<BaryExp> monos;
  monos.emplace_back(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    BaryExp a(n + 1, 0);
    a[i] = 1;
    monos.push_back(a);
    for (int j = i; j <= n; ++j) {
      BaryExp b(n + 1, 0);
      b[i] += 1;
      b[j] += 1;
      monos.push_back(b);
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int l = 0; l + 1 <= n; ++l)
      for (const Tuple& I : increasing_tuples(n, k))
        for (const Tuple& J : increasing_tuples(n, l))
          for (const BaryExp& mono : monos) {
            PolyForm f(n, k, l);
            f.add_term(mono, I, J, Rational(1));
            PolyForm lhs = apply_S_dagger(koszul(f));
            PolyForm rhs = koszul(apply_S_dagger(f)) * Rational(-1);
            if (!poly_equal(lhs, rhs)) return false;
          }
  return true;
}

}  // namespace

int main() {
  criterion(1, "dimension formulas of the polynomial families (n <= 4, r <= 3)",
            check_dimension_formulas);
  criterion(2, "index-map rank thresholds and pair-map block ranks (n <= 6)",
            [] { return all_pass(suite_appendixA(6)); });
  criterion(3, "iterated shuffle adjointness as exact transposes (n <= 6)",
            [] { return all_pass(suite_adjoint(6)); });
  criterion(4, "bubble dimension tables reproduced cell by cell", [] {
    if (!all_pass(suite_bubble_tables())) return false;
    // the reduced rows re-derived from constructed kernels, not closed forms
    struct Cell {
      int m, k, l, p;
      long want;
    };
    for (const Cell& c : std::vector<Cell>{{1, 1, 1, 1, 1},  {2, 1, 1, 1, 0},  {2, 2, 2, 1, 1},
                                           {3, 2, 2, 1, 2},  {4, 2, 2, 1, 0},  {4, 2, 2, 2, 5},
                                           {3, 3, 3, 1, 1},  {4, 3, 3, 1, 5},  {5, 3, 3, 1, 5},
                                           {6, 3, 3, 1, 0},  {5, 3, 3, 2, 30}, {6, 3, 3, 2, 14},
                                           {6, 3, 3, 3, 28}}) {
      auto basis = bubble_W_basis(c.m, PolyFamily::Pminus, 1, c.k, c.l, c.p);
      if (static_cast<long>(basis.size()) != c.want) return false;
      if (!basis.empty() &&
          canonical_matrix(basis).rank() != static_cast<int>(basis.size()))
        return false;
    }
    return true;
  });
  criterion(5, "unisolvency across the family grid and the catalogued elements", [] {
    return check_named_dimensions() && all_pass(suite_unisolvency(4, 2));
  });
  criterion(6, "two-cell conformity patches (n = 2, 3, 4)",
            [] { return all_pass(suite_conformity(4)); });
  criterion(7, "Euler characteristic residuals on contractible meshes (n = 2, 3, 4)", check_euler);
  criterion(8, "Dehn-Sommerville residuals on simplex boundaries and the octahedron",
            check_dehn_sommerville);
  criterion(9, "high-order bubble difference identity (n <= 4, r <= 5)",
            check_high_order_regge_identity);
  criterion(10, "worked dimensions of the high-order kernel spaces", check_worked_dimensions);
  criterion(11, "contraction anticommutes with the dagger shuffle on the degree-2 space",
            check_koszul_commutation);
  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
  return g_failures == 0 ? 0 : 1;
}
