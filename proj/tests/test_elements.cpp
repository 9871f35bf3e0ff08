// Element catalog: construction, unisolvency, and conformity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twf/elements.hpp"

using namespace twf;

namespace {

long total_dofs(Family f, PolyFamily pf, int n, int k, int l, int p, int r = 1, int q = -1) {
  auto counts = dof_table(f, pf, n, k, l, p, r, q);
  long total = 0;
  for (const auto& [m, c] : counts) total += c * binom(n + 1, m + 1);
  return total;
}

Simplex skewed_cell(int n) {
  std::vector<Vec> verts(n + 1, Vec(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < n; ++j) verts[i][j] = Rational((i * 3 + j * 2) % 5 - 1, 1 + (i + j) % 3);
    verts[i][i - 1] = verts[i][i - 1] + Rational(3);
  }
  return Simplex(std::move(verts));
}

}  // namespace

TEST_CASE("catalogued lowest-order elements") {
  struct Case {
    Family fam;
    int n, k, l, p;
    long dim;
    std::string name;
  };
  std::vector<Case> cases = {
      {Family::ii_W, 3, 1, 1, 1, 6, "Regge"},
      {Family::ii_alt, 3, 1, 1, 1, 18, "full Regge"},
      {Family::ij_W, 3, 2, 2, 1, 6, "HHJ"},
      {Family::ijp_W, 3, 2, 1, 2, 8, "MCS"},
      {Family::ij_W, 3, 1, 2, 1, 14, "HLZ"},
      {Family::ij_W, 4, 3, 3, 1, 10, "HHJ (4D)"},
      {Family::ii_W, 4, 2, 2, 1, 20, "curvature element (4D)"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.name);
    ElementSpec spec = build_element(c.fam, PolyFamily::Pminus, c.n, c.k, c.l, c.p);
    CHECK(spec.expected_dim == c.dim);
    CHECK(spec.dofs.size() == spec.shape.size());
    CHECK(spec.name == c.name);
    UnisolvencyReport rep = unisolvency_check(spec);
    CHECK(rep.pass);
    if (rep.has_det) CHECK(!rep.det.is_zero());
  }
}

TEST_CASE("constant construction") {
  ElementSpec spec = constant_element(4, 2, 2, 2);
  CHECK(spec.expected_dim == 35);
  auto counts = dof_table(Family::const_W, PolyFamily::Pminus, 4, 2, 2, 2);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 5);
  CHECK(counts[4] == 0);
  CHECK(unisolvency_check(spec).pass);

  // mirrored tests reproduce the generalized-trace element of the flip space
  ElementSpec mirror = constant_element(3, 1, 2, 1);
  CHECK(mirror.expected_dim == 8);
  CHECK(dof_table(Family::const_W, PolyFamily::Pminus, 3, 1, 2, 1)[2] == 2);
  CHECK(unisolvency_check(mirror).pass);

  // p = 1 with k = l coincides with the plain reduced family counts
  auto a = dof_table(Family::const_W, PolyFamily::Pminus, 3, 1, 1, 1);
  auto b = dof_table(Family::ii_W, PolyFamily::Pminus, 3, 1, 1, 1);
  CHECK(a == b);
  CHECK(unisolvency_check(constant_element(3, 1, 1, 1)).pass);
}

TEST_CASE("invalid parameters name the violated constraint") {
  CHECK_THROWS_WITH_AS(build_element(Family::ij_W, PolyFamily::Pminus, 3, 2, 1, 1),
                       "symmetric families require k <= l + p - 1", std::invalid_argument);
  CHECK_THROWS_AS(build_element(Family::const_W, PolyFamily::Pminus, 3, 0, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_element(Family::ii_alt, PolyFamily::Pminus, 3, 5, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_element(Family::ijp_W, PolyFamily::Pminus, 3, 2, 1, 2, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("dof tables match the catalogued counts") {
  // value-trace family of (2,2)-forms in 4D
  auto t22 = dof_table(Family::ijp_alt, PolyFamily::Pminus, 4, 2, 2, 2);
  CHECK(t22[1] == 0);
  CHECK(t22[2] == 5);
  CHECK(t22[3] == 0);
  CHECK(t22[4] == 10);
  // order-3 trace of (3,3)-forms at ambient 6
  auto t33 = dof_table(Family::ijp_alt, PolyFamily::Pminus, 6, 3, 3, 3);
  CHECK(t33[3] == 19);
  // Regge: one dof per edge only
  auto reg = dof_table(Family::ii_W, PolyFamily::Pminus, 3, 1, 1, 1);
  CHECK(reg[0] == 0);
  CHECK(reg[1] == 1);
  CHECK(reg[2] == 0);
  CHECK(reg[3] == 0);
}

TEST_CASE("dof totals equal the shape dimension") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        for (int p = 1; p <= n; ++p) {
          for (Family fam : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W,
                             Family::ijp_alt, Family::ijp_W, Family::ii_Wp, Family::const_W}) {
            ElementSpec spec;
            try {
              spec = build_element(fam, PolyFamily::Pminus, n, k, l, p);
            } catch (const std::invalid_argument&) {
              continue;
            }
            CAPTURE(family_name(fam));
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(p);
            CHECK(static_cast<long>(spec.dofs.size()) == spec.expected_dim);
            CHECK(total_dofs(fam, PolyFamily::Pminus, n, k, l, p) == spec.expected_dim);
          }
        }
      }
}

TEST_CASE("moving the dofs preserves the totals") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = k; l <= n; ++l) {
        CHECK(total_dofs(Family::ij_alt, PolyFamily::Pminus, n, k, l, 1) ==
              total_dofs(Family::ii_alt, PolyFamily::Pminus, n, k, l, 1));
        CHECK(total_dofs(Family::ij_W, PolyFamily::Pminus, n, k, l, 1) ==
              total_dofs(Family::ii_W, PolyFamily::Pminus, n, k, l, 1));
      }
}

TEST_CASE("symmetry reduction only touches high-dimensional faces") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = k; l <= n; ++l)
        for (int p = 1; p <= 2; ++p) {
          if (k > l + p - 1) continue;
          auto full = dof_table(Family::ii_alt, PolyFamily::Pminus, n, k, l, p);
          auto reduced = dof_table(Family::ii_Wp, PolyFamily::Pminus, n, k, l, p);
          for (int m = 0; m <= std::min(n, l + p - 1); ++m) CHECK(full[m] == reduced[m]);
        }
}

TEST_CASE("unisolvency across the lowest-order families in low dimension") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l)
        for (int p = 1; p <= n; ++p)
          for (Family fam : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W,
                             Family::ijp_alt, Family::ijp_W, Family::ii_Wp, Family::const_W}) {
            ElementSpec spec;
            try {
              spec = build_element(fam, PolyFamily::Pminus, n, k, l, p);
            } catch (const std::invalid_argument&) {
              continue;
            }
            if (spec.expected_dim == 0) continue;
            CAPTURE(family_name(fam));
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(p);
            CHECK(unisolvency_check(spec).pass);
          }
}

TEST_CASE("unisolvency survives affine mapping") {
  ElementSpec regge = build_element(Family::ii_W, PolyFamily::Pminus, 3, 1, 1, 1);
  CHECK(unisolvency_check(regge, skewed_cell(3)).pass);
  ElementSpec hlz = build_element(Family::ij_W, PolyFamily::Pminus, 3, 1, 2, 1);
  CHECK(unisolvency_check(hlz, skewed_cell(3)).pass);
  ElementSpec mcs = build_element(Family::ijp_W, PolyFamily::Pminus, 3, 2, 1, 2);
  CHECK(unisolvency_check(mcs, skewed_cell(3)).pass);
}

TEST_CASE("high-order elements") {
  // degree-2 reduced families in 3D
  ElementSpec regge2 = build_element(Family::ii_W, PolyFamily::Pr_minus, 3, 1, 1, 1, 2);
  CHECK(regge2.expected_dim == 30);
  CHECK(unisolvency_check(regge2).pass);

  ElementSpec w22 = build_element(Family::ii_W, PolyFamily::Pr, 3, 2, 2, 1, 1);
  CHECK(w22.expected_dim == 24);
  CHECK(unisolvency_check(w22).pass);

  ElementSpec hlz2 = build_element(Family::ij_W, PolyFamily::Pr_minus, 3, 1, 2, 1, 2);
  CHECK(hlz2.expected_dim == 50);
  CHECK(unisolvency_check(hlz2).pass);

  // degree-2 representative in four dimensions
  ElementSpec regge2_4d = build_element(Family::ii_W, PolyFamily::Pr_minus, 4, 1, 1, 1, 2);
  CHECK(regge2_4d.expected_dim == 70);
  CHECK(unisolvency_check(regge2_4d).pass);

  // degree-3 representative in two dimensions
  ElementSpec regge3_2d = build_element(Family::ii_W, PolyFamily::Pr_minus, 2, 1, 1, 1, 3);
  CHECK(regge3_2d.expected_dim == 20);
  CHECK(unisolvency_check(regge3_2d).pass);
}

TEST_CASE("mixed trace order variant") {
  ElementSpec spec = build_element(Family::ijp_W, PolyFamily::Pminus, 4, 2, 2, 2, 1, 1);
  CHECK(spec.q == 1);
  CHECK(unisolvency_check(spec).pass);
}

TEST_CASE("degree-one instances of the weighted test convention") {
  // Pr_minus at r = 1 uses polynomial-weighted skeletal factors instead of
  // the constant volume identification; both conventions must certify
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    ElementSpec a = build_element(Family::ij_W, PolyFamily::Pminus, 3, k, l, 1, 1);
    ElementSpec b = build_element(Family::ij_W, PolyFamily::Pr_minus, 3, k, l, 1, 1);
    CHECK(a.expected_dim == b.expected_dim);
    CHECK(unisolvency_check(a).pass);
    CHECK(unisolvency_check(b).pass);
  }
}

TEST_CASE("high-order conformity") {
  ElementSpec regge2 = build_element(Family::ii_W, PolyFamily::Pr_minus, 3, 1, 1, 1, 2);
  ConformityReport r1 = conformity_check(regge2, two_cell_patch(3));
  CHECK(r1.pass);
  ElementSpec hlz2 = build_element(Family::ij_W, PolyFamily::Pr_minus, 3, 1, 2, 1, 2);
  ConformityReport r2 = conformity_check(hlz2, two_cell_patch(3));
  CHECK(r2.pass);
}

TEST_CASE("constant construction on a skewed cell") {
  ElementSpec spec = constant_element(3, 1, 2, 1);
  CHECK(unisolvency_check(spec, skewed_cell(3)).pass);
}

TEST_CASE("structural failure reported before the rank test") {
  ElementSpec spec = build_element(Family::ii_W, PolyFamily::Pminus, 3, 1, 1, 1);
  spec.dofs.pop_back();
  UnisolvencyReport rep = unisolvency_check(spec);
  CHECK(!rep.structural_ok);
  CHECK(!rep.pass);
}

TEST_CASE("single-valuedness machinery detects violations") {
  // Negative control: the lowest-order symmetric (1,1) element is
  // tangential-tangential continuous but its full restriction jumps across
  // the shared facet, and the interpolant comparison must see that.
  ElementSpec spec = build_element(Family::ii_W, PolyFamily::Pminus, 3, 1, 1, 1);
  Patch patch = two_cell_patch(3);
  std::vector<Vec> v1, v2;
  for (int g : patch.cell1) v1.push_back(patch.verts[g]);
  for (int g : patch.cell2) v2.push_back(patch.verts[g]);
  Simplex c1(v1), c2(v2);
  Matrix inv1 = dof_matrix(spec, c1).inverse();
  Matrix inv2 = dof_matrix(spec, c2).inverse();
  Tuple facet{0, 1, 2};  // shared local ids coincide in both cells
  bool jump_found = false;
  for (size_t i = 0; i < spec.dofs.size() && !jump_found; ++i) {
    // pick the global dof sitting on an edge of the shared facet
    Tuple gdof;
    for (int v : spec.dofs[i].face) gdof.push_back(patch.cell1[v]);
    if (!tuple_subset(gdof, facet)) continue;
    Vec rhs(spec.dofs.size());
    rhs[i] = Rational(1);
    PolyForm w1 = linear_combination(spec.shape, inv1.apply(rhs));
    PolyForm w2 = linear_combination(spec.shape, inv2.apply(rhs));
    TraceValue full1 = rho_star(c1, facet, w1);
    TraceValue full2 = rho_star(c2, facet, w2);
    if (!(full1.terms == full2.terms)) jump_found = true;
  }
  CHECK(jump_found);
}

TEST_CASE("conformity on two-cell patches") {
  struct Case {
    Family fam;
    int n, k, l, p;
    std::string label;
  };
  std::vector<Case> cases = {
      {Family::ii_W, 3, 1, 1, 1, "Regge tt"},
      {Family::ij_W, 3, 2, 2, 1, "HHJ nn"},
      {Family::ijp_W, 3, 2, 1, 2, "MCS nt"},
      {Family::ij_W, 3, 1, 2, 1, "HLZ edge tn"},
      {Family::ij_W, 2, 1, 1, 1, "Regge 2D"},
      {Family::ij_alt, 2, 0, 1, 1, "vector Lagrange 2D"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.label);
    ElementSpec spec = build_element(c.fam, PolyFamily::Pminus, c.n, c.k, c.l, c.p);
    ConformityReport rep = conformity_check(spec, two_cell_patch(c.n));
    CHECK(rep.determination_ok);
    CHECK(rep.single_valued);
  }
}
