// Frames and generalized traces.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "twf/geometry.hpp"

using namespace twf;

namespace {

Simplex random_simplex(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  while (true) {
    std::vector<Vec> verts(n + 1, Vec(n));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n; ++j) verts[i][j] = Rational(num(rng), 1 + (i + j) % 2);
    try {
      return Simplex(std::move(verts));
    } catch (const std::invalid_argument&) {
      // degenerate draw, try again
    }
  }
}

PolyForm const_form(int dim, const Tuple& I, const Tuple& J) {
  PolyForm f(dim, static_cast<int>(I.size()), static_cast<int>(J.size()));
  f.add_term(BaryExp(dim + 1, 0), I, J, Rational(1));
  return f;
}

}  // namespace

TEST_CASE("reference edge frame in three dimensions") {
  Simplex ref = Simplex::reference(3);
  const FaceFrame& fr = ref.frame({0, 1});
  CHECK(fr.m == 1);
  // tangent e1
  CHECK(fr.A.at(0, 0) == Rational(1));
  CHECK(fr.A.at(1, 0) == Rational(0));
  CHECK(fr.A.at(2, 0) == Rational(0));
  // normals span e2, e3 exactly
  CHECK(fr.A.at(0, 1) == Rational(0));
  CHECK(fr.A.at(0, 2) == Rational(0));
  // dual pairing is the identity
  CHECK(fr.A_inv * fr.A == Matrix::identity(3));
}

TEST_CASE("degenerate simplex is rejected") {
  std::vector<Vec> verts(3, Vec(2));
  verts[1][0] = Rational(1);
  verts[2][0] = Rational(2);  // collinear
  CHECK_THROWS_AS(Simplex(std::move(verts)), std::invalid_argument);
}

TEST_CASE("frame blocks are metric-orthogonal on random simplices") {
  std::mt19937 rng(808);
  for (int n = 2; n <= 4; ++n) {
    Simplex s = random_simplex(n, rng);
    for (int m = 0; m < n; ++m)
      for (const Tuple& face : s.faces(m)) {
        const FaceFrame& fr = s.frame(face);
        Matrix g = fr.A.transpose() * s.metric() * fr.A;
        for (int i = 0; i < fr.m; ++i)
          for (int j = fr.m; j < n; ++j) {
            CHECK(g.at(i, j).is_zero());
            CHECK(g.at(j, i).is_zero());
          }
        // normals mutually orthogonal
        for (int i = fr.m; i < n; ++i)
          for (int j = fr.m; j < n; ++j)
            if (i != j) CHECK(g.at(i, j).is_zero());
        CHECK(fr.A_inv * fr.A == Matrix::identity(n));
      }
  }
}

TEST_CASE("pullback of a transverse differential vanishes") {
  Simplex ref = Simplex::reference(3);
  PolyForm dx2 = const_form(3, {2}, {});
  TraceValue tv = iota_star(ref, {0, 1}, dx2);
  CHECK(tv.is_zero());
  // tangential differential survives with unit coefficient
  PolyForm dx1 = const_form(3, {1}, {});
  TraceValue tv2 = iota_star(ref, {0, 1}, dx1);
  REQUIRE(tv2.terms.size() == 1);
  CHECK(tv2.terms.begin()->second == Rational(1));
}

TEST_CASE("whitney duality through the trace") {
  for (int n = 1; n <= 4; ++n) {
    Simplex ref = Simplex::reference(n);
    for (int k = 0; k <= n; ++k) {
      for (const Tuple& sigma : ref.faces(k)) {
        PolyForm phi = whitney_form(n, sigma);
        for (const Tuple& tau : ref.faces(k)) {
          TraceValue tv = iota_star(ref, tau, phi);
          if (tau == sigma) {
            // the trace is the unit multiple of the face volume label
            Rational integral;
            for (const auto& [key, c] : tv.terms) integral += c * face_integral(key.alpha);
            CHECK(integral == Rational(1));
          } else {
            CHECK(tv.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("composition of pullbacks is the pullback") {
  std::mt19937 rng(99);
  Simplex s = random_simplex(3, rng);
  PolyForm w(3, 1, 1);
  std::uniform_int_distribution<int> num(-3, 3);
  for (const Tuple& I : increasing_tuples(3, 1))
    for (const Tuple& J : increasing_tuples(3, 1)) {
      BaryExp a(4, 0);
      a[(I[0] + J[0]) % 4] = 1;
      w.add_term(a, I, J, Rational(num(rng)));
    }
  // chain vertex {1} < edge {1,3} < face {1,2,3}
  PolyForm on_face = pullback_to_face(s, {1, 2, 3}, w);
  Simplex face = s.face_simplex({1, 2, 3});
  // edge {1,3} has local ids {0,2} inside the face
  PolyForm via_face = pullback_to_face(face, {0, 2}, on_face);
  PolyForm direct = pullback_to_face(s, {1, 3}, w);
  CHECK(poly_equal(via_face, direct));
}

TEST_CASE("block completeness of the component split") {
  // the full restriction keeps all C(n,k) independent components
  for (int n = 2; n <= 4; ++n) {
    Simplex ref = Simplex::reference(n);
    for (int k = 1; k <= n; ++k)
      for (int m = 0; m < n; ++m) {
        Tuple face = ref.faces(m)[ref.faces(m).size() / 2];
        long count = 0;
        for (int q = 0; q <= k; ++q) count += binom(m, q) * binom(n - m, k - q);
        CHECK(count == binom(n, k));
        // the restriction map on constants is injective
        std::vector<Vec> rows;
        std::map<std::pair<Tuple, Tuple>, int> comp_index;
        std::vector<std::map<std::pair<Tuple, Tuple>, Rational>> images;
        for (const Tuple& I : increasing_tuples(n, k)) {
          TraceValue tv = rho_star(ref, face, const_form(n, I, {}));
          std::map<std::pair<Tuple, Tuple>, Rational> img;
          for (const auto& [key, c] : tv.terms) {
            img[{key.T1, key.N1}] = c;
            if (!comp_index.count({key.T1, key.N1})) {
              int next = static_cast<int>(comp_index.size());
              comp_index[{key.T1, key.N1}] = next;
            }
          }
          images.push_back(std::move(img));
        }
        Matrix mat(static_cast<int>(comp_index.size()), static_cast<int>(images.size()));
        for (size_t j = 0; j < images.size(); ++j)
          for (const auto& [key, c] : images[j]) mat.at(comp_index[key], static_cast<int>(j)) = c;
        CHECK(mat.rank() == static_cast<int>(binom(n, k)));
      }
  }
}

TEST_CASE("generalized trace degenerations") {
  std::mt19937 rng(321);
  for (int n = 3; n <= 4; ++n) {
    Simplex s = random_simplex(n, rng);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int k = 1; k <= n; ++k) {
      PolyForm w(n, k, 0);
      for (const Tuple& I : increasing_tuples(n, k))
        w.add_term(BaryExp(n + 1, 0), I, {}, Rational(num(rng)));
      for (int m = 0; m < n; ++m) {
        Tuple face = s.faces(m)[0];
        for (int p = 1; p <= n + 1; ++p) {
          TraceValue tv = jstar_p(s, face, p, w);
          if (m == k + p - 1) {
            TraceValue it = iota_star(s, face, w);
            CHECK(tv.terms == it.terms);
          }
          if (m >= k + p) CHECK(tv.is_zero());
          if (p > m || k + p - 1 >= n) {
            TraceValue rho = rho_star(s, face, w);
            CHECK(tv.terms == rho.terms);
          }
        }
      }
    }
  }
}

TEST_CASE("two-form on a two-face in four dimensions splits into five components") {
  Simplex ref = Simplex::reference(4);
  // generic constant 2-form
  PolyForm w(4, 2, 0);
  int v = 1;
  for (const Tuple& I : increasing_tuples(4, 2)) w.add_term(BaryExp(5, 0), I, {}, Rational(++v));
  TraceValue tv = jstar_p(ref, {0, 1, 2}, 2, w);
  std::set<std::pair<Tuple, Tuple>> comps;
  for (const auto& [key, c] : tv.terms) comps.insert({key.T1, key.N1});
  CHECK(comps.size() == 5);
}

TEST_CASE("generalized trace components grow with the order") {
  std::mt19937 rng(246);
  Simplex s = random_simplex(4, rng);
  std::uniform_int_distribution<int> num(-4, 4);
  PolyForm w(4, 2, 0);
  for (const Tuple& I : increasing_tuples(4, 2)) w.add_term(BaryExp(5, 0), I, {}, Rational(num(rng)));
  for (int m = 1; m <= 3; ++m) {
    Tuple face = s.faces(m)[1];
    std::set<std::pair<Tuple, Tuple>> prev;
    for (int p = 1; p <= 4; ++p) {
      TraceValue tv = jstar_p(s, face, p, w);
      std::set<std::pair<Tuple, Tuple>> comps;
      for (const auto& [key, c] : tv.terms) comps.insert({key.T1, key.N1});
      CHECK(std::includes(comps.begin(), comps.end(), prev.begin(), prev.end()));
      prev = std::move(comps);
    }
  }
}

TEST_CASE("vartheta components sum to the restriction") {
  std::mt19937 rng(777);
  Simplex s = random_simplex(3, rng);
  std::uniform_int_distribution<int> num(-5, 5);
  PolyForm w(3, 2, 0);
  for (const Tuple& I : increasing_tuples(3, 2)) w.add_term(BaryExp(4, 0), I, {}, Rational(num(rng)));
  Tuple face{0, 2};
  TraceValue rho = rho_star(s, face, w);
  std::map<TraceKey, Rational> collected;
  for (int q = 0; q <= 2; ++q) {
    TraceValue part = vartheta(s, face, q, w);
    for (const auto& [key, c] : part.terms) collected[key] += c;
  }
  for (auto it = collected.begin(); it != collected.end();) {
    if (it->second.is_zero())
      it = collected.erase(it);
    else
      ++it;
  }
  CHECK(collected == rho.terms);
}

TEST_CASE("shared-face traces agree across charts") {
  // the same ambient constant form, read through the charts of two cells
  // sharing a facet, produces identical component tables on the shared face
  for (int n = 2; n <= 3; ++n) {
    std::vector<Vec> verts(n + 2, Vec(n));
    for (int i = 1; i <= n; ++i) verts[i][i - 1] = Rational(1);
    verts[n + 1][n - 1] = Rational(-1, 2);
    verts[n + 1][0] = verts[n + 1][0] + Rational(1, 3);
    std::vector<Vec> v1(verts.begin(), verts.begin() + n + 1);
    std::vector<Vec> v2;
    for (int v = 0; v <= n - 1; ++v) v2.push_back(verts[v]);
    v2.push_back(verts[n + 1]);
    Simplex c1(v1), c2(v2);
    Tuple facet;  // local ids of the shared facet agree in both cells
    for (int v = 0; v <= n - 1; ++v) facet.push_back(v);
    for (int k = 1; k <= n; ++k)
      for (int l = 0; l < n; ++l) {
        ConstForm w(n, k, l);
        int c = 0;
        for (const Tuple& I : increasing_tuples(n, k))
          for (const Tuple& J : increasing_tuples(n, l)) w.add_term(I, J, Rational(++c, 3));
        TraceValue t1 = rho_star(c1, facet, ambient_const_to_world(c1, w));
        TraceValue t2 = rho_star(c2, facet, ambient_const_to_world(c2, w));
        CHECK(t1.terms == t2.terms);
      }
  }
}

TEST_CASE("composition of generalized traces with the pullback") {
  // vartheta on a vertex-edge-face chain against the projected direct trace
  std::mt19937 rng(4321);
  Simplex s = random_simplex(3, rng);
  std::uniform_int_distribution<int> num(-4, 4);
  PolyForm w(3, 2, 0);
  for (const Tuple& I : increasing_tuples(3, 2)) w.add_term(BaryExp(4, 0), I, {}, Rational(num(rng)));

  Tuple F{0, 1, 2};  // 2-face
  Tuple E{0, 1};     // edge inside it
  int q = 1;

  // left side: pull back to F, then take the component trace on E inside F
  PolyForm wF = pullback_to_face(s, F, w);
  Simplex face = s.face_simplex(F);
  TraceValue lhs = vartheta(face, {0, 1}, q, wF);

  // right side: component trace on E in the full cell, normal factors
  // restricted to the normal directions lying inside F
  TraceValue direct = vartheta(s, E, q, w);
  const FaceFrame& frE = s.frame(E);
  const FaceFrame& frEF = face.frame({0, 1});
  // embed F-world normal vectors of E into the cell world: F-world coords ->
  // cell world via the face chart columns (combinatorial)
  Matrix embed(3, 2);
  {
    // chart of F in cell world coordinates: columns e_{v_j} - e_{v_0}
    auto world = [&](int vid) {
      Vec y(3);
      if (vid >= 1) y[vid - 1] = Rational(1);
      return y;
    };
    for (int j = 1; j <= 2; ++j) {
      Vec t = world(F[j]);
      Vec b = world(F[0]);
      for (int i = 0; i < 3; ++i) embed.at(i, j - 1) = t[i] - b[i];
    }
  }
  // normal vector of E inside F, embedded
  Vec nF = frEF.A.col(1);
  Vec nF_cell = embed.apply(nF);
  // express the restriction of each cell-world normal dual on nF_cell
  // lhs keys carry N1 labels over the single F-world normal direction
  std::map<TraceKey, Rational> projected;
  for (const auto& [key, c] : direct.terms) {
    if (key.T1.size() != static_cast<size_t>(q)) continue;
    // evaluate the normal wedge on the embedded normal (k - q = 1 here)
    REQUIRE(key.N1.size() == 1);
    Vec dual = frE.A_inv.row(frE.m + key.N1[0] - 1);
    Rational val;
    for (int i = 0; i < 3; ++i) val += dual[i] * nF_cell[i];
    if (val.is_zero()) continue;
    TraceKey nk = key;
    nk.N1 = {1};
    projected[nk] += c * val;
  }
  for (auto it = projected.begin(); it != projected.end();) {
    if (it->second.is_zero())
      it = projected.erase(it);
    else
      ++it;
  }
  CHECK(projected == lhs.terms);
}
