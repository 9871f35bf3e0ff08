// Polynomial form spaces on the reference simplex.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "twf/bgg.hpp"
#include "twf/polyform.hpp"

using namespace twf;

namespace {

// counts basis elements attributed to each face dimension
std::map<int, long> attribution_counts(const std::vector<AttributedForm>& basis) {
  std::map<int, long> counts;
  for (const auto& af : basis) counts[static_cast<int>(af.face.size()) - 1]++;
  return counts;
}

PolyForm random_form(int dim, int deg, int k, int l, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  PolyForm f(dim, k, l);
  for (const Tuple& I : increasing_tuples(dim, k))
    for (const Tuple& J : increasing_tuples(dim, l)) {
      BaryExp a(dim + 1, 0);
      // a fixed spread of monomials keeps the test cheap
      for (int d = 0; d <= deg; ++d) {
        a.assign(dim + 1, 0);
        a[(d * 2 + k) % (dim + 1)] = d;
        f.add_term(a, I, J, Rational(num(rng)));
      }
    }
  return f;
}

}  // namespace

TEST_CASE("whitney edge form is the constant differential") {
  PolyForm w = whitney_form(1, {0, 1});
  auto canon = to_canonical(w);
  REQUIRE(canon.size() == 1);
  const auto& [key, c] = *canon.begin();
  CHECK(key.beta == std::vector<int>{0});
  CHECK(key.I == Tuple{1});
  CHECK(c == Rational(1));
}

TEST_CASE("whitney forms span with the right dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      auto basis = basis_Pr_minus(n, 1, k);
      CHECK(static_cast<long>(basis.size()) == binom(n + 1, k + 1));
      std::vector<PolyForm> forms;
      for (const auto& af : basis) forms.push_back(af.form);
      CHECK(canonical_matrix(forms).rank() == static_cast<int>(forms.size()));
    }
}

TEST_CASE("incomplete family: sizes and attribution") {
  CHECK(basis_Pr_minus(3, 1, 1).size() == 6);
  CHECK(basis_Pr_minus(3, 2, 1).size() == 20);
  CHECK(dim_Pr_minus_alt(3, 2, 1, 0) == 20);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r)
      for (int k = 0; k <= n; ++k) {
        auto basis = basis_Pr_minus(n, r, k);
        CHECK(static_cast<long>(basis.size()) == binom(n + r, k + r) * binom(r + k - 1, k));
        auto counts = attribution_counts(basis);
        for (const auto& [fdim, cnt] : counts) {
          long per_face = binom(r + k - 1, r - 1) * binom(r - 1, fdim - k);
          CHECK(cnt == per_face * binom(n + 1, fdim + 1));
        }
      }
}

TEST_CASE("full family: sizes and attribution") {
  CHECK(basis_Pr(3, 1, 1).size() == 12);
  CHECK(basis_Pr(2, 2, 1).size() == 12);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r)
      for (int k = 0; k <= n; ++k) {
        auto basis = basis_Pr(n, r, k);
        CHECK(static_cast<long>(basis.size()) == binom(n + r, n) * binom(n, k));
        auto counts = attribution_counts(basis);
        for (const auto& [fdim, cnt] : counts) {
          long per_face = binom(r + k, r) * binom(r - 1, fdim - k);
          CHECK(cnt == per_face * binom(n + 1, fdim + 1));
        }
      }
}

TEST_CASE("generated bases are linearly independent") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k <= n; ++k) {
        std::vector<PolyForm> forms;
        for (const auto& af : basis_Pr_minus(n, r, k)) forms.push_back(af.form);
        if (!forms.empty())
          CHECK(canonical_matrix(forms).rank() == static_cast<int>(forms.size()));
        forms.clear();
        for (const auto& af : basis_Pr(n, r, k)) forms.push_back(af.form);
        if (!forms.empty())
          CHECK(canonical_matrix(forms).rank() == static_cast<int>(forms.size()));
      }
}

TEST_CASE("koszul contraction basics") {
  // kappa(dx^1) = x^1
  PolyForm dx1(3, 1, 0);
  dx1.add_term({0, 0, 0, 0}, {1}, {}, Rational(1));
  PolyForm kd = koszul(dx1);
  PolyForm x1(3, 0, 0);
  x1.add_term({0, 1, 0, 0}, {}, {}, Rational(1));
  CHECK(poly_equal(kd, x1));
  // kappa of a 0-form is zero
  CHECK(koszul(x1).is_zero());
}

TEST_CASE("koszul squares to zero") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    PolyForm f = random_form(3, 2, 2, 1, rng);
    CHECK(koszul(koszul(f)).is_zero());
  }
}

TEST_CASE("koszul anticommutes with the dagger shuffle") {
  std::mt19937 rng(555);
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= 2; ++l) {
      PolyForm f = random_form(3, 2, k, l, rng);
      PolyForm lhs = apply_S_dagger(koszul(f));
      PolyForm rhs = koszul(apply_S_dagger(f));
      CHECK(poly_equal(lhs, rhs * Rational(-1)));
    }
}

TEST_CASE("homogeneous koszul exactness by ranks") {
  // within homogeneous degree s, the kernel of the contraction equals the
  // image of the contraction from one degree up
  for (int n = 2; n <= 3; ++n)
    for (int s = 1; s <= 2; ++s)
      for (int k = 1; k < n; ++k) {
        std::vector<PolyForm> domain;
        std::vector<BaryExp> monos;
        // homogeneous monomials of degree s in coordinates only
        std::function<void(int, int, BaryExp&)> gen = [&](int i, int left, BaryExp& a) {
          if (i == n) {
            if (left == 0) monos.push_back(a);
            return;
          }
          for (int e = 0; e <= left; ++e) {
            a[i + 1] = e;
            gen(i + 1, left - e, a);
          }
          a[i + 1] = 0;
        };
        BaryExp proto(n + 1, 0);
        gen(0, s, proto);
        for (const BaryExp& a : monos)
          for (const Tuple& I : increasing_tuples(n, k)) {
            PolyForm f(n, k, 0);
            f.add_term(a, I, {}, Rational(1));
            domain.push_back(f);
          }
        std::vector<PolyForm> images;
        for (const PolyForm& f : domain) images.push_back(koszul(f));
        Matrix img_matrix = canonical_matrix(images);
        long kernel_dim = static_cast<long>(domain.size()) - img_matrix.rank();

        // image of kappa from degree s-1, form degree k+1
        std::vector<PolyForm> upper;
        monos.clear();
        BaryExp proto2(n + 1, 0);
        std::function<void(int, int, BaryExp&)> gen2 = [&](int i, int left, BaryExp& a) {
          if (i == n) {
            if (left == 0) monos.push_back(a);
            return;
          }
          for (int e = 0; e <= left; ++e) {
            a[i + 1] = e;
            gen2(i + 1, left - e, a);
          }
          a[i + 1] = 0;
        };
        gen2(0, s - 1, proto2);
        for (const BaryExp& a : monos)
          for (const Tuple& I : increasing_tuples(n, k + 1)) {
            PolyForm f(n, k + 1, 0);
            f.add_term(a, I, {}, Rational(1));
            upper.push_back(koszul(f));
          }
        long image_dim = upper.empty() ? 0 : canonical_matrix(upper).rank();
        CHECK(kernel_dim == image_dim);
      }
}

TEST_CASE("kernel spaces inside the incomplete family") {
  CHECK(kernel_space_PrW(3, 1, 1, 1, 1).size() == 6);
  CHECK(kernel_space_PrW(3, 1, 1, 2, 1).size() == 14);
  CHECK(kernel_space_PrW(3, 2, 1, 1, 1).size() == 30);
  // surjectivity count: dim ker = dim domain - dim target
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
          long want = dim_Pr_minus_alt(n, r, k, l) - dim_Pr_minus_alt(n, r, k - 1, l + 1);
          CHECK(static_cast<long>(kernel_space_PrW(n, r, k, l, 1).size()) == want);
        }
  // degree-3 spot checks of the same surjectivity count
  CHECK(static_cast<long>(kernel_space_PrW(3, 3, 1, 1, 1).size()) ==
        dim_Pr_minus_alt(3, 3, 1, 1) - dim_Pr_minus_alt(3, 3, 0, 2));
  CHECK(static_cast<long>(kernel_space_PrW(3, 3, 2, 2, 1).size()) ==
        dim_Pr_minus_alt(3, 3, 2, 2) - dim_Pr_minus_alt(3, 3, 1, 3));
}

namespace {

std::vector<BaryExp> homogeneous_monomials(int n, int deg) {
  std::vector<BaryExp> out;
  BaryExp a(n + 1, 0);
  std::function<void(int, int)> gen = [&](int i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      a[i + 1] = e;
      gen(i + 1, left - e);
    }
    a[i + 1] = 0;
  };
  gen(0, deg);
  return out;
}

}  // namespace

TEST_CASE("structural count of the kernel space") {
  // For p <= k < l+p-1 the kernel splits as P_{r-1} W_{[p]} plus the kappa
  // image of homogeneous degree-(r-1) W^{k+1,l}_{[p]} forms; check the
  // dimensions. (At p = k+1 the dagger iterate is already the zero map and
  // the kernel is the whole space, so the splitting does not apply; the
  // nullspace computation stays authoritative there.)
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int p = 1; p <= 2; ++p)
        for (int k = p; k <= n; ++k)
          for (int l = k + 2 - p; l <= n - p; ++l) {
            if (l < 0 || l > n || k >= l + p - 1) continue;
            long dim_w = w_space_dim(n, k, l, p);
            long first = binom(n + r - 1, n) * dim_w;
            // kappa image of H_{r-1} tensor W^{k+1,l}_{[p]}
            SymmetricSpaceBasis wup = symmetric_space(n, k + 1, l, p);
            std::vector<PolyForm> images;
            for (const BaryExp& a : homogeneous_monomials(n, r - 1)) {
              for (int bi = 0; bi < wup.dim(); ++bi) {
                ConstForm cf = wup.form(bi);
                PolyForm f(n, k + 1, l);
                for (const auto& [key, c] : cf.coeffs) f.add_term(a, key.first, key.second, c);
                images.push_back(koszul(f));
              }
            }
            long second = images.empty() ? 0 : canonical_matrix(images).rank();
            auto kernel = kernel_space_PrW(n, r, k, l, p);
            CHECK(static_cast<long>(kernel.size()) == first + second);
          }
}
