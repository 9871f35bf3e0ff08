#include "twf/bgg.hpp"

#include <map>
#include <stdexcept>

namespace twf {

namespace {

long pair_dim(int n, int k, int l) { return binom(n, k) * binom(n, l); }

// Moves one index across the slots of dx^I ⊗ dx^J. The sign of moving x is
// (-1)^{#(elements of I below x) + #(elements of J below x)}, which makes the
// matrices of S and S-dagger mutual transposes.
int move_sign(const Tuple& I, const Tuple& J, int x) {
  int c = 0;
  for (int v : I)
    if (v < x) ++c;
  for (int v : J)
    if (v < x) ++c;
  return (c % 2 == 0) ? 1 : -1;
}

}  // namespace

LinearMap build_S(int n, int k, int l) {
  LinearMap m;
  m.n = n;
  m.k_dom = k;
  m.l_dom = l;
  m.k_cod = k + 1;
  m.l_cod = l - 1;
  m.mat = Matrix(static_cast<int>(pair_dim(n, k + 1, l - 1)), static_cast<int>(pair_dim(n, k, l)));
  if (k + 1 > n || l - 1 < 0) return m;
  const auto& dom = pair_basis(n, k, l);
  for (size_t col = 0; col < dom.size(); ++col) {
    const Tuple& I = dom[col].first;
    const Tuple& J = dom[col].second;
    for (int x : J) {
      if (tuple_contains(I, x)) continue;
      Tuple inew, jnew;
      insert_sign(I, x, inew);
      jnew = tuple_minus(J, {x});
      int sign = move_sign(I, jnew, x);
      m.mat.at(pair_index(n, k + 1, l - 1, inew, jnew), static_cast<int>(col)) = Rational(sign);
    }
  }
  return m;
}

LinearMap build_S_dagger(int n, int k, int l) {
  LinearMap m;
  m.n = n;
  m.k_dom = k;
  m.l_dom = l;
  m.k_cod = k - 1;
  m.l_cod = l + 1;
  m.mat = Matrix(static_cast<int>(pair_dim(n, k - 1, l + 1)), static_cast<int>(pair_dim(n, k, l)));
  if (k - 1 < 0 || l + 1 > n) return m;
  const auto& dom = pair_basis(n, k, l);
  for (size_t col = 0; col < dom.size(); ++col) {
    const Tuple& I = dom[col].first;
    const Tuple& J = dom[col].second;
    for (int x : I) {
      if (tuple_contains(J, x)) continue;
      Tuple inew = tuple_minus(I, {x});
      Tuple jnew;
      insert_sign(J, x, jnew);
      int sign = move_sign(inew, J, x);
      m.mat.at(pair_index(n, k - 1, l + 1, inew, jnew), static_cast<int>(col)) = Rational(sign);
    }
  }
  return m;
}

LinearMap build_S_iter(int n, int k, int l, int p) {
  LinearMap m;
  m.n = n;
  m.k_dom = k;
  m.l_dom = l;
  m.k_cod = k + p;
  m.l_cod = l - p;
  if (p == 0) {
    m.mat = Matrix::identity(static_cast<int>(pair_dim(n, k, l)));
    return m;
  }
  m = build_S(n, k, l);
  for (int i = 1; i < p; ++i) {
    LinearMap next = build_S(n, k + i, l - i);
    m.mat = next.mat * m.mat;
    m.k_cod = next.k_cod;
    m.l_cod = next.l_cod;
  }
  return m;
}

LinearMap build_S_dagger_iter(int n, int k, int l, int p) {
  LinearMap m;
  m.n = n;
  m.k_dom = k;
  m.l_dom = l;
  m.k_cod = k - p;
  m.l_cod = l + p;
  if (p == 0) {
    m.mat = Matrix::identity(static_cast<int>(pair_dim(n, k, l)));
    return m;
  }
  m = build_S_dagger(n, k, l);
  for (int i = 1; i < p; ++i) {
    LinearMap next = build_S_dagger(n, k - i, l + i);
    m.mat = next.mat * m.mat;
    m.k_cod = next.k_cod;
    m.l_cod = next.l_cod;
  }
  return m;
}

namespace {

// The iterated maps preserve (I ∪ J, I ∩ J), so their rank is the sum of
// blockwise ranks; each block shape depends only on (|F|, |G|).
long rank_blockwise(int n, int k, int l, int p, bool dagger) {
  if (k < 0 || k > n || l < 0 || l > n) return 0;
  int kc = dagger ? k - p : k + p;
  int lc = dagger ? l + p : l - p;
  if (kc < 0 || kc > n || lc < 0 || lc > n) return 0;
  long total = 0;
  for (int g = 0; g <= std::min(k, l); ++g) {
    int f = k + l - g;
    if (f > n) continue;
    // one representative block per (f, g) shape
    Tuple F, G;
    for (int i = 1; i <= f; ++i) F.push_back(i);
    for (int i = 1; i <= g; ++i) G.push_back(i);
    Matrix block = dagger ? s_block_matrix(n, kc, lc, p, F, G).transpose()
                          : s_block_matrix(n, k, l, p, F, G);
    // The combinatorial block of s equals the block of S up to sign scaling
    // of basis vectors and a global factor, so the ranks agree.
    long r = block.rank();
    long count = binom(n, f) * binom(f, g);
    total += r * count;
  }
  return total;
}

}  // namespace

long rank_S_iter(int n, int k, int l, int p) { return rank_blockwise(n, k, l, p, false); }

long rank_S_dagger_iter(int n, int k, int l, int p) { return rank_blockwise(n, k, l, p, true); }

long w_space_dim(int n, int k, int l, int p) {
  return pair_dim(n, k, l) - pair_dim(n, k - p, l + p);
}

SymmetricSpaceBasis symmetric_space(int n, int k, int l, int p) {
  SymmetricSpaceBasis b;
  b.n = n;
  b.k = k;
  b.l = l;
  b.p = p;
  b.basis = build_S_dagger_iter(n, k, l, p).mat.nullspace();
  return b;
}

SymmetricSpaceBasis symmetric_space_tilde(int n, int k, int l, int p) {
  SymmetricSpaceBasis b;
  b.n = n;
  b.k = k;
  b.l = l;
  b.p = p;
  b.basis = build_S_iter(n, k, l, p).mat.nullspace();
  return b;
}

std::vector<std::vector<Vec>> telescope_decompose(int n, int k, int l, int p) {
  std::vector<std::vector<Vec>> blocks;
  for (int s = 0; s < p; ++s) {
    if (k - s < 0) break;
    SymmetricSpaceBasis w = symmetric_space(n, k - s, l + s, 1);
    Matrix up = build_S_iter(n, k - s, l + s, s).mat;
    std::vector<Vec> block;
    for (const Vec& v : w.basis) block.push_back(up.apply(v));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Matrix pair_symmetrizer(int n, int k) {
  const auto& basis = pair_basis(n, k, k);
  Matrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  Rational half(1, 2);
  for (size_t j = 0; j < basis.size(); ++j) {
    int swapped = pair_index(n, k, k, basis[j].second, basis[j].first);
    m.at(static_cast<int>(j), static_cast<int>(j)) += half;
    m.at(swapped, static_cast<int>(j)) += half;
  }
  return m;
}

namespace {

// Value of dx^{(a,b)} on (e_x, e_y) for increasing (a,b) and unordered x, y.
Rational eval2(const Tuple& t, int x, int y) {
  if (t[0] == x && t[1] == y) return Rational(1);
  if (t[0] == y && t[1] == x) return Rational(-1);
  return Rational(0);
}

}  // namespace

Matrix bianchi_to_alt4(int n) {
  // Cyclic average (1/3)[w(XY)(ZW) + w(YZ)(XW) + w(ZX)(YW)] of the
  // symmetrized argument, written over the Alt^{0,4} basis.
  const auto& dom = pair_basis(n, 2, 2);
  const auto& quads = increasing_tuples(n, 4);
  Matrix m(static_cast<int>(quads.size()), static_cast<int>(dom.size()));
  Rational third(1, 3);
  Rational half(1, 2);
  for (size_t col = 0; col < dom.size(); ++col) {
    const Tuple& I = dom[col].first;
    const Tuple& J = dom[col].second;
    for (size_t row = 0; row < quads.size(); ++row) {
      int a = quads[row][0], b = quads[row][1], c = quads[row][2], d = quads[row][3];
      // sym w applied to the three cyclic argument patterns
      auto sym_eval = [&](int x1, int y1, int x2, int y2) {
        return half * (eval2(I, x1, y1) * eval2(J, x2, y2) + eval2(J, x1, y1) * eval2(I, x2, y2));
      };
      Rational v = sym_eval(a, b, c, d) + sym_eval(b, c, a, d) + sym_eval(c, a, b, d);
      m.at(static_cast<int>(row), static_cast<int>(col)) = third * v;
    }
  }
  return m;
}

LinearMap bianchi_map(int n) {
  LinearMap m;
  m.n = n;
  m.k_dom = m.k_cod = 2;
  m.l_dom = m.l_cod = 2;
  const auto& basis22 = pair_basis(n, 2, 2);
  const auto& quads = increasing_tuples(n, 4);
  // inclusion Alt^4 -> Alt^{2,2}, eta -> ((X,Y),(Z,W)) -> eta(X,Y,Z,W)
  Matrix incl(static_cast<int>(basis22.size()), static_cast<int>(quads.size()));
  for (size_t col = 0; col < quads.size(); ++col) {
    const Tuple& q = quads[col];
    for (const Tuple& I : subsets_of(q, 2)) {
      Tuple J = tuple_minus(q, I);
      int sign = merge_sign(I, J);
      incl.at(pair_index(n, 2, 2, I, J), static_cast<int>(col)) = Rational(sign);
    }
  }
  m.mat = incl * bianchi_to_alt4(n);
  return m;
}

std::vector<Vec> flip_images(int n, int k, int l) {
  if (k > l) throw std::invalid_argument("flip requires k <= l");
  SymmetricSpaceBasis mirror = symmetric_space(n, l, k, 1 + l - k);
  Matrix down = build_S_dagger_iter(n, l, k, l - k).mat;
  std::vector<Vec> images;
  for (const Vec& v : mirror.basis) images.push_back(down.apply(v));
  return images;
}

std::pair<LinearMap, LinearMap> flip_isomorphism(int n, int k, int l) {
  if (k > l) throw std::invalid_argument("flip requires k <= l");
  return {build_S_dagger_iter(n, l, k, l - k), build_S_iter(n, k, l, l - k)};
}

std::string w_proxy_name(int n, int k, int l) {
  if (k > l) {
    // mirror spaces share the proxy of the flipped index pair in 3D tables
    return "";
  }
  if (n == 3) {
    static const std::map<std::pair<int, int>, std::string> names = {
        {{0, 0}, "R"}, {{0, 1}, "V"}, {{0, 2}, "V"}, {{0, 3}, "R"},
        {{1, 1}, "S"}, {{1, 2}, "T"}, {{1, 3}, "V"},
        {{2, 2}, "S"}, {{2, 3}, "V"}, {{3, 3}, "R"}};
    auto it = names.find({k, l});
    return it == names.end() ? "" : it->second;
  }
  if (n == 4) {
    static const std::map<std::pair<int, int>, std::string> names = {
        {{0, 0}, "R"}, {{0, 1}, "V"}, {{0, 2}, "K"}, {{0, 3}, "V"}, {{0, 4}, "R"},
        {{1, 1}, "S"}, {{1, 2}, "B"}, {{1, 3}, "T"}, {{1, 4}, "V"},
        {{2, 2}, "AC"}, {{2, 3}, "N"}, {{2, 4}, "K"},
        {{3, 3}, "S"}, {{3, 4}, "V"}, {{4, 4}, "R"}};
    auto it = names.find({k, l});
    return it == names.end() ? "" : it->second;
  }
  return "";
}

long w_proxy_dim(int n, int k, int l) { return w_space_dim(n, k, l, 1); }

}  // namespace twf
