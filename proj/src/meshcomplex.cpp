#include "twf/meshcomplex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twf {

SimplicialComplex::SimplicialComplex(int cell_dim, std::vector<Vec> verts,
                                     std::vector<Tuple> cells)
    : dim_(cell_dim), verts_(std::move(verts)), cells_(std::move(cells)) {
  if (verts_.empty()) throw std::invalid_argument("mesh has no vertices");
  ambient_ = static_cast<int>(verts_[0].size());
  for (const Vec& v : verts_)
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("inconsistent vertex coordinates");
  std::set<Tuple> seen;
  for (Tuple& c : cells_) {
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != dim_ + 1)
      throw std::invalid_argument("cell with wrong vertex count");
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw std::invalid_argument("cell with repeated vertex");
    for (int v : c)
      if (v < 0 || v >= static_cast<int>(verts_.size()))
        throw std::invalid_argument("cell vertex id out of range");
    if (!seen.insert(c).second) throw std::invalid_argument("duplicate cell");
    // affine degeneracy check
    std::vector<Vec> coords;
    for (int v : c) coords.push_back(verts_[v]);
    Simplex probe(std::move(coords));  // throws "degenerate simplex"
  }

  faces_.assign(dim_ + 1, {});
  interior_.assign(dim_ + 1, {});
  std::map<Tuple, long> facet_count;
  for (const Tuple& c : cells_)
    for (const Tuple& f : subsets_of(c, dim_)) facet_count[f]++;
  for (const auto& [f, cnt] : facet_count)
    if (cnt > 2) throw std::invalid_argument("non-manifold facet shared by more than two cells");

  std::set<Tuple> boundary_vertices_in;  // faces inside boundary facets
  std::vector<Tuple> boundary_facets;
  for (const auto& [f, cnt] : facet_count)
    if (cnt == 1) boundary_facets.push_back(f);

  for (int m = 0; m <= dim_; ++m) {
    std::set<Tuple> unique;
    for (const Tuple& c : cells_)
      for (const Tuple& f : subsets_of(c, m + 1)) unique.insert(f);
    faces_[m].assign(unique.begin(), unique.end());
    interior_[m].assign(faces_[m].size(), true);
    if (m < dim_) {
      for (size_t i = 0; i < faces_[m].size(); ++i) {
        for (const Tuple& bf : boundary_facets)
          if (tuple_subset(faces_[m][i], bf)) {
            interior_[m][i] = false;
            break;
          }
      }
    }
  }
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f(dim_ + 1);
  for (int m = 0; m <= dim_; ++m) f[m] = static_cast<long>(faces_[m].size());
  return f;
}

std::vector<long> SimplicialComplex::f_interior() const {
  std::vector<long> f(dim_ + 1, 0);
  for (int m = 0; m <= dim_; ++m)
    for (bool b : interior_[m])
      if (b) f[m]++;
  return f;
}

bool SimplicialComplex::is_closed() const {
  std::map<Tuple, long> facet_count;
  for (const Tuple& c : cells_)
    for (const Tuple& f : subsets_of(c, dim_)) facet_count[f]++;
  for (const auto& [f, cnt] : facet_count)
    if (cnt != 2) return false;
  return true;
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

SimplicialComplex load_complex(std::istream& in) {
  std::vector<std::string> tok = tokenize(in);
  size_t at = 0;
  auto expect = [&](const std::string& word) {
    if (at >= tok.size() || tok[at] != word)
      throw std::invalid_argument("mesh document: expected '" + word + "'");
    ++at;
  };
  auto next_long = [&]() {
    if (at >= tok.size()) throw std::invalid_argument("mesh document: unexpected end");
    return std::stol(tok[at++]);
  };
  expect("dim");
  int dim = static_cast<int>(next_long());
  expect("vertices");
  long nv = next_long();
  if (nv <= 0) throw std::invalid_argument("mesh document: no vertices");
  // coordinate width is inferred from the token layout: all vertex rows have
  // the same length, and the block is followed by the 'cells' keyword
  size_t block_start = at;
  size_t cells_at = block_start;
  while (cells_at < tok.size() && tok[cells_at] != "cells") ++cells_at;
  if (cells_at == tok.size()) throw std::invalid_argument("mesh document: missing 'cells'");
  size_t coords = cells_at - block_start;
  if (coords % nv != 0) throw std::invalid_argument("mesh document: ragged vertex block");
  int ambient = static_cast<int>(coords / nv);
  std::vector<Vec> verts(nv, Vec(ambient));
  for (long i = 0; i < nv; ++i)
    for (int j = 0; j < ambient; ++j) verts[i][j] = Rational::from_string(tok[at++]);
  expect("cells");
  long nc = next_long();
  std::vector<Tuple> cells(nc, Tuple(dim + 1));
  for (long i = 0; i < nc; ++i)
    for (int j = 0; j <= dim; ++j) cells[i][j] = static_cast<int>(next_long());
  return SimplicialComplex(dim, std::move(verts), std::move(cells));
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open mesh file: " + path);
  return load_complex(in);
}

void save_complex(const SimplicialComplex& cx, std::ostream& out) {
  out << "dim " << cx.dim() << "\n";
  out << "vertices " << cx.vertices().size() << "\n";
  for (const Vec& v : cx.vertices()) {
    for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j].str();
    out << "\n";
  }
  out << "cells " << cx.cells().size() << "\n";
  for (const Tuple& c : cx.cells()) {
    for (size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j];
    out << "\n";
  }
}

GlobalDofCount global_dof_count(const SimplicialComplex& cx, Family family, PolyFamily pf, int k,
                                int l, int p, int r) {
  GlobalDofCount out;
  std::map<int, long> counts = dof_table(family, pf, cx.dim(), k, l, p, r);
  out.by_dim.assign(cx.dim() + 1, 0);
  std::vector<long> f = cx.f_vector();
  for (int m = 0; m <= cx.dim(); ++m) {
    out.by_dim[m] = counts[m] * f[m];
    out.total += out.by_dim[m];
  }
  return out;
}

DistributionCount distribution_dim(const SimplicialComplex& cx, int k, int l, int p) {
  // the kernel space of the upward map exists for k >= l - p + 1; the
  // functional counts degenerate gracefully through vanishing binomials
  if (k < l - p + 1) throw std::invalid_argument("distributional spaces require k >= l - p + 1");
  DistributionCount out;
  int n = cx.dim();
  int fd = n - k;
  if (fd < 0 || fd > n) return out;
  for (int s = 0; s < p; ++s) out.per_face += binom(fd, s) * binom(k, k - l + s);
  std::vector<long> fi = cx.f_interior();
  out.face_count = fi[fd];
  out.total = out.per_face * out.face_count;
  return out;
}

long euler_residual(const SimplicialComplex& cx, int l, int p) {
  int n = cx.dim();
  long sum = 0;
  for (int theta = 0; theta <= l + p - 1; ++theta) {
    long d = global_dof_count(cx, Family::ijp_W, PolyFamily::Pminus, theta, l, p, 1).total;
    sum += (theta % 2 == 0) ? d : -d;
  }
  for (int k = l + 1; k <= n; ++k) {
    long d = distribution_dim(cx, k, l + p, p).total;
    int sign = ((k + p - 1) % 2 == 0) ? 1 : -1;
    sum += sign * d;
  }
  long rhs = binom(n, l) + ((p - 1) % 2 == 0 ? 1 : -1) * binom(n, l + p);
  return sum - rhs;
}

long skeletal_identity_residual(const SimplicialComplex& cx, int l, int p) {
  int n = cx.dim();
  int k = l + p;
  std::vector<long> f = cx.f_vector();
  std::vector<long> fi = cx.f_interior();
  auto fat = [&](int theta) { return theta >= 0 && theta <= n ? f[theta] : 0L; };
  auto fiat = [&](int theta) { return theta >= 0 && theta <= n ? fi[theta] : 0L; };
  long first = 0;
  for (int s = 0; s < p; ++s)
    for (int theta = 0; theta <= k; ++theta) {
      long term = binom(theta, s) * binom(n - theta, n - l - s) * fat(theta);
      first += (theta % 2 == 0) ? term : -term;
    }
  long second = 0;
  for (int s = 0; s < p; ++s)
    for (int theta = 0; theta <= n - l; ++theta) {
      long term = binom(theta, s) * binom(n - theta, k - s) * fiat(theta);
      second += (theta % 2 == 0) ? term : -term;
    }
  int sign = ((n + p - 1) % 2 == 0) ? 1 : -1;
  long lhs = first + sign * second;
  long rhs = binom(n, l) + ((p - 1) % 2 == 0 ? 1 : -1) * binom(n, k);
  return lhs - rhs;
}

long dehn_sommerville_residual(const SimplicialComplex& cx, int p) {
  if (!cx.is_closed()) throw std::invalid_argument("Dehn-Sommerville audit needs a closed sphere");
  int d = cx.dim() + 1;  // polytope dimension
  if (p < 0 || p > d) throw std::invalid_argument("p out of range");
  std::vector<long> f = cx.f_vector();
  auto fat = [&](int i) {
    if (i == -1) return 1L;
    if (i >= 0 && i < static_cast<int>(f.size())) return f[i];
    return 0L;
  };
  long lhs = 0;
  for (int i = -1; i <= p - 1; ++i) {
    long term = binom(d - i - 1, d - p) * fat(i);
    lhs += ((d + i) % 2 == 0) ? term : -term;
  }
  long rhs = 0;
  for (int i = -1; i <= d - p - 1; ++i) {
    long term = binom(d - i - 1, p) * fat(i);
    rhs += (((i % 2) + 2) % 2 == 0) ? term : -term;
  }
  return rhs - lhs;
}

SimplicialComplex single_simplex_mesh(int n) {
  std::vector<Vec> verts(n + 1, Vec(n));
  for (int i = 1; i <= n; ++i) verts[i][i - 1] = Rational(1);
  Tuple cell;
  for (int v = 0; v <= n; ++v) cell.push_back(v);
  return SimplicialComplex(n, std::move(verts), {cell});
}

SimplicialComplex two_cell_mesh(int n) {
  std::vector<Vec> verts(n + 2, Vec(n));
  for (int i = 1; i <= n; ++i) verts[i][i - 1] = Rational(1);
  verts[n + 1][n - 1] = Rational(-1);
  Tuple c1, c2;
  for (int v = 0; v <= n; ++v) c1.push_back(v);
  for (int v = 0; v <= n - 1; ++v) c2.push_back(v);
  c2.push_back(n + 1);
  return SimplicialComplex(n, std::move(verts), {c1, c2});
}

SimplicialComplex starred_simplex_mesh(int n) {
  std::vector<Vec> verts(n + 2, Vec(n));
  for (int i = 1; i <= n; ++i) verts[i][i - 1] = Rational(1);
  for (int j = 0; j < n; ++j) verts[n + 1][j] = Rational(1, n + 1);  // barycenter
  std::vector<Tuple> cells;
  for (int skip = 0; skip <= n; ++skip) {
    Tuple c;
    for (int v = 0; v <= n; ++v)
      if (v != skip) c.push_back(v);
    c.push_back(n + 1);
    cells.push_back(c);
  }
  return SimplicialComplex(n, std::move(verts), std::move(cells));
}

SimplicialComplex cone_mesh(const SimplicialComplex& cx) {
  int a = cx.ambient();
  std::vector<Vec> verts;
  for (const Vec& v : cx.vertices()) {
    Vec w = v;
    w.push_back(Rational(0));
    verts.push_back(std::move(w));
  }
  Vec apex(a + 1);
  apex[a] = Rational(1);
  verts.push_back(std::move(apex));
  int apex_id = static_cast<int>(verts.size()) - 1;
  std::vector<Tuple> cells;
  for (const Tuple& c : cx.cells()) {
    Tuple nc = c;
    nc.push_back(apex_id);
    cells.push_back(nc);
  }
  return SimplicialComplex(cx.dim() + 1, std::move(verts), std::move(cells));
}

SimplicialComplex cone_completion_mesh(const SimplicialComplex& cx) {
  int a = cx.ambient();
  std::vector<Vec> verts;
  for (const Vec& v : cx.vertices()) {
    Vec w = v;
    w.push_back(Rational(0));
    verts.push_back(std::move(w));
  }
  Vec apex(a + 1);
  apex[a] = Rational(1);
  verts.push_back(std::move(apex));
  int apex_id = static_cast<int>(verts.size()) - 1;
  std::vector<Tuple> cells = cx.cells();
  int fd = cx.dim() - 1;
  for (size_t i = 0; i < cx.faces(fd).size(); ++i) {
    if (cx.is_interior(fd, static_cast<int>(i))) continue;
    Tuple c = cx.faces(fd)[i];
    c.push_back(apex_id);
    cells.push_back(std::move(c));
  }
  return SimplicialComplex(cx.dim(), std::move(verts), std::move(cells));
}

SimplicialComplex simplex_boundary_mesh(int d) {
  // boundary of the reference (d+1)-simplex
  int n = d + 1;
  std::vector<Vec> verts(n + 1, Vec(n));
  for (int i = 1; i <= n; ++i) verts[i][i - 1] = Rational(1);
  std::vector<Tuple> cells;
  for (int skip = 0; skip <= n; ++skip) {
    Tuple c;
    for (int v = 0; v <= n; ++v)
      if (v != skip) c.push_back(v);
    cells.push_back(c);
  }
  return SimplicialComplex(d, std::move(verts), std::move(cells));
}

SimplicialComplex octahedron_boundary_mesh() {
  std::vector<Vec> verts(6, Vec(3));
  verts[0][0] = Rational(1);
  verts[1][0] = Rational(-1);
  verts[2][1] = Rational(1);
  verts[3][1] = Rational(-1);
  verts[4][2] = Rational(1);
  verts[5][2] = Rational(-1);
  std::vector<Tuple> cells;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) cells.push_back({x, y, z});
  return SimplicialComplex(2, std::move(verts), std::move(cells));
}

}  // namespace twf
