#include "twf/tables.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "twf/bgg.hpp"
#include "twf/elements.hpp"

namespace twf {

namespace {

std::vector<std::string> n_labels(int lo, int hi) {
  std::vector<std::string> out;
  for (int n = lo; n <= hi; ++n) out.push_back("n=" + std::to_string(n));
  out.push_back("n>=" + std::to_string(hi + 1));
  return out;
}

const std::map<std::string, DimTable>& reference_tables() {
  static const std::map<std::string, DimTable> tables = {
      {"dim11",
       {"dim11",
        {"Alt(1,1)", "Alt(0,2)", "W(1,1)"},
        n_labels(1, 2),
        {{1, 3, 0}, {0, 3, 0}, {1, 0, 0}}}},
      {"dim22",
       {"dim22",
        {"Alt(2,2)", "Alt(1,3)", "W(2,2)", "Alt(0,4)", "W(2,2)[2]"},
        n_labels(1, 4),
        {{0, 1, 8, 10, 0}, {0, 0, 6, 10, 0}, {0, 1, 2, 0, 0}, {0, 0, 0, 5, 0}, {0, 1, 8, 5, 0}}}},
      {"dim33",
       {"dim33",
        {"Alt(3,3)", "Alt(2,4)", "W(3,3)", "Alt(1,5)", "W(3,3)[2]", "Alt(0,6)", "W(3,3)[3]"},
        n_labels(1, 6),
        {{0, 0, 1, 15, 45, 35, 0},
         {0, 0, 0, 10, 40, 35, 0},
         {0, 0, 1, 5, 5, 0, 0},
         {0, 0, 0, 0, 15, 21, 0},
         {0, 0, 1, 15, 30, 14, 0},
         {0, 0, 0, 0, 0, 7, 0},
         {0, 0, 1, 15, 45, 28, 0}}}},
      {"dim22j",
       {"dim22j",
        {"ii Alt(2,2)", "ij[2] Alt(2,2)", "ij[3] Alt(2,2)", "ij[2] W(2,2)[2]"},
        n_labels(1, 4),
        {{0, 1, 8, 10, 0}, {0, 5, 0, 10, 0}, {0, 6, 0, 0, 0}, {0, 5, 0, 5, 0}}}},
      {"dim33j",
       {"dim33j",
        {"ii Alt(3,3)", "ij[2] Alt(3,3)", "ij[3] Alt(3,3)", "ij[4] Alt(3,3)", "ii W(3,3)[2]",
         "ij[2] W(3,3)[2]", "ii W(3,3)[3]", "ij[2] W(3,3)[3]", "ij[3] W(3,3)[3]"},
        n_labels(1, 6),
        {{0, 0, 1, 15, 45, 35, 0},
         {0, 0, 10, 0, 45, 35, 0},
         {0, 0, 19, 0, 0, 35, 0},
         {0, 0, 20, 0, 0, 0, 0},
         {0, 0, 1, 15, 30, 14, 0},
         {0, 0, 10, 0, 30, 14, 0},
         {0, 0, 1, 15, 45, 28, 0},
         {0, 0, 10, 0, 45, 28, 0},
         {0, 0, 19, 0, 0, 28, 0}}}},
  };
  return tables;
}

// per-face counts of the lowest-order double-pullback construction
long alt_count(int m, int k, int l) { return bubble_dim(m, PolyFamily::Pminus, 1, k, l); }
long w_count(int m, int k, int l, int p) { return bubble_W_dim(m, PolyFamily::Pminus, 1, k, l, p); }

// per-face counts of the order-q value-trace construction at the ambient
// dimension the catalogued tables use (twice the form degree)
long j_count(int m, int ambient, int k, int l, int p, bool reduced, int q = -1) {
  if (m > ambient) return 0;
  Family fam = reduced ? Family::ijp_W : Family::ijp_alt;
  return dof_table(fam, PolyFamily::Pminus, ambient, k, l, p, 1, q)[m];
}

}  // namespace

const DimTable& reference_dim_table(const std::string& which) {
  const auto& tables = reference_tables();
  auto it = tables.find(which);
  if (it == tables.end()) throw std::invalid_argument("unknown table: " + which);
  return it->second;
}

DimTable computed_dim_table(const std::string& which) {
  DimTable t = reference_dim_table(which);  // copy labels and shape
  int cols = static_cast<int>(t.col_labels.size());
  auto fill = [&](int row, auto&& fn) {
    for (int c = 0; c < cols; ++c) t.values[row][c] = fn(c + 1);
  };
  if (which == "dim11") {
    fill(0, [](int m) { return alt_count(m, 1, 1); });
    fill(1, [](int m) { return alt_count(m, 0, 2); });
    fill(2, [](int m) { return w_count(m, 1, 1, 1); });
  } else if (which == "dim22") {
    fill(0, [](int m) { return alt_count(m, 2, 2); });
    fill(1, [](int m) { return alt_count(m, 1, 3); });
    fill(2, [](int m) { return w_count(m, 2, 2, 1); });
    fill(3, [](int m) { return alt_count(m, 0, 4); });
    fill(4, [](int m) { return w_count(m, 2, 2, 2); });
  } else if (which == "dim33") {
    fill(0, [](int m) { return alt_count(m, 3, 3); });
    fill(1, [](int m) { return alt_count(m, 2, 4); });
    fill(2, [](int m) { return w_count(m, 3, 3, 1); });
    fill(3, [](int m) { return alt_count(m, 1, 5); });
    fill(4, [](int m) { return w_count(m, 3, 3, 2); });
    fill(5, [](int m) { return alt_count(m, 0, 6); });
    fill(6, [](int m) { return w_count(m, 3, 3, 3); });
  } else if (which == "dim22j") {
    fill(0, [](int m) { return alt_count(m, 2, 2); });
    fill(1, [](int m) { return j_count(m, 4, 2, 2, 2, false); });
    fill(2, [](int m) { return j_count(m, 4, 2, 2, 3, false); });
    fill(3, [](int m) { return j_count(m, 4, 2, 2, 2, true); });
  } else if (which == "dim33j") {
    fill(0, [](int m) { return alt_count(m, 3, 3); });
    fill(1, [](int m) { return j_count(m, 6, 3, 3, 2, false); });
    fill(2, [](int m) { return j_count(m, 6, 3, 3, 3, false); });
    fill(3, [](int m) { return j_count(m, 6, 3, 3, 4, false); });
    fill(4, [](int m) { return w_count(m, 3, 3, 2); });
    fill(5, [](int m) { return j_count(m, 6, 3, 3, 2, true); });
    fill(6, [](int m) { return w_count(m, 3, 3, 3); });
    fill(7, [](int m) { return j_count(m, 6, 3, 3, 3, true, 2); });  // mixed trace order q = 2
    fill(8, [](int m) { return j_count(m, 6, 3, 3, 3, true, 3); });
  } else {
    throw std::invalid_argument("unknown table: " + which);
  }
  return t;
}

std::vector<std::string> catalog_table(const std::string& which) {
  std::vector<std::string> out;
  if (which == "threeD") {
    out.push_back("symmetric families, n = 3 (name / proxy / dim)");
    for (int k = 0; k <= 3; ++k)
      for (int l = k; l <= 3; ++l) {
        std::string proxy = w_proxy_name(3, k, l);
        std::ostringstream os;
        Family fam = (k < l) ? Family::ij_W : Family::ii_W;
        std::string nm = element_name(fam, 3, k, l, 1, 1);
        os << "(k=" << k << ", l=" << l << ")  " << (nm.empty() ? "-" : nm) << "  proxy " << proxy
           << "  dim " << w_proxy_dim(3, k, l);
        out.push_back(os.str());
      }
  } else if (which == "fourD") {
    out.push_back("symmetric-space proxies, n = 4 (proxy / dim)");
    for (int k = 0; k <= 4; ++k)
      for (int l = k; l <= 4; ++l) {
        std::ostringstream os;
        os << "(k=" << k << ", l=" << l << ")  " << w_proxy_name(4, k, l) << "  dim "
           << w_proxy_dim(4, k, l);
        out.push_back(os.str());
      }
  } else {
    throw std::invalid_argument("unknown catalog: " + which);
  }
  return out;
}

std::string render_table(const DimTable& t, const std::string& format) {
  std::ostringstream os;
  if (format == "tsv") {
    os << t.which;
    for (const auto& c : t.col_labels) os << "\t" << c;
    os << "\n";
    for (size_t i = 0; i < t.values.size(); ++i) {
      os << t.row_labels[i];
      for (long v : t.values[i]) os << "\t" << v;
      os << "\n";
    }
    return os.str();
  }
  bool md = format == "markdown";
  os << (md ? "| " : "") << t.which;
  for (const auto& c : t.col_labels) os << (md ? " | " : "  ") << c;
  os << (md ? " |" : "") << "\n";
  if (md) {
    os << "|---";
    for (size_t c = 0; c < t.col_labels.size(); ++c) os << "|---";
    os << "|\n";
  }
  for (size_t i = 0; i < t.values.size(); ++i) {
    os << (md ? "| " : "") << t.row_labels[i];
    for (long v : t.values[i]) os << (md ? " | " : "  ") << v;
    os << (md ? " |" : "") << "\n";
  }
  return os.str();
}

}  // namespace twf
