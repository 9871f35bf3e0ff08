#include "twf/suites.hpp"

#include <sstream>

#include "twf/bgg.hpp"
#include "twf/elements.hpp"
#include "twf/tables.hpp"

namespace twf {

namespace {

std::string fmt(const char* head, std::initializer_list<int> args) {
  std::ostringstream os;
  os << head;
  for (int a : args) os << " " << a;
  return os.str();
}

}  // namespace

std::vector<CaseResult> suite_appendixA(int nmax) {
  std::vector<CaseResult> out;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k)
      for (int p = 1; p <= n - k; ++p) {
        Matrix m = s_matrix(n, k, p);
        bool inj = m.rank() == m.cols();
        bool sur = m.rank() == m.rows();
        bool ok = (inj == (n >= 2 * k + p)) && (sur == (n <= 2 * k + p));
        out.push_back({fmt("index-map ranks n k p:", {n, k, p}), ok});
      }
  // double-index blocks, one representative per (|F|,|G|) shape
  for (int n = 2; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int p = 1; p <= l; ++p) {
          bool ok = true;
          for (int g = 0; g <= std::min(k, l); ++g) {
            int f = k + l - g;
            if (f > n) continue;
            Tuple F, G;
            for (int i = 1; i <= f; ++i) F.push_back(i);
            for (int i = 1; i <= g; ++i) G.push_back(i);
            if (y_block(n, k, l, F, G).empty() && y_block(n, k + p, l - p, F, G).empty())
              continue;
            Matrix m = s_block_matrix(n, k, l, p, F, G);
            if (k + p <= l && m.rank() != m.cols()) ok = false;
            if (k + p >= l && m.rank() != m.rows()) ok = false;
          }
          out.push_back({fmt("pair-map blocks n k l p:", {n, k, l, p}), ok});
        }
  return out;
}

std::vector<CaseResult> suite_adjoint(int nmax) {
  std::vector<CaseResult> out;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l)
        for (int p = 1; p <= std::max(k, l); ++p) {
          if (k - p < 0 || l + p > n) continue;
          Matrix down = build_S_dagger_iter(n, k, l, p).mat;
          Matrix up = build_S_iter(n, k - p, l + p, p).mat;
          out.push_back({fmt("adjoint n k l p:", {n, k, l, p}), down == up.transpose()});
        }
  return out;
}

std::vector<CaseResult> suite_bubble_tables() {
  std::vector<CaseResult> out;
  for (const char* which : {"dim11", "dim22", "dim33", "dim22j", "dim33j"}) {
    const DimTable& ref = reference_dim_table(which);
    DimTable got = computed_dim_table(which);
    bool ok = ref.values == got.values;
    out.push_back({std::string("table ") + which, ok});
  }
  return out;
}

namespace {

void run_unisolvency_case(std::vector<CaseResult>& out, Family fam, PolyFamily pf, int n, int k,
                          int l, int p, int r) {
  ElementSpec spec;
  try {
    spec = build_element(fam, pf, n, k, l, p, r);
  } catch (const std::invalid_argument&) {
    return;
  }
  if (spec.expected_dim == 0) return;
  std::ostringstream label;
  label << family_name(fam) << " n=" << n << " k=" << k << " l=" << l << " p=" << p
        << " r=" << r << (pf == PolyFamily::Pr ? " full" : "") << " dim=" << spec.expected_dim;
  out.push_back({label.str(), unisolvency_check(spec).pass});
}

}  // namespace

std::vector<CaseResult> suite_unisolvency(int nmax, int rmax) {
  std::vector<CaseResult> out;
  for (int n = 2; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        for (Family fam : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W})
          run_unisolvency_case(out, fam, PolyFamily::Pminus, n, k, l, 1, 1);
        for (int p = 2; p <= n; ++p)
          for (Family fam : {Family::ijp_alt, Family::ijp_W, Family::ii_Wp})
            run_unisolvency_case(out, fam, PolyFamily::Pminus, n, k, l, p, 1);
        for (int p = 1; 2 * p <= n; ++p)
          run_unisolvency_case(out, Family::const_W, PolyFamily::Pminus, n, k, l, p, 1);
      }
  for (int r = 2; r <= rmax; ++r) {
    int ncap = r >= 3 ? 2 : 3;
    for (int n = 2; n <= std::min(nmax, ncap); ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l)
          for (PolyFamily pf : {PolyFamily::Pr_minus, PolyFamily::Pr}) {
            for (Family fam : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W})
              run_unisolvency_case(out, fam, pf, n, k, l, 1, r);
            for (int p = 2; p <= n; ++p)
              for (Family fam : {Family::ijp_alt, Family::ijp_W, Family::ii_Wp})
                run_unisolvency_case(out, fam, pf, n, k, l, p, r);
          }
  }
  return out;
}

namespace {

void run_conformity_case(std::vector<CaseResult>& out, Family fam, int n, int k, int l, int p,
                         const std::string& tag) {
  ElementSpec spec;
  try {
    spec = build_element(fam, PolyFamily::Pminus, n, k, l, p);
  } catch (const std::invalid_argument&) {
    return;
  }
  if (spec.expected_dim == 0) return;
  ConformityReport rep = conformity_check(spec, two_cell_patch(n));
  std::ostringstream label;
  label << family_name(fam) << " n=" << n << " k=" << k << " l=" << l << " p=" << p;
  if (!tag.empty()) label << " (" << tag << ")";
  out.push_back({label.str(), rep.pass});
}

}  // namespace

std::vector<CaseResult> suite_conformity(int nmax) {
  std::vector<CaseResult> out;
  // named catalogue checks
  run_conformity_case(out, Family::ii_W, 3, 1, 1, 1, "Regge tt");
  run_conformity_case(out, Family::ij_W, 3, 2, 2, 1, "HHJ nn");
  run_conformity_case(out, Family::ijp_W, 3, 2, 1, 2, "MCS nt");
  run_conformity_case(out, Family::ij_W, 3, 1, 2, 1, "HLZ edge tn");
  for (int n = 2; n <= std::min(nmax, 3); ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        for (Family fam : {Family::ii_alt, Family::ii_W, Family::ij_alt, Family::ij_W})
          run_conformity_case(out, fam, n, k, l, 1, "");
        for (int p = 2; p <= n; ++p)
          for (Family fam : {Family::ijp_alt, Family::ijp_W})
            run_conformity_case(out, fam, n, k, l, p, "");
      }
  if (nmax >= 4) {
    run_conformity_case(out, Family::ij_W, 4, 3, 3, 1, "HHJ 4D");
    run_conformity_case(out, Family::ii_W, 4, 2, 2, 1, "curvature 4D");
    run_conformity_case(out, Family::ijp_W, 4, 2, 2, 2, "order-2 trace 4D");
    run_conformity_case(out, Family::const_W, 4, 2, 2, 2, "constant 4D");
    run_conformity_case(out, Family::ij_W, 4, 1, 1, 1, "Regge 4D");
  }
  return out;
}

bool all_pass(const std::vector<CaseResult>& results) {
  for (const CaseResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace twf
