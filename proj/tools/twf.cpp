// Command-line front end: element inspection, table reproduction,
// verification suites, and mesh audits. Exit code 0 iff every checked
// identity holds.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twf/bgg.hpp"
#include "twf/elements.hpp"
#include "twf/meshcomplex.hpp"
#include "twf/suites.hpp"
#include "twf/tables.hpp"

using namespace twf;

namespace {

PolyFamily parse_pf(const std::string& s) {
  if (s == "Pminus") return PolyFamily::Pminus;
  if (s == "Pr_minus") return PolyFamily::Pr_minus;
  if (s == "Pr") return PolyFamily::Pr;
  throw CLI::ValidationError("--pf must be one of Pminus, Pr_minus, Pr");
}

int cmd_element(const std::string& family, const std::string& pf_name, int n, int k, int l, int p,
                int r, int q, const std::string& format) {
  ElementSpec spec;
  try {
    spec = build_element(family_from_string(family), parse_pf(pf_name), n, k, l, p, r, q);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  UnisolvencyReport rep = unisolvency_check(spec);
  auto counts = dof_table(spec.family, spec.pf, n, k, l, spec.p, spec.r, spec.q);
  std::string verdict = rep.pass ? "PASS" : "FAIL";
  if (format == "tsv") {
    std::cout << family << "\t" << n << "\t" << k << "\t" << l << "\t" << spec.p << "\t" << spec.r
              << "\t" << spec.expected_dim << "\t";
    for (int m = 0; m <= n; ++m) std::cout << counts[m] << (m < n ? "," : "");
    std::cout << "\t" << verdict << "\n";
  } else {
    if (!spec.name.empty()) std::cout << spec.name << ": ";
    std::cout << "family " << family << " (n=" << n << ", k=" << k << ", l=" << l
              << ", p=" << spec.p << ", r=" << spec.r;
    if (spec.q != spec.p) std::cout << ", q=" << spec.q;
    std::cout << ")\n";
    std::cout << "shape dimension " << spec.expected_dim << "\n";
    std::cout << "dofs per face dimension:";
    for (int m = 0; m <= n; ++m) std::cout << " " << m << ":" << counts[m];
    std::cout << "\n";
    std::string proxy = w_proxy_name(n, k, l);
    if (!proxy.empty() && spec.family != Family::ii_alt && spec.family != Family::ij_alt &&
        spec.family != Family::ijp_alt)
      std::cout << "proxy " << proxy << "\n";
    std::cout << "unisolvency " << verdict;
    if (rep.has_det) std::cout << " (det " << rep.det.str() << ")";
    std::cout << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_table(const std::string& which, bool check, const std::string& format) {
  if (which == "threeD" || which == "fourD") {
    for (const std::string& line : catalog_table(which)) std::cout << line << "\n";
    return 0;
  }
  DimTable got = computed_dim_table(which);
  std::cout << render_table(got, format);
  if (check) {
    const DimTable& ref = reference_dim_table(which);
    bool ok = ref.values == got.values;
    std::cout << "check " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

int report(const std::vector<CaseResult>& results) {
  long failed = 0;
  for (const CaseResult& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.label << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " cases passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, int nmax, int rmax) {
  std::vector<CaseResult> results;
  auto extend = [&](std::vector<CaseResult> more) {
    results.insert(results.end(), more.begin(), more.end());
  };
  if (suite == "appendixA" || suite == "all") extend(suite_appendixA(std::min(nmax, 6)));
  if (suite == "adjoint" || suite == "all") extend(suite_adjoint(std::min(nmax, 6)));
  if (suite == "bubbles" || suite == "all") extend(suite_bubble_tables());
  if (suite == "unisolvency" || suite == "all") extend(suite_unisolvency(std::min(nmax, 4), rmax));
  if (suite == "conformity" || suite == "all") extend(suite_conformity(std::min(nmax, 4)));
  if (results.empty()) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  return report(results);
}

int cmd_euler(const std::string& mesh_path, int l, int p, bool all) {
  SimplicialComplex cx = load_complex_file(mesh_path);
  int n = cx.dim();
  std::cout << "mesh\tn\tl\tp\tfe_dofs\tdistributional\tresidual\tverdict\n";
  bool ok = true;
  auto run_one = [&](int ll, int pp) {
    long fe = 0;
    for (int theta = 0; theta <= ll + pp - 1; ++theta)
      fe += global_dof_count(cx, Family::ijp_W, PolyFamily::Pminus, theta, ll, pp).total;
    long dist = 0;
    for (int k = ll + 1; k <= n; ++k) dist += distribution_dim(cx, k, ll + pp, pp).total;
    long res = euler_residual(cx, ll, pp);
    if (res != 0) ok = false;
    std::cout << mesh_path << "\t" << n << "\t" << ll << "\t" << pp << "\t" << fe << "\t" << dist
              << "\t" << res << "\t" << (res == 0 ? "PASS" : "FAIL") << "\n";
  };
  if (all) {
    for (int ll = 0; ll <= n; ++ll)
      for (int pp = 1; ll + pp <= n; ++pp) run_one(ll, pp);
  } else {
    run_one(l, p);
  }
  return ok ? 0 : 1;
}

int cmd_proxies(int n) {
  for (const std::string& line : catalog_table(n == 3 ? "threeD" : "fourD"))
    std::cout << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of finite element double forms"};
  app.require_subcommand(1);

  std::string family = "ii_W", pf = "Pminus", format = "text", which = "dim11";
  std::string suite = "all", mesh_path;
  int n = 3, k = 1, l = 1, p = 1, r = 1, q = -1, nmax = 4, rmax = 2;
  bool check = false, all_lp = false;

  CLI::App* element = app.add_subcommand("element", "inspect one element instance");
  element->add_option("--family", family, "family name")->required();
  element->add_option("--n", n)->required();
  element->add_option("--k", k)->required();
  element->add_option("--l", l)->required();
  element->add_option("--p", p);
  element->add_option("--r", r);
  element->add_option("--q", q, "trace order of the mixed variant");
  element->add_option("--pf", pf, "polynomial family: Pminus, Pr_minus, Pr");
  element->add_option("--format", format, "text, tsv, or markdown");

  CLI::App* table = app.add_subcommand("table", "print a reference dimension table");
  table->add_option("--which", which, "dim11|dim22|dim33|dim22j|dim33j|threeD|fourD")->required();
  table->add_flag("--check", check, "compare against the embedded expected values");
  table->add_option("--format", format);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "appendixA|adjoint|bubbles|unisolvency|conformity|all");
  verify->add_option("--nmax", nmax);
  verify->add_option("--rmax", rmax);

  CLI::App* euler = app.add_subcommand("euler", "Euler characteristic audit of a mesh");
  euler->add_option("--mesh", mesh_path, "mesh document path")->required();
  euler->add_option("--l", l, "value degree of the sequence");
  euler->add_option("--p", p, "order of the connecting map");
  euler->add_flag("--all", all_lp, "run every valid (l, p) pair");

  CLI::App* proxies = app.add_subcommand("proxies", "print the proxy catalog");
  proxies->add_option("--n", n, "3 or 4");

  CLI11_PARSE(app, argc, argv);

  try {
    if (element->parsed()) return cmd_element(family, pf, n, k, l, p, r, q, format);
    if (table->parsed()) return cmd_table(which, check, format);
    if (verify->parsed()) return cmd_verify(suite, nmax, rmax);
    if (euler->parsed()) return cmd_euler(mesh_path, l, p, all_lp);
    if (proxies->parsed()) return cmd_proxies(n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
