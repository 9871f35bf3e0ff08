// Named verification suites driving the property checks of every module;
// used by the command-line tool and the acceptance runner.

#ifndef TWF_SUITES_HPP
#define TWF_SUITES_HPP

#include <string>
#include <vector>

namespace twf {

struct CaseResult {
  std::string label;
  bool pass = false;
};

/// Rank thresholds of the combinatorial index maps (single index for
/// n <= nmax, block results for the double index).
std::vector<CaseResult> suite_appendixA(int nmax);

/// Matrix adjointness of the iterated shuffles for all signatures, n <= nmax.
std::vector<CaseResult> suite_adjoint(int nmax);

/// Catalogued bubble dimension tables recomputed and compared cell by cell.
std::vector<CaseResult> suite_bubble_tables();

/// Unisolvency over the family grid: all families at r = 1 for n <= nmax,
/// and degrees 2..rmax for n <= 3 (n <= 2 when r = 3).
std::vector<CaseResult> suite_unisolvency(int nmax, int rmax);

/// Two-cell conformity patches: full grid for n <= min(nmax, 3) plus the
/// four-dimensional spot checks when nmax >= 4.
std::vector<CaseResult> suite_conformity(int nmax);

bool all_pass(const std::vector<CaseResult>& results);

}  // namespace twf

#endif
