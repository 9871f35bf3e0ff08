// Reference dimension-count tables and the catalog views the CLI renders.
// The embedded integers are the regression baseline for the --check mode.

#ifndef TWF_TABLES_HPP
#define TWF_TABLES_HPP

#include <string>
#include <vector>

namespace twf {

struct DimTable {
  std::string which;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<long>> values;
};

/// Embedded expected values for {dim11, dim22, dim33, dim22j, dim33j}.
const DimTable& reference_dim_table(const std::string& which);

/// The same table recomputed from the bubble/element machinery.
DimTable computed_dim_table(const std::string& which);

/// Catalog views: per-(k,l) element names of the symmetric families in 3D,
/// and the proxy table in 4D.
std::vector<std::string> catalog_table(const std::string& which);  // threeD | fourD

std::string render_table(const DimTable& t, const std::string& format);

}  // namespace twf

#endif
