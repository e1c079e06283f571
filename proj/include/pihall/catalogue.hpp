#pragma once

#include <string>
#include <vector>

namespace pihall {

struct CatalogueEntry {
  std::string name;  // canonical expression, accepted by parse_expr
  std::vector<std::string> tags;
};

// The fixed desk-scale collection the verification suites sweep over.
// Order and content only change together with kCatalogueVersion.
const std::vector<CatalogueEntry>& catalogue();

}  // namespace pihall
