#include "pihall/catalogue.hpp"

namespace pihall {

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = {
      {"Sym(3)", {}},
      {"Sym(4)", {}},
      {"Sym(5)", {}},
      {"Sym(6)", {}},
      {"Sym(7)", {}},
      {"Sym(8)", {}},
      {"Alt(4)", {}},
      {"Alt(5)", {}},
      {"Alt(6)", {}},
      {"Alt(7)", {}},
      {"Alt(8)", {}},
      {"Cyclic(6)", {}},
      {"Cyclic(12)", {}},
      {"Cyclic(15)", {}},
      {"Cyclic(30)", {}},
      {"Cyclic(105)", {}},
      {"Dihedral(4)", {}},
      {"Dihedral(5)", {}},
      {"Dihedral(7)", {}},
      {"Dihedral(9)", {}},
      {"ElemAbelian(3,2)", {}},
      {"Extraspecial(3)", {}},
      {"Extraspecial(5)", {}},
      {"Wreath(3)", {}},
      {"Semidirect(7,3)", {"sophie-germain"}},
      {"Semidirect(13,3)", {}},
      {"Semidirect(11,5)", {"sophie-germain"}},
      {"SL2(5)", {}},
      {"SL2(7)", {}},
      {"SL2(11)", {}},
      {"SL2(13)", {}},
      {"Extraspecial(3) x Cyclic(5)", {}},
      {"Extraspecial(3) x Dihedral(5) x Dihedral(7)", {}},
      {"Sym(4) x Cyclic(5)", {}},
      {"Alt(4) x Cyclic(5)", {}},
  };
  return entries;
}

}  // namespace pihall
