#ifndef HFORGE_SYMTAB_HPP
#define HFORGE_SYMTAB_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hforge {

using VarId = int32_t;

// Print/ordering rank of a symbol.  The monomial order is graded lex with
// variable significance a < b < q < v < p < lambda < x < t < xi (within a
// group, by index), then any other names alphabetically, then opaque-kernel
// atoms by their canonical spelling.
struct VarKey {
  uint8_t group = 0;       // 0..8 the named groups, 9 = other, 10 = atom
  std::string prefix;      // alphabetic stem ("a", "q", "zt", or atom spelling)
  uint32_t index = 0;      // numeric suffix, 0 when absent
};

// Global interning table.  VarIds are process-wide; charts select subsets.
class SymbolTable {
 public:
  static SymbolTable& instance();

  VarId intern(const std::string& name);       // coordinate/transcendental/root
  VarId intern_atom(const std::string& text);  // opaque kernel application
  bool is_atom(VarId v) const;
  const std::string& name(VarId v) const;
  const VarKey& key(VarId v) const;

  // total order used for monomial significance; negative when a before b
  int compare(VarId a, VarId b) const;

 private:
  SymbolTable() = default;
  std::vector<std::string> names_;
  std::vector<VarKey> keys_;
  std::vector<bool> atom_;
  std::unordered_map<std::string, VarId> lookup_;
};

inline bool var_before(VarId a, VarId b) {
  return SymbolTable::instance().compare(a, b) < 0;
}

}  // namespace hforge

#endif
