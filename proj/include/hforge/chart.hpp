#ifndef HFORGE_CHART_HPP
#define HFORGE_CHART_HPP

#include "hforge/poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hforge {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

// Chart of a complex manifold plus the ambient symbols: ordered coordinates,
// root symbols p with p^2 = D(coords), transcendental parameters, and the
// declared opaque function symbols.
class Chart : public std::enable_shared_from_this<Chart> {
 public:
  static std::shared_ptr<Chart> make(std::string name,
                                     const std::vector<std::string>& coords,
                                     const std::vector<std::string>& transcendentals = {});

  // defining polynomial D must be monic-quadratic-compatible: the stored
  // relation is root^2 = D where D contains no root symbols
  void add_root(const std::string& root, const Poly& defining_rhs);
  void declare_function(const std::string& fn, int arity);

  const std::string& name() const { return name_; }
  const std::vector<VarId>& coords() const { return coords_; }
  const std::vector<VarId>& roots() const { return root_list_; }
  const std::vector<VarId>& transcendentals() const { return trans_; }

  bool declares(VarId v) const;
  bool is_coordinate(VarId v) const;
  bool is_root(VarId v) const;
  const Poly& root_rhs(VarId v) const;
  int function_arity(const std::string& fn) const;  // -1 when undeclared
  VarId var(const std::string& name) const;         // declared symbol lookup

  int dim() const { return static_cast<int>(coords_.size()); }
  int coord_index(VarId v) const;

 private:
  Chart() = default;
  std::string name_;
  std::vector<VarId> coords_;
  std::vector<VarId> trans_;
  std::vector<VarId> root_list_;
  std::map<VarId, Poly> roots_;
  std::map<std::string, int> fns_;
};

}  // namespace hforge

#endif
