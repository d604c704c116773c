#include "hforge/chart.hpp"

#include "hforge/util.hpp"

#include <algorithm>

namespace hforge {

std::shared_ptr<Chart> Chart::make(std::string name, const std::vector<std::string>& coords,
                                   const std::vector<std::string>& transcendentals) {
  auto c = std::shared_ptr<Chart>(new Chart());
  c->name_ = std::move(name);
  auto& tab = SymbolTable::instance();
  for (auto& s : coords) {
    VarId v = tab.intern(s);
    if (std::find(c->coords_.begin(), c->coords_.end(), v) != c->coords_.end())
      throw engine_error("domain", "duplicate coordinate '" + s + "' on chart " + c->name_);
    c->coords_.push_back(v);
  }
  for (auto& s : transcendentals) c->trans_.push_back(tab.intern(s));
  return c;
}

void Chart::add_root(const std::string& root, const Poly& defining_rhs) {
  VarId v = SymbolTable::instance().intern(root);
  if (declares(v)) throw engine_error("domain", "root symbol '" + root + "' already declared");
  for (auto& t : defining_rhs.terms())
    for (auto& [w, e] : t.mono.factors)
      if (roots_.count(w))
        throw engine_error("domain", "defining polynomial of " + root + " mentions a root symbol");
  root_list_.push_back(v);
  roots_.emplace(v, defining_rhs);
}

void Chart::declare_function(const std::string& fn, int arity) { fns_[fn] = arity; }

bool Chart::declares(VarId v) const {
  return is_coordinate(v) || is_root(v) ||
         std::find(trans_.begin(), trans_.end(), v) != trans_.end();
}

bool Chart::is_coordinate(VarId v) const {
  return std::find(coords_.begin(), coords_.end(), v) != coords_.end();
}

bool Chart::is_root(VarId v) const { return roots_.count(v) != 0; }

const Poly& Chart::root_rhs(VarId v) const {
  auto it = roots_.find(v);
  if (it == roots_.end()) throw engine_error("domain", "not a root symbol");
  return it->second;
}

int Chart::function_arity(const std::string& fn) const {
  auto it = fns_.find(fn);
  return it == fns_.end() ? -1 : it->second;
}

VarId Chart::var(const std::string& name) const {
  VarId v = SymbolTable::instance().intern(name);
  if (!declares(v))
    throw engine_error("domain", "undeclared symbol '" + name + "' on chart " + name_);
  return v;
}

int Chart::coord_index(VarId v) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == v) return static_cast<int>(i);
  return -1;
}

}  // namespace hforge
