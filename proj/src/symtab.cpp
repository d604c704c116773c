#include "hforge/symtab.hpp"

#include "hforge/util.hpp"

#include <cctype>

namespace hforge {

namespace {

uint8_t group_of(const std::string& prefix) {
  if (prefix == "a") return 0;
  if (prefix == "b") return 1;
  if (prefix == "q") return 2;
  if (prefix == "v") return 3;
  if (prefix == "p") return 4;
  if (prefix == "lambda") return 5;
  if (prefix == "x") return 6;
  if (prefix == "t") return 7;
  if (prefix == "xi") return 8;
  return 9;
}

VarKey make_key(const std::string& name) {
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  VarKey k;
  k.prefix = name.substr(0, i);
  k.index = (i < name.size()) ? static_cast<uint32_t>(std::stoul(name.substr(i))) : 0;
  k.group = group_of(k.prefix);
  return k;
}

}  // namespace

SymbolTable& SymbolTable::instance() {
  static SymbolTable tab;
  return tab;
}

VarId SymbolTable::intern(const std::string& name) {
  auto it = lookup_.find(name);
  if (it != lookup_.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  keys_.push_back(make_key(name));
  atom_.push_back(false);
  lookup_.emplace(name, id);
  return id;
}

VarId SymbolTable::intern_atom(const std::string& text) {
  auto it = lookup_.find(text);
  if (it != lookup_.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(text);
  VarKey k;
  k.group = 10;
  k.prefix = text;
  k.index = 0;
  keys_.push_back(std::move(k));
  atom_.push_back(true);
  lookup_.emplace(text, id);
  return id;
}

bool SymbolTable::is_atom(VarId v) const { return atom_.at(v); }
const std::string& SymbolTable::name(VarId v) const { return names_.at(v); }
const VarKey& SymbolTable::key(VarId v) const { return keys_.at(v); }

int SymbolTable::compare(VarId a, VarId b) const {
  if (a == b) return 0;
  const VarKey& ka = keys_.at(a);
  const VarKey& kb = keys_.at(b);
  if (ka.group != kb.group) return ka.group < kb.group ? -1 : 1;
  if (ka.group >= 9) {
    int c = ka.prefix.compare(kb.prefix);
    if (c != 0) return c;
  }
  if (ka.index != kb.index) return ka.index < kb.index ? -1 : 1;
  return 0;
}

std::string rational_to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) {
    s += "/";
    s += q.get_den().get_str();
  }
  return s;
}

}  // namespace hforge
