#ifndef HFORGE_GEOM_HPP
#define HFORGE_GEOM_HPP

#include "hforge/linalg.hpp"

#include <map>
#include <memory>

namespace hforge {

// Tangent-frame abstraction: coordinate bases have vanishing structure
// functions; invariant frames (the sl2 coframe chart) supply both the
// structure constants and the directional derivative on scalars.
class BasisI {
 public:
  virtual ~BasisI() = default;
  virtual const ChartPtr& chart() const = 0;
  virtual int dim() const = 0;
  virtual Fe dir(int i, const Fe& f) const = 0;         // B_i acting on a scalar
  virtual Fe structure(int i, int j, int k) const = 0;  // [B_i, B_j]^k
  virtual bool coordinate() const = 0;
  virtual std::string vec_name(int i) const = 0;
  virtual std::string form_name(int i) const = 0;
};
using BasisPtr = std::shared_ptr<const BasisI>;

BasisPtr coordinate_basis(const ChartPtr& chart);

struct Vec {
  BasisPtr basis;
  FeVector comp;

  static Vec zero(const BasisPtr& b);
  static Vec unit(const BasisPtr& b, int i);
  Fe operator()(const Fe& f) const;  // directional derivative
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Fe& f) const;
  bool is_zero() const;
};

// alternating k-linear form, components on strictly increasing index tuples
struct KForm {
  BasisPtr basis;
  int k = 0;
  std::map<std::vector<int>, Fe> comp;

  static KForm zero(const BasisPtr& b, int k);
  static KForm unit(const BasisPtr& b, int i);  // the i-th coframe element
  Fe value(const std::vector<int>& idx) const;  // any index list, with sign
  Fe operator()(const std::vector<Vec>& args) const;
  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm scaled(const Fe& f) const;
  bool is_zero() const;
  void set(std::vector<int> idx, const Fe& v);  // sorts, applies sign
};

KForm wedge(const KForm& a, const KForm& b);
KForm exterior_derivative(const KForm& w);
KForm interior(const Vec& x, const KForm& w);
Vec lie_bracket(const Vec& x, const Vec& y);
KForm lie_derivative(const KForm& w, const Vec& x);   // Cartan formula
Vec lie_derivative(const Vec& y, const Vec& x);       // [x, y]

// symmetric 2-tensor (metric); components on i <= j pairs
struct Sym2 {
  BasisPtr basis;
  std::map<std::pair<int, int>, Fe> comp;

  static Sym2 zero(const BasisPtr& b);
  Fe value(int i, int j) const;
  Fe operator()(const Vec& x, const Vec& y) const;
  Sym2 operator+(const Sym2& o) const;
  Sym2 operator-(const Sym2& o) const;
  Sym2 operator-() const;
  Sym2 scaled(const Fe& f) const;
  bool is_zero() const;
  void add(int i, int j, const Fe& v);
  FeMatrix matrix() const;
};

Sym2 odot(const KForm& a, const KForm& b);  // symmetric product of 1-forms
Sym2 lie_derivative(const Sym2& g, const Vec& x);

// dual coframe of a full frame: E^a(E_b) = delta, via an exact linear solve
std::vector<KForm> dual_coframe(const std::vector<Vec>& frame);

// coordinate chart transition: `fwd` expresses each old coordinate (and root
// image) as a field element on the new chart.  Covariant tensors pull back;
// vectors push through the inverse Jacobian.
struct ChartMap {
  ChartPtr from, to;
  std::map<VarId, Fe> fwd;  // old symbol -> expression on `to`
  Fe apply(const Fe& f) const;
};

Vec change_chart(const Vec& v, const ChartMap& map);
KForm change_chart(const KForm& w, const ChartMap& map);
Sym2 change_chart(const Sym2& g, const ChartMap& map);

struct CurvatureInvariants {
  Sym2 ricci;
  Fe scalar;
  Fe weyl_norm_squared;  // C_abcd C^abcd, dim 4 only
};

CurvatureInvariants curvature_invariants(const Sym2& g);

}  // namespace hforge

#endif
