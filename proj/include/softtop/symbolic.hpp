#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/maximality.hpp"

// Soft sets over the naturals with finitely many parameters, where every
// component is finite or cofinite, and three named topologies on them.
namespace softtop {

struct SymComponent {
  // false: the listed naturals; true: everything except the listed naturals.
  bool cofinite = false;
  std::vector<std::uint64_t> listed;  // sorted, unique

  bool contains(std::uint64_t z) const;
  friend bool operator==(const SymComponent&, const SymComponent&) = default;
};

class SymbolicSoftSet {
 public:
  SymbolicSoftSet(std::vector<std::string> params, std::vector<SymComponent> components);

  static SymbolicSoftSet null(std::vector<std::string> params);
  static SymbolicSoftSet absolute(std::vector<std::string> params);

  const std::vector<std::string>& params() const { return params_; }
  const std::vector<SymComponent>& components() const { return components_; }
  const SymComponent& component(std::size_t param) const { return components_[param]; }

  bool contains(std::uint64_t z, std::size_t param) const {
    return components_[param].contains(z);
  }
  bool is_null() const;
  bool is_absolute() const;
  // All components finite / all components cofinite.
  bool is_soft_finite() const;
  bool is_co_soft_finite() const;

  friend bool operator==(const SymbolicSoftSet&, const SymbolicSoftSet&) = default;

 private:
  std::vector<std::string> params_;
  std::vector<SymComponent> components_;
};

SymbolicSoftSet sym_complement(const SymbolicSoftSet& a);
SymbolicSoftSet sym_unite(const SymbolicSoftSet& a, const SymbolicSoftSet& b);
SymbolicSoftSet sym_intersect(const SymbolicSoftSet& a, const SymbolicSoftSet& b);
bool sym_is_subset(const SymbolicSoftSet& a, const SymbolicSoftSet& b);

// `{e1:FIN{1,3}; e2:COF{2}}`. Parameters not mentioned are FIN{}.
SymbolicSoftSet parse_symbolic_set(std::string_view text, const std::vector<std::string>& params);
std::string format_symbolic_set(const SymbolicSoftSet& set);
// Parameter names in order of first appearance, without validating the rest.
std::vector<std::string> symbolic_set_params(std::string_view text);

// The soft point z(e).
struct SymAnchor {
  std::uint64_t elem = 0;
  std::size_t param = 0;
};

enum class SymFamily { fort, particular_point, excluded_point };

std::string_view to_string(SymFamily f);
SymFamily parse_sym_family(std::string_view name);  // fort, pp, ep

struct SymbolicTopology {
  SymFamily family;
  std::vector<std::string> params;
  SymAnchor anchor;
};

// `1(e)`: the anchor's parameter must be one of `params`.
SymAnchor parse_anchor(std::string_view text, const std::vector<std::string>& params);
std::string format_anchor(const SymbolicTopology& t);

enum class SymQuery { open, closed, compact, dense, connected_space };

std::string_view to_string(SymQuery q);
SymQuery parse_sym_query(std::string_view name);

// Closed-form deciders. `y` must use the topology's parameter list
// (InputError otherwise); connected_space ignores it.
bool sym_query(const SymbolicTopology& t, const SymbolicSoftSet& y, SymQuery q);

struct SymCase {
  std::string shape;
  SymbolicSoftSet representative;
  bool open;
  // For non-open shapes: the argument that t[Y] loses the property, and
  // whether every step of it checked out through sym_query.
  std::string argument;
  bool established;
};

struct SymCertificate {
  bool has_property = false;
  bool maximal = false;
  std::vector<SymCase> cases;
  std::string text;
};

// Runs the s-extension criterion over every shape a symbolic set can take
// relative to t (anchor in or out, FIN or COF per parameter, null and
// absolute separately). Openness and every step of the argument depend on Y
// only through its shape, so one representative per shape covers all Y.
// Property must be compact for FORT and connected for the other two.
SymCertificate sym_is_maximal(const SymbolicTopology& t, Property p);

}  // namespace softtop
