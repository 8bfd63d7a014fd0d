#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

// One bit per cell (e, z) of the grid E x Z, at index
// param_index * |Z| + elem_index.
using CellMask = std::uint64_t;

inline constexpr std::size_t kMaxCells = 64;

inline constexpr CellMask low_bits(std::size_t n) {
  return n >= 64 ? ~CellMask{0} : ((CellMask{1} << n) - 1);
}

// The universe Z and the parameter set E shared by every soft set of a
// computation. Both lists are ordered; that order fixes cell indices and all
// printed output.
class Ground {
 public:
  Ground(std::vector<std::string> universe, std::vector<std::string> params);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& params() const { return params_; }

  std::size_t universe_size() const { return universe_.size(); }
  std::size_t param_count() const { return params_.size(); }
  std::size_t cells() const { return universe_.size() * params_.size(); }
  CellMask full_mask() const { return low_bits(cells()); }

  std::size_t cell_index(std::size_t param, std::size_t elem) const {
    return param * universe_.size() + elem;
  }
  std::size_t param_of(std::size_t cell) const { return cell / universe_.size(); }
  std::size_t elem_of(std::size_t cell) const { return cell % universe_.size(); }

  // Mask of the cells belonging to one parameter's component.
  CellMask param_row(std::size_t param) const;

  std::optional<std::size_t> find_elem(std::string_view name) const;
  std::optional<std::size_t> find_param(std::string_view name) const;

  // `ground Z=a,b E=e1,e2`
  std::string header() const;

  friend bool operator==(const Ground&, const Ground&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> params_;
};

using GroundPtr = std::shared_ptr<const Ground>;

GroundPtr make_ground(std::vector<std::string> universe, std::vector<std::string> params);

// Ground with elements a, b, c, ... and parameters e1, e2, ...
GroundPtr make_ground(std::size_t universe_size, std::size_t param_count);

bool same_ground(const GroundPtr& a, const GroundPtr& b);
void require_same_ground(const GroundPtr& a, const GroundPtr& b);

class SoftSet {
 public:
  SoftSet(GroundPtr ground, CellMask cells);

  static SoftSet null(GroundPtr ground) { return SoftSet(std::move(ground), 0); }
  static SoftSet absolute(GroundPtr ground);

  const GroundPtr& ground() const { return ground_; }
  CellMask cells() const { return cells_; }

  bool is_null() const { return cells_ == 0; }
  bool is_absolute() const { return cells_ == ground_->full_mask(); }

  // Y(e) as element indices in ground order.
  std::vector<std::size_t> component(std::size_t param) const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.cells_ == b.cells_ && same_ground(a.ground_, b.ground_);
  }
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  GroundPtr ground_;
  CellMask cells_;
};

struct SoftPoint {
  std::size_t elem;
  std::size_t param;

  friend bool operator==(const SoftPoint&, const SoftPoint&) = default;
};

SoftSet unite(const SoftSet& a, const SoftSet& b);
SoftSet intersect(const SoftSet& a, const SoftSet& b);
SoftSet complement(const SoftSet& a);
bool is_subset(const SoftSet& a, const SoftSet& b);

// Folds over a family; the empty union is the null set and the empty
// intersection is the absolute set.
SoftSet unite_all(const GroundPtr& ground, std::span<const SoftSet> family);
SoftSet intersect_all(const GroundPtr& ground, std::span<const SoftSet> family);

SoftPoint resolve_point(const Ground& ground, std::string_view elem, std::string_view param);
SoftSet soft_point(const GroundPtr& ground, std::string_view elem, std::string_view param);
SoftSet soft_point(const GroundPtr& ground, SoftPoint pt);
// The soft element ({z}, E): z in every component.
SoftSet soft_element(const GroundPtr& ground, std::string_view elem);
bool contains_point(const SoftSet& set, SoftPoint pt);

// All soft points of the set, in cell order.
std::vector<SoftPoint> points_of(const SoftSet& set);

// True when every component is the same subset of Z.
bool is_stable(const SoftSet& set);
bool is_stable_mask(const Ground& ground, CellMask cells);

// A pair of total maps p: Z -> Z' and q: E -> E' given by index tables.
class SoftFunction {
 public:
  SoftFunction(GroundPtr src, GroundPtr dst, std::vector<std::size_t> elem_map,
               std::vector<std::size_t> param_map);

  static SoftFunction identity(const GroundPtr& ground);

  const GroundPtr& src() const { return src_; }
  const GroundPtr& dst() const { return dst_; }
  const std::vector<std::size_t>& elem_map() const { return elem_map_; }
  const std::vector<std::size_t>& param_map() const { return param_map_; }

  bool is_bijective() const;

  CellMask image_cells(CellMask a) const;
  CellMask preimage_cells(CellMask b) const;

 private:
  GroundPtr src_;
  GroundPtr dst_;
  std::vector<std::size_t> elem_map_;
  std::vector<std::size_t> param_map_;
};

SoftSet image(const SoftFunction& f, const SoftSet& a);
SoftSet preimage(const SoftFunction& f, const SoftSet& b);

// Every bijective soft function from `ground` onto itself (all permutations
// of Z paired with all permutations of E), in lexicographic order.
std::vector<SoftFunction> bijections(const GroundPtr& ground);

// `{e1:{a,b}; e2:{}}`, parameters and elements in ground order.
std::string format_soft_set(const SoftSet& set);
std::string format_cells(const Ground& ground, CellMask cells);

// Whitespace-insensitive. Parameters may appear in any order; omitted ones
// are empty. `line` and `first_column` only position diagnostics.
SoftSet parse_soft_set(std::string_view text, const GroundPtr& ground, int line = 1,
                       int first_column = 1);

}  // namespace softtop
