#include "softtop/soft_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "cursor.hpp"
#include "softtop/error.hpp"

namespace softtop {

namespace {

void require_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw InputError(std::string(what) + " must be non-empty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError(std::string(what) + " contains an empty name");
    if (!seen.insert(n).second) throw InputError(std::string(what) + " repeats '" + n + "'");
  }
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

}  // namespace

Ground::Ground(std::vector<std::string> universe, std::vector<std::string> params)
    : universe_(std::move(universe)), params_(std::move(params)) {
  require_names(universe_, "universe");
  require_names(params_, "parameter set");
  if (cells() > kMaxCells) {
    throw InputError("ground has " + std::to_string(cells()) + " cells; at most " +
                     std::to_string(kMaxCells) + " are supported");
  }
}

CellMask Ground::param_row(std::size_t param) const {
  return low_bits(universe_.size()) << (param * universe_.size());
}

std::optional<std::size_t> Ground::find_elem(std::string_view name) const {
  auto it = std::find(universe_.begin(), universe_.end(), name);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

std::optional<std::size_t> Ground::find_param(std::string_view name) const {
  auto it = std::find(params_.begin(), params_.end(), name);
  if (it == params_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - params_.begin());
}

std::string Ground::header() const {
  return "ground Z=" + join(universe_) + " E=" + join(params_);
}

GroundPtr make_ground(std::vector<std::string> universe, std::vector<std::string> params) {
  return std::make_shared<const Ground>(std::move(universe), std::move(params));
}

GroundPtr make_ground(std::size_t universe_size, std::size_t param_count) {
  std::vector<std::string> universe;
  std::vector<std::string> params;
  for (std::size_t i = 0; i < universe_size; ++i) {
    universe.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                              : "z" + std::to_string(i));
  }
  for (std::size_t i = 0; i < param_count; ++i) params.push_back("e" + std::to_string(i + 1));
  return make_ground(std::move(universe), std::move(params));
}

bool same_ground(const GroundPtr& a, const GroundPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ground(const GroundPtr& a, const GroundPtr& b) {
  if (!same_ground(a, b)) throw InputError("soft sets are over different grounds");
}

SoftSet::SoftSet(GroundPtr ground, CellMask cells) : ground_(std::move(ground)), cells_(cells) {
  if (!ground_) throw InputError("soft set without a ground");
  if (cells_ & ~ground_->full_mask()) throw InputError("soft set has cells outside its ground");
}

SoftSet SoftSet::absolute(GroundPtr ground) {
  CellMask full = ground->full_mask();
  return SoftSet(std::move(ground), full);
}

std::vector<std::size_t> SoftSet::component(std::size_t param) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < ground_->universe_size(); ++z) {
    if (cells_ >> ground_->cell_index(param, z) & 1) out.push_back(z);
  }
  return out;
}

SoftSet unite(const SoftSet& a, const SoftSet& b) {
  require_same_ground(a.ground(), b.ground());
  return SoftSet(a.ground(), a.cells() | b.cells());
}

SoftSet intersect(const SoftSet& a, const SoftSet& b) {
  require_same_ground(a.ground(), b.ground());
  return SoftSet(a.ground(), a.cells() & b.cells());
}

SoftSet complement(const SoftSet& a) {
  return SoftSet(a.ground(), ~a.cells() & a.ground()->full_mask());
}

bool is_subset(const SoftSet& a, const SoftSet& b) {
  require_same_ground(a.ground(), b.ground());
  return (a.cells() & ~b.cells()) == 0;
}

SoftSet unite_all(const GroundPtr& ground, std::span<const SoftSet> family) {
  SoftSet acc = SoftSet::null(ground);
  for (const auto& s : family) acc = unite(acc, s);
  return acc;
}

SoftSet intersect_all(const GroundPtr& ground, std::span<const SoftSet> family) {
  SoftSet acc = SoftSet::absolute(ground);
  for (const auto& s : family) acc = intersect(acc, s);
  return acc;
}

SoftPoint resolve_point(const Ground& ground, std::string_view elem, std::string_view param) {
  auto z = ground.find_elem(elem);
  if (!z) throw InputError("unknown element '" + std::string(elem) + "'");
  auto e = ground.find_param(param);
  if (!e) throw InputError("unknown parameter '" + std::string(param) + "'");
  return SoftPoint{*z, *e};
}

SoftSet soft_point(const GroundPtr& ground, std::string_view elem, std::string_view param) {
  return soft_point(ground, resolve_point(*ground, elem, param));
}

SoftSet soft_point(const GroundPtr& ground, SoftPoint pt) {
  if (pt.elem >= ground->universe_size() || pt.param >= ground->param_count()) {
    throw InputError("soft point outside the ground");
  }
  return SoftSet(ground, CellMask{1} << ground->cell_index(pt.param, pt.elem));
}

SoftSet soft_element(const GroundPtr& ground, std::string_view elem) {
  auto z = ground->find_elem(elem);
  if (!z) throw InputError("unknown element '" + std::string(elem) + "'");
  CellMask cells = 0;
  for (std::size_t e = 0; e < ground->param_count(); ++e) {
    cells |= CellMask{1} << ground->cell_index(e, *z);
  }
  return SoftSet(ground, cells);
}

bool contains_point(const SoftSet& set, SoftPoint pt) {
  const Ground& g = *set.ground();
  if (pt.elem >= g.universe_size() || pt.param >= g.param_count()) {
    throw InputError("soft point outside the ground");
  }
  return set.cells() >> g.cell_index(pt.param, pt.elem) & 1;
}

std::vector<SoftPoint> points_of(const SoftSet& set) {
  const Ground& g = *set.ground();
  std::vector<SoftPoint> out;
  for (CellMask rest = set.cells(); rest; rest &= rest - 1) {
    auto cell = static_cast<std::size_t>(std::countr_zero(rest));
    out.push_back(SoftPoint{g.elem_of(cell), g.param_of(cell)});
  }
  return out;
}

bool is_stable_mask(const Ground& ground, CellMask cells) {
  const std::size_t width = ground.universe_size();
  const CellMask row = low_bits(width);
  const CellMask first = cells & row;
  for (std::size_t e = 1; e < ground.param_count(); ++e) {
    if (((cells >> (e * width)) & row) != first) return false;
  }
  return true;
}

bool is_stable(const SoftSet& set) { return is_stable_mask(*set.ground(), set.cells()); }

SoftFunction::SoftFunction(GroundPtr src, GroundPtr dst, std::vector<std::size_t> elem_map,
                           std::vector<std::size_t> param_map)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      elem_map_(std::move(elem_map)),
      param_map_(std::move(param_map)) {
  if (elem_map_.size() != src_->universe_size() || param_map_.size() != src_->param_count()) {
    throw InputError("soft function maps must be total on the source ground");
  }
  for (auto z : elem_map_) {
    if (z >= dst_->universe_size()) throw InputError("element map leaves the target universe");
  }
  for (auto e : param_map_) {
    if (e >= dst_->param_count()) throw InputError("parameter map leaves the target parameters");
  }
}

SoftFunction SoftFunction::identity(const GroundPtr& ground) {
  std::vector<std::size_t> p(ground->universe_size());
  std::vector<std::size_t> q(ground->param_count());
  std::iota(p.begin(), p.end(), 0);
  std::iota(q.begin(), q.end(), 0);
  return SoftFunction(ground, ground, std::move(p), std::move(q));
}

bool SoftFunction::is_bijective() const {
  auto bijective = [](const std::vector<std::size_t>& map, std::size_t target) {
    if (map.size() != target) return false;
    std::vector<bool> hit(target, false);
    for (auto v : map) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  return bijective(elem_map_, dst_->universe_size()) && bijective(param_map_, dst_->param_count());
}

// f(A)(e') is the union of p(A(e)) over e in q^{-1}(e'); it stays empty when
// q^{-1}(e') is empty since no source cell maps there.
CellMask SoftFunction::image_cells(CellMask a) const {
  CellMask out = 0;
  for (CellMask rest = a; rest; rest &= rest - 1) {
    auto cell = static_cast<std::size_t>(std::countr_zero(rest));
    std::size_t e = src_->param_of(cell);
    std::size_t z = src_->elem_of(cell);
    out |= CellMask{1} << dst_->cell_index(param_map_[e], elem_map_[z]);
  }
  return out;
}

// f^{-1}(B)(e) = p^{-1}(B(q(e))). q is total, so the empty branch never fires.
CellMask SoftFunction::preimage_cells(CellMask b) const {
  CellMask out = 0;
  for (std::size_t e = 0; e < src_->param_count(); ++e) {
    for (std::size_t z = 0; z < src_->universe_size(); ++z) {
      if (b >> dst_->cell_index(param_map_[e], elem_map_[z]) & 1) {
        out |= CellMask{1} << src_->cell_index(e, z);
      }
    }
  }
  return out;
}

SoftSet image(const SoftFunction& f, const SoftSet& a) {
  require_same_ground(f.src(), a.ground());
  return SoftSet(f.dst(), f.image_cells(a.cells()));
}

SoftSet preimage(const SoftFunction& f, const SoftSet& b) {
  require_same_ground(f.dst(), b.ground());
  return SoftSet(f.src(), f.preimage_cells(b.cells()));
}

std::vector<SoftFunction> bijections(const GroundPtr& ground) {
  std::vector<std::size_t> p(ground->universe_size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<SoftFunction> out;
  do {
    std::vector<std::size_t> q(ground->param_count());
    std::iota(q.begin(), q.end(), 0);
    do {
      out.emplace_back(ground, ground, p, q);
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string format_cells(const Ground& ground, CellMask cells) {
  std::string out = "{";
  for (std::size_t e = 0; e < ground.param_count(); ++e) {
    if (e) out += "; ";
    out += ground.params()[e];
    out += ":{";
    bool first = true;
    for (std::size_t z = 0; z < ground.universe_size(); ++z) {
      if (cells >> ground.cell_index(e, z) & 1) {
        if (!first) out += ',';
        out += ground.universe()[z];
        first = false;
      }
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::string format_soft_set(const SoftSet& set) { return format_cells(*set.ground(), set.cells()); }

SoftSet parse_soft_set(std::string_view text, const GroundPtr& ground, int line,
                       int first_column) {
  detail::Cursor cur(text, line, first_column);
  CellMask cells = 0;
  std::vector<bool> seen(ground->param_count(), false);
  cur.expect('{');
  if (!cur.accept('}')) {
    do {
      cur.skip_ws();
      int col = cur.column();
      std::string param = cur.name();
      auto e = ground->find_param(param);
      if (!e) throw ParseError("unknown parameter '" + param + "'", line, col);
      if (seen[*e]) throw ParseError("parameter '" + param + "' given twice", line, col);
      seen[*e] = true;
      cur.expect(':');
      cur.expect('{');
      if (!cur.accept('}')) {
        do {
          cur.skip_ws();
          int ecol = cur.column();
          std::string elem = cur.name();
          auto z = ground->find_elem(elem);
          if (!z) throw ParseError("unknown element '" + elem + "'", line, ecol);
          cells |= CellMask{1} << ground->cell_index(*e, *z);
        } while (cur.accept(','));
        cur.expect('}');
      }
    } while (cur.accept(';'));
    cur.expect('}');
  }
  if (!cur.at_end()) cur.fail("trailing characters after soft set");
  return SoftSet(ground, cells);
}

}  // namespace softtop
