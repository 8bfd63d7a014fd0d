#include "softtop/symbolic.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "cursor.hpp"

namespace softtop {

namespace {

std::vector<std::uint64_t> merge(const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> common(const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> minus(const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SymComponent unite_component(const SymComponent& a, const SymComponent& b) {
  if (!a.cofinite && !b.cofinite) return {false, merge(a.listed, b.listed)};
  if (a.cofinite && b.cofinite) return {true, common(a.listed, b.listed)};
  const SymComponent& fin = a.cofinite ? b : a;
  const SymComponent& cof = a.cofinite ? a : b;
  return {true, minus(cof.listed, fin.listed)};
}

SymComponent complement_component(const SymComponent& a) { return {!a.cofinite, a.listed}; }

void require_same_params(const SymbolicSoftSet& a, const std::vector<std::string>& params) {
  if (a.params() != params) throw InputError("symbolic soft sets use different parameters");
}

std::uint64_t parse_natural(detail::Cursor& cur) {
  cur.skip_ws();
  int col = cur.column();
  std::string digits = cur.name();
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("expected a natural number, got '" + digits + "'", cur.line(), col);
  }
  return value;
}

std::string join_naturals(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

bool SymComponent::contains(std::uint64_t z) const {
  return std::binary_search(listed.begin(), listed.end(), z) != cofinite;
}

SymbolicSoftSet::SymbolicSoftSet(std::vector<std::string> params,
                                 std::vector<SymComponent> components)
    : params_(std::move(params)), components_(std::move(components)) {
  if (params_.empty()) throw InputError("symbolic soft set needs at least one parameter");
  if (params_.size() != components_.size()) {
    throw InputError("one component per parameter required");
  }
  for (auto& c : components_) {
    std::sort(c.listed.begin(), c.listed.end());
    c.listed.erase(std::unique(c.listed.begin(), c.listed.end()), c.listed.end());
  }
}

SymbolicSoftSet SymbolicSoftSet::null(std::vector<std::string> params) {
  std::vector<SymComponent> comps(params.size(), SymComponent{false, {}});
  return SymbolicSoftSet(std::move(params), std::move(comps));
}

SymbolicSoftSet SymbolicSoftSet::absolute(std::vector<std::string> params) {
  std::vector<SymComponent> comps(params.size(), SymComponent{true, {}});
  return SymbolicSoftSet(std::move(params), std::move(comps));
}

bool SymbolicSoftSet::is_null() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const SymComponent& c) { return !c.cofinite && c.listed.empty(); });
}

bool SymbolicSoftSet::is_absolute() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const SymComponent& c) { return c.cofinite && c.listed.empty(); });
}

bool SymbolicSoftSet::is_soft_finite() const {
  return std::none_of(components_.begin(), components_.end(),
                      [](const SymComponent& c) { return c.cofinite; });
}

bool SymbolicSoftSet::is_co_soft_finite() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const SymComponent& c) { return c.cofinite; });
}

SymbolicSoftSet sym_complement(const SymbolicSoftSet& a) {
  std::vector<SymComponent> comps;
  for (const auto& c : a.components()) comps.push_back(complement_component(c));
  return SymbolicSoftSet(a.params(), std::move(comps));
}

SymbolicSoftSet sym_unite(const SymbolicSoftSet& a, const SymbolicSoftSet& b) {
  require_same_params(b, a.params());
  std::vector<SymComponent> comps;
  for (std::size_t i = 0; i < a.params().size(); ++i) {
    comps.push_back(unite_component(a.component(i), b.component(i)));
  }
  return SymbolicSoftSet(a.params(), std::move(comps));
}

SymbolicSoftSet sym_intersect(const SymbolicSoftSet& a, const SymbolicSoftSet& b) {
  return sym_complement(sym_unite(sym_complement(a), sym_complement(b)));
}

bool sym_is_subset(const SymbolicSoftSet& a, const SymbolicSoftSet& b) {
  return sym_unite(a, b) == b;
}

std::vector<std::string> symbolic_set_params(std::string_view text) {
  std::vector<std::string> out;
  detail::Cursor cur(text, 1);
  cur.expect('{');
  if (cur.accept('}')) return out;
  do {
    std::string name = cur.name();
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    cur.expect(':');
    cur.name();
    cur.expect('{');
    while (!cur.at_end() && cur.peek() != '}') {
      cur.name();
      cur.accept(',');
    }
    cur.expect('}');
  } while (cur.accept(';'));
  return out;
}

SymbolicSoftSet parse_symbolic_set(std::string_view text, const std::vector<std::string>& params) {
  detail::Cursor cur(text, 1);
  std::vector<SymComponent> comps(params.size(), SymComponent{false, {}});
  std::vector<bool> seen(params.size(), false);
  cur.expect('{');
  if (!cur.accept('}')) {
    do {
      cur.skip_ws();
      int col = cur.column();
      std::string name = cur.name();
      auto it = std::find(params.begin(), params.end(), name);
      if (it == params.end()) throw ParseError("unknown parameter '" + name + "'", 1, col);
      auto index = static_cast<std::size_t>(it - params.begin());
      if (seen[index]) throw ParseError("parameter '" + name + "' given twice", 1, col);
      seen[index] = true;
      cur.expect(':');
      cur.skip_ws();
      int tag_col = cur.column();
      std::string tag = cur.name();
      if (tag != "FIN" && tag != "COF") {
        throw ParseError("expected FIN or COF, got '" + tag + "'", 1, tag_col);
      }
      comps[index].cofinite = tag == "COF";
      cur.expect('{');
      if (!cur.accept('}')) {
        do {
          comps[index].listed.push_back(parse_natural(cur));
        } while (cur.accept(','));
        cur.expect('}');
      }
    } while (cur.accept(';'));
    cur.expect('}');
  }
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return SymbolicSoftSet(params, std::move(comps));
}

std::string format_symbolic_set(const SymbolicSoftSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.params().size(); ++i) {
    const auto& c = set.component(i);
    if (i) out += "; ";
    out += set.params()[i] + ":" + (c.cofinite ? "COF{" : "FIN{") + join_naturals(c.listed) + "}";
  }
  return out + "}";
}

std::string_view to_string(SymFamily f) {
  switch (f) {
    case SymFamily::fort: return "fort";
    case SymFamily::particular_point: return "pp";
    case SymFamily::excluded_point: return "ep";
  }
  return "?";
}

SymFamily parse_sym_family(std::string_view name) {
  if (name == "fort") return SymFamily::fort;
  if (name == "pp") return SymFamily::particular_point;
  if (name == "ep") return SymFamily::excluded_point;
  throw InputError("unknown family '" + std::string(name) + "' (fort, pp, ep)");
}

std::string_view to_string(SymQuery q) {
  switch (q) {
    case SymQuery::open: return "open";
    case SymQuery::closed: return "closed";
    case SymQuery::compact: return "compact";
    case SymQuery::dense: return "dense";
    case SymQuery::connected_space: return "connected_space";
  }
  return "?";
}

SymQuery parse_sym_query(std::string_view name) {
  for (auto q : {SymQuery::open, SymQuery::closed, SymQuery::compact, SymQuery::dense,
                 SymQuery::connected_space}) {
    if (to_string(q) == name) return q;
  }
  throw InputError("unknown query '" + std::string(name) + "'");
}

SymAnchor parse_anchor(std::string_view text, const std::vector<std::string>& params) {
  detail::Cursor cur(text, 1);
  SymAnchor anchor;
  anchor.elem = parse_natural(cur);
  cur.expect('(');
  cur.skip_ws();
  int col = cur.column();
  std::string name = cur.name();
  cur.expect(')');
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  auto it = std::find(params.begin(), params.end(), name);
  if (it == params.end()) throw ParseError("unknown parameter '" + name + "'", 1, col);
  anchor.param = static_cast<std::size_t>(it - params.begin());
  return anchor;
}

std::string format_anchor(const SymbolicTopology& t) {
  return std::to_string(t.anchor.elem) + "(" + t.params[t.anchor.param] + ")";
}

bool sym_query(const SymbolicTopology& t, const SymbolicSoftSet& y, SymQuery q) {
  if (q == SymQuery::connected_space) return t.family != SymFamily::fort;
  require_same_params(y, t.params);
  const bool anchored = y.contains(t.anchor.elem, t.anchor.param);
  switch (t.family) {
    case SymFamily::fort:
      switch (q) {
        case SymQuery::open: return !anchored || y.is_co_soft_finite();
        case SymQuery::closed:
        case SymQuery::compact: return anchored || y.is_soft_finite();
        case SymQuery::dense: {
          SymbolicSoftSet punctured = SymbolicSoftSet::absolute(t.params);
          std::vector<SymComponent> comps = punctured.components();
          comps[t.anchor.param].listed = {t.anchor.elem};
          return sym_is_subset(SymbolicSoftSet(t.params, std::move(comps)), y);
        }
        default: break;
      }
      break;
    case SymFamily::particular_point:
      switch (q) {
        case SymQuery::open: return y.is_null() || anchored;
        case SymQuery::closed: return y.is_absolute() || !anchored;
        case SymQuery::dense: return anchored;
        case SymQuery::compact: return y.is_soft_finite();
        default: break;
      }
      break;
    case SymFamily::excluded_point:
      switch (q) {
        case SymQuery::open: return y.is_absolute() || !anchored;
        case SymQuery::closed: return y.is_null() || anchored;
        case SymQuery::dense: {
          if (y.is_absolute()) return true;
          std::vector<SymComponent> comps(t.params.size(), SymComponent{true, {}});
          comps[t.anchor.param].listed = {t.anchor.elem};
          return y == SymbolicSoftSet(t.params, std::move(comps));
        }
        case SymQuery::compact: return anchored || y.is_soft_finite();
        default: break;
      }
      break;
  }
  return false;
}

SymCertificate sym_is_maximal(const SymbolicTopology& t, Property p) {
  const Property expected = t.family == SymFamily::fort ? Property::compact : Property::connected;
  if (p != expected) {
    throw InputError(std::string(to_string(t.family)) + " is checked for " +
                     std::string(to_string(expected)) + ", not " + std::string(to_string(p)));
  }
  const std::size_t m = t.params.size();
  const std::uint64_t z = t.anchor.elem;
  SymCertificate cert;
  const SymbolicSoftSet whole = SymbolicSoftSet::absolute(t.params);
  cert.has_property = p == Property::compact ? sym_query(t, whole, SymQuery::compact)
                                             : sym_query(t, whole, SymQuery::connected_space);

  auto add_case = [&](std::vector<SymComponent> comps, std::string shape) {
    SymbolicSoftSet y(t.params, std::move(comps));
    SymCase c{std::move(shape), y, sym_query(t, y, SymQuery::open), "", true};
    if (!c.open) {
      const SymbolicSoftSet rest = sym_complement(y);
      if (t.family == SymFamily::fort) {
        // t[Y] is compact iff Y^c is compact in t.
        const bool rest_compact = sym_query(t, rest, SymQuery::compact);
        c.established = y.contains(z, t.anchor.param) && !rest.is_soft_finite() && !rest_compact;
        c.argument = "anchor in Y, Y^c not soft-finite, Y^c not compact => t[Y] not compact";
      } else {
        const bool rest_open = sym_query(t, rest, SymQuery::open);
        c.established = rest_open && !y.is_null() && !rest.is_null();
        c.argument = "Y and Y^c open in t[Y], disjoint, non-null, covering => t[Y] disconnected";
      }
    }
    cert.cases.push_back(std::move(c));
  };

  for (int anchored = 1; anchored >= 0; --anchored) {
    for (std::uint64_t tags = 0; tags < (std::uint64_t{1} << m); ++tags) {
      std::vector<SymComponent> comps(m);
      std::string shape = std::string("anchor=") + (anchored ? "in" : "out");
      for (std::size_t j = 0; j < m; ++j) {
        comps[j].cofinite = (tags >> j) & 1U;
        shape += " " + t.params[j] + ":" + (comps[j].cofinite ? "COF" : "FIN");
      }
      auto& home = comps[t.anchor.param];
      if (home.cofinite != static_cast<bool>(anchored)) home.listed = {z};
      const bool all_fin = tags == 0;
      const bool all_cof = tags == (std::uint64_t{1} << m) - 1;
      if (!anchored && all_fin) {
        add_case(comps, shape + " null");
        home.listed = {z + 1};
        add_case(comps, shape + " non-null");
      } else if (anchored && all_cof) {
        add_case(comps, shape + " absolute");
        home.listed = {z + 1};
        add_case(comps, shape + " proper");
      } else {
        add_case(comps, shape);
      }
    }
  }

  cert.maximal = cert.has_property;
  for (const auto& c : cert.cases) cert.maximal = cert.maximal && (c.open || c.established);

  std::string& out = cert.text;
  out = "family=" + std::string(to_string(t.family)) + " anchor=" + format_anchor(t) +
        " property=" + std::string(to_string(p)) + " maximal=" + (cert.maximal ? "true" : "false") +
        "\n";
  out += std::string("  space ") + (p == Property::compact ? "compact" : "connected") + ": " +
         (cert.has_property ? "yes" : "no") + "\n";
  std::size_t non_open = 0;
  for (const auto& c : cert.cases) {
    out += "  case " + c.shape + " rep=" + format_symbolic_set(c.representative) +
           (c.open ? " open" : " non-open: " + c.argument + (c.established ? "" : " [FAILED]")) +
           "\n";
    non_open += c.open ? 0 : 1;
  }
  out += "  shapes: " + std::to_string(cert.cases.size()) +
         " non-open: " + std::to_string(non_open) + "\n";
  return cert;
}

}  // namespace softtop
