#include "softtop/io.hpp"

#include <fstream>
#include <sstream>

#include "cursor.hpp"

namespace softtop {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int column_of(std::string_view whole, std::string_view part) {
  return static_cast<int>(part.data() - whole.data()) + 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

GroundPtr parse_ground_header(std::string_view line, int line_number) {
  detail::Cursor cur(line, line_number);
  cur.expect_word("ground");
  std::vector<std::string> universe;
  std::vector<std::string> params;
  bool have_z = false;
  bool have_e = false;
  while (!cur.at_end()) {
    int col = cur.column();
    std::string key = cur.name();
    cur.expect('=');
    std::vector<std::string> names;
    do {
      names.push_back(cur.name());
    } while (cur.accept(','));
    if (key == "Z" && !have_z) {
      universe = std::move(names);
      have_z = true;
    } else if (key == "E" && !have_e) {
      params = std::move(names);
      have_e = true;
    } else {
      throw ParseError("unexpected header field '" + key + "'", line_number, col);
    }
  }
  if (!have_z || !have_e) throw ParseError("header needs Z=... and E=...", line_number, 1);
  try {
    return make_ground(std::move(universe), std::move(params));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), line_number, 1);
  }
}

FamilyFile parse_family_file(std::string_view text) {
  FamilyFile file;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!file.ground) {
      file.ground = parse_ground_header(line, line_number);
      file.carrier = file.ground->full_mask();
    } else if (line.starts_with("carrier")) {
      if (!file.sets.empty()) {
        throw ParseError("carrier must precede the soft sets", line_number, column_of(raw, line));
      }
      std::string_view lit = trim(line.substr(7));
      file.carrier = parse_soft_set(lit, file.ground, line_number, column_of(raw, lit)).cells();
    } else {
      file.sets.push_back(parse_soft_set(line, file.ground, line_number, column_of(raw, line)));
    }
    if (end == text.size()) break;
  }
  if (!file.ground) throw ParseError("missing 'ground' header", 1, 1);
  return file;
}

FamilyFile load_family_file(const std::string& path) { return parse_family_file(read_file(path)); }

SoftTopology parse_topology_text(std::string_view text) {
  FamilyFile file = parse_family_file(text);
  return validate_topology(file.ground, file.carrier, file.sets);
}

SoftTopology load_topology_file(const std::string& path) {
  return parse_topology_text(read_file(path));
}

std::string format_topology(const SoftTopology& t) {
  std::string out = t.ground()->header() + "\n";
  if (!t.is_whole_ground()) out += "carrier " + format_cells(*t.ground(), t.carrier()) + "\n";
  for (auto g : t.opens()) out += format_cells(*t.ground(), g) + "\n";
  return out;
}

std::string format_topology_inline(const SoftTopology& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.opens().size(); ++i) {
    if (i) out += ", ";
    out += format_cells(*t.ground(), t.opens()[i]);
  }
  return out + "]";
}

std::vector<SoftSet> parse_family_inline(std::string_view text, const GroundPtr& ground,
                                         int line) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("expected a bracketed list of soft sets", line, 1);
  }
  body = body.substr(1, body.size() - 2);
  std::vector<SoftSet> out;
  if (trim(body).empty()) return out;
  for (auto part : split_top_level(body, ',')) out.push_back(parse_soft_set(trim(part), ground, line));
  return out;
}

}  // namespace softtop
