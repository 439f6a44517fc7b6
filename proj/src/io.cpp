#include "lindex/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lindex/error.hpp"

namespace lindex {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Poset parse_poset(std::string_view text) {
  int p = -1;
  std::vector<Cover> covers;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why + " ('" + std::string(line) + "')");
    };
    if (p < 0) {
      if (line.substr(0, 2) != "p=" || !parse_int(line.substr(2), p) || p < 0) {
        throw fail("expected p=<n> first");
      }
      continue;
    }
    const auto lt = line.find('<');
    int a = 0;
    int b = 0;
    if (lt == std::string_view::npos || !parse_int(line.substr(0, lt), a) || !parse_int(line.substr(lt + 1), b)) {
      throw fail("expected a<b");
    }
    if (a < 0 || a >= p || b < 0 || b >= p) throw fail("element id outside 0.." + std::to_string(p - 1));
    covers.emplace_back(a, b);
  }
  if (p < 0) throw ParseError("missing p=<n> line");
  return Poset::from_covers(p, covers);
}

std::string format_poset(const Poset& P) {
  std::string s = "p=" + std::to_string(P.size()) + "\n";
  for (const auto& [a, b] : P.covers()) s += std::to_string(a) + "<" + std::to_string(b) + "\n";
  return s;
}

Poset load_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_poset(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

PosetSource load_poset_source(const std::string& descriptor) {
  PosetSource src;
  if (descriptor.starts_with("shape:") || descriptor.starts_with("shifted:")) {
    src.name = descriptor;
    src.shape = parse_shape(descriptor);
    src.poset = shape_poset(src.shape);
    src.from_shape = true;
    return src;
  }
  src.name = std::filesystem::path(descriptor).stem().string();
  src.poset = load_poset_file(descriptor);
  return src;
}

LinearExtension parse_extension(std::string_view text) {
  std::vector<int> word;
  text = trim(text);
  if (text.empty()) return LinearExtension();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    int v = 0;
    if (!parse_int(text.substr(pos, end - pos), v) || v < 0) {
      throw ParseError("bad extension word '" + std::string(text) + "'");
    }
    word.push_back(v);
    pos = end + 1;
  }
  return LinearExtension(std::move(word));
}

std::string format_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_extension(const LinearExtension& f) { return format_ints(f.vec()); }

}  // namespace lindex
