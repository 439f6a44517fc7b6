#pragma once

// Text formats.  Poset files: first line "p=<n>", then one "a<b" cover per
// line over ids 0..n-1; blank lines and text after '#' are ignored.
// Extensions: comma-separated element ids.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lindex/poset.hpp"

namespace lindex {

// Throws ParseError with a line number, or CycleError.
Poset parse_poset(std::string_view text);
std::string format_poset(const Poset& P);

// Throws ParseError when the file cannot be read or parsed.
Poset load_poset_file(const std::filesystem::path& path);

struct PosetSource {
  std::string name;  // file stem or the shape descriptor
  Poset poset;
  bool from_shape = false;
  Shape shape;
};

// "shape:3,2", "shifted:4,2" or a poset file path.
PosetSource load_poset_source(const std::string& descriptor);

// "0,2,1,3".  Throws ParseError; does not check the poset.
LinearExtension parse_extension(std::string_view text);
std::string format_extension(const LinearExtension& f);
std::string format_ints(const std::vector<int>& v, char sep = ',');

}  // namespace lindex
