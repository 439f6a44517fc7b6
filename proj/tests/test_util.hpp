#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "lindex/io.hpp"

namespace lindex::testing {

inline std::vector<PosetSource> corpus(int max_p = 8) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(LINDEX_CORPUS_DIR)) {
    if (e.path().extension() == ".poset") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PosetSource> out;
  for (const auto& f : files) {
    auto src = load_poset_source(f.string());
    if (src.poset.size() <= max_p) out.push_back(std::move(src));
  }
  return out;
}

inline PosetSource corpus_poset(const std::string& stem) {
  return load_poset_source((std::filesystem::path(LINDEX_CORPUS_DIR) / (stem + ".poset")).string());
}

// Independent check: every cover goes up in the word.
inline bool respects_covers(const Poset& P, const std::vector<int>& word) {
  std::vector<int> pos(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) pos[static_cast<std::size_t>(word[i])] = static_cast<int>(i);
  return std::all_of(P.covers().begin(), P.covers().end(), [&](const Cover& c) {
    return pos[static_cast<std::size_t>(c.first)] < pos[static_cast<std::size_t>(c.second)];
  });
}

// L(P) by filtering all p! words.
inline std::vector<std::vector<int>> brute_extensions(const Poset& P) {
  std::vector<int> w(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) w[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    if (respects_covers(P, w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace lindex::testing
