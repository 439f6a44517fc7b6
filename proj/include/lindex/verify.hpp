#pragma once

// Verification suites shared by the CLI and the acceptance runner.  Each suite
// returns one line per (subject, check); lines marked informational report
// a corrected or normalized variant and do not affect the verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindex/hecke.hpp"
#include "lindex/io.hpp"
#include "lindex/poset.hpp"
#include "lindex/sieve.hpp"

namespace lindex {

struct CheckLine {
  std::string subject;
  std::string check;
  bool pass = false;
  std::string detail;
  bool informational = false;
};

struct SuiteReport {
  std::string id;
  std::vector<CheckLine> lines;

  bool pass() const;
  void add(std::string subject, std::string check, bool pass, std::string detail = {});
  void note(std::string subject, std::string check, bool pass, std::string detail = {});
  void append(const SuiteReport& other);
};

struct ShapeCase {
  Shape shape;
  // Unset: only the power check runs (shapes outside the named families).
  std::optional<ShapeKind> kind;
};

struct VerifyOptions {
  std::vector<PosetSource> posets;
  int n_min = 2;
  int n_max = 0;  // 0: the suite's default
  std::vector<ShapeCase> shapes;
  std::vector<std::pair<int, int>> rectangles;  // (rows, columns)
  std::uint64_t seed = 20260101;
  std::size_t cap = kDefaultExtensionCap;
  int hecke_cap = kDefaultHeckeCap;
};

const std::vector<std::string>& verify_ids();
// Throws PreconditionError for an unknown id.
SuiteReport run_verify(const std::string& id, const VerifyOptions& opt);

// Individual suites.
SuiteReport verify_thm1(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_lemma1(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_promotion(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_block_example();
SuiteReport verify_thm2(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_thm3(const std::vector<PosetSource>& posets);
SuiteReport verify_thm4(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_thm5(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_lemma2(const std::vector<PosetSource>& posets, std::size_t cap);
SuiteReport verify_thm6(const std::vector<ShapeCase>& shapes, std::size_t cap);
SuiteReport verify_thm7(const std::vector<std::pair<int, int>>& rectangles, std::size_t cap);
SuiteReport verify_maj_example();
SuiteReport verify_thm8(int n_min, int n_max, int hecke_cap);
SuiteReport verify_thm9(int n_min, int n_max, int hecke_cap);
SuiteReport verify_hecke_tables(int hecke_cap);
SuiteReport verify_eq7(const std::vector<PosetSource>& posets, int hecke_cap, std::uint64_t seed);
SuiteReport verify_crosspoly(int n_min, int n_max);
SuiteReport verify_eulerian();

// The special shapes and the rectangles of the sieve check.
std::vector<ShapeCase> default_special_shapes();
std::vector<std::pair<int, int>> default_rectangles();

// Reference S_4 table and S_5 spot values, as published.
const std::vector<std::pair<std::string, std::string>>& s4_table();
const std::vector<std::pair<std::string, std::string>>& s5_spot_values();

// The worked tableau for the maj example (3 x 4, rows top to bottom).
std::vector<std::vector<int>> maj_example_tableau();

}  // namespace lindex
