// One line per acceptance criterion.  Exit status is 0 only when every
// selected criterion passes.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lindex/hecke.hpp"
#include "lindex/io.hpp"
#include "lindex/slender.hpp"
#include "lindex/verify.hpp"

namespace {

using namespace lindex;

struct Outcome {
  bool pass = false;
  std::string summary;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::vector<PosetSource> corpus(int max_p) {
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

Outcome from_suite(const SuiteReport& r) {
  std::size_t counted = 0;
  std::size_t passed = 0;
  const CheckLine* first_fail = nullptr;
  for (const auto& l : r.lines) {
    if (l.informational) continue;
    ++counted;
    if (l.pass) {
      ++passed;
    } else if (first_fail == nullptr) {
      first_fail = &l;
    }
  }
  std::ostringstream os;
  os << passed << "/" << counted << " checks";
  if (first_fail != nullptr) {
    os << "; first failure " << first_fail->subject << ": " << first_fail->check;
    if (!first_fail->detail.empty()) os << " (" << first_fail->detail << ")";
  }
  return {r.pass(), os.str()};
}

Outcome table_check(int n, const std::vector<std::pair<std::string, std::string>>& table) {
  const HeckeElt E = evacuation_element(n);
  std::size_t ok = 0;
  std::string bad;
  for (const auto& [w, text] : table) {
    if (E.coeff(parse_perm(w)) == parse_ratfunc(text)) {
      ++ok;
    } else if (bad.empty()) {
      bad = "c_" + w + " = " + E.coeff(parse_perm(w)).display() + ", printed " + text;
    }
  }
  std::ostringstream os;
  os << ok << "/" << table.size() << " coefficients";
  if (!bad.empty()) os << "; " << bad;
  return {ok == table.size(), os.str()};
}

std::vector<Criterion> criteria() {
  return {
      {1, "S_4 Hecke table", 1.0, [] { return table_check(4, s4_table()); }},
      {2, "S_5 spot values", 10.0, [] { return table_check(5, s5_spot_values()); }},
      {3, "identity coefficient, n = 2..6", 300.0,
       [] { return from_suite(verify_thm8(2, 6, kDefaultHeckeCap)); }},
      {4, "(q-1)-divisibility, n = 2..5, witness 2314", 0.0,
       [] { return from_suite(verify_thm9(2, 5, kDefaultHeckeCap)); }},
      {5, "evacuation relations on L(P), corpus p <= 8", 0.0,
       [] { return from_suite(verify_thm1(corpus(8), kDefaultExtensionCap)); }},
      {6, "promotion forms and the block-rotation example", 0.0,
       [] {
         SuiteReport r = verify_promotion(corpus(8), kDefaultExtensionCap);
         r.append(verify_block_example());
         return from_suite(r);
       }},
      {7, "trajectory of f evacuated = principal chain, corpus p <= 7", 0.0,
       [] { return from_suite(verify_thm2(corpus(7), kDefaultExtensionCap)); }},
      {8, "cutting-antichain recurrence, corpus p <= 8", 0.0, [] { return from_suite(verify_thm3(corpus(8))); }},
      {9, "sign balance under hypotheses (a) and (b), corpus p <= 8", 0.0,
       [] { return from_suite(verify_thm4(corpus(8), kDefaultExtensionCap)); }},
      {10, "W'(-1) = dual domino tableaux = self-evacuating, natural corpus p <= 8", 0.0,
       [] {
         std::vector<PosetSource> natural;
         for (auto& src : corpus(8)) {
           if (src.poset.is_natural()) natural.push_back(std::move(src));
         }
         return from_suite(verify_thm5(natural, kDefaultExtensionCap));
       }},
      {11, "special shapes: promotion power and dihedral order", 60.0,
       [] { return from_suite(verify_thm6(default_special_shapes(), kDefaultExtensionCap)); }},
      {12, "cyclic sieving on rectangles 2x2..3x4", 120.0,
       [] { return from_suite(verify_thm7(default_rectangles(), kDefaultExtensionCap)); }},
      {13, "maj of the worked tableau and F by two routes", 0.0, [] { return from_suite(verify_maj_example()); }},
      {14, "cross-polytope closed forms and dihedral orders, n = 2..5", 0.0,
       [] { return from_suite(verify_crosspoly(2, 5)); }},
      {15, "flag evacuation against c_w(q) on B_2(2), B_2(3), B_3(2)", 60.0,
       [] {
         SuiteReport r{"flags", {}};
         for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
           const HeckeConsistency h = hecke_consistency(n, q);
           r.add("B_" + std::to_string(n) + "(" + std::to_string(q) + ")", "cell-constant and equal to c_w(q)",
                 h.ok, std::to_string(h.flags) + " flags" + (h.ok ? "" : ", " + h.witness));
         }
         return from_suite(r);
       }},
      {16, "Eulerian emptiness on B_3, equality on weak S_3", 0.0, [] { return from_suite(verify_eulerian()); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-16)")->check(CLI::Range(1, 16));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.summary += "; over the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  [" << o.summary
              << "; " << timing << (c.time_limit_s > 0 ? " of " + std::to_string(static_cast<int>(c.time_limit_s)) + " s" : "")
              << "]\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
