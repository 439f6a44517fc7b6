// Command-line front end.  Exit status: 0 success, 1 a requested check
// failed, 2 bad input, 3 a size cap was exceeded.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "lindex/error.hpp"
#include "lindex/hecke.hpp"
#include "lindex/io.hpp"
#include "lindex/parallel.hpp"
#include "lindex/promotion.hpp"
#include "lindex/sieve.hpp"
#include "lindex/slender.hpp"
#include "lindex/statistics.hpp"
#include "lindex/verify.hpp"

#ifndef LINDEX_CORPUS_DIR
#define LINDEX_CORPUS_DIR "corpus"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace lindex;

struct Globals {
  std::string format = "tsv";
  std::size_t cap = kDefaultExtensionCap;
  int hecke_cap = kDefaultHeckeCap;
  std::uint64_t seed = 20260101;
};

// Rows of named columns, printed as TSV with a header or as a JSON array.
class Table {
 public:
  explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}
  void row(std::vector<json> values) { rows_.push_back(std::move(values)); }

  void print(const std::string& format) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& r : rows_) {
        json obj = json::object();
        for (std::size_t i = 0; i < cols_.size(); ++i) obj[cols_[i]] = r[i];
        out.push_back(std::move(obj));
      }
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < cols_.size(); ++i) std::cout << (i ? "\t" : "") << cols_[i];
    std::cout << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::cout << (i ? "\t" : "") << (r[i].is_string() ? r[i].get<std::string>() : r[i].dump());
      }
      std::cout << "\n";
    }
  }

 private:
  std::vector<std::string> cols_;
  std::vector<std::vector<json>> rows_;
};

std::string yes(bool b) { return b ? "pass" : "FAIL"; }

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(k).get_str());
  return a;
}

json ratfunc_json(const RatFunc& f) {
  return json{{"display", f.display()},
              {"scale", f.scale().get_str()},
              {"num", poly_json(f.numerator())},
              {"den", poly_json(f.denominator())}};
}

std::vector<PosetSource> corpus_sources() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(LINDEX_CORPUS_DIR)) {
    if (e.path().extension() == ".poset") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PosetSource> out;
  for (const auto& f : files) out.push_back(load_poset_source(f.string()));
  return out;
}

std::vector<PosetSource> sources(const std::vector<std::string>& descriptors) {
  if (descriptors.empty()) return corpus_sources();
  std::vector<PosetSource> out;
  for (const auto& d : descriptors) out.push_back(load_poset_source(d));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  return parse_extension(text).vec();
}

// "m,n" for rectangles; row lengths otherwise; full descriptors pass through.
Shape shape_for(const std::string& text, std::optional<ShapeKind> kind) {
  if (text.find(':') != std::string::npos) return parse_shape(text);
  const auto v = parse_int_list(text);
  if (kind == ShapeKind::Rectangle) {
    if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw ParseError("rectangle shape is 'rows,columns'");
    return Shape{std::vector<int>(static_cast<std::size_t>(v[0]), v[1]), false};
  }
  const bool shifted = kind == ShapeKind::ShiftedDoubleStaircase || kind == ShapeKind::ShiftedTrapezoid;
  return parse_shape(std::string(shifted ? "shifted:" : "shape:") + text);
}

std::pair<int, int> rect_dims(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw ParseError("rectangle is 'rows,columns'");
  return {v[0], v[1]};
}

int print_suite(const SuiteReport& r, const Globals& g) {
  Table t({"suite", "subject", "check", "result", "detail"});
  for (const auto& l : r.lines) {
    t.row({r.id, l.subject, l.check, l.informational ? (l.pass ? "info:pass" : "info:fail") : yes(l.pass),
           l.detail});
  }
  t.print(g.format);
  return r.pass() ? 0 : 1;
}

LinearExtension checked_ext(const Poset& P, const std::string& text) {
  try {
    return LinearExtension::checked(P, parse_extension(text).vec());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion, evacuation and related computations on finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option_function<unsigned>(
      "--threads", [](unsigned t) { set_thread_count(t); }, "Worker threads (default: LINDEX_THREADS or all cores)");
  app.add_option("--cap", g.cap, "Largest number of linear extensions enumerated");
  app.add_option("--hecke-cap", g.hecke_cap, "Largest n for Hecke expansions");
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  int status = 0;
  std::string poset_arg;
  std::string ext_arg;

  // le
  bool count_only = false;
  auto* le = app.add_subcommand("le", "List linear extensions");
  le->add_option("poset", poset_arg, "Poset file or shape descriptor")->required();
  le->add_flag("--count", count_only, "Only print e(P)");
  le->callback([&] {
    const auto src = load_poset_source(poset_arg);
    if (count_only) {
      Table t({"poset", "extensions"});
      t.row({src.name, count_extensions(src.poset).get_str()});
      t.print(g.format);
      return;
    }
    Table t({"index", "word"});
    std::size_t k = 0;
    for (const auto& f : linear_extensions(src.poset, g.cap)) t.row({k++, format_extension(f)});
    t.print(g.format);
  });

  // promote / evacuate
  std::string method = "slide";
  bool dual = false;
  int times = 1;
  auto* promote = app.add_subcommand("promote", "Promote a linear extension");
  promote->add_option("poset", poset_arg)->required();
  promote->add_option("--ext", ext_arg, "Extension as comma-separated ids")->required();
  promote->add_option("--method", method)->check(CLI::IsMember({"slide", "word"}));
  promote->add_flag("--dual", dual, "Dual promotion");
  promote->add_option("--times", times, "Number of applications")->check(CLI::NonNegativeNumber);
  promote->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const Poset& P = src.poset;
    LinearExtension f = checked_ext(P, ext_arg);
    Table t({"step", "word", "chain"});
    t.row({0, format_extension(f), ""});
    for (int k = 1; k <= times; ++k) {
      std::string chain;
      if (dual) {
        f = dual_promote(P, f);
      } else if (method == "slide") {
        const Promotion pr = promote_slide(P, f);
        chain = format_ints(pr.chain);
        f = pr.result;
      } else {
        f = promote_word(P, f);
      }
      t.row({k, format_extension(f), chain});
    }
    t.print(g.format);
  });

  auto* evac = app.add_subcommand("evacuate", "Evacuate a linear extension");
  evac->add_option("poset", poset_arg)->required();
  evac->add_option("--ext", ext_arg)->required();
  evac->add_option("--method", method)->check(CLI::IsMember({"slide", "word"}));
  evac->add_flag("--dual", dual, "Dual evacuation");
  evac->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const Poset& P = src.poset;
    const LinearExtension f = checked_ext(P, ext_arg);
    LinearExtension r;
    if (method == "slide") {
      r = dual ? dual_evacuate(P, f) : evacuate(P, f);
    } else {
      r = dual ? dual_evacuate_word(P, f) : evacuate_word(P, f);
    }
    Table t({"input", "output", "self_evacuating"});
    t.row({format_extension(f), format_extension(r), r == f});
    t.print(g.format);
  });

  // orbits / dihedral
  std::string op_name = "promotion";
  auto* orbits = app.add_subcommand("orbits", "Cycle structure of an operator on L(P)");
  orbits->add_option("poset", poset_arg)->required();
  orbits->add_option("--op", op_name)
      ->check(CLI::IsMember({"promotion", "evacuation", "dual_evacuation", "promotion_power"}));
  orbits->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const ExtensionIndex L(src.poset, g.cap);
    const OrbitOperator op = op_name == "promotion"         ? OrbitOperator::Promotion
                             : op_name == "evacuation"      ? OrbitOperator::Evacuation
                             : op_name == "dual_evacuation" ? OrbitOperator::DualEvacuation
                                                            : OrbitOperator::PromotionPowerP;
    const OrbitReport rep = orbit_structure(L, op);
    Table t({"operator", "extensions", "cycle_length", "cycles", "order"});
    for (const auto& [len, mult] : rep.cycles) t.row({rep.op, rep.extensions, len, mult, rep.order.get_str()});
    t.print(g.format);
  });

  auto* dihedral = app.add_subcommand("dihedral", "Order of the group generated by evacuation and its dual");
  dihedral->add_option("poset", poset_arg)->required();
  dihedral->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const ExtensionIndex L(src.poset, g.cap);
    const OperatorTable ops = operator_table(L);
    Table t({"poset", "extensions", "promotion_order", "promotion_power_order", "dihedral_order"});
    t.row({src.name, L.size(), perm_order(ops.promote).get_str(),
           perm_order(perm_power(ops.promote, BigInt(src.poset.size()))).get_str(),
           dihedral_group_order(ops.evacuate, ops.dual_evacuate).get_str()});
    t.print(g.format);
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Descent statistics, domino tableaux, sign balance");
  stats->require_subcommand(1);
  bool ordinary = false;
  auto* wprime = stats->add_subcommand("wprime", "W'_P(x) = sum of x^comaj");
  wprime->add_option("poset", poset_arg)->required();
  wprime->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const StatPoly W = wprime_poly(src.poset, g.cap);
    BigInt at = 0;
    for (int k = 0; k <= W.poly.degree(); ++k) at += (k % 2 ? -1 : 1) * W.poly.coeff(k);
    Table t({"poset", "wprime", "at_minus_one", "relabel"});
    t.row({src.name, W.poly.to_string("x"), at.get_str(), format_ints(W.relabel.old_to_new)});
    t.print(g.format);
  });
  auto* domino = stats->add_subcommand("domino", "Dual domino tableaux");
  domino->add_option("poset", poset_arg)->required();
  domino->add_flag("--ordinary", ordinary, "Ordinary instead of dual domino tableaux");
  domino->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const auto T = domino_tableaux(src.poset, ordinary ? DominoKind::Ordinary : DominoKind::Dual);
    Table t({"index", "word"});
    std::vector<std::string> words;
    for (const auto& tab : T) words.push_back(format_extension(domino_word(src.poset, tab)));
    std::sort(words.begin(), words.end());
    for (std::size_t k = 0; k < words.size(); ++k) t.row({k, words[k]});
    t.print(g.format);
  });
  auto* selfevac = stats->add_subcommand("selfevac", "Self-evacuating linear extensions");
  selfevac->add_option("poset", poset_arg)->required();
  selfevac->callback([&] {
    const auto src = load_poset_source(poset_arg);
    Table t({"index", "word"});
    std::size_t k = 0;
    for (const auto& f : self_evacuating(src.poset, g.cap)) t.row({k++, format_extension(f)});
    t.print(g.format);
  });
  auto* sb = stats->add_subcommand("signbalance", "Parity census and the sign-balance hypotheses");
  sb->add_option("poset", poset_arg)->required();
  sb->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const SignBalance s = sign_balance_report(src.poset, g.cap);
    Table t({"poset", "even", "odd", "balanced", "hyp_a", "uniform_ideals", "gamma", "hyp_b", "hyp_b_corrected"});
    t.row({src.name, s.even, s.odd, s.balanced, s.thm4a_applies, s.uniform_ideals, s.gamma, s.thm4b_applies,
           s.thm4b_corrected_applies});
    t.print(g.format);
  });

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Major index generating function and fixed points of promotion");
  sieve->require_subcommand(1);
  std::string shape_arg;
  std::string kind_arg;
  bool normalized = false;
  auto* sieveF = sieve->add_subcommand("F", "F(q) by summing q^maj and by hook lengths");
  sieveF->add_option("--shape", shape_arg, "rows,columns or a shape descriptor")->required();
  sieveF->callback([&] {
    const bool descriptor = shape_arg.find(':') != std::string::npos;
    const Shape s = shape_for(shape_arg, descriptor ? std::nullopt : std::optional(ShapeKind::Rectangle));
    const IntPoly sum = F_poly_sum(s, g.cap);
    const IntPoly hook = F_poly_hook(s);
    Table t({"shape", "F_sum", "F_hook", "equal"});
    t.row({s.to_string(), sum.to_string(), hook.to_string(), sum == hook});
    t.print(g.format);
    status = sum == hook ? 0 : 1;
  });
  auto* check = sieve->add_subcommand("check", "e_d(P) against F(zeta^d) on a rectangle");
  check->add_option("--shape", shape_arg, "rows,columns")->required();
  check->add_flag("--normalized", normalized, "Use F(q) / q^b instead of F(q)");
  check->callback([&] {
    const auto [m, n] = rect_dims(shape_arg);
    const auto rows = rhoades_check(m, n, normalized ? SievePoly::QHook : SievePoly::MajSum, g.cap);
    Table t({"d", "fixed", "at_root", "result"});
    bool ok = true;
    for (const auto& r : rows) {
      t.row({r.d, r.fixed.get_str(), r.at_root.get_str(), yes(r.pass)});
      ok = ok && r.pass;
    }
    t.print(g.format);
    status = ok ? 0 : 1;
  });
  auto* special = sieve->add_subcommand("special", "Promotion power and dihedral order on a special shape");
  special->add_option("--kind", kind_arg)->required();
  special->add_option("--shape", shape_arg)->required();
  special->callback([&] {
    const ShapeKind kind = parse_shape_kind(kind_arg);
    const Shape s = shape_for(shape_arg, kind);
    const SpecialShapeReport r = special_shape_check(s, kind, g.cap);
    Table t({"shape", "kind", "extensions", "power", "evacuation_formula", "dihedral_order", "expected", "result"});
    t.row({s.to_string(), kind_arg, r.extensions, r.power_ok, r.evacuation_formula_ok, r.dihedral_order.get_str(),
           r.expected_dihedral_order.get_str(), yes(r.pass())});
    t.print(g.format);
    status = r.pass() ? 0 : 1;
  });

  // hecke
  auto* hecke = app.add_subcommand("hecke", "Coefficients of the evacuation element of H_n(q)");
  hecke->require_subcommand(1);
  int n = 4;
  std::string w_arg;
  auto* cw = hecke->add_subcommand("cw", "c_w(q) for one or all w");
  cw->add_option("--n", n)->required();
  cw->add_option("--w", w_arg, "Permutation such as 2413");
  cw->callback([&] {
    const HeckeElt E = evacuation_element(n, g.hecke_cap);
    if (!w_arg.empty()) {
      const Perm w = parse_perm(w_arg);
      if (w.n() != n) throw ParseError("permutation is not in S_" + std::to_string(n));
      if (g.format == "json") {
        std::cout << json{{"w", w.to_string()}, {"c", ratfunc_json(E.coeff(w))}}.dump(2) << "\n";
      } else {
        std::cout << E.coeff(w).display() << "\n";
      }
      return;
    }
    Table t({"w", "c"});
    for (const Perm& w : all_perms(n)) {
      const RatFunc c = E.coeff(w);
      t.row({w.to_string(), g.format == "json" ? ratfunc_json(c) : json(c.display())});
    }
    t.print(g.format);
  });
  auto* hverify = hecke->add_subcommand("verify", "Check c_id or the (q-1)-divisibility bound");
  hverify->require_subcommand(1);
  auto* cid = hverify->add_subcommand("cid", "c_id = ((q-1)/(q+1))^floor(n/2)");
  cid->add_option("--n", n)->required();
  cid->callback([&] { status = print_suite(verify_thm8(n, n, g.hecke_cap), g); });
  auto* div = hverify->add_subcommand("div", "(q-1)^(n - kappa(w reversed)) divides c_w");
  div->add_option("--n", n)->required();
  div->callback([&] {
    const auto rows = check_thm_divisibility(n, g.hecke_cap);
    Table t({"w", "bound", "order", "divisible", "tight"});
    bool ok = true;
    for (const auto& r : rows) {
      t.row({r.w.to_string(), r.bound, r.order, yes(r.divisible), r.tight});
      ok = ok && r.divisible;
    }
    t.print(g.format);
    status = ok ? 0 : 1;
  });

  // slender / crosspoly / flags
  auto* slender = app.add_subcommand("slender", "Maximal chains of graded posets");
  slender->require_subcommand(1);
  bool use_ideals = false;
  auto* scheck = slender->add_subcommand("check", "Slenderness, dual domino chains, self-evacuating chains");
  scheck->add_option("poset", poset_arg)->required();
  scheck->add_flag("--ideals", use_ideals, "Use the lattice of order ideals J(P)");
  scheck->callback([&] {
    const auto src = load_poset_source(poset_arg);
    const GradedPoset Q = use_ideals ? ideal_lattice_graded(src.poset) : GradedPoset::from_poset(src.poset);
    const SlenderReport r = slender_report(Q);
    Table t({"poset", "rank", "slender", "chain_intervals", "square_intervals", "chains", "dual_domino",
             "self_evacuating", "promotion_order", "dihedral_order", "involutions", "power"});
    t.row({src.name, r.rank, r.slender, r.chain_intervals, r.square_intervals, r.chains, r.dual_domino.get_str(),
           r.self_evacuating, r.promotion_order.get_str(), r.dihedral_order.get_str(), r.involutions_ok,
           r.power_ok});
    t.print(g.format);
    status = !r.slender || (r.involutions_ok && r.power_ok && r.dual_domino == r.self_evacuating) ? 0 : 1;
  });

  std::string signed_arg;
  auto* cross = app.add_subcommand("crosspoly", "Face lattice of the cross-polytope");
  cross->add_option("--n", n)->required();
  cross->add_option("--w", signed_arg, "Signed permutation such as 1,2,-3");
  cross->callback([&] {
    if (!signed_arg.empty()) {
      const SignedPerm w = parse_signed_perm(signed_arg);
      Table t({"w", "delta", "gamma", "gamma_star", "delta_pow"});
      t.row({w.to_string(), signed_delta(w).to_string(), signed_gamma(w).to_string(),
             signed_gamma_star(w).to_string(), signed_deltapow(w).to_string()});
      t.print(g.format);
      return;
    }
    status = print_suite(verify_crosspoly(n, n), g);
  });

  int q = 2;
  bool verify_hecke = false;
  auto* flags = app.add_subcommand("flags", "Flags of F_q^n and their Bruhat cells");
  flags->add_option("--n", n)->required();
  flags->add_option("--q", q)->check(CLI::IsMember({2, 3}));
  flags->add_flag("--verify-hecke", verify_hecke, "Compare flag evacuation with c_w(q)");
  flags->callback([&] {
    if (verify_hecke) {
      const HeckeConsistency h = hecke_consistency(n, q, g.hecke_cap);
      Table t({"w", "cell_size", "constant", "coefficient", "c_w(q)", "result"});
      for (const auto& c : h.cells) {
        t.row({c.w.to_string(), c.size, c.constant, c.coefficient.get_str(), c.expected.get_str(), yes(c.ok)});
      }
      t.print(g.format);
      if (!h.ok) std::cerr << "witness: " << h.witness << "\n";
      status = h.ok ? 0 : 1;
      return;
    }
    const SubspaceLattice L = subspace_lattice(n, q);
    Table t({"flag", "cell"});
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& m : maximal_chains(L.Q)) {
      rows.emplace_back(flag_to_string(L, m), bruhat_cell(L, m, L.standard_flag).to_string());
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [f, c] : rows) t.row({f, c});
    t.print(g.format);
  });

  // verify
  std::string verify_id;
  std::vector<std::string> poset_list;
  std::vector<std::string> rect_list;
  int n_min = 2;
  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("id", verify_id)->required()->check(CLI::IsMember(verify_ids()));
  verify->add_option("--poset", poset_list, "Poset files or shapes (default: the bundled corpus)");
  verify->add_option("--n", n_max, "Largest n for Hecke suites");
  verify->add_option("--n-min", n_min, "Smallest n for Hecke suites");
  verify->add_option("--kind", kind_arg, "Shape family for thm6");
  verify->add_option("--shape", shape_arg, "Shape for thm6");
  verify->add_option("--rect", rect_list, "rows,columns for thm7 (repeatable)");
  verify->callback([&] {
    VerifyOptions opt;
    opt.cap = g.cap;
    opt.hecke_cap = g.hecke_cap;
    opt.seed = g.seed;
    opt.n_min = n_min;
    opt.n_max = n_max;
    const bool needs_posets = verify_id != "thm6" && verify_id != "thm7" && verify_id != "thm8" &&
                              verify_id != "thm9";
    if (needs_posets) opt.posets = sources(poset_list);
    if (!shape_arg.empty()) {
      std::optional<ShapeKind> kind;
      if (!kind_arg.empty()) kind = parse_shape_kind(kind_arg);
      opt.shapes.push_back({shape_for(shape_arg, kind), kind});
    }
    for (const auto& r : rect_list) opt.rectangles.push_back(rect_dims(r));
    status = print_suite(run_verify(verify_id, opt), g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << " (cycle " << format_ints(e.witness()) << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
