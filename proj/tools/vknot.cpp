#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vknot/catalog.hpp"
#include "vknot/diagram_moves.hpp"
#include "vknot/error.hpp"
#include "vknot/report.hpp"

using namespace vknot;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// `@path` reads a table file; anything else goes to named_birack.
FiniteBirack load_birack(const std::string& spec) {
  if (spec.starts_with("@")) return parse_birack(read_file(spec.substr(1)));
  return named_birack(spec);
}

PlanarDiagram load_diagram(const std::string& spec) {
  for (const auto& e : builtin_catalog())
    if (e.name == spec) {
      if (!e.diagram) throw Error(ErrorCode::InvalidInput, spec + " is stored as a Gauss code");
      return *e.diagram;
    }
  return parse_pd(read_file(spec));
}

Json catalog_json() {
  Json list = Json::array();
  for (const auto& e : builtin_catalog()) {
    Json expected = Json::object();
    for (const auto& [k, v] : e.expected) expected[k] = v;
    list.push_back(Json{{"name", e.name}, {"encoding", e.encoding}, {"note", e.note}, {"expected", expected}});
  }
  return Json{{"version", kToolVersion}, {"entries", list}};
}

HomologyVariant parse_variant(const std::string& s) {
  if (s == "full") return HomologyVariant::Full;
  if (s == "quotient" || s == "quandle" || s == "biquandle") return HomologyVariant::BiquandleQuotient;
  throw Error(ErrorCode::UnknownFlag, "unknown homology variant: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual knot invariants, biracks and virtual braids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // invariants
  auto* inv = app.add_subcommand("invariants", "Invariant report for a code or catalog name");
  std::string inv_input;
  inv->add_option("input", inv_input, "Gauss code or catalog name")->required();
  bool all = false;
  inv->add_flag("--all", all, "Every invariant (the default)");
  std::vector<std::pair<std::string, bool>> picks;
  for (const auto& n : invariant_names()) picks.emplace_back(n, false);
  for (auto& [name, on] : picks) {
    const std::string flag = name == "state_sum" ? "--bracket" : "--" + name;
    inv->add_flag(flag, on, "Include " + name);
  }

  // distinguish
  auto* dis = app.add_subcommand("distinguish", "Look for an invariant separating two inputs");
  std::string dis_a, dis_b;
  dis->add_option("a", dis_a, "Gauss code or catalog name")->required();
  dis->add_option("b", dis_b, "Gauss code or catalog name")->required();

  // catalog
  auto* cat = app.add_subcommand("catalog", "List the built-in catalog");

  // homology
  auto* hom = app.add_subcommand("homology", "Birack homology");
  std::string birack_spec = "R3", variant_name = "full";
  std::size_t degree = 2, cube_cap = kDefaultCubeCap;
  bool use_double = false, want_pi1 = false;
  hom->add_option("--birack", birack_spec, "R<m>, T<m>, table text or @file")->capture_default_str();
  hom->add_option("--degree", degree, "Homology degree")->capture_default_str()->check(CLI::PositiveNumber);
  hom->add_option("--variant", variant_name, "full | quotient (also: quandle, biquandle)")->capture_default_str();
  hom->add_option("--cap", cube_cap, "Largest number of cubes per degree")->capture_default_str();
  hom->add_flag("--double", use_double, "Use the double of the birack");
  hom->add_flag("--pi1", want_pi1, "Also report the rack-space fundamental group");

  // braid
  auto* br = app.add_subcommand("braid", "Virtual braid words");
  std::string word;
  int strands = 2;
  bool do_close = false, do_rho = false, do_verify = false, do_flat = false, with_invariants = false;
  br->add_option("--word", word, "Tokens s<i>, S<i>, r<i>");
  br->add_option("--n", strands, "Strand count")->required();
  br->add_flag("--close", do_close, "Gauss code of the closure");
  br->add_flag("--invariants", with_invariants, "With --close: invariant report of the closure");
  br->add_flag("--rho", do_rho, "Image in Aut(F_{n+1})");
  br->add_flag("--verify", do_verify, "Check the presentation under the representation");
  br->add_flag("--flat", do_flat, "Reduce in the flat virtual braid group");

  // simplify
  auto* simp = app.add_subcommand("simplify", "Search for a code with fewer crossings");
  std::string simp_input;
  int budget = 4;
  bool emit_certificate = false;
  simp->add_option("input", simp_input, "Gauss code or catalog name")->required();
  simp->add_option("--budget", budget, "Search depth in moves")->capture_default_str();
  simp->add_flag("--emit-certificate", emit_certificate, "Include the move sequence");

  // flat-linking
  auto* fl = app.add_subcommand("flat-linking", "Inter-component virtual crossing parity of a diagram");
  std::string fl_input;
  std::size_t fl_moves = 0;
  std::uint64_t seed = 1;
  fl->add_option("input", fl_input, "Catalog name or PD file")->required();
  fl->add_option("--moves", fl_moves, "Random flat moves to apply first")->capture_default_str();
  fl->add_option("--seed", seed, "Random seed for the moves")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*inv) {
      std::vector<std::string> names;
      for (const auto& [name, on] : picks)
        if (on) names.push_back(name);
      if (all || names.empty()) names = invariant_names();
      emit(invariant_report(resolve_code(inv_input), names, inv_input));
    } else if (*dis) {
      emit(to_json(distinguish(resolve_code(dis_a), resolve_code(dis_b)), dis_a, dis_b));
    } else if (*cat) {
      emit(catalog_json());
    } else if (*hom) {
      auto b = load_birack(birack_spec);
      if (use_double) b = double_birack(b);
      const auto variant = parse_variant(variant_name);
      const auto complex = boundary_matrices(b, degree + 1, cube_cap);
      Json out{{"version", kToolVersion},
               {"birack", b},
               {"variant", variant == HomologyVariant::Full ? "full" : "quotient"},
               {"degree", degree}};
      out.update(Json(homology(complex, degree, variant)));
      if (want_pi1) {
        const auto p = pi1_presentation(b);
        out["pi1"] = Json{{"presentation", p}, {"abelianization", abelianization(p)}};
      }
      emit(out);
    } else if (*br) {
      const auto w = parse_braid(word, strands);
      Json out{{"version", kToolVersion}, {"braid", w}};
      if (do_close) {
        const auto code = close_braid(w);
        out["closure"] = code;
        if (with_invariants) out["invariants"] = invariant_report(code, invariant_names(), code.to_string());
      }
      if (do_rho) out["rho"] = rho_image(w);
      if (do_verify) out["presentation"] = verify_presentation(strands);
      if (do_flat) out["flat"] = flat_quotient(w);
      emit(out);
    } else if (*simp) {
      const auto code = resolve_code(simp_input);
      const auto res = simplify(code, budget);
      Json out{{"version", kToolVersion},
               {"input", code},
               {"result", res.code},
               {"chords", Json::array({code.chord_count(), res.code.chord_count()})},
               {"exhausted", res.exhausted}};
      if (emit_certificate) out["certificate"] = res.certificate;
      emit(out);
    } else if (*fl) {
      auto pd = load_diagram(fl_input);
      const int before = inter_component_virtual_parity(pd);
      std::mt19937_64 rng(seed);
      Json applied = Json::array();
      for (std::size_t k = 0; k < fl_moves; ++k) {
        const auto rec = apply_random_flat_move(pd, rng);
        if (!rec) break;
        applied.push_back(to_string(rec->type));
      }
      emit(Json{{"version", kToolVersion},
                {"input", fl_input},
                {"parity", before},
                {"moves", applied},
                {"parity_after_moves", inter_component_virtual_parity(pd)},
                {"diagram", pd}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::SizeCap ? kExitCap : kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
