// ty: exact computer algebra for (twisted) Yangians of simple Lie
// algebras in the Drinfel'd presentation. Subcommands build algebras and
// symmetric pairs, export the closure-relation coefficient tensors, and
// run the exact verification suites with machine-readable reports.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ty/coeffs.hpp"
#include "ty/error.hpp"
#include "ty/fixtures.hpp"
#include "ty/golden.hpp"
#include "ty/json_io.hpp"
#include "ty/loop.hpp"
#include "ty/ncpoly.hpp"

namespace {

using ty::Json;
using Clock = std::chrono::steady_clock;

ty::LieAlgebra load_algebra(const std::string& spec) {
  if (ty::fixtures::is_algebra_name(spec)) return ty::fixtures::algebra(spec);
  return ty::algebra_from_json(ty::read_json_file(spec));
}

ty::SymmetricPair load_pair(const std::string& spec) {
  if (ty::fixtures::is_pair_name(spec)) return ty::fixtures::pair(spec);
  return ty::pair_from_json(ty::read_json_file(spec));
}

int finish(ty::Report rep, int64_t ms, const std::string& report_path) {
  rep.runtime_ms = ms;
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << rep.suite << "/" << c.id;
    if (!c.pass && c.witness) std::cout << "  witness: " << *c.witness;
    std::cout << "\n";
  }
  if (!report_path.empty()) ty::write_json_file(report_path, ty::report_to_json(rep));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted-Yangian structure tensors and verification suites"};
  app.require_subcommand(1);

  // algebra build
  auto* algebra = app.add_subcommand("algebra", "construct Lie algebra data");
  auto* algebra_build = algebra->add_subcommand("build", "build a classical algebra");
  std::string family = "sl", form = "trace", out_path;
  int n = 3;
  algebra_build->add_option("--family", family, "sl | so | sp | sl3-chevalley");
  algebra_build->add_option("--n", n, "rank parameter of the family");
  algebra_build->add_option("--form", form, "killing | trace");
  algebra_build->add_option("--out", out_path, "output JSON path")->required();

  // pair build
  auto* pair_cmd = app.add_subcommand("pair", "construct symmetric-pair data");
  auto* pair_build = pair_cmd->add_subcommand("build", "decompose an algebra by an involution");
  std::string pair_algebra, pair_involution, pair_fixture, pair_out;
  pair_build->add_option("--algebra", pair_algebra, "algebra JSON path or fixture name");
  pair_build->add_option("--involution", pair_involution, "involution JSON path");
  pair_build->add_option("--fixture", pair_fixture,
                         "built-in pair name (sl3-so3, sl3-gl2, sl3-even, sl4-diag)");
  pair_build->add_option("--out", pair_out, "output JSON path")->required();

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "compute closure-relation coefficient tensors");
  std::string coeffs_pair, coeffs_algebra, coeffs_out;
  bool coeffs_even = false;
  coeffs->add_option("--pair", coeffs_pair, "pair JSON path or fixture name");
  coeffs->add_option("--algebra", coeffs_algebra, "algebra JSON path or fixture name");
  coeffs->add_flag("--even", coeffs_even, "even twisted coefficients of an algebra");
  coeffs->add_option("--out", coeffs_out, "output JSON path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, v_algebra, v_pair, report_path;
  int max_degree = 5;
  verify->add_option("--suite", suite,
                     "classical | proof-identities | lemmas | coideal | hopf")
      ->required();
  verify->add_option("--algebra", v_algebra, "algebra JSON path or fixture name");
  verify->add_option("--pair", v_pair, "pair JSON path or fixture name");
  verify->add_option("--max-degree", max_degree, "degree cutoff for the current-algebra checks");
  verify->add_option("--report", report_path, "write the JSON report here");

  // sl3-golden
  auto* golden = app.add_subcommand("sl3-golden", "reference tables for the sl3 pairs");
  std::string golden_report;
  golden->add_option("--report", golden_report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto t0 = Clock::now();
    auto elapsed = [&] {
      return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    };

    if (algebra_build->parsed()) {
      ty::LieAlgebra L;
      if (family == "sl3-chevalley") {
        L = ty::sl3_chevalley();
      } else {
        ty::Family fam;
        if (family == "sl") fam = ty::Family::sl;
        else if (family == "so") fam = ty::Family::so;
        else if (family == "sp") fam = ty::Family::sp;
        else throw ty::Error("unknown family '" + family + "'");
        ty::FormKind fk;
        if (form == "killing") fk = ty::FormKind::Killing;
        else if (form == "trace") fk = ty::FormKind::Trace;
        else throw ty::Error("unknown form '" + form + "'");
        L = ty::classical_algebra(fam, n, fk);
      }
      ty::write_json_file(out_path, ty::algebra_to_json(L));
      std::cout << "wrote " << out_path << " (dim " << L.dim() << ", c_g "
                << L.casimir_adjoint << ")\n";
      return 0;
    }

    if (pair_build->parsed()) {
      ty::SymmetricPair P;
      if (!pair_fixture.empty()) {
        P = ty::fixtures::pair(pair_fixture);
      } else {
        if (pair_algebra.empty() || pair_involution.empty())
          throw ty::Error("pair build needs --fixture, or --algebra with --involution");
        ty::LieAlgebra L = load_algebra(pair_algebra);
        ty::Involution th = ty::involution_from_json(ty::read_json_file(pair_involution));
        P = ty::decompose(L, th);
      }
      ty::write_json_file(pair_out, ty::pair_to_json(P));
      std::cout << "wrote " << pair_out << " (dim h " << P.hdim() << ", dim m " << P.mdim()
                << ")\n";
      return 0;
    }

    if (coeffs->parsed()) {
      ty::CoeffBundle b;
      if (!coeffs_pair.empty()) {
        b = ty::bundle_for_pair(load_pair(coeffs_pair));
      } else if (coeffs_even && !coeffs_algebra.empty()) {
        b = ty::bundle_for_even(load_algebra(coeffs_algebra));
      } else {
        throw ty::Error("coeffs needs --pair, or --algebra with --even");
      }
      ty::write_json_file(coeffs_out, ty::bundle_to_json(b));
      std::cout << "wrote " << coeffs_out << "\n";
      return 0;
    }

    if (verify->parsed()) {
      ty::Report rep;
      std::optional<ty::LieAlgebra> L;
      std::optional<ty::SymmetricPair> P;
      if (!v_algebra.empty()) L = load_algebra(v_algebra);
      if (!v_pair.empty()) P = load_pair(v_pair);
      if (P && !L) L = P->parent;

      if (suite == "classical") {
        if (P && !P->identity_theta()) {
          rep = ty::check_drinfeld_basis(*P, max_degree);
          rep.merge(ty::check_classical_relations(*P));
          rep.merge(ty::check_drinfeld_basis(P->parent, max_degree));
          rep.merge(ty::check_classical_relations(P->parent));
        } else if (L) {
          rep = ty::check_drinfeld_basis(*L, max_degree);
          rep.merge(ty::check_classical_relations(*L));
        } else {
          throw ty::Error("verify --suite classical needs --algebra or --pair");
        }
        rep.suite = "classical";
      } else if (suite == "proof-identities") {
        if (!L) throw ty::Error("verify --suite proof-identities needs --algebra or --pair");
        rep = ty::verify_proof_identities(*L, P && !P->identity_theta() ? &*P : nullptr);
      } else if (suite == "lemmas") {
        if (!L) throw ty::Error("verify --suite lemmas needs --algebra");
        rep = ty::check_omega_bracket_identities(*L);
        rep.merge(ty::check_symmetrizer_identities());
        rep.suite = "lemmas";
      } else if (suite == "coideal") {
        if (P && !P->identity_theta()) {
          rep = ty::check_coideal_proper(*P);
          rep.merge(ty::check_coproduct_axioms(P->parent));
        } else if (L) {
          rep = ty::check_coideal_even(*L);
          rep.merge(ty::check_coproduct_axioms(*L));
        } else {
          throw ty::Error("verify --suite coideal needs --algebra or --pair");
        }
        rep.suite = "coideal";
      } else if (suite == "hopf") {
        if (!L) throw ty::Error("verify --suite hopf needs --algebra");
        rep = ty::check_coproduct_axioms(*L);
        rep.merge(ty::check_antipode_counit(*L, P && !P->identity_theta() ? &*P : nullptr));
        rep.suite = "hopf";
      } else {
        throw ty::Error("unknown suite '" + suite + "'");
      }
      return finish(std::move(rep), elapsed(), report_path);
    }

    if (golden->parsed()) {
      ty::Report rep = ty::sl3_golden_suite();
      return finish(std::move(rep), elapsed(), golden_report);
    }
  } catch (const ty::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
