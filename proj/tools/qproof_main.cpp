// qproof: generate, check, and translate QBF proof artifacts.
//
// Exit codes: 0 verified/success, 1 invalid proof, 2 translation blocked,
// 3 parse or usage error. Machine-readable verdicts go to stdout as a
// single "RESULT:" line; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qproof/dependency.hpp"
#include "qproof/expansion.hpp"
#include "qproof/families.hpp"
#include "qproof/qbf.hpp"
#include "qproof/qdimacs.hpp"
#include "qproof/qrat.hpp"
#include "qproof/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBlocked = 2;
constexpr int kExitUsage = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run_gen(const std::string& family, int n, bool with_proof,
            std::string basename) {
  qproof::Qbf f;
  qproof::ExpansionProof proof;
  if (family == "phi") {
    f = qproof::gen_phi(n);
    if (with_proof) proof = qproof::gen_phi_proof(n);
    if (basename.empty()) basename = "phi" + std::to_string(n);
  } else {
    f = qproof::gen_psi0();
    if (with_proof) proof = qproof::gen_psi0_proof();
    if (basename.empty()) basename = "psi0";
  }
  write_file(basename + ".qdimacs", qproof::emit_qdimacs_string(f));
  std::cerr << "wrote " << basename << ".qdimacs\n";
  if (with_proof) {
    write_file(basename + ".irp",
               qproof::emit_expansion_proof_string(proof));
    std::cerr << "wrote " << basename << ".irp\n";
  }
  return kExitOk;
}

int run_check_expansion(const std::string& calculus, const std::string& qbf,
                        const std::string& proof_path) {
  qproof::Qbf f = qproof::parse_qdimacs_file(qbf);
  qproof::ExpansionProof p = qproof::parse_expansion_proof_file(proof_path, f);
  qproof::Calculus want = calculus == "ircalc" ? qproof::Calculus::IrCalc
                                               : qproof::Calculus::ExpRes;
  if (p.calculus != want) {
    std::cerr << "error: proof file is for the other calculus\n";
    return kExitUsage;
  }
  qproof::ExpansionVerdict v = qproof::check_expansion_proof(f, p);
  for (const std::string& w : v.warnings) std::cerr << "warning: " << w << '\n';
  if (!v.valid) {
    std::cerr << "invalid step " << v.failed_step << ": " << v.reason << '\n';
    std::cout << "RESULT: INVALID step=" << v.failed_step << '\n';
    return kExitInvalid;
  }
  if (!p.is_refutation())
    std::cerr << "note: proof is valid but does not derive the empty clause\n";
  std::cout << "RESULT: VERIFIED\n";
  return kExitOk;
}

int run_check_qrat(const std::string& qbf, const std::string& proof_path,
                   const std::string& map_path) {
  qproof::Qbf f = qproof::parse_qdimacs_file(qbf);
  qproof::QratProof p = qproof::parse_qrat_file(proof_path);
  if (!map_path.empty()) {
    // Sidecar map is documentation; nothing in the check depends on it.
    std::ifstream in(map_path);
    if (!in) throw std::runtime_error("cannot open " + map_path);
  }
  qproof::QratVerdict v = qproof::check_qrat_proof(f, p);
  if (!v.verified()) {
    std::cerr << "invalid step " << v.failed_step << " (" << v.rule
              << "): " << v.reason << '\n';
    std::cout << "RESULT: INVALID step=" << v.failed_step << '\n';
    return kExitInvalid;
  }
  std::cerr << (v.outcome == qproof::QratOutcome::VerifiedRefutation
                    ? "verified refutation\n"
                    : "verified derivation (no empty clause)\n");
  std::cout << "RESULT: VERIFIED\n";
  return kExitOk;
}

// The translator never self-certifies; the checker gates every output file.
int finish_translation(const qproof::Qbf& f, const qproof::QratProof& result,
                       const qproof::VarTable& table,
                       const std::string& out_path,
                       const std::string& map_out) {
  qproof::QratVerdict v = qproof::check_qrat_proof(f, result);
  if (v.outcome != qproof::QratOutcome::VerifiedRefutation) {
    std::cerr << "internal error: emitted proof failed verification at step "
              << v.failed_step << ": " << v.reason << '\n';
    std::cout << "RESULT: INVALID step=" << v.failed_step << '\n';
    return kExitInvalid;
  }
  write_file(out_path, qproof::emit_qrat_string(result));
  std::cerr << "wrote " << out_path << '\n';
  if (!map_out.empty()) {
    write_file(map_out, qproof::emit_var_map_string(table));
    std::cerr << "wrote " << map_out << '\n';
  }
  std::cout << "RESULT: VERIFIED\n";
  return kExitOk;
}

int run_translate(const std::string& calculus, const std::string& qbf,
                  const std::string& proof_path, const std::string& out_path,
                  const std::string& map_out) {
  qproof::Qbf f = qproof::parse_qdimacs_file(qbf);
  qproof::ExpansionProof p = qproof::parse_expansion_proof_file(proof_path, f);

  qproof::ExpansionVerdict input_check = qproof::check_expansion_proof(f, p);
  if (!input_check.valid) {
    std::cerr << "input proof invalid at step " << input_check.failed_step
              << ": " << input_check.reason << '\n';
    std::cout << "RESULT: INVALID step=" << input_check.failed_step << '\n';
    return kExitInvalid;
  }

  if (calculus == "expres") {
    if (p.calculus != qproof::Calculus::ExpRes) {
      std::cerr << "error: proof file is not a resolution-only proof\n";
      return kExitUsage;
    }
    qproof::ExpResTranslation t = qproof::translate_expres_to_qrat(f, p);
    return finish_translation(f, t.proof, t.table, out_path, map_out);
  }

  if (p.calculus != qproof::Calculus::IrCalc) {
    std::cerr << "error: proof file is not an instantiation-calculus proof\n";
    return kExitUsage;
  }
  qproof::IrcalcTranslation t = qproof::translate_ircalc_to_qrat(f, p);
  if (t.blocked) {
    std::cout << qproof::blocked_report(*t.witness);
    std::cerr << "translation halted: universal " << t.witness->universal
              << " still connects to its complement\n";
    return kExitBlocked;
  }
  return finish_translation(f, t.proof, t.table, out_path, map_out);
}

int run_paths(const std::string& qbf, int universal) {
  qproof::Qbf f = qproof::parse_qdimacs_file(qbf);
  if (!f.declared(universal) || !f.universal(universal)) {
    std::cerr << "error: " << universal << " is not a universal variable\n";
    return kExitUsage;
  }
  std::optional<qproof::ResolutionPath> path =
      qproof::find_blocking_path(f, universal);
  if (!path) {
    std::cerr << "no blocking path for u=" << universal << '\n';
    return kExitOk;
  }
  std::cout << "RESULT: BLOCKED u=" << universal << '\n';
  std::cout << "path: ";
  for (size_t i = 0; i < path->clause_indices.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << 'C' << path->clause_indices[i] + 1;
  }
  std::cout << '\n';
  for (size_t i = 0; i < path->clause_indices.size(); ++i)
    std::cerr << "  C" << path->clause_indices[i] + 1 << " = "
              << qproof::clause_to_string(f.clause(path->clause_indices[i]))
              << '\n';
  return kExitBlocked;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QBF proof workbench: expansion-calculus and clausal-script "
               "checkers plus proof translators"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a formula family instance");
  gen->require_subcommand(1);
  int phi_n = 1;
  bool phi_proof = false, psi_proof = false;
  std::string phi_base, psi_base;
  auto* gen_phi_cmd = gen->add_subcommand("phi", "ladder family");
  gen_phi_cmd->add_option("--n", phi_n, "family index")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_phi_cmd->add_flag("--proof", phi_proof, "also write the bundled proof");
  gen_phi_cmd->add_option("-o,--output", phi_base, "output basename");
  auto* gen_psi_cmd = gen->add_subcommand("psi0", "four-block example");
  gen_psi_cmd->add_flag("--proof", psi_proof, "also write the bundled proof");
  gen_psi_cmd->add_option("-o,--output", psi_base, "output basename");

  // check
  auto* check = app.add_subcommand("check", "verify a proof");
  check->require_subcommand(1);
  std::string c_qbf, c_proof, c_map;
  auto* check_ir = check->add_subcommand("ircalc", "instantiation calculus");
  check_ir->add_option("qbf", c_qbf)->required();
  check_ir->add_option("proof", c_proof)->required();
  auto* check_ex = check->add_subcommand("expres", "expansion resolution");
  check_ex->add_option("qbf", c_qbf)->required();
  check_ex->add_option("proof", c_proof)->required();
  auto* check_qr = check->add_subcommand("qrat", "clausal script");
  check_qr->add_option("qbf", c_qbf)->required();
  check_qr->add_option("proof", c_proof)->required();
  check_qr->add_option("--map", c_map, "sidecar variable map");

  // translate
  auto* tr = app.add_subcommand("translate", "lower an expansion proof to "
                                             "the clausal script format");
  tr->require_subcommand(1);
  std::string t_qbf, t_proof, t_out, t_map;
  auto* tr_ir = tr->add_subcommand("ircalc", "two-pass translation");
  tr_ir->add_option("qbf", t_qbf)->required();
  tr_ir->add_option("proof", t_proof)->required();
  tr_ir->add_option("-o,--output", t_out)->required();
  tr_ir->add_option("--map-out", t_map, "write the variable map");
  auto* tr_ex = tr->add_subcommand("expres", "direct translation");
  tr_ex->add_option("qbf", t_qbf)->required();
  tr_ex->add_option("proof", t_proof)->required();
  tr_ex->add_option("-o,--output", t_out)->required();
  tr_ex->add_option("--map-out", t_map, "write the variable map");

  // paths
  auto* paths = app.add_subcommand("paths", "blocking-path report");
  std::string p_qbf;
  int p_universal = 0;
  paths->add_option("qbf", p_qbf)->required();
  paths->add_option("--universal", p_universal, "universal variable id")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_phi_cmd->parsed())
      return run_gen("phi", phi_n, phi_proof, phi_base);
    if (gen_psi_cmd->parsed()) return run_gen("psi0", 0, psi_proof, psi_base);
    if (check_ir->parsed()) return run_check_expansion("ircalc", c_qbf, c_proof);
    if (check_ex->parsed()) return run_check_expansion("expres", c_qbf, c_proof);
    if (check_qr->parsed()) return run_check_qrat(c_qbf, c_proof, c_map);
    if (tr_ir->parsed())
      return run_translate("ircalc", t_qbf, t_proof, t_out, t_map);
    if (tr_ex->parsed())
      return run_translate("expres", t_qbf, t_proof, t_out, t_map);
    if (paths->parsed()) return run_paths(p_qbf, p_universal);
  } catch (const qproof::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
