// dmcalc: expansions, pairings and verification batches from the command line.
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource cap.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "drinfeld/commands.hpp"

using namespace drinfeld;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kResource = 3;

std::optional<std::string> golden_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("DMCALC_GOLDEN_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modules: Tate-Drinfeld expansions, h-structures, Weil pairings"};
  app.require_subcommand(1);

  std::uint64_t q = 2;
  std::uint32_t p = 0;
  unsigned ext = 2;
  long prec = 16;
  std::string n = "t";
  std::uint64_t seed = 1;
  std::string golden;

  auto* td = app.add_subcommand("td-coeffs", "a1, a2, b_h and l of the Tate-Drinfeld module mod x^prec");
  bool write_golden = false;
  td->add_option("--q", q, "constant field size")->check(CLI::PositiveNumber);
  td->add_option("--p", p, "characteristic (checked against q)");
  td->add_option("--prec", prec, "x-adic precision")->check(CLI::Range(2L, 4096L));
  td->add_option("--golden-dir", golden, "golden directory (default: $DMCALC_GOLDEN_DIR)");
  td->add_flag("--write-golden", write_golden, "store the output as the golden file");

  WeilRequest wr;
  std::vector<std::uint64_t> module;
  std::uint64_t P = 0, Q = 0;
  long long scale = 0;
  auto* weil = app.add_subcommand("weil", "f_H(P ^ Q) and the pairing table on an A/(n)-basis");
  weil->add_option("--q", q, "constant field size")->check(CLI::PositiveNumber);
  weil->add_option("--p", p, "characteristic (checked against q)");
  weil->add_option("--ext", ext, "k = F_{q^ext}")->check(CLI::Range(1u, 12u));
  weil->add_option("--n", n, "modulus, e.g. t^2+t+1 or 1,1,1");
  weil->add_option("--seed", seed, "seed for the module search");
  auto* mod_opt = weil->add_option("--module", module, "theta,alpha1,alpha2 as element indices of k")->delimiter(',')->expected(3);
  auto* p_opt = weil->add_option("--P", P, "index of P in E[n] (default: first basis point)");
  auto* q_opt = weil->add_option("--Q", Q, "index of Q in E[n] (default: second basis point)");
  auto* scale_opt = weil->add_option("--scale-h", scale, "rerun with [c]H = c^{-1} H");

  std::string suite;
  std::vector<std::uint64_t> qs;
  auto* verify = app.add_subcommand("verify", "run invariant suites; JSON report on stdout");
  verify->add_option("suite", suite, "algebra, ore, drinfeld, motive, td, derham or all")
      ->required()
      ->check(CLI::IsMember({"algebra", "ore", "drinfeld", "motive", "td", "derham", "all"}));
  verify->add_option("--q", qs, "constant field sizes (default 2 3)")->delimiter(',');
  verify->add_option("--p", p, "characteristic (checked against every q)");
  verify->add_option("--ext", ext, "k = F_{q^ext} for the random modules")->check(CLI::Range(1u, 12u));
  verify->add_option("--prec", prec, "x-adic precision")->check(CLI::Range(2L, 4096L));
  verify->add_option("--n", n, "level, e.g. t or 0,1");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_option("--golden-dir", golden, "golden directory (default: $DMCALC_GOLDEN_DIR)");

  auto* dr = app.add_subcommand("derham", "cusp de Rham data of the Tate-Drinfeld module mod x^prec");
  dr->add_option("--q", q, "constant field size")->check(CLI::PositiveNumber);
  dr->add_option("--p", p, "characteristic (checked against q)");
  dr->add_option("--prec", prec, "x-adic precision")->check(CLI::Range(2L, 4096L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kPass : kUsage;
  }

  const auto pchk = p ? std::optional<std::uint32_t>(p) : std::nullopt;
  try {
    if (*td) {
      fq_from_q(q, pchk);
      const std::string text = dump(td_coeffs_json(q, prec));
      if (write_golden) {
        auto dir = golden_dir(golden);
        if (!dir) throw DomainError("--write-golden needs --golden-dir or DMCALC_GOLDEN_DIR");
        std::filesystem::create_directories(*dir);
        const auto path = std::filesystem::path(*dir) / golden_file_name(q, prec);
        std::ofstream(path) << text;
        std::cerr << "wrote " << path.string() << "\n";
      }
      std::cout << text;
      return kPass;
    }
    if (*weil) {
      fq_from_q(q, pchk);
      wr.q = q;
      wr.ext = ext;
      wr.n = n;
      wr.seed = seed;
      if (*mod_opt) wr.module = module;
      if (*p_opt) wr.P = P;
      if (*q_opt) wr.Q = Q;
      if (*scale_opt) wr.scale_h = scale;
      std::cout << dump(weil_json(wr));
      return kPass;
    }
    if (*dr) {
      fq_from_q(q, pchk);
      std::cout << dump(derham_json(q, prec));
      return kPass;
    }
    VerifyOptions opt;
    if (!qs.empty()) opt.q = qs;
    for (auto qq : opt.q) fq_from_q(qq, pchk);
    opt.ext = ext;
    opt.prec = prec;
    opt.n = n;
    opt.seed = seed;
    opt.golden_dir = golden_dir(golden);
    const auto t0 = std::chrono::steady_clock::now();
    Report rep = run_verify(suite, opt);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cout << dump(rep.to_json());
    std::cerr << "verify " << suite << ": " << rep.checks.size() << " checks in " << dt.count() << " s\n";
    for (const auto& c : rep.checks)
      if (c.status == "fail") std::cerr << "FAIL " << c.key << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return rep.failed() ? kFail : kPass;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const PrecisionError& e) {
    std::cerr << "precision budget: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
