// Command-line front end: run the claim verifier and emit certificates, or
// poke at individual fibers (solvability, Jacobian, coefficients).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubictk/family.hpp"
#include "json.hpp"

namespace {

using ctk::Rational;

Rational parse_rat_or_die(const std::string& text, const char* flag) {
  auto q = ctk::parse_rational(text);
  if (!q) {
    std::cerr << "error: " << flag << " expects NUM or NUM/DEN, got '" << text
              << "'\n";
    std::exit(2);
  }
  return *q;
}

std::vector<Rational> parse_sample_list(const std::string& list) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    std::string piece = list.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!piece.empty()) out.push_back(parse_rat_or_die(piece, "--t-samples"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) {
    std::cerr << "error: --t-samples is empty\n";
    std::exit(2);
  }
  return out;
}

struct VerifyFlags {
  std::vector<long> sweep;
  std::string t_samples;
  int precision = 8;
  std::uint64_t seed = ctk::FamilyConfig{}.seed;
  std::string json_path;
  int jobs = 1;
};

void add_verify_flags(CLI::App* sub, VerifyFlags& f) {
  sub->add_option("--sweep", f.sweep, "prime sweep range P_MIN P_MAX")
      ->expected(2);
  sub->add_option("--t-samples", f.t_samples,
                  "comma-separated rational t values (e.g. 0,1,2,-1,1/2)");
  sub->add_option("--precision", f.precision, "target p-adic valuation")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "PRNG seed for randomized subroutines");
  sub->add_option("--json", f.json_path, "write the JSON certificate here");
  sub->add_option("--jobs", f.jobs, "worker threads for per-prime scans")
      ->check(CLI::PositiveNumber);
}

ctk::FamilyConfig config_from_flags(const VerifyFlags& f) {
  ctk::FamilyConfig cfg = ctk::FamilyConfig::standard();
  if (!f.sweep.empty()) {
    cfg.p_min = f.sweep[0];
    cfg.p_max = f.sweep[1];
    if (cfg.p_min < 2 || cfg.p_max < cfg.p_min) {
      std::cerr << "error: --sweep wants 2 <= P_MIN <= P_MAX\n";
      std::exit(2);
    }
  }
  if (!f.t_samples.empty()) cfg.t_samples = parse_sample_list(f.t_samples);
  cfg.precision = f.precision;
  cfg.seed = f.seed;
  cfg.jobs = f.jobs;
  return cfg;
}

void write_file_or_die(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(2);
  }
  out << body;
}

void print_claim_line(const ctk::ClaimResult& r) {
  const auto& rec = ctk::claim_record(r.id);
  std::printf("%-4s %-16s %6ld ms   %s\n", r.id.c_str(),
              ctk::verdict_name(r.verdict), r.millis, rec.description.c_str());
}

int run_verify_all(const VerifyFlags& f) {
  auto cfg = config_from_flags(f);
  auto rep = ctk::verify_all(cfg);
  for (const auto& r : rep.claims) print_claim_line(r);
  std::printf("digest: %s\n", rep.digest().c_str());
  if (!f.json_path.empty()) {
    write_file_or_die(f.json_path, rep.to_json());
    std::printf("certificate written to %s\n", f.json_path.c_str());
  }
  return rep.any_failed() ? 1 : 0;
}

int run_verify_claim(const std::string& id, const VerifyFlags& f) {
  auto cfg = config_from_flags(f);
  ctk::ClaimResult r;
  try {
    r = ctk::verify_claim(id, cfg);
  } catch (const ctk::UnknownClaimId& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  print_claim_line(r);
  std::printf("%s\n",
              nlohmann::ordered_json::parse(r.evidence).dump(2).c_str());
  if (!f.json_path.empty()) {
    ctk::CertificateReport rep;
    rep.version = ctk::toolkit_version();
    rep.config = cfg;
    rep.claims.push_back(r);
    write_file_or_die(f.json_path, rep.to_json());
    std::printf("certificate written to %s\n", f.json_path.c_str());
  }
  return r.verdict == ctk::Verdict::Failed ? 1 : 0;
}

int run_solvable(const std::string& u_text, long p, int precision) {
  Rational u = parse_rat_or_die(u_text, "--u");
  const auto kc = ctk::Constants::standard();
  ctk::PVal vu = ctk::p_valuation(u, p);
  bool direct = vu.infinite || vu.v >= 0;
  ctk::PlaneCubic<Rational> C =
      direct ? ctk::build_fiber_in<Rational>(u, kc)
             : ctk::build_second_chart_fiber(Rational(1) / u, kc);
  std::printf("u = %s, p = %ld, model = %s\n", ctk::rat_str(u).c_str(), p,
              direct ? "u" : "1/u");
  auto cert = ctk::local_solvability(C, p, precision);
  std::printf("%s\n", cert.to_string().c_str());
  if (cert.verdict != ctk::SolvabilityCertificate::Verdict::Solvable) return 1;
  bool replay = ctk::replay_solvability(C, cert);
  std::printf("replay: %s\n", replay ? "ok" : "FAILED");
  return replay ? 0 : 1;
}

int run_jacobian(const std::string& t_text) {
  Rational t = parse_rat_or_die(t_text, "--t");
  const auto kc = ctk::Constants::standard();
  auto u = ctk::u_of_t(std::optional<Rational>(t), kc);
  if (u.infinite) {
    std::cerr << "error: u(t) is infinite at this t\n";
    return 2;
  }
  auto eval = [&](const ctk::UniPoly<ctk::Int>& f) {
    Rational acc(0);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * t + Rational(f.c[i]);
    return acc;
  };
  Rational D = eval(kc.u_den);
  auto C = ctk::build_fiber_in<Rational>(u.v, kc);
  auto W = ctk::jacobian_weierstrass(C);  // throws if the fiber is singular
  // rescale to the denominator-free model (x, y) -> (D^4 x, D^6 y)
  Rational D2 = D * D, D4 = D2 * D2;
  ctk::WeierstrassCurve<Rational> Wi{W.A * D4, W.B * D4 * D2};
  std::printf("t = %s\nu = %s\n", ctk::rat_str(t).c_str(),
              ctk::rat_str(u.v).c_str());
  std::printf("A = %s\n", ctk::rat_str(Wi.A).c_str());
  std::printf("B = %s\n", ctk::rat_str(Wi.B).c_str());
  std::printf("disc = %s\n",
              ctk::rat_str(ctk::weierstrass_discriminant(Wi)).c_str());
  std::printf("j = %s\n", ctk::rat_str(ctk::j_invariant(Wi)).c_str());
  return 0;
}

int run_fiber(const std::string& u_text) {
  Rational u = parse_rat_or_die(u_text, "--u");
  auto C = ctk::build_fiber(u);
  static const char* names[10] = {"x^3", "x^2y", "x^2z", "xy^2", "xyz",
                                  "xz^2", "y^3",  "y^2z", "yz^2", "z^3"};
  std::printf("u = %s\n", ctk::rat_str(u).c_str());
  for (size_t i = 0; i < 10; ++i)
    std::printf("%-5s %s\n", names[i], ctk::rat_str(C.a[i]).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for a pencil of plane cubics and its Jacobian"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run registered claims");
  verify->require_subcommand(1);
  VerifyFlags all_flags, claim_flags;
  auto* vall = verify->add_subcommand("all", "verify every claim");
  add_verify_flags(vall, all_flags);
  auto* vclaim = verify->add_subcommand("claim", "verify one claim (with deps)");
  std::string claim_id;
  vclaim->add_option("id", claim_id, "claim id, e.g. C5")->required();
  add_verify_flags(vclaim, claim_flags);

  auto* solv = app.add_subcommand("solvable", "decide Z_p-solvability of one fiber");
  std::string solv_u;
  long solv_p = 0;
  int solv_prec = 8;
  solv->add_option("--u", solv_u, "parameter u as NUM or NUM/DEN")->required();
  solv->add_option("--p", solv_p, "prime p")->required();
  solv->add_option("--precision", solv_prec, "target valuation")
      ->check(CLI::PositiveNumber);

  auto* jac = app.add_subcommand("jacobian", "Weierstrass data of the Jacobian at t");
  std::string jac_t;
  jac->add_option("--t", jac_t, "parameter t as NUM or NUM/DEN")->required();

  auto* fib = app.add_subcommand("fiber", "print the 10 fiber coefficients at u");
  std::string fib_u;
  fib->add_option("--u", fib_u, "parameter u as NUM or NUM/DEN")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad usage is 2
  }

  try {
    if (vall->parsed()) return run_verify_all(all_flags);
    if (vclaim->parsed()) return run_verify_claim(claim_id, claim_flags);
    if (solv->parsed()) return run_solvable(solv_u, solv_p, solv_prec);
    if (jac->parsed()) return run_jacobian(jac_t);
    if (fib->parsed()) return run_fiber(fib_u);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
