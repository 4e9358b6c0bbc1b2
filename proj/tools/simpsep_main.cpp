// Command-line front end: enumeration, lemma verification, compatibility
// runs, separation and certificate verification.
//
// Exit codes: 0 success, 1 property/verification failure, 2 usage error.

#include "simpsep/json_io.hpp"
#include "simpsep/lemma_checks.hpp"
#include "simpsep/rational.hpp"
#include "simpsep/separation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace simpsep;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteSSet load_sset(const std::string& spec) {
  auto builtin = [&](const std::string& prefix) -> std::optional<int> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = spec.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (const auto n = builtin("delta")) return standard_simplex(*n);
  if (const auto n = builtin("boundary")) return boundary(*n);
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open simplicial set: " + spec);
  Json j;
  in >> j;
  return sset_from_json(j);
}

std::pair<Simplex, BaryPoint> parse_point(const FiniteSSet& S, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("point must be cell-id:t0,t1,... with rational coordinates: " + text);
  const CellRef cell = S.cell_by_id(text.substr(0, colon));
  std::vector<Rat> coords;
  std::istringstream is(text.substr(colon + 1));
  std::string part;
  while (std::getline(is, part, ',')) coords.push_back(parse_rat(part));
  if (static_cast<int>(coords.size()) != cell.degree + 1)
    throw UsageError("point has " + std::to_string(coords.size()) + " coordinates, cell " +
                     text.substr(0, colon) + " needs " + std::to_string(cell.degree + 1));
  return {cell_simplex(S, cell), BaryPoint(std::move(coords))};
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("SIMPSEP_SEED")) return std::stoull(env);
  return flag_seed;
}

int report_outcome(const std::string& what, const CheckReport& rep) {
  std::cout << what << ": " << rep.cases << " cases checked, " << rep.violations.size()
            << " violations\n";
  for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
  return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_enum_delta(int k, int kp, bool epi_only, bool mono_only) {
  const MorKind kind = epi_only ? MorKind::epi : mono_only ? MorKind::mono : MorKind::all;
  const auto morphisms = enumerate_morphisms(k, kp, kind);
  for (const auto& f : morphisms) std::cout << f.str() << '\n';
  std::cout << "total: " << morphisms.size() << '\n';
  return kExitOk;
}

int cmd_enum_gamma(int k, int kp, bool onto_only, bool poset) {
  if (!poset) {
    const auto morphisms = enumerate_gamma(k, kp, onto_only);
    for (const auto& f : morphisms) std::cout << f.str() << '\n';
    std::cout << "total: " << morphisms.size() << '\n';
    return kExitOk;
  }
  const PosetCache cache(k, kp);
  const auto& homs = cache.elements();
  for (std::size_t i = 0; i < homs.size(); ++i) std::cout << i << ": " << homs[i].str() << '\n';
  std::cout << "edges (f R f^{+i}):\n";
  for (std::size_t i = 0; i < homs.size(); ++i)
    for (int j : cache.r_edges()[i]) std::cout << "  " << i << " -> " << j << '\n';
  long long leq_pairs = 0, subset_only = 0;
  std::string first_witness;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = 0; j < homs.size(); ++j) {
      if (cache.reachable(static_cast<int>(i), static_cast<int>(j))) ++leq_pairs;
      else if (i != j && subset_leq(homs[i], homs[j])) {
        if (subset_only == 0)
          first_witness = homs[i].str() + " subset " + homs[j].str() + " without <=";
        ++subset_only;
      }
    }
  }
  std::cout << "total: " << homs.size() << ", <= pairs: " << leq_pairs
            << ", subset-without-<= pairs: " << subset_only << '\n';
  if (!first_witness.empty()) std::cout << "  e.g. " << first_witness << '\n';
  std::cout << "antisymmetric: " << (cache.antisymmetric() ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_check(const std::string& lemma, int k, int kp, const std::string& sset_spec, int N,
              const std::string& eps_text, int samples, std::uint64_t seed, int kmax) {
  if (lemma == "admitted1") return report_outcome(lemma, check_admitted1(k, kp));
  if (lemma == "admitted2") return report_outcome(lemma, check_admitted2(k, kp));
  if (lemma == "admitted3") return report_outcome(lemma, check_admitted3(k, kp));
  if (lemma == "order") return report_outcome(lemma, check_order_remark(k, kp));
  if (lemma == "duality") return report_outcome(lemma, check_duality(k, kp));
  const FiniteSSet S = load_sset(sset_spec);
  if (lemma == "degenlemma")
    return report_outcome(lemma, check_degen_lemma(S, N < 0 ? 2 : std::max(0, N - S.dim())));
  if (lemma == "simpset") return report_outcome(lemma, check_simpset_lemma(S, 2));
  if (lemma == "uproperties") {
    const CanonicalSetup setup = canonical_setup(S, N);
    UCache cache(setup.family);
    CheckReport rep = check_first_properties(cache);
    rep.merge(check_u_properties(cache, setup.family.N + 2));
    return report_outcome(lemma, rep);
  }
  if (lemma == "compat") {
    const Rat eps = parse_rat(eps_text);
    return report_outcome(lemma, run_compat_suite(S, eps, kmax, samples, resolve_seed(seed), N));
  }
  throw UsageError("unknown lemma: " + lemma);
}

int cmd_separate(const std::string& sset_spec, const std::string& p1_text,
                 const std::string& p2_text, const std::string& out_path, int max_depth,
                 int jobs) {
  const FiniteSSet S = load_sset(sset_spec);
  const auto [y1, c1] = parse_point(S, p1_text);
  const auto [y2, c2] = parse_point(S, p2_text);
  SeparationOptions opts;
  opts.max_depth = max_depth;
  opts.jobs = jobs;
  SeparationCertificate cert;
  try {
    cert = find_eta(S, y1, c1, y2, c2, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const SearchExhausted& e) {
    std::cerr << "separation failed: " << e.what() << '\n';
    return kExitViolation;
  }
  const Json j = to_json(cert);
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << j.dump(2) << '\n';
    std::cout << "certificate written to " << out_path << " (eta = " << rat_str(cert.eta)
              << ", kmax = " << cert.kmax << ", evidence entries = " << cert.evidence.size()
              << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& cert_path) {
  std::ifstream in(cert_path);
  if (!in) throw UsageError("cannot open certificate: " + cert_path);
  Json j;
  in >> j;
  const FiniteSSet S = sset_from_json(j.at("sset"));
  const SeparationCertificate cert = certificate_from_json(S, j);
  std::string why;
  if (!verify_certificate(S, cert, &why)) {
    std::cout << "certificate INVALID: " << why << '\n';
    return kExitViolation;
  }
  std::cout << "certificate OK: branch " << cert.branch << ", eta = " << rat_str(cert.eta)
            << ", " << cert.evidence.size() << " evidence entries re-verified\n";
  return kExitOk;
}

int cmd_validate_sset(const std::string& path) {
  try {
    const FiniteSSet S = load_sset(path);
    int cells = 0;
    for (int p = 0; p <= S.dim(); ++p) cells += S.cell_count(p);
    std::cout << "valid: dim " << S.dim() << ", " << cells << " non-degenerate cells\n";
    return kExitOk;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kExitViolation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separation certificates for realizations of finite simplicial sets"};
  app.require_subcommand(1);

  auto* enum_cmd = app.add_subcommand("enum", "list morphisms of Delta or Gamma'");
  enum_cmd->require_subcommand(1);
  int e_k = 0, e_kp = 0;
  bool e_epi = false, e_mono = false, e_onto = false, e_poset = false;
  auto* enum_delta = enum_cmd->add_subcommand("delta", "monotone maps [k] -> [k']");
  enum_delta->add_option("k", e_k, "source degree")->required();
  enum_delta->add_option("kp", e_kp, "target degree")->required();
  enum_delta->add_flag("--epi", e_epi, "surjections only");
  enum_delta->add_flag("--mono", e_mono, "injections only");
  auto* enum_gamma_cmd = enum_cmd->add_subcommand("gamma", "Gamma'-morphisms [k] => [k']");
  enum_gamma_cmd->add_option("k", e_k, "source degree")->required();
  enum_gamma_cmd->add_option("kp", e_kp, "target degree")->required();
  enum_gamma_cmd->add_flag("--onto", e_onto, "onto morphisms only");
  enum_gamma_cmd->add_flag("--poset", e_poset, "also print the R-edges and the order closure");

  auto* check_cmd = app.add_subcommand("check", "verify a lemma or proposition exhaustively");
  std::string lemma;
  check_cmd
      ->add_option("lemma", lemma,
                   "one of: admitted1 admitted2 admitted3 order duality degenlemma simpset "
                   "uproperties compat")
      ->required();
  int c_k = 2, c_kp = 5, c_N = -1, c_samples = 200, c_kmax = 4;
  std::string c_sset = "delta1", c_eps = "1/2";
  std::uint64_t c_seed = 7;
  check_cmd->add_option("--k", c_k, "max source degree (default 2)");
  check_cmd->add_option("--kp", c_kp, "max target degree (default 5)");
  check_cmd->add_option("--sset", c_sset, "simplicial set: deltaN, boundaryN or a JSON path");
  check_cmd->add_option("--N", c_N, "family degree bound (default n+1)");
  check_cmd->add_option("--eps", c_eps, "epsilon as a rational (default 1/2)");
  check_cmd->add_option("--samples", c_samples, "random points per case (default 200)");
  check_cmd->add_option("--seed", c_seed, "RNG seed (default 7; SIMPSEP_SEED overrides)");
  check_cmd->add_option("--kmax", c_kmax, "max degree for compat (default 4)");

  auto* sep_cmd = app.add_subcommand("separate", "produce a separation certificate");
  std::string s_sset, s_p1, s_p2, s_out;
  int s_depth = 20, s_jobs = 0;
  sep_cmd->add_option("--sset", s_sset, "simplicial set: deltaN, boundaryN or a JSON path")
      ->required();
  sep_cmd->add_option("--p1", s_p1, "first point, cell-id:t0,t1,...")->required();
  sep_cmd->add_option("--p2", s_p2, "second point, cell-id:t0,t1,...")->required();
  sep_cmd->add_option("-o,--out", s_out, "certificate output path (default stdout)");
  sep_cmd->add_option("--max-depth", s_depth, "eta candidates 2^-1..2^-H (default 20)");
  sep_cmd->add_option("--jobs", s_jobs, "sweep parallelism, 0 = hardware (default)");

  auto* verify_cmd = app.add_subcommand("verify", "re-derive every claim of a certificate");
  std::string v_cert;
  verify_cmd->add_option("certificate", v_cert, "certificate JSON path")->required();

  auto* val_cmd = app.add_subcommand("validate-sset", "check the simplicial identities");
  std::string vs_path;
  val_cmd->add_option("sset", vs_path, "deltaN, boundaryN or a JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enum_delta->parsed()) return cmd_enum_delta(e_k, e_kp, e_epi, e_mono);
    if (enum_gamma_cmd->parsed()) return cmd_enum_gamma(e_k, e_kp, e_onto, e_poset);
    if (check_cmd->parsed())
      return cmd_check(lemma, c_k, c_kp, c_sset, c_N, c_eps, c_samples, c_seed, c_kmax);
    if (sep_cmd->parsed()) return cmd_separate(s_sset, s_p1, s_p2, s_out, s_depth, s_jobs);
    if (verify_cmd->parsed()) return cmd_verify(v_cert);
    if (val_cmd->parsed()) return cmd_validate_sset(vs_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
