#include "cremona/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cremona/certificate.hpp"
#include "cremona/error.hpp"
#include "cremona/field.hpp"

namespace cremona {

namespace {

struct Options {
  int d = 0, e = 0, r = 0;
  std::optional<int> e_min, e_max;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  int retries = kDefaultRetryBudget;
  int jobs = 1;
  std::string output;
  std::string input;
};

bool write_text(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidConfiguration:
    case ErrorKind::MalformedCertificate:
      return kExitInvalid;
    case ErrorKind::ForgeExhausted:
    case ErrorKind::GenericityExhausted:
      return kExitExhausted;
    default:
      return kExitVerifyFailed;
  }
}

std::optional<std::uint64_t> prime_from_env(std::ostream& err, bool& bad) {
  const char* raw = std::getenv(kPrimeEnvVar);
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t pos = 0;
    const std::uint64_t p = std::stoull(raw, &pos);
    if (pos == std::string(raw).size()) return p;
  } catch (const std::exception&) {
  }
  err << "error: " << kPrimeEnvVar << "='" << raw << "' is not an integer\n";
  bad = true;
  return std::nullopt;
}

int cmd_forge(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const auto cert = forge(o.d, o.e, o.seed, ForgeOptions{o.retries, o.retries});
    const std::string text = to_json_text(cert);
    if (!write_text(o.output, text, out, err)) return kExitInvalid;
    err << "(" << o.d << "," << o.e << ") " << cert.recipe.tag() << " verified after " << cert.attempts
        << " attempt(s)\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.input, std::ios::binary);
  if (!f) {
    err << "error: cannot read " << o.input << "\n";
    return kExitInvalid;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  const VerifyResult res = verify_certificate_text(buf.str());
  switch (res.outcome) {
    case VerifyOutcome::Verified:
      out << o.input << ": verified\n";
      return kExitOk;
    case VerifyOutcome::Failed:
      out << o.input << ": FAILED\n";
      for (const auto& m : res.messages) err << "  failed check: " << m << "\n";
      return kExitVerifyFailed;
    case VerifyOutcome::Malformed:
      for (const auto& m : res.messages) err << "error: " << m << "\n";
      return kExitInvalid;
  }
  return kExitInvalid;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.d < 2) {
    err << "error: d must be at least 2\n";
    return kExitInvalid;
  }
  const int lo = o.e_min.value_or(o.d), hi = o.e_max.value_or(o.d * o.d);
  if (lo > hi) {
    err << "error: empty range e in [" << lo << ", " << hi << "]\n";
    return kExitInvalid;
  }
  if (lo < o.d || hi > o.d * o.d) {
    err << "error: " << range_message(o.d, lo < o.d ? lo : hi) << "\n";
    return kExitInvalid;
  }
  if (o.jobs < 1) {
    err << "error: --jobs must be positive\n";
    return kExitInvalid;
  }
  std::optional<std::filesystem::path> dir;
  if (!o.output.empty()) {
    dir = o.output;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) {
      err << "error: cannot create " << o.output << ": " << ec.message() << "\n";
      return kExitInvalid;
    }
  }
  const auto summary = run_sweep(o.d, lo, hi, o.seed, ForgeOptions{o.retries, o.retries}, o.jobs, dir);
  out << format_sweep(summary);
  if (summary.all_verified()) return kExitOk;
  bool exhausted_only = true;
  err << "failed:";
  for (const auto& row : summary.rows) {
    if (row.status == "verified") continue;
    exhausted_only = exhausted_only && row.status == "exhausted";
    err << " (" << o.d << "," << row.e << ")";
  }
  err << "\n";
  for (const auto& row : summary.rows)
    if (!row.detail.empty()) err << "  e=" << row.e << ": " << row.detail << "\n";
  return exhausted_only ? kExitExhausted : kExitVerifyFailed;
}

int cmd_plane(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.r < 2) {
    err << "error: a de Jonquieres map needs r >= 2\n";
    return kExitInvalid;
  }
  try {
    const auto cert = forge_plane(o.r, o.seed, ForgeOptions{o.retries, o.retries});
    if (!write_text(o.output, to_json_text(cert), out, err)) return kExitInvalid;
    err << "plane map of degree " << o.r << " verified, residual " << cert.check.report.residual << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace

bool SweepSummary::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status == "verified"; });
}

SweepSummary run_sweep(int d, int e_min, int e_max, std::uint64_t seed, const ForgeOptions& options, int jobs,
                       const std::optional<std::filesystem::path>& out_dir) {
  SweepSummary summary{d, std::vector<SweepRow>(static_cast<std::size_t>(std::max(0, e_max - e_min + 1)))};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < summary.rows.size(); i = next++) {
      SweepRow& row = summary.rows[i];
      row.e = e_min + static_cast<int>(i);
      const auto start = std::chrono::steady_clock::now();
      try {
        row.tag = plan_bidegree(d, row.e).tag();
        const auto cert = forge(d, row.e, seed, options);
        row.attempts = cert.attempts;
        row.status = "verified";
        if (out_dir) {
          std::ofstream f(*out_dir / ("d" + std::to_string(d) + "_e" + std::to_string(row.e) + ".json"),
                          std::ios::binary);
          f << to_json_text(cert);
        }
      } catch (const Error& e) {
        row.status = e.kind() == ErrorKind::ForgeExhausted ? "exhausted" : "failed";
        row.attempts = options.retries;
        row.detail = e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(summary.rows.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return summary;
}

std::string format_sweep(const SweepSummary& summary) {
  std::size_t tag_w = 4;
  for (const auto& r : summary.rows) tag_w = std::max(tag_w, r.tag.size());
  std::ostringstream os;
  os << std::left << std::setw(5) << "e" << std::setw(10) << "status" << std::setw(static_cast<int>(tag_w) + 2) << "case"
     << std::setw(10) << "attempts" << "time_s\n";
  for (const auto& r : summary.rows) {
    os << std::left << std::setw(5) << r.e << std::setw(10) << r.status << std::setw(static_cast<int>(tag_w) + 2)
       << r.tag << std::setw(10) << r.attempts << std::fixed << std::setprecision(3) << r.seconds << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Explicit Cremona transformations of P^3 of bidegree (d,e), certified over F_p", "cremona"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "base seed (default 0)");
    sub->add_option("--prime", o.prime, "field modulus (default 2147483647 or $CREMONA_PRIME)");
    sub->add_option("--retries", o.retries, "attempts before giving up")->check(CLI::PositiveNumber);
  };
  auto* forge_cmd = app.add_subcommand("forge", "forge and certify one bidegree");
  forge_cmd->add_option("-d", o.d, "degree of T")->required();
  forge_cmd->add_option("-e", o.e, "degree of the inverse")->required();
  forge_cmd->add_option("-o,--output", o.output, "certificate file (default stdout)");
  add_common(forge_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate");
  verify_cmd->add_option("file", o.input, "certificate")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "forge every e in [d, d^2]");
  sweep_cmd->add_option("-d", o.d, "degree of T")->required();
  sweep_cmd->add_option("--e-min", o.e_min);
  sweep_cmd->add_option("--e-max", o.e_max);
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads");
  sweep_cmd->add_option("--out", o.output, "directory for certificates");
  add_common(sweep_cmd);

  auto* plane_cmd = app.add_subcommand("plane", "de Jonquieres map of degree r");
  plane_cmd->add_option("-r", o.r, "degree")->required();
  plane_cmd->add_option("-o,--output", o.output, "certificate file (default stdout)");
  add_common(plane_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  bool bad_env = false;
  const auto env_prime = prime_from_env(err, bad_env);
  if (bad_env) return kExitInvalid;
  const std::uint64_t p = o.prime.value_or(env_prime.value_or(kDefaultPrime));
  if (p < 5 || p >= (1ULL << 62) || !is_prime(p)) {
    err << "error: modulus " << p << " is not a prime in [5, 2^62)\n";
    return kExitInvalid;
  }
  const ModulusScope scope(p);
  if (forge_cmd->parsed()) return cmd_forge(o, out, err);
  if (verify_cmd->parsed()) return cmd_verify(o, out, err);
  if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
  return cmd_plane(o, out, err);
}

}  // namespace cremona
