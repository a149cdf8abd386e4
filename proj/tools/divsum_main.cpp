// divsum: exact computation and empirical exploration of divisor-sum
// dynamics -- iterated sigma, aliquot sequences, residue periodicity,
// multiperfect structure, Robin checks, and residue statistics.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "divsum/classify.hpp"
#include "divsum/dynamics.hpp"
#include "divsum/emit.hpp"
#include "divsum/factor_cache.hpp"
#include "divsum/periodicity.hpp"
#include "divsum/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitCapUndetermined = 2;
constexpr int kExitUsage = 64;

struct Options {
  unsigned max_k = 50;
  unsigned bit_cap = divsum::kDefaultBitCap;
  unsigned workers = 0;  // 0 = all available
  std::string format = "csv";
  std::string out;
  std::string cache_path;
  std::string range;
};

// Every flag can also be set through a DIVSUM_* environment variable.
void add_common_options(CLI::App* cmd, Options& opt, bool with_range = false) {
  cmd->add_option("--max-k", opt.max_k, "Iteration / residue index limit")
      ->envname("DIVSUM_MAX_K")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bit-cap", opt.bit_cap, "Growth guard in bits")
      ->envname("DIVSUM_BIT_CAP")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", opt.workers,
                  "Worker threads for batch scans (0 = all cores)")
      ->envname("DIVSUM_WORKERS");
  cmd->add_option("--format", opt.format, "Output format")
      ->envname("DIVSUM_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "Write output to a file instead of stdout")
      ->envname("DIVSUM_OUT");
  cmd->add_option("--cache", opt.cache_path,
                  "Factorization cache file (loaded if present, saved on exit)")
      ->envname("DIVSUM_CACHE");
  if (with_range) {
    cmd->add_option("--range", opt.range, "Inclusive range a..b")
        ->envname("DIVSUM_RANGE");
  }
}

divsum::OutputFormat format_of(const Options& opt) {
  return opt.format == "json" ? divsum::OutputFormat::json
                              : divsum::OutputFormat::csv;
}

divsum::ScanConfig scan_config(const Options& opt) {
  divsum::ScanConfig config;
  config.workers = opt.workers;
  return config;
}

std::pair<divsum::Natural, divsum::Natural> parse_range(
    const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw divsum::ParseError("range must be written a..b");
  }
  divsum::Natural lo =
      divsum::parse_natural(std::string_view(text).substr(0, dots));
  divsum::Natural hi =
      divsum::parse_natural(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw divsum::ParseError("range is empty: " + text);
  return {std::move(lo), std::move(hi)};
}

std::uint64_t to_u64(const divsum::Natural& n, const char* what) {
  if (!n.fits_ulong_p()) {
    throw divsum::DomainError(std::string(what) + " is too large for a scan");
  }
  return n.get_ui();
}

unsigned long to_ulong(const divsum::Natural& n, const char* what) {
  if (!n.fits_ulong_p()) {
    throw divsum::DomainError(std::string(what) + " is too large");
  }
  return n.get_ui();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::trunc | std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + opt.out);
  file << text;
}

// Loads --cache on entry, saves the (append-only) map on exit.
class CacheSession {
 public:
  explicit CacheSession(const std::string& path) : path_(path) {
    if (!path_.empty() && std::filesystem::exists(path_)) cache_.load(path_);
  }
  ~CacheSession() {
    if (path_.empty()) return;
    try {
      cache_.save(path_);
    } catch (...) {
      // Keep the previous file if the rewrite fails.
    }
  }
  divsum::FactorCache* get() { return path_.empty() ? nullptr : &cache_; }

 private:
  std::string path_;
  divsum::FactorCache cache_;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace divsum;

  CLI::App app{"divsum: exact divisor-sum dynamics toolkit"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // sigma <n>
  {
    static Options opt;
    static std::string n_text;
    auto* cmd = app.add_subcommand("sigma", "Sum of divisors of n");
    cmd->add_option("n", n_text, "Decimal integer >= 1")->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      write_output(opt,
                   to_decimal(sigma(parse_natural(n_text), opt.bit_cap)) +
                       "\n");
    });
  }

  // sigma-k <n> <k>
  {
    static Options opt;
    static std::string n_text, k_text;
    auto* cmd = app.add_subcommand("sigma-k",
                                   "Sum of k-th powers of the divisors of n");
    cmd->add_option("n", n_text)->required();
    cmd->add_option("k", k_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const unsigned long k = to_ulong(parse_natural(k_text), "k");
      write_output(
          opt,
          to_decimal(sigma_k(parse_natural(n_text), k, opt.bit_cap)) + "\n");
    });
  }

  // orbit <n>
  {
    static Options opt;
    static std::string n_text;
    auto* cmd = app.add_subcommand("orbit", "Iterated sigma orbit of n");
    cmd->add_option("n", n_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      CacheSession cache(opt.cache_path);
      const SigmaOrbit orbit =
          iterate_sigma(parse_natural(n_text), opt.max_k, opt.bit_cap,
                        cache.get());
      write_output(opt, emit_orbit(orbit, format_of(opt)));
    });
  }

  // aliquot <n>
  {
    static Options opt;
    static std::string n_text;
    auto* cmd = app.add_subcommand("aliquot", "Aliquot sequence of n");
    cmd->add_option("n", n_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      CacheSession cache(opt.cache_path);
      const SigmaOrbit orbit =
          aliquot_sequence(parse_natural(n_text), opt.max_k, opt.bit_cap,
                           cache.get());
      write_output(opt, emit_orbit(orbit, format_of(opt)));
    });
  }

  // gcd-chain <m>
  {
    static Options opt;
    static std::string m_text;
    auto* cmd = app.add_subcommand(
        "gcd-chain", "gcd chain g_{k+1} = gcd(g_k, sigma^{k+1}(m))");
    cmd->add_option("m", m_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      CacheSession cache(opt.cache_path);
      write_output(opt, emit_gcd_chain(gcd_chain(parse_natural(m_text),
                                                 opt.max_k, opt.bit_cap,
                                                 cache.get()),
                                       format_of(opt)));
    });
  }

  // ctr [m] [--range a..b]
  {
    static Options opt;
    static std::string m_text;
    auto* cmd = app.add_subcommand(
        "ctr", "Smallest k with sigma^k(m) = 0 (mod m), per m");
    cmd->add_option("m", m_text);
    add_common_options(cmd, opt, /*with_range=*/true);
    cmd->callback([&] {
      if (m_text.empty() && opt.range.empty()) {
        throw divsum::ParseError("ctr needs m or --range");
      }
      CacheSession cache(opt.cache_path);
      std::vector<CtrRow> rows;
      if (!opt.range.empty()) {
        auto [lo, hi] = parse_range(opt.range);
        rows = cohen_te_riele_range(lo, hi, opt.max_k, opt.bit_cap,
                                    opt.workers, cache.get());
      } else {
        const CtrOutcome outcome = cohen_te_riele(
            parse_natural(m_text), opt.max_k, opt.bit_cap, cache.get());
        rows.push_back({parse_natural(m_text), outcome.found_k, outcome.stop});
      }
      write_output(opt, emit_ctr_rows(rows, format_of(opt)));
      for (const auto& row : rows) {
        if (!row.found_k.has_value()) {
          exit_code = kExitCapUndetermined;
          break;
        }
      }
    });
  }

  // period <m> [--mod-sigma]
  {
    static Options opt;
    static std::string m_text;
    static bool mod_sigma = false;
    auto* cmd = app.add_subcommand(
        "period", "Residue orbit sigma_k(m) with period detection");
    cmd->add_option("m", m_text)->required();
    cmd->add_flag("--mod-sigma", mod_sigma,
                  "Reduce modulo sigma(m) instead of m")
        ->envname("DIVSUM_MOD_SIGMA");
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const PeriodReport report = period_report(
          parse_natural(m_text), opt.max_k,
          mod_sigma ? PeriodMode::mod_sigma : PeriodMode::mod_m);
      write_output(opt, emit_period_report(report, format_of(opt)));
    });
  }

  // lemma congruence|divides|shape ...
  {
    auto* cmd = app.add_subcommand(
        "lemma", "Congruence and divisibility checks for sigma_k");
    cmd->require_subcommand(1);
    {
      static Options opt;
      static std::string p_text, e_text, k_text;
      auto* sub = cmd->add_subcommand(
          "congruence",
          "sigma_k(p^e) = r (p^(e+1)-1)/(p^r-1) (mod sigma(p^e)), r = gcd(k, e+1)");
      sub->add_option("p", p_text)->required();
      sub->add_option("e", e_text)->required();
      sub->add_option("k", k_text)->required();
      add_common_options(sub, opt);
      sub->callback([&] {
        const unsigned e =
            static_cast<unsigned>(to_ulong(parse_natural(e_text), "e"));
        const unsigned long k = to_ulong(parse_natural(k_text), "k");
        write_output(opt, emit_congruence(prime_power_congruence(
                                              parse_natural(p_text), e, k),
                                          format_of(opt)));
      });
    }
    {
      static Options opt;
      static std::string m_text, k_text;
      auto* sub = cmd->add_subcommand(
          "divides", "Does sigma(m) divide sigma_k(m)?");
      sub->add_option("m", m_text)->required();
      sub->add_option("k", k_text)->required();
      add_common_options(sub, opt);
      sub->callback([&] {
        const Natural m = parse_natural(m_text);
        const unsigned long k = to_ulong(parse_natural(k_text), "k");
        write_output(opt, emit_divisibility(m, k,
                                            sigma_divides_sigma_k(m, k),
                                            format_of(opt)));
      });
    }
    {
      static Options opt;
      static std::string p_text, L_text;
      auto* sub = cmd->add_subcommand(
          "shape", "Prime factors of sigma(p^(L-1)) reduced mod L");
      sub->add_option("p", p_text)->required();
      sub->add_option("L", L_text)->required();
      add_common_options(sub, opt);
      sub->callback([&] {
        const Natural p = parse_natural(p_text);
        const Natural L = parse_natural(L_text);
        write_output(opt, emit_factor_shape(
                              p, L, factor_shape_mod_L(p, L, opt.bit_cap),
                              format_of(opt)));
      });
    }
  }

  // multiperfect --bound B
  {
    static Options opt;
    static std::string bound_text;
    auto* cmd = app.add_subcommand(
        "multiperfect", "All m <= bound with sigma(m) = 0 (mod m)");
    cmd->add_option("--bound", bound_text, "Scan bound")->required()
        ->envname("DIVSUM_BOUND");
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const std::uint64_t bound = to_u64(parse_natural(bound_text), "bound");
      write_output(opt, emit_multiperfect(
                            multiperfect_L_scan(bound, scan_config(opt)),
                            format_of(opt)));
    });
  }

  // classify <n> | --range a..b
  {
    static Options opt;
    static std::string n_text;
    auto* cmd = app.add_subcommand(
        "classify", "Deficient / perfect / abundant classification");
    cmd->add_option("n", n_text);
    add_common_options(cmd, opt, /*with_range=*/true);
    cmd->callback([&] {
      if (n_text.empty() && opt.range.empty()) {
        throw divsum::ParseError("classify needs n or --range");
      }
      if (!opt.range.empty()) {
        auto [lo, hi] = parse_range(opt.range);
        const auto records = classify_range(to_u64(lo, "range start"),
                                            to_u64(hi, "range end"),
                                            scan_config(opt));
        write_output(opt, emit_classification_range(records, format_of(opt)));
      } else {
        write_output(opt, emit_classification(classify(parse_natural(n_text)),
                                              format_of(opt)));
      }
    });
  }

  // density --bound B --step S
  {
    static Options opt;
    static std::string bound_text, step_text;
    auto* cmd = app.add_subcommand(
        "density", "Cumulative deficient/abundant fractions up to bound");
    cmd->add_option("--bound", bound_text)->required()
        ->envname("DIVSUM_BOUND");
    cmd->add_option("--step", step_text, "Sample spacing")->required()
        ->envname("DIVSUM_STEP");
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const std::uint64_t bound = to_u64(parse_natural(bound_text), "bound");
      const std::uint64_t step = to_u64(parse_natural(step_text), "step");
      write_output(opt, emit_density(
                            density_counts(bound, step, scan_config(opt)),
                            format_of(opt)));
    });
  }

  // robin <n> | --range a..b
  {
    static Options opt;
    static std::string n_text;
    auto* cmd = app.add_subcommand(
        "robin", "sigma(n) against e^gamma n log log n");
    cmd->add_option("n", n_text);
    add_common_options(cmd, opt, /*with_range=*/true);
    cmd->callback([&] {
      if (n_text.empty() && opt.range.empty()) {
        throw divsum::ParseError("robin needs n or --range");
      }
      if (!opt.range.empty()) {
        auto [lo, hi] = parse_range(opt.range);
        const std::uint64_t lo64 = to_u64(lo, "range start");
        auto violators = robin_scan(to_u64(hi, "range end"),
                                    scan_config(opt));
        std::erase_if(violators,
                      [lo64](std::uint64_t n) { return n < lo64; });
        write_output(opt, emit_robin_violators(violators, format_of(opt)));
      } else {
        write_output(opt, emit_robin_report(robin_check(parse_natural(n_text)),
                                            format_of(opt)));
      }
    });
  }

  // stats <m>
  {
    static Options opt;
    static std::string m_text;
    auto* cmd = app.add_subcommand(
        "stats", "Summary statistics of the residue orbit sigma_k(m) mod m");
    cmd->add_option("m", m_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const auto residues =
          residues_as_doubles(residue_orbit(parse_natural(m_text), opt.max_k));
      write_output(opt, emit_stats_summary(summarize_residues(residues),
                                           format_of(opt)));
    });
  }

  // pdf-params <m>
  {
    static Options opt;
    static std::string m_text;
    auto* cmd = app.add_subcommand(
        "pdf-params",
        "Moment-matched normal (mu, sigma) for the residue orbit of m");
    cmd->add_option("m", m_text)->required();
    add_common_options(cmd, opt);
    cmd->callback([&] {
      const auto residues =
          residues_as_doubles(residue_orbit(parse_natural(m_text), opt.max_k));
      write_output(opt, emit_pdf_params(pdf_params(residues), format_of(opt)));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const divsum::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BitCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapUndetermined;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return exit_code;
}
