#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcw/cover.hpp"
#include "pcw/lp.hpp"
#include "pcw/matrix_io.hpp"
#include "pcw/oracle.hpp"
#include "pcw/pseudodist.hpp"
#include "pcw/report.hpp"
#include "pcw/ring.hpp"
#include "pcw/spectral.hpp"
#include "pcw/tanner.hpp"

namespace {

struct Options {
  std::string input;
  std::uint32_t q_override = 0;  // 0 = keep the file's modulus
  std::vector<int> M{2, 3};
  int covers = 5;
  std::uint64_t seed = 0;
  double limit = pcw::kDefaultEnumerationLimit;
  std::string format = "text";
  double tol_eig = pcw::kDefaultJacobiTol;
  double tol_lp = pcw::kDefaultLpTol;
  std::string export_lp_path;
  std::string cover_file;
  std::string codeword;
};

bool json_format(const Options& o) { return o.format != "text"; }

std::string fmt(double v) {
  if (std::isinf(v)) return "infinite";
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

pcw::ParityCheckMatrix load_matrix(const Options& opts, bool hard_validate) {
  pcw::ParityCheckMatrix H = pcw::parse_matrix_file(opts.input);
  if (opts.q_override != 0) {
    // Reinterpret the same entries over another modulus.
    H = pcw::ParityCheckMatrix::make(H.m, H.n, opts.q_override,
                                     std::move(H.entries));
  }
  const pcw::MatrixValidation audit = pcw::validate_matrix(H);
  if (!audit.ok()) {
    std::ostringstream msg;
    msg << audit.zero_divisor_positions.size()
        << " zero-divisor entr" << (audit.zero_divisor_positions.size() == 1 ? "y" : "ies")
        << " mod " << H.q << " at (row, col):";
    for (const auto& [j, i] : audit.zero_divisor_positions) {
      msg << " (" << j + 1 << "," << i + 1 << ")";
    }
    if (hard_validate) throw pcw::HypothesesUnmetError(msg.str());
    std::cerr << "warning: " << msg.str() << "\n";
  }
  return H;
}

pcw::Report config_echo(const Options& opts, const std::string& command) {
  pcw::Report cfg;
  cfg["command"] = command;
  cfg["input"] = opts.input;
  if (opts.q_override != 0) cfg["q_override"] = opts.q_override;
  cfg["seed"] = opts.seed;
  cfg["format"] = json_format(opts) ? "json" : "text";
  return cfg;
}

void emit(const pcw::Report& doc) { std::cout << pcw::serialize_report(doc); }

int run_info(const Options& opts) {
  const pcw::ParityCheckMatrix H = load_matrix(opts, false);
  const pcw::TannerGraph G = pcw::tanner_from_matrix(H);
  const auto reg = pcw::regularity(G);
  const bool connected = pcw::is_connected(G);
  const pcw::MatrixValidation audit = pcw::validate_matrix(H);

  if (json_format(opts)) {
    pcw::Report doc;
    doc["config"] = config_echo(opts, "info");
    doc["n"] = H.n;
    doc["m"] = H.m;
    doc["q"] = H.q;
    doc["regular"] = reg.has_value();
    if (reg) {
      doc["c"] = reg->first;
      doc["d"] = reg->second;
    }
    doc["connected"] = connected;
    pcw::Report bad = pcw::Report::array();
    for (const auto& [j, i] : audit.zero_divisor_positions) {
      bad.push_back(pcw::Report::array({j + 1, i + 1}));
    }
    doc["audit"] = {{"ok", audit.ok()}, {"zero_divisor_positions", bad}};
    emit(doc);
    return 0;
  }

  std::cout << "input: " << opts.input << "\n";
  std::cout << "n: " << H.n << "\nm: " << H.m << "\nq: " << H.q << "\n";
  if (reg) {
    std::cout << "regular: yes (c=" << reg->first << ", d=" << reg->second
              << ")\n";
  } else {
    std::cout << "regular: no\n";
  }
  std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  if (audit.ok()) {
    std::cout << "entry audit: all nonzero entries are units mod " << H.q
              << "\n";
  } else {
    std::cout << "entry audit: zero divisors at";
    for (const auto& [j, i] : audit.zero_divisor_positions) {
      std::cout << " (" << j + 1 << "," << i + 1 << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

std::vector<pcw::Symbol> parse_codeword(const std::string& csv,
                                        const pcw::ParityCheckMatrix& H) {
  std::vector<pcw::Symbol> c;
  std::istringstream in(csv);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(piece, &pos);
      if (pos != piece.size() || v < 0 || v >= static_cast<long long>(H.q)) {
        throw std::invalid_argument(piece);
      }
      c.push_back(static_cast<pcw::Symbol>(v));
    } catch (const std::exception&) {
      throw pcw::InputError("bad codeword symbol `" + piece + "`");
    }
  }
  if (c.size() != static_cast<std::size_t>(H.n)) {
    throw pcw::InputError("codeword has " + std::to_string(c.size()) +
                          " symbols, expected " + std::to_string(H.n));
  }
  return c;
}

int run_distance(const Options& opts) {
  const pcw::ParityCheckMatrix H = load_matrix(opts, false);
  const std::vector<pcw::Symbol> c = parse_codeword(opts.codeword, H);
  const bool member = pcw::is_codeword(H, c);
  const std::vector<double> cosv = pcw::cosine_table(H.q);
  double d2 = 0.0;
  for (const pcw::Symbol v : c) d2 += 2.0 * (1.0 - cosv[v]);

  if (json_format(opts)) {
    pcw::Report doc;
    doc["config"] = config_echo(opts, "distance");
    doc["codeword"] = c;
    doc["is_codeword"] = member;
    doc["d_squared"] = pcw::report_number(d2);
    if (H.q == 2) doc["effective_weight"] = pcw::report_number(d2 / 4.0);
    emit(doc);
    return 0;
  }
  if (!member) std::cerr << "warning: vector is not a codeword\n";
  std::cout << "is_codeword: " << (member ? "yes" : "no") << "\n";
  std::cout << "d_squared: " << fmt(d2) << "\n";
  if (H.q == 2) std::cout << "effective weight: " << fmt(d2 / 4.0) << "\n";
  return 0;
}

pcw::Report pcw_report(const pcw::Pseudocodeword& p) {
  const pcw::CountMatrix counts = pcw::pcw_matrix(p);
  const pcw::FractionMatrix F = pcw::normalize(counts);
  pcw::Report doc;
  doc["values"] = p.values;
  pcw::Report count_rows = pcw::Report::array();
  for (int i = 0; i < counts.n; ++i) {
    pcw::Report row = pcw::Report::array();
    for (pcw::Symbol k = 0; k < counts.q; ++k) row.push_back(counts.at(i, k));
    count_rows.push_back(std::move(row));
  }
  doc["counts"] = std::move(count_rows);
  doc["fractions"] = pcw::report_from_fraction_matrix(F);
  doc["d_squared"] = pcw::report_number(pcw::pseudodistance_sq(F).d_squared);
  return doc;
}

void print_pcw_text(const pcw::Pseudocodeword& p) {
  const pcw::CountMatrix counts = pcw::pcw_matrix(p);
  const pcw::FractionMatrix F = pcw::normalize(counts);
  std::cout << "  p =";
  for (const pcw::Symbol v : p.values) std::cout << " " << v;
  std::cout << " | counts =";
  for (int i = 0; i < counts.n; ++i) {
    std::cout << " (";
    for (pcw::Symbol k = 0; k < counts.q; ++k) {
      if (k) std::cout << ",";
      std::cout << counts.at(i, k);
    }
    std::cout << ")";
  }
  std::cout << " | d2 = " << fmt(pcw::pseudodistance_sq(F).d_squared) << "\n";
}

int run_enumerate(const Options& opts) {
  const pcw::ParityCheckMatrix H = load_matrix(opts, false);
  const pcw::TannerGraph G = pcw::tanner_from_matrix(H);

  std::vector<std::pair<pcw::CoverAssignment, std::uint64_t>> covers;
  if (!opts.cover_file.empty()) {
    std::ifstream in(opts.cover_file);
    if (!in) throw pcw::InputError("cannot open cover file: " + opts.cover_file);
    pcw::CoverAssignment cov = pcw::parse_cover(in);
    pcw::require_cover_matches(G, cov);
    covers.emplace_back(std::move(cov), 0);
  } else {
    for (const int M : opts.M) {
      const int reps = M == 1 ? 1 : opts.covers;
      for (int idx = 0; idx < reps; ++idx) {
        const std::uint64_t s = pcw::cover_seed(opts.seed, M, idx);
        covers.emplace_back(pcw::random_cover(G, M, s), s);
      }
    }
  }

  if (json_format(opts)) {
    pcw::Report doc;
    doc["config"] = config_echo(opts, "enumerate");
    pcw::Report arr = pcw::Report::array();
    for (const auto& [cov, s] : covers) {
      pcw::Report centry;
      centry["M"] = cov.M;
      if (opts.cover_file.empty()) centry["seed"] = s;
      centry["cover"] = pcw::serialize_cover(cov);
      pcw::Report pcws = pcw::Report::array();
      for (const auto& p : pcw::enumerate_pseudocodewords(H, cov, opts.limit)) {
        pcws.push_back(pcw_report(p));
      }
      centry["count"] = pcws.size();
      centry["pseudocodewords"] = std::move(pcws);
      arr.push_back(std::move(centry));
    }
    doc["covers"] = std::move(arr);
    emit(doc);
    return 0;
  }

  for (const auto& [cov, s] : covers) {
    std::cout << "cover M=" << cov.M;
    if (opts.cover_file.empty()) std::cout << " seed=" << s;
    std::cout << "\n" << pcw::serialize_cover(cov);
    const auto pcws = pcw::enumerate_pseudocodewords(H, cov, opts.limit);
    std::cout << "pseudocodewords: " << pcws.size() << "\n";
    for (const auto& p : pcws) print_pcw_text(p);
  }
  return 0;
}

int run_bound(const Options& opts, const std::string& kind) {
  const pcw::ParityCheckMatrix H = load_matrix(opts, true);
  if (kind == "eig") {
    const pcw::SpectralBoundReport r = pcw::eigenvalue_bound(H, opts.tol_eig);
    if (json_format(opts)) {
      pcw::Report doc;
      doc["config"] = config_echo(opts, "bound eig");
      doc["spectral"] = pcw::report_from_spectral(r);
      emit(doc);
      return 0;
    }
    std::cout << "spectral bound: " << fmt(r.bound) << "\n";
    std::cout << "lambda1: " << fmt(r.lambda1) << "\nlambda2: "
              << fmt(r.lambda2) << "\n";
    std::cout << "c: " << r.c << "\nd: " << r.d << "\nn: " << r.n << "\n";
    std::cout << "kappa(" << r.q << "): " << fmt(r.kappa_used) << "\n";
    if (r.vacuous) std::cout << "vacuous: yes (2c <= lambda2)\n";
    return 0;
  }

  const pcw::LpInstance inst = pcw::build_lp(H);
  if (!opts.export_lp_path.empty()) {
    std::ofstream out(opts.export_lp_path);
    if (!out) {
      throw pcw::InputError("cannot write LP file: " + opts.export_lp_path);
    }
    pcw::export_lp(inst, out);
  }
  const pcw::LpBoundReport r = pcw::lp_pseudodistance_bound(H, opts.tol_lp);
  if (json_format(opts)) {
    pcw::Report doc;
    doc["config"] = config_echo(opts, "bound lp");
    doc["lp"] = pcw::report_from_lp(r);
    emit(doc);
    return 0;
  }
  std::cout << "lp bound: " << fmt(r.bound) << "\n";
  std::cout << "optimum f': " << fmt(r.optimum) << "\n";
  std::cout << "kappa(" << r.q << "): " << fmt(r.kappa_used)
            << " (generic " << fmt(r.kappa_generic_value) << ", generic bound "
            << fmt(r.bound_generic) << ")\n";
  std::cout << "simplex iterations: " << r.solution.iterations << "\n";
  return 0;
}

int run_verify(const Options& opts) {
  const pcw::ParityCheckMatrix H = load_matrix(opts, true);
  const pcw::VerificationReport vr =
      pcw::verify_bounds(H, opts.M, opts.covers, opts.seed, opts.limit);

  if (json_format(opts)) {
    pcw::Report doc = pcw::report_from_verification(vr);
    doc["config"].update(config_echo(opts, "verify"));
    emit(doc);
    return 0;
  }

  std::cout << "code: n=" << vr.n << " m=" << vr.m << " q=" << vr.q;
  if (vr.reg) {
    std::cout << ", regular (c=" << vr.reg->first << ", d=" << vr.reg->second
              << ")";
  } else {
    std::cout << ", irregular";
  }
  std::cout << (vr.connected ? ", connected" : ", disconnected") << "\n";
  std::cout << "covers:";
  for (const auto& c : vr.covers) {
    std::cout << " [M=" << c.M << " seed=" << c.seed << " pcws="
              << c.pseudocodewords << "]";
  }
  std::cout << "\npseudocodewords examined: " << vr.pseudocodewords_examined
            << "\n";
  std::cout << "sampled minimum d2: " << fmt(vr.empirical_min_d2) << "\n";
  const auto line = [](const char* name, const pcw::CheckCounter& c) {
    std::cout << name << " violations: " << c.violations << " / "
              << c.evaluated << "\n";
  };
  line("count-inequality", vr.count_ineq);
  line("closed-form", vr.closed_form);
  line("per-check quadratic", vr.per_check_quad);
  line("energy-lower", vr.energy_lower);
  line("energy-upper", vr.energy_upper);
  line("rank-one lp", vr.rank_one_lp);
  if (vr.spectral) {
    std::cout << "spectral bound: " << fmt(vr.spectral->bound)
              << (vr.spectral->vacuous ? " (vacuous)" : "")
              << (vr.spectral_sound ? " sound" : " UNSOUND")
              << ", gap " << fmt(vr.spectral_gap) << "\n";
  } else {
    std::cout << "spectral bound: skipped (" << vr.spectral_note << ")\n";
  }
  if (vr.lp) {
    std::cout << "lp bound: " << fmt(vr.lp->bound)
              << (vr.lp_sound ? " sound" : " UNSOUND") << ", gap "
              << fmt(vr.lp_gap) << "\n";
  } else {
    std::cout << "lp bound: skipped (" << vr.lp_note << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"pseudodistance bounds for linear codes over Z_q with q-ary "
               "PSK on the AWGN channel"};
  app.require_subcommand(1);

  std::string bound_kind;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opts.input, "matrix file (`n m q` then rows)")
        ->required();
    sub->add_option("--q", opts.q_override,
                    "reinterpret entries over this modulus");
    sub->add_option("--format", opts.format, "text | json")
        ->check(CLI::IsMember({"text", "json", "json-like"}));
    sub->add_option("--limit", opts.limit, "enumeration candidate limit");
    return sub;
  };

  add_common(app.add_subcommand("info", "matrix summary and entry audit"));

  auto* dist = add_common(
      app.add_subcommand("distance", "modulated distance of a codeword"));
  dist->add_option("--codeword", opts.codeword, "comma-separated symbols")
      ->required();

  auto* enumerate = add_common(app.add_subcommand(
      "enumerate", "pseudocodewords of sampled or supplied covers"));
  enumerate->add_option("--M", opts.M, "cover degrees")->delimiter(',');
  enumerate->add_option("--covers", opts.covers, "covers per degree");
  enumerate->add_option("--seed", opts.seed, "master seed");
  enumerate->add_option("--cover-file", opts.cover_file,
                        "use this cover instead of sampling");

  auto* bound = add_common(
      app.add_subcommand("bound", "lower bounds on the minimum pseudodistance"));
  bound->add_option("kind", bound_kind, "eig | lp")
      ->required()
      ->check(CLI::IsMember({"eig", "lp"}));
  bound->add_option("--export-lp", opts.export_lp_path,
                    "write the LP in text interchange format");
  bound->add_option("--tol-eig", opts.tol_eig, "Jacobi convergence tolerance");
  bound->add_option("--tol-lp", opts.tol_lp, "simplex feasibility tolerance");

  auto* verify = add_common(app.add_subcommand(
      "verify", "enumerate covers and check every bound and inequality"));
  verify->add_option("--M", opts.M, "cover degrees")->delimiter(',');
  verify->add_option("--covers", opts.covers, "covers per degree");
  verify->add_option("--seed", opts.seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("info")) return run_info(opts);
    if (app.got_subcommand("distance")) return run_distance(opts);
    if (app.got_subcommand("enumerate")) return run_enumerate(opts);
    if (app.got_subcommand("bound")) return run_bound(opts, bound_kind);
    if (app.got_subcommand("verify")) return run_verify(opts);
  } catch (const pcw::InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pcw::HypothesesUnmetError& e) {
    std::cerr << "error: hypotheses unmet: " << e.what() << "\n";
    return 2;
  } catch (const pcw::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
