#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "gnoe/gnoe.hpp"

namespace gnoe::cli {

namespace {

struct ExtensionOptions {
  std::string config;
  std::string ring;
  std::string sigma = "identity";
  std::string delta = "zero";
  std::string mode = "standard";
  std::string mu;
};

struct GlobalOptions {
  std::string format = "human";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> samples;
};

/// Signals a usage problem detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

void add_extension_options(CLI::App* cmd, ExtensionOptions& o) {
  cmd->add_option("--config", o.config, "Extension configuration file (JSON)");
  cmd->add_option("--ring", o.ring, "Ring descriptor, e.g. poly(gf(2,1))");
  cmd->add_option("--sigma", o.sigma, "Twisting map")->capture_default_str();
  cmd->add_option("--delta", o.delta, "Derivation map")->capture_default_str();
  cmd->add_option("--mode", o.mode, "standard or flipped")->check(CLI::IsMember({"standard", "flipped"}));
  cmd->add_option("--mu", o.mu, "Quotient parameter X^2 = mu (flipped mode)");
}

std::string degree_text(std::optional<std::size_t> d) { return d ? std::to_string(*d) : "-inf"; }

ExtensionConfig resolve_extension(const ExtensionOptions& o, const GlobalOptions& g) {
  ExtensionConfig cfg;
  if (!o.config.empty()) {
    if (!o.ring.empty()) throw UsageError{"--config and --ring are exclusive"};
    cfg = load_config(o.config);
  } else {
    if (o.ring.empty()) throw UsageError{"an extension needs --config or --ring"};
    const RingHandle ring = build_ring(parse_descriptor(o.ring));
    const Mode mode = o.mode == "flipped" ? Mode::Flipped : Mode::Standard;
    std::optional<RingElement> mu;
    if (!o.mu.empty()) {
      if (!ring->base_field()) throw Error(ErrorCode::NotAlgebraOverField, "--mu needs an algebra over a field");
      mu = ring->base_field()->parse(o.mu);
    }
    cfg.extension = Extension::make(ring, parse_map(o.sigma, ring), parse_map(o.delta, ring), mode, mu);
  }
  if (g.seed) cfg.experiment.seed = *g.seed;
  if (g.bound) cfg.experiment.bound = *g.bound;
  if (g.samples) cfg.experiment.samples = *g.samples;
  return cfg;
}

void emit(const Report& report, const GlobalOptions& g, std::ostream& out) {
  out << (g.format == "machine" ? report.machine() : report.human());
}

std::vector<mpq_class> parse_mus(const std::string& text, std::size_t levels) {
  std::vector<mpq_class> mus;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    mpq_class q;
    if (item.empty() || q.set_str(item, 10) != 0) throw UsageError{"bad --mu entry '" + item + "'"};
    q.canonicalize();
    mus.push_back(q);
  }
  if (mus.size() == 1) mus.resize(levels, mus[0]);
  if (mus.size() != levels) throw UsageError{"--mu needs one value or one per level"};
  return mus;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonassociative Ore extensions: arithmetic, division, classification"};
  app.name("gnoe");
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--bound", g.bound, "Degree bound for probes");
  app.add_option("--samples", g.samples, "Random samples per probe");

  ExtensionOptions ext_opts;

  auto* mul = app.add_subcommand("mul", "Multiply two polynomials");
  add_extension_options(mul, ext_opts);
  std::string p_text, q_text;
  mul->add_option("p", p_text, "Left factor")->required();
  mul->add_option("q", q_text, "Right factor")->required();

  auto* divide = app.add_subcommand("divide", "Left or right division by generators");
  add_extension_options(divide, ext_opts);
  std::string side_text = "left";
  std::vector<std::string> gen_texts;
  bool step_only = false;
  std::string target_text;
  divide->add_option("--side", side_text, "left or right")->check(CLI::IsMember({"left", "right"}));
  divide->add_option("--gen", gen_texts, "Generator polynomial (repeatable)")->required()->allow_extra_args(false);
  divide->add_flag("--step", step_only, "Run a single division step");
  divide->add_option("q", target_text, "Polynomial to divide")->required();

  auto* classify = app.add_subcommand("classify", "Classify the extension by probes");
  add_extension_options(classify, ext_opts);

  auto* check = app.add_subcommand("check-gnoe", "Right representability versus bijectivity of sigma");
  add_extension_options(check, ext_opts);

  auto* cayley = app.add_subcommand("cayley", "Cayley tower through flipped quotients");
  std::size_t levels = 3;
  std::string mu_text = "-1";
  std::string field_text = "rationals";
  cayley->add_option("--levels", levels, "Number of doublings")->check(CLI::Range(0, 4));
  cayley->add_option("--mu", mu_text, "Comma-separated parameters, or one for every level");
  cayley->add_option("--field", field_text, "Scalar field descriptor");

  auto* demo = app.add_subcommand("demo", "Ascending chain experiments");
  std::string demo_name;
  std::optional<std::size_t> length;
  std::string orientation_text;
  ChainParams chain;
  demo->add_option("name", demo_name, "skew-endo-chain or flipped-chain")
      ->required()
      ->check(CLI::IsMember({"skew-endo-chain", "flipped-chain"}));
  demo->add_option("--length", length, "Number of ideals in the chain");
  demo->add_option("--orientation", orientation_text, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
  demo->add_option("--prime", chain.prime, "Characteristic of the skew chain");
  demo->add_option("--x-bound", chain.x_bound, "X-degree truncation of the skew chain");
  demo->add_option("--y-bound", chain.y_bound, "Y-degree truncation of the skew chain");

  for (auto* sub : {mul, divide, classify, check, cayley, demo}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mul->parsed()) {
      const auto cfg = resolve_extension(ext_opts, g);
      const auto p = parse_poly(p_text, cfg.extension);
      const auto q = parse_poly(q_text, cfg.extension);
      Report report("product");
      report.add("extension", cfg.extension->describe());
      report.add("p", format_poly(p));
      report.add("q", format_poly(q));
      report.add("product", format_poly(p * q));
      emit(report, g, out);
    } else if (divide->parsed()) {
      const auto cfg = resolve_extension(ext_opts, g);
      const Side side = side_text == "left" ? Side::Left : Side::Right;
      std::vector<OrePolynomial> gens;
      for (const auto& t : gen_texts) gens.push_back(parse_poly(t, cfg.extension));
      const auto set = GeneratorSet::make(side, gens);
      const auto q = parse_poly(target_text, cfg.extension);
      Report report(side_text + " division");
      report.add("extension", cfg.extension->describe());
      report.add("side", side_text);
      for (std::size_t i = 0; i < gens.size(); ++i) report.add("g" + std::to_string(i + 1), format_poly(gens[i]));
      report.add("q", format_poly(q));
      if (step_only) {
        const auto cert = side == Side::Left ? left_divide_step(set, q) : right_divide_step(set, q);
        const auto difference = q - cert.element;
        report.add("element", format_poly(cert.element));
        report.add("certificate", cert.serialize());
        report.add("claimed_degree", degree_text(cert.claimed_degree));
        report.add("difference", format_poly(difference));
        report.add("degree_additive", cert.degree_additive(set));
      } else {
        const auto red = side == Side::Left ? left_reduce(set, q) : right_reduce(set, q);
        report.add("remainder", format_poly(red.remainder));
        report.add("steps", red.steps);
        report.add("element", format_poly(red.combined.element));
        report.add("certificate", red.combined.serialize());
        report.add("claimed_degree", degree_text(red.combined.claimed_degree));
      }
      emit(report, g, out);
    } else if (classify->parsed()) {
      const auto cfg = resolve_extension(ext_opts, g);
      ProbeBudget budget{cfg.experiment.bound, cfg.experiment.samples, cfg.experiment.seed};
      emit(classify_extension(cfg.extension, budget).to_report(), g, out);
    } else if (check->parsed()) {
      const auto cfg = resolve_extension(ext_opts, g);
      ProbeBudget budget{cfg.experiment.bound, cfg.experiment.samples, cfg.experiment.seed};
      emit(check_gnoe_bijective(cfg.extension, budget), g, out);
    } else if (cayley->parsed()) {
      const auto tower = cayley_tower(build_ring(parse_descriptor(field_text)), parse_mus(mu_text, levels));
      emit(tower_report(tower, true), g, out);
    } else if (demo->parsed()) {
      if (g.seed) chain.seed = *g.seed;
      if (g.bound) chain.degree_bound = *g.bound;
      if (g.samples) chain.samples = *g.samples;
      if (!orientation_text.empty())
        chain.orientation = orientation_text == "upper" ? Orientation::Upper : Orientation::Lower;
      const bool skew = demo_name == "skew-endo-chain";
      const std::size_t n = length.value_or(skew ? 4 : 3);
      emit(chain_experiment(skew ? ChainKind::SkewEndo : ChainKind::Flipped, n, chain).to_report(), g, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    out << "error=" << e.name() << "\n";
    err << e.what() << "\n";
    return is_input_error(e.code()) ? kExitUsage : kExitComputation;
  }
  return kExitOk;
}

}  // namespace gnoe::cli
