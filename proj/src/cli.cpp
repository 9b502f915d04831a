#include "alphaspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphaspec/bounds.hpp"
#include "alphaspec/closedform.hpp"
#include "alphaspec/report.hpp"
#include "alphaspec/spectrum.hpp"
#include "alphaspec/verify.hpp"

namespace alphaspec::cli {

using alphaspec::to_string;

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::spectrum:
      return "spectrum";
    case Subcommand::bounds:
      return "bounds";
    case Subcommand::family:
      return "family";
    case Subcommand::verify:
      return "verify";
    case Subcommand::trees:
      return "trees";
    case Subcommand::km_search:
      return "km-search";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<std::string_view, Subcommand>, 6> kSubcommands = {{
    {"spectrum", Subcommand::spectrum},
    {"bounds", Subcommand::bounds},
    {"family", Subcommand::family},
    {"verify", Subcommand::verify},
    {"trees", Subcommand::trees},
    {"km-search", Subcommand::km_search},
}};

std::vector<AlphaParam> alphas_from_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_alpha_list(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

struct RawOptions {
  std::string family, input, alpha = "0", format = "text", out, grid, suite = "exhaustive";
  std::size_t n = 4, n_max = 0;
  bool exact_rank = false, allow_n5 = false, progress = false;
};

void add_input_options(CLI::App* sub, RawOptions& o) {
  auto* fam = sub->add_option("--family", o.family,
                              "family spec: path:n, cycle:n, kbip:r,s, symk:n, shrikhande, discrete:n, "
                              "graph:n:u-v,u-v,...");
  auto* in = sub->add_option("--input", o.input, "edge-list file ('n a' header, then 'u v' lines)");
  fam->excludes(in);
}

void add_format(CLI::App* sub, RawOptions& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", o.out, "write output to this path instead of stdout");
}

}  // namespace

CommandPlan parse_args(const std::vector<std::string>& args) {
  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    const bool known = std::any_of(kSubcommands.begin(), kSubcommands.end(),
                                   [&](const auto& p) { return p.first == args.front(); });
    if (!known) throw UsageError("unknown subcommand '" + args.front() + "'");
  }

  CLI::App app{"Alpha singular values, trace norms and bounds of digraphs", "alphaspec"};
  app.require_subcommand(1);
  RawOptions o;

  auto* spectrum = app.add_subcommand("spectrum", "singular values and trace norm of A_alpha");
  add_input_options(spectrum, o);
  spectrum->add_option("--alpha", o.alpha, "comma-separated alpha values in [0, 1), e.g. 0,1/4,0.5");
  spectrum->add_flag("--exact-rank", o.exact_rank, "also report the rank (exact for p/q with q <= 64)");
  add_format(spectrum, o);

  auto* bounds = app.add_subcommand("bounds", "every trace-norm bound with slack and equality case");
  add_input_options(bounds, o);
  bounds->add_option("--alpha", o.alpha, "comma-separated alpha values in [0, 1)");
  add_format(bounds, o);

  auto* family = app.add_subcommand("family", "emit a named family as an edge list");
  add_input_options(family, o);
  add_format(family, o);

  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  verify->add_option("--suite", o.suite, "exhaustive, trees, cycle or all")
      ->check(CLI::IsMember({"exhaustive", "trees", "cycle", "all"}));
  verify->add_option("--n", o.n, "order of the exhaustive sweep (2..5)");
  verify->add_option("--n-max", o.n_max, "largest order for the tree (<= 6) and cycle suites");
  verify->add_option("--grid", o.grid, "alpha grid (exact fractions, denominator <= 64)");
  verify->add_flag("--allow-n5", o.allow_n5, "permit the n = 5 sweep (about a million digraphs)");
  verify->add_flag("--progress", o.progress, "report progress on stderr");
  add_format(verify, o);

  auto* trees = app.add_subcommand("trees", "minimum trace norm over oriented trees");
  trees->add_option("--n-max", o.n_max, "largest order (2..6)");
  add_format(trees, o);

  auto* km = app.add_subcommand("km-search", "digraphs meeting the Koolen-Moulton type upper bound");
  km->add_option("--n-max", o.n_max, "largest order (2..5)");
  km->add_option("--grid", o.grid, "alpha grid");
  km->add_flag("--progress", o.progress, "report progress on stderr");
  add_format(km, o);

  CommandPlan plan;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    plan.help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    return plan;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  for (const auto& [name, sub] : kSubcommands)
    if (name == chosen->get_name()) plan.subcommand = sub;

  if (!o.family.empty()) {
    try {
      plan.input = parse_family_spec(o.family);
    } catch (const Error& e) {
      throw UsageError("--family: " + std::string(e.what()));
    }
  } else if (!o.input.empty()) {
    plan.input = FileInput{o.input};
  }
  const bool needs_input = plan.subcommand == Subcommand::spectrum || plan.subcommand == Subcommand::bounds ||
                           plan.subcommand == Subcommand::family;
  if (needs_input && std::holds_alternative<std::monostate>(plan.input))
    throw UsageError("--family or --input: exactly one input source is required");

  plan.alphas = alphas_from_flag("--alpha", o.alpha);
  if (plan.alphas.empty()) throw UsageError("--alpha: no values given");
  plan.format = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::text;
  if (!o.out.empty()) plan.out_path = o.out;
  plan.exact_rank = o.exact_rank;
  plan.allow_n5 = o.allow_n5;
  plan.progress = o.progress;
  plan.n = o.n;
  plan.suite = o.suite == "trees"  ? Suite::trees
               : o.suite == "cycle" ? Suite::cycle
               : o.suite == "all"   ? Suite::all
                                    : Suite::exhaustive;

  switch (plan.subcommand) {
    case Subcommand::verify:
      if (plan.n < 2 || plan.n > 5) throw UsageError("--n: must be between 2 and 5");
      if (plan.n == 5 && !plan.allow_n5) throw UsageError("--n: 5 requires --allow-n5");
      plan.n_max = o.n_max;
      if (o.n_max != 0 && o.n_max < 2) throw UsageError("--n-max: must be at least 2");
      break;
    case Subcommand::trees:
      plan.n_max = o.n_max == 0 ? 6 : o.n_max;
      if (plan.n_max < 2 || plan.n_max > 6) throw UsageError("--n-max: must be between 2 and 6");
      break;
    case Subcommand::km_search:
      plan.n_max = o.n_max == 0 ? 3 : o.n_max;
      if (plan.n_max < 2 || plan.n_max > 5) throw UsageError("--n-max: must be between 2 and 5");
      break;
    default:
      break;
  }
  if (plan.subcommand == Subcommand::verify || plan.subcommand == Subcommand::km_search)
    plan.grid = o.grid.empty() ? quarter_alpha_grid() : alphas_from_flag("--grid", o.grid);
  return plan;
}

// ---------------------------------------------------------------------------

namespace {

using json = nlohmann::ordered_json;

struct Loaded {
  Digraph digraph;
  std::string label;
  std::optional<FamilySpec> family;
};

Loaded load_input(const InputSource& input) {
  if (const auto* f = std::get_if<FamilySpec>(&input)) return {make_family(*f), to_string(*f), *f};
  const auto& path = std::get<FileInput>(input).path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw InvalidArgument("cannot read '" + path + "'");
  try {
    return {parse_digraph(text.str()), path, std::nullopt};
  } catch (const ParseError& e) {
    throw InvalidArgument(path + ": " + std::string(e.what()));
  }
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_number(v[i]);
  }
  return s;
}

std::string rank_text(const Digraph& d, const AlphaParam& a, bool& exact) {
  exact = a.exact() && a.exact()->den <= 64;
  return std::to_string(numerical_rank(d, a, exact ? RankMode::exact_rational : RankMode::numeric));
}

void render_spectrum(const CommandPlan& plan, const Loaded& in, std::ostream& os) {
  const Digraph& d = in.digraph;
  const bool closed = in.family && has_closed_form(*in.family);
  json rows = json::array();
  if (plan.format == Format::csv) os << "alpha,index,singular_value,closed_form\n";
  for (const auto& a : plan.alphas) {
    const auto s = singular_values(build_alpha_matrix(d, a));
    std::optional<ClosedFormSpectrum> cf;
    if (closed) cf = closed_form_spectrum(*in.family, a);
    const std::vector<double> cfv = cf ? cf->flattened() : std::vector<double>{};
    bool exact = false;
    std::string rank;
    if (plan.exact_rank) rank = rank_text(d, a, exact);

    switch (plan.format) {
      case Format::csv:
        for (std::size_t i = 0; i < s.size(); ++i)
          os << format_number(a.value()) << ',' << i << ',' << format_number(s[i]) << ','
             << (cf ? format_number(cfv[i]) : "") << '\n';
        break;
      case Format::json: {
        json j;
        j["digraph"] = in.label;
        j["encoding"] = encode(d);
        j["alpha"] = a.value();
        j["spectrum"] = to_json(s);
        if (cf) j["closed_form"] = to_json(*cf);
        if (plan.exact_rank) {
          j["rank"] = std::stoul(rank);
          j["rank_mode"] = exact ? "exact" : "numeric";
        }
        rows.push_back(std::move(j));
        break;
      }
      case Format::text: {
        os << "digraph " << in.label << " (n=" << d.order() << ", a=" << d.arc_count() << ")  alpha = "
           << a.to_string() << "\n";
        os << "  singular values: " << join_numbers(s.values()) << "\n";
        if (cf) {
          double diff = 0.0;
          for (std::size_t i = 0; i < cfv.size(); ++i) diff = std::max(diff, std::abs(cfv[i] - s[i]));
          os << "  closed form:     " << join_numbers(cfv) << "  (max |diff| " << format_number(diff) << ")\n";
        }
        os << "  trace norm:      " << format_number(s.trace_norm()) << "\n";
        os << "  spectral norm:   " << format_number(s.spectral_norm()) << "\n";
        if (plan.exact_rank) os << "  rank:            " << rank << (exact ? " (exact)" : " (numeric)") << "\n";
        break;
      }
    }
  }
  if (plan.format == Format::json) os << rows.dump(2) << "\n";
}

std::string maybe(const std::optional<double>& v) { return v ? format_number(*v) : "n/a"; }

void render_bounds(const CommandPlan& plan, const Loaded& in, std::ostream& os) {
  const Digraph& d = in.digraph;
  if (d.order() < 2) throw InvalidArgument("bounds need a digraph with at least 2 vertices");
  json rows = json::array();
  if (plan.format == Format::csv) os << bound_csv_header();
  for (const auto& a : plan.alphas) {
    const auto r = bound_report(d, a);
    if (plan.format == Format::csv) {
      os << to_csv_row(r, d);
    } else if (plan.format == Format::json) {
      auto j = to_json(r, d);
      j["digraph"] = in.label;
      rows.push_back(std::move(j));
    } else {
      os << "digraph " << in.label << " (n=" << r.n << ", a=" << r.arcs << ")  alpha = " << a.to_string()
         << "\n";
      os << "  trace norm " << format_number(r.trace_norm) << ", spectral norm " << format_number(r.spectral_norm)
         << " (floor a/n = " << format_number(r.spectral_floor)
         << (r.spectral_floor_attained ? ", attained" : "") << ")\n";
      for (auto id : kAllBounds) {
        const double value = id == BoundId::lower_det          ? r.lower_det
                             : id == BoundId::lower_basic      ? r.lower_basic
                             : id == BoundId::upper_mcclelland ? r.upper_mcclelland
                                                               : r.upper_km.value_or(NAN);
        os << "  " << to_string(id) << ": ";
        if (id == BoundId::upper_km && !r.km_applicable) {
          os << "not applicable (a < n*beta, beta = " << format_number(r.km_beta) << ")\n";
          continue;
        }
        os << format_number(value) << "  slack " << maybe(r.slack_of(id));
        if (r.attains(id)) os << "  EQUALITY " << to_string(classify_equality(d, r, id));
        os << "\n";
      }
    }
  }
  if (plan.format == Format::json) os << rows.dump(2) << "\n";
}

void render_family(const CommandPlan& plan, const Loaded& in, std::ostream& os) {
  const Digraph& d = in.digraph;
  switch (plan.format) {
    case Format::text:
      os << emit_digraph(d);
      break;
    case Format::csv:
      os << "u,v\n";
      for (const auto& [u, v] : d.arcs()) os << u << ',' << v << '\n';
      break;
    case Format::json: {
      json j;
      j["digraph"] = in.label;
      j["n"] = d.order();
      j["a"] = d.arc_count();
      j["encoding"] = encode(d);
      json arcs = json::array();
      for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
      j["arcs"] = std::move(arcs);
      os << j.dump(2) << "\n";
      break;
    }
  }
}

ProgressFn progress_to(std::ostream& err, bool enabled, std::string label) {
  if (!enabled) return {};
  return [&err, label](std::uint64_t done, std::uint64_t total) {
    err << "\r" << label << ": " << done << "/" << total << std::flush;
    if (done == total) err << "\n";
  };
}

const char* kSummaryCsvHeader = "suite,passed,checks_run,failures,deviations,elapsed_seconds\n";

void summary_csv_row(const VerificationSummary& s, std::ostream& os) {
  os << s.suite << ',' << (s.passed() ? "true" : "false") << ',' << s.checks_run << ',' << s.failure_count << ','
     << s.deviation_count << ',' << format_number(s.elapsed_seconds) << '\n';
}

int render_summaries(const CommandPlan& plan, const std::vector<VerificationSummary>& all, std::ostream& os) {
  bool passed = true;
  json arr = json::array();
  if (plan.format == Format::csv) os << kSummaryCsvHeader;
  for (const auto& s : all) {
    passed = passed && s.passed();
    if (plan.format == Format::json)
      arr.push_back(to_json(s));
    else if (plan.format == Format::csv)
      summary_csv_row(s, os);
    else
      os << to_text(s);
  }
  if (plan.format == Format::json) os << (all.size() == 1 ? arr.front() : arr).dump(2) << "\n";
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_verify(const CommandPlan& plan, std::ostream& os, std::ostream& err) {
  std::vector<VerificationSummary> all;
  const bool every = plan.suite == Suite::all;
  if (every || plan.suite == Suite::exhaustive) {
    ExhaustiveOptions opt;
    opt.allow_n5 = plan.allow_n5;
    opt.progress = progress_to(err, plan.progress, "n=" + std::to_string(plan.n));
    all.push_back(run_exhaustive(plan.n, plan.grid, opt));
  }
  if (every || plan.suite == Suite::trees) {
    const std::size_t hi = plan.n_max == 0 ? 6 : plan.n_max;
    if (hi > 6) throw InvalidArgument("--n-max: the tree suite supports n <= 6");
    for (std::size_t n = 2; n <= hi; ++n) all.push_back(verify_tree_minimum(n));
  }
  if (every || plan.suite == Suite::cycle) {
    const std::size_t hi = plan.n_max == 0 ? 12 : plan.n_max;
    if (hi < 3) throw InvalidArgument("--n-max: the cycle suite needs n_max >= 3");
    all.push_back(arbitrate_cycle_coefficient(hi));
  }
  return render_summaries(plan, all, os);
}

int run_trees(const CommandPlan& plan, std::ostream& os) {
  std::vector<VerificationSummary> all;
  for (std::size_t n = 2; n <= plan.n_max; ++n) all.push_back(verify_tree_minimum(n));
  bool passed = true;
  for (const auto& s : all) passed = passed && s.passed();
  if (plan.format == Format::json) {
    json arr = json::array();
    for (const auto& s : all) arr.push_back(to_json(s));
    os << arr.dump(2) << "\n";
  } else {
    const char* sep = plan.format == Format::csv ? "," : "  ";
    os << "n" << sep << "oriented_trees" << sep << "min_trace_norm" << sep << "sqrt_n_minus_1" << sep
       << "attaining" << sep << "failures\n";
    for (const auto& s : all) {
      auto tally = [&](const char* k) {
        const auto it = s.tallies.find(k);
        return it == s.tallies.end() ? std::uint64_t{0} : it->second;
      };
      os << s.parameters["n"].get<std::size_t>() << sep << tally("oriented_trees") << sep
         << format_number(s.metrics.at("min_trace_norm")) << sep << format_number(s.metrics.at("sqrt_n_minus_1"))
         << sep << tally("attaining_at_alpha0") << sep << s.failure_count << "\n";
    }
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_km(const CommandPlan& plan, std::ostream& os, std::ostream& err) {
  const auto found =
      find_km_equality_candidates(plan.n_max, plan.grid, progress_to(err, plan.progress, "km-search"));
  switch (plan.format) {
    case Format::json: {
      json j;
      j["n_max"] = plan.n_max;
      json grid = json::array();
      for (const auto& a : plan.grid) grid.push_back(a.to_string());
      j["alpha_grid"] = std::move(grid);
      j["complete_beyond_sweep"] = false;
      json arr = json::array();
      for (const auto& c : found)
        arr.push_back({{"digraph", c.digraph},
                       {"alpha", c.alpha.to_string()},
                       {"trace_norm", c.trace_norm},
                       {"upper_km", c.upper_km}});
      j["candidates"] = std::move(arr);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "digraph,alpha,trace_norm,upper_km\n";
      for (const auto& c : found)
        os << c.digraph << ',' << c.alpha.to_string() << ',' << format_number(c.trace_norm) << ','
           << format_number(c.upper_km) << '\n';
      break;
    case Format::text:
      os << found.size() << " candidates for n <= " << plan.n_max
         << " (covers the swept range only, not a characterization)\n";
      for (const auto& c : found)
        os << "  " << c.digraph << "  alpha=" << c.alpha.to_string() << "  trace_norm=" << format_number(c.trace_norm)
           << "\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
  if (plan.help) {
    out << *plan.help;
    return kExitOk;
  }
  std::ostringstream os;
  int status = kExitOk;
  switch (plan.subcommand) {
    case Subcommand::spectrum:
      render_spectrum(plan, load_input(plan.input), os);
      break;
    case Subcommand::bounds:
      render_bounds(plan, load_input(plan.input), os);
      break;
    case Subcommand::family:
      render_family(plan, load_input(plan.input), os);
      break;
    case Subcommand::verify:
      status = run_verify(plan, os, err);
      break;
    case Subcommand::trees:
      status = run_trees(plan, os);
      break;
    case Subcommand::km_search:
      status = run_km(plan, os, err);
      break;
  }
  if (plan.out_path) {
    std::ofstream f(*plan.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + *plan.out_path + "'");
    f << os.str();
    if (!f.flush()) throw InvalidArgument("cannot write '" + *plan.out_path + "'");
  } else {
    out << os.str();
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace alphaspec::cli
