#include "rds/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rds/error.hpp"
#include "rds/generators.hpp"
#include "rds/json_io.hpp"

namespace rds::cli {

using nlohmann::json;
namespace io = rds::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 1;
    case Status::error: return 2;
  }
  return 2;
}

json to_json(const CommandResult& r) {
  json diags = json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"level", d.level}, {"code", d.code}, {"message", d.message}});
  return {{"command", r.command},
          {"status", std::string(to_string(r.status))},
          {"payload", r.payload},
          {"diagnostics", std::move(diags)}};
}

namespace {

// Errors that state a mathematical fact about valid input rather than a
// problem with the input itself.
bool is_violation(Errc code) {
  switch (code) {
    case Errc::hypothesis_violation:
    case Errc::not_rds:
    case Errc::not_rds_matrix:
    case Errc::mixed_field:
    case Errc::not_planar:
    case Errc::not_equidistant:
      return true;
    default:
      return false;
  }
}

struct Context {
  std::istream& in;
  std::ostream& events;
  CommandResult& result;

  void note(std::string level, std::string code, std::string message) {
    result.diagnostics.push_back({std::move(level), std::move(code), std::move(message)});
  }
  void violation(std::string code, std::string message) {
    result.status = Status::violation;
    note("violation", std::move(code), std::move(message));
  }
};

json read_json(const std::string& path, std::istream& in) {
  json doc;
  try {
    if (path.empty() || path == "-") {
      doc = json::parse(in);
    } else {
      std::ifstream file(path);
      if (!file) throw Error(Errc::parse, "cannot open " + path);
      doc = json::parse(file);
    }
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse, std::string("malformed JSON: ") + e.what());
  }
  // Accept the output of another command unchanged so pipes compose.
  if (doc.is_object() && doc.contains("status") && doc.contains("payload")) {
    if (doc["payload"].is_null()) {
      throw Error(Errc::parse, "upstream command produced no payload (status " + doc["status"].dump() + ")");
    }
    return doc["payload"];
  }
  return doc;
}

Configuration read_configuration(const std::string& path, std::istream& in) {
  return io::decode_configuration(read_json(path, in));
}

unsigned thread_count(std::optional<unsigned> requested) {
  unsigned n = requested.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("RDS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || v <= 0) {
      throw Error(Errc::invalid_argument, "RDS_THREADS must be a positive integer");
    }
    n = std::min<unsigned long>(n, static_cast<unsigned long>(v));
  }
  return std::max(1u, n);
}

void cmd_verify(Context& ctx, const std::string& input) {
  const auto report = verify_rds(read_configuration(input, ctx.in));
  ctx.result.payload = io::encode(report);
  for (const auto& f : report.failing_pairs) {
    ctx.violation("not_rds", "squared distance " + f.squared.str() + " between points " + std::to_string(f.i) +
                                 " and " + std::to_string(f.j) + " is not a rational square");
  }
}

void cmd_normalize(Context& ctx, const std::string& input) {
  const auto doc = read_json(input, ctx.in);
  if (doc.is_object() && doc.contains("squared")) {
    ctx.result.payload = io::encode(embed_from_distances(io::decode_distance_matrix(doc)));
  } else {
    ctx.result.payload = io::encode(normalize(io::decode_configuration(doc)));
  }
}

void cmd_audit(Context& ctx, const std::string& input, const std::string& mode) {
  const auto report = audit_general_position(read_configuration(input, ctx.in));
  ctx.result.payload = io::encode(report);
  if (mode == "literal") {
    if (!report.literal_ok) {
      ctx.violation("not_general_position", report.vacuous_line || report.vacuous_circle
                                                ? "literal general position fails (vacuously at this size)"
                                                : "literal general position fails");
    }
  } else if (!report.strong_ok) {
    ctx.violation("not_general_position", "max_collinear " + std::to_string(report.max_collinear) +
                                              ", max_concyclic " + std::to_string(report.max_concyclic));
  }
}

void cmd_invert(Context& ctx, const std::string& input, std::size_t center) {
  const auto c = read_configuration(input, ctx.in);
  if (!verify_rds(c).is_rds) throw Error(Errc::not_rds, "inversion input is not a rational distance set");
  ctx.result.payload = io::encode(invert(c, center));
}

void cmd_lift(Context& ctx, const std::string& input, const std::vector<std::size_t>& base) {
  const auto c = read_configuration(input, ctx.in);
  const auto sys = build_surface(c, base);
  json points = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    try {
      const auto lifted = lift_point(c.point(i), sys);
      points.push_back({{"index", i}, {"lifted", io::encode(lifted)}, {"on_surface", verify_on_surface(lifted, sys)}});
    } catch (const Error& e) {
      if (e.code() != Errc::not_equidistant) throw;
      points.push_back({{"index", i}, {"lifted", nullptr}, {"on_surface", false}});
      ctx.violation("not_equidistant", "point " + std::to_string(i) + ": " + e.what());
    }
  }
  ctx.result.payload = {{"system", io::encode(sys)}, {"points", std::move(points)}};
}

void cmd_cover(Context& ctx, const std::string& curve_path, const std::string& config_path) {
  if ((curve_path.empty() || curve_path == "-") && (config_path.empty() || config_path == "-")) {
    throw Error(Errc::invalid_argument, "--curve and --from cannot both read standard input");
  }
  const auto curve = io::decode_curve(read_json(curve_path, ctx.in));
  const auto c = read_configuration(config_path, ctx.in);
  const auto selection = choose_transverse_triple(curve, c);
  const auto cover = build_double_cover(curve, selection.points, c.k());
  ctx.result.payload = {{"selection", io::encode(selection)}, {"cover", io::encode(cover)}};
  if (!cover.ramification.exact()) ctx.note("info", "bounds_only", cover.note);
}

void cmd_certify(Context& ctx, std::optional<std::size_t> m, const std::string& config_path,
                 const std::vector<std::size_t>& base) {
  GeneralTypeCertificate cert;
  if (m) {
    if (!config_path.empty() || !base.empty()) throw Error(Errc::invalid_argument, "--m excludes --from and --base");
    cert = certify_m(*m);
  } else {
    if (base.empty()) throw Error(Errc::invalid_argument, "certify needs --m or --from with --base");
    const auto c = read_configuration(config_path, ctx.in);
    if (base.size() < 4) {
      // Still certify so the payload records why the criterion does not apply.
      std::vector<LatticePoint> pts;
      for (auto i : base) {
        if (i >= c.size()) throw Error(Errc::invalid_argument, "base index " + std::to_string(i) + " out of range");
        pts.push_back(c.point(i));
      }
      cert = certify_surface(QuadricSystem(c.k(), std::move(pts)));
    } else {
      cert = certify_surface(build_surface(c, base));
    }
  }
  ctx.result.payload = io::encode(cert);
  if (!cert.verdict) ctx.violation("not_certified", cert.reason);
}

void cmd_search(Context& ctx, const std::string& spec_path, const std::string& resume_path,
                std::optional<std::size_t> max_cells, std::optional<unsigned> threads, bool progress) {
  std::optional<SearchCheckpoint> checkpoint;
  if (!resume_path.empty()) checkpoint = io::decode_checkpoint(read_json(resume_path, ctx.in));
  SearchSpec spec;
  if (!spec_path.empty()) {
    spec = io::decode_search_spec(read_json(spec_path, ctx.in));
  } else if (checkpoint) {
    spec = checkpoint->spec;
  } else {
    throw Error(Errc::invalid_argument, "search needs --spec or --resume");
  }

  SearchOptions options;
  options.threads = thread_count(threads);
  if (max_cells) options.max_cells = *max_cells;
  if (progress) {
    options.on_progress = [&ctx](const SearchProgress& p) {
      ctx.events << nlohmann::json{{"event", "cell"},
                                   {"cell", p.cell},
                                   {"cells_total", p.cells_total},
                                   {"found_in_cell", p.found_in_cell}}
                        .dump()
                 << '\n';
      ctx.events.flush();
    };
  }
  const auto result = search(spec, checkpoint, options);
  ctx.result.payload = io::encode(result);
  if (!result.complete()) {
    ctx.note("info", "incomplete",
             std::to_string(result.frontier.size()) + " cells remain; resume with --resume on this output");
  }
}

void cmd_generate(Context& ctx, const std::string& family, std::size_t n, const std::vector<std::string>& offsets) {
  if (family == "line") {
    if (offsets.empty()) {
      ctx.result.payload = io::encode(generate_line_rds(n));
    } else {
      std::vector<Rational> values;
      for (const auto& s : offsets) values.push_back(Rational::parse(s));
      ctx.result.payload = io::encode(generate_line_rds(n, values));
    }
  } else {
    if (!offsets.empty()) throw Error(Errc::invalid_argument, "--offsets applies to the line family only");
    ctx.result.payload = io::encode(generate_circle_rds(n));
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in, std::ostream& events) {
  CommandResult result;
  Context ctx{in, events, result};

  CLI::App app{"Exact tools for rational distance sets", "rds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input;
  std::string mode = "strong";
  std::size_t center = 0;
  std::vector<std::size_t> base;
  std::string curve_path;
  std::string config_path;
  std::optional<std::size_t> m;
  std::string spec_path;
  std::string resume_path;
  std::optional<std::size_t> max_cells;
  std::optional<unsigned> threads;
  bool progress = false;
  std::string family;
  std::size_t n = 0;
  std::vector<std::string> offsets;

  auto* verify = app.add_subcommand("verify", "Check that all pairwise distances are rational");
  verify->add_option("input", input, "Configuration JSON (default: standard input)");

  auto* normalize = app.add_subcommand("normalize", "Lattice form with the first two points at (0,0), (1,0)");
  normalize->add_option("input", input, "Configuration or distance matrix JSON");

  auto* audit = app.add_subcommand("audit", "General-position audit");
  audit->add_option("input", input, "Configuration JSON");
  audit->add_option("--mode", mode, "Verdict that decides the status")->check(CLI::IsMember({"strong", "literal"}));

  auto* inv = app.add_subcommand("invert", "Inversion in the unit circle at one of the points");
  inv->add_option("input", input, "Configuration JSON");
  inv->add_option("--center", center, "Index of the centre point")->required();

  auto* lift = app.add_subcommand("lift", "Lift every point to the quadric system over the chosen base");
  lift->add_option("input", input, "Configuration JSON");
  lift->add_option("--base", base, "Base point indices, comma separated")->required()->delimiter(',');

  auto* cover = app.add_subcommand("cover", "Transverse triple and double cover of a curve");
  cover->add_option("--curve", curve_path, "Plane curve JSON")->required();
  cover->add_option("--from", config_path, "Configuration JSON")->required();

  auto* certify = app.add_subcommand("certify", "General-type certificate for the quadric system");
  auto* m_opt = certify->add_option("--m", m, "Number of base points of the default system");
  auto* from_opt = certify->add_option("--from", config_path, "Configuration JSON");
  certify->add_option("--base", base, "Base point indices, comma separated")->delimiter(',')->needs(from_opt);
  m_opt->excludes(from_opt);

  auto* srch = app.add_subcommand("search", "Bounded-height exhaustive search");
  srch->add_option("--spec", spec_path, "Search spec JSON");
  srch->add_option("--resume", resume_path, "Checkpoint JSON to continue from");
  srch->add_option("--max-cells", max_cells, "Stop after this many cells");
  srch->add_option("--threads", threads, "Worker threads (capped by RDS_THREADS)")->check(CLI::PositiveNumber);
  srch->add_flag("--progress", progress, "Per-cell progress events on standard error");

  auto* gen = app.add_subcommand("generate", "Fixture families");
  gen->add_option("family", family, "line or circle")->required()->check(CLI::IsMember({"line", "circle"}));
  gen->add_option("--n", n, "Number of points")->required();
  gen->add_option("--offsets", offsets, "Line offsets as rationals, comma separated")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.command = "help";
    result.payload = {{"usage", app.help()}};
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.command = "help";
    result.payload = {{"usage", app.help("", CLI::AppFormatMode::All)}};
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::error;
    ctx.note("error", "usage", e.what());
    return result;
  }

  auto* sub = app.get_subcommands().front();
  result.command = sub->get_name();
  try {
    if (sub == verify) cmd_verify(ctx, input);
    else if (sub == normalize) cmd_normalize(ctx, input);
    else if (sub == audit) cmd_audit(ctx, input, mode);
    else if (sub == inv) cmd_invert(ctx, input, center);
    else if (sub == lift) cmd_lift(ctx, input, base);
    else if (sub == cover) cmd_cover(ctx, curve_path, config_path);
    else if (sub == certify) cmd_certify(ctx, m, config_path, base);
    else if (sub == srch) cmd_search(ctx, spec_path, resume_path, max_cells, threads, progress);
    else if (sub == gen) cmd_generate(ctx, family, n, offsets);
  } catch (const Error& e) {
    result.payload = nullptr;
    result.diagnostics.clear();
    const bool v = is_violation(e.code());
    result.status = v ? Status::violation : Status::error;
    ctx.note(v ? "violation" : "error", std::string(rds::to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    result.payload = nullptr;
    result.diagnostics.clear();
    result.status = Status::error;
    ctx.note("error", "internal", e.what());
  }
  return result;
}

}  // namespace rds::cli
