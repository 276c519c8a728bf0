// Copyright 2026 The nlqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace nlqubit::cli {
namespace {

using Json = nlohmann::ordered_json;

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("'" + s + "' is not a finite number");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Command-line state for one subcommand.
struct Options {
  double delta = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  std::string sweep_delta;
  std::string sweep_beta;
  std::string sweep_alpha;
  std::string schemes;
  int quad_order = QuadratureSpec{}.n_theta;
  std::string format = "csv";
  std::string output;
  bool crossovers = false;
  bool compare_universal = false;

  CLI::Option* delta_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* sweep_delta_opt = nullptr;
  CLI::Option* sweep_beta_opt = nullptr;
  CLI::Option* sweep_alpha_opt = nullptr;
  CLI::Option* schemes_opt = nullptr;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Command {
  Family family;
  std::vector<SweepParameter> parameters;
  std::string default_schemes;
  bool has_crossovers;
  bool has_universal;
};

const Command& command_for(Family family) {
  static const std::vector<Command> commands = {
      {Family::rotation,
       {SweepParameter::delta, SweepParameter::beta},
       "rho1,rho2,rho3,sigma1,sigma2,quantum_optimal",
       false,
       false},
      {Family::orthog, {SweepParameter::delta}, "rho1,rho2,sigma1,sigma2,quantum_optimal", true,
       false},
      {Family::general,
       {SweepParameter::delta, SweepParameter::alpha},
       "rho1,rho2,sigma1,sigma2,quantum_optimal",
       true,
       true},
      {Family::linear_baseline, {SweepParameter::alpha}, "sigma1,sigma2", false, false},
  };
  for (const auto& c : commands) {
    if (c.family == family) return c;
  }
  throw std::logic_error("no command for family");
}

std::string flag_of(SweepParameter p, bool swept) {
  return std::string(swept ? "--sweep-" : "--") + std::string(to_string(p));
}

CLI::Option* fixed_option(const Options& o, SweepParameter p) {
  switch (p) {
    case SweepParameter::delta: return o.delta_opt;
    case SweepParameter::beta: return o.beta_opt;
    case SweepParameter::alpha: return o.alpha_opt;
  }
  return nullptr;
}

CLI::Option* sweep_option(const Options& o, SweepParameter p) {
  switch (p) {
    case SweepParameter::delta: return o.sweep_delta_opt;
    case SweepParameter::beta: return o.sweep_beta_opt;
    case SweepParameter::alpha: return o.sweep_alpha_opt;
  }
  return nullptr;
}

const std::string& sweep_text(const Options& o, SweepParameter p) {
  switch (p) {
    case SweepParameter::delta: return o.sweep_delta;
    case SweepParameter::beta: return o.sweep_beta;
    case SweepParameter::alpha: return o.sweep_alpha;
  }
  throw std::logic_error("bad parameter");
}

double fixed_value(const Options& o, SweepParameter p) {
  switch (p) {
    case SweepParameter::delta: return o.delta;
    case SweepParameter::beta: return o.beta;
    case SweepParameter::alpha: return o.alpha;
  }
  return 0.0;
}

// Full admissible range of a parameter, used when a crossover scan or the
// baseline has no explicit --sweep-*.
SweepRange default_range(Family family, SweepParameter p) {
  const double hi = family == Family::orthog && p == SweepParameter::delta ? 0.5 * kPi : kPi;
  return {0.0, hi, kDefaultSweepPoints};
}

void add_options(CLI::App* sub, const Command& cmd, Options& o) {
  for (const auto p : cmd.parameters) {
    CLI::Option* fixed = nullptr;
    switch (p) {
      case SweepParameter::delta:
        fixed = o.delta_opt = sub->add_option("--delta", o.delta, "delta in radians");
        o.sweep_delta_opt = sub->add_option("--sweep-delta", o.sweep_delta,
                                            "sweep delta over lo:hi:n (radians)");
        break;
      case SweepParameter::beta:
        fixed = o.beta_opt = sub->add_option("--beta", o.beta, "beta in radians");
        o.sweep_beta_opt =
            sub->add_option("--sweep-beta", o.sweep_beta, "sweep beta over lo:hi:n (radians)");
        break;
      case SweepParameter::alpha:
        fixed = o.alpha_opt = sub->add_option("--alpha", o.alpha, "alpha in radians");
        o.sweep_alpha_opt = sub->add_option("--sweep-alpha", o.sweep_alpha,
                                            "sweep alpha over lo:hi:n (radians)");
        break;
    }
    fixed->excludes(sweep_option(o, p));
  }
  // At most one swept parameter.
  for (std::size_t i = 0; i < cmd.parameters.size(); ++i) {
    for (std::size_t j = i + 1; j < cmd.parameters.size(); ++j) {
      sweep_option(o, cmd.parameters[i])->excludes(sweep_option(o, cmd.parameters[j]));
    }
  }
  o.schemes_opt = sub->add_option("--schemes", o.schemes,
                                  "comma-separated schemes (default " + cmd.default_schemes + ")");
  sub->add_option("--quad-order", o.quad_order, "node count for every quadrature axis")
      ->check(CLI::Range(4, 4096));
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "output file (default stdout)");
  if (cmd.has_crossovers) {
    sub->add_flag("--crossovers", o.crossovers, "report scheme and regime switches");
  }
  if (cmd.has_universal) {
    sub->add_flag("--compare-universal", o.compare_universal,
                  "add the identity-map baseline cos^2(alpha/2)");
  }
}

ScenarioRequest build_request(const Command& cmd, const Options& o) {
  ScenarioRequest req;
  req.family = cmd.family;
  req.quad = QuadratureSpec::uniform(o.quad_order);
  for (const auto p : cmd.parameters) {
    if (fixed_option(o, p)->count() > 0) req = with_parameter(req, p, fixed_value(o, p));
  }
  try {
    req.schemes = parse_scheme_list(o.schemes_opt->count() > 0 ? o.schemes : cmd.default_schemes);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--schemes: " + std::string(e.what()));
  }
  return req;
}

// The swept parameter and its range, if any.
std::optional<std::pair<SweepParameter, SweepRange>> requested_sweep(const Command& cmd,
                                                                     const Options& o) {
  for (const auto p : cmd.parameters) {
    if (sweep_option(o, p)->count() == 0) continue;
    try {
      return std::make_pair(p, parse_sweep_range(sweep_text(o, p)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(flag_of(p, true) + ": " + e.what());
    }
  }
  return std::nullopt;
}

// Maps a request validation failure onto the flag that caused it.
[[noreturn]] void rethrow_as_usage(const ParameterError& e,
                                   const std::optional<SweepParameter>& swept) {
  std::string flag;
  if (e.field() == "schemes") {
    flag = "--schemes";
  } else if (e.field() == "quad") {
    flag = "--quad-order";
  } else {
    const SweepParameter p = parse_sweep_parameter(e.field());
    flag = flag_of(p, swept && *swept == p);
  }
  throw UsageError(flag + ": " + e.what());
}

// Validates the request at both sweep endpoints (or as is).
void validate_request(const ScenarioRequest& req,
                      const std::optional<std::pair<SweepParameter, SweepRange>>& sweep_req) {
  std::optional<SweepParameter> swept;
  if (sweep_req) swept = sweep_req->first;
  try {
    if (sweep_req) {
      with_parameter(req, sweep_req->first, sweep_req->second.lo).validate();
      with_parameter(req, sweep_req->first, sweep_req->second.hi).validate();
    } else {
      req.validate();
    }
  } catch (const ParameterError& e) {
    rethrow_as_usage(e, swept);
  }
}

struct Table {
  std::vector<std::string> columns;
  // Each cell is a number or a string.
  std::vector<std::vector<Json>> rows;
};

Json number_cell(double v) { return Json(std::stod(format_value(v))); }

Table curve_table(const Command& cmd, const ScenarioRequest& req,
                  const std::vector<CurvePoint>& points,
                  const std::optional<SweepParameter>& swept, bool universal) {
  Table t;
  t.columns.push_back("abscissa");
  for (const auto p : cmd.parameters) t.columns.emplace_back(to_string(p));
  for (const auto& s : req.schemes) t.columns.push_back(s.label());
  if (universal) t.columns.push_back("universal");
  const bool optimum = std::any_of(req.schemes.begin(), req.schemes.end(), [](const auto& s) {
    return s.kind == SchemeSpec::Kind::quantum_optimal;
  });
  if (optimum) {
    for (const char* c : {"opt_value", "opt_x", "opt_y", "opt_z_re", "opt_z_im", "chi", "regime"}) {
      t.columns.emplace_back(c);
    }
  }

  for (const auto& pt : points) {
    std::vector<Json> row;
    row.push_back(number_cell(pt.abscissa));
    double alpha = 0.0;
    for (const auto p : cmd.parameters) {
      double v = 0.0;
      if (swept && *swept == p) {
        v = pt.abscissa;
      } else {
        const auto& field = p == SweepParameter::delta  ? req.delta
                            : p == SweepParameter::beta ? req.beta
                                                        : req.alpha;
        v = field.value_or(0.0);
      }
      if (p == SweepParameter::alpha) alpha = v;
      row.push_back(number_cell(v));
    }
    for (const auto& [label, value] : pt.fidelities) row.push_back(number_cell(value));
    if (universal) {
      const double c = std::cos(0.5 * alpha);
      row.push_back(number_cell(c * c));
    }
    if (optimum) {
      const Optimum& o = *pt.optimum;
      row.push_back(number_cell(o.value));
      row.push_back(number_cell(o.best.x));
      row.push_back(number_cell(o.best.y));
      row.push_back(number_cell(o.best.z.real()));
      row.push_back(number_cell(o.best.z.imag()));
      row.push_back(number_cell(o.chi));
      row.push_back(Json(std::string(to_string(o.regime))));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table crossover_table(const std::vector<Crossover>& report) {
  Table t;
  t.columns = {"kind", "from", "to", "location"};
  for (const auto& c : report) {
    t.rows.push_back({Json(c.kind), Json(c.from), Json(c.to),
                      c.location ? number_cell(*c.location) : Json(nullptr)});
  }
  return t;
}

std::string csv_cell(const Json& cell) {
  if (cell.is_null()) return "none";
  if (cell.is_string()) return cell.get<std::string>();
  return format_value(cell.get<double>());
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json array = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      array.push_back(std::move(obj));
    }
    os << array.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

Table execute(const Command& cmd, const Options& o) {
  ScenarioRequest req = build_request(cmd, o);
  auto sweep_req = requested_sweep(cmd, o);

  if (o.crossovers) {
    if (!sweep_req) {
      std::vector<SweepParameter> free;
      for (const auto p : cmd.parameters) {
        if (fixed_option(o, p)->count() == 0) free.push_back(p);
      }
      if (free.size() != 1) {
        throw UsageError("--crossovers: exactly one parameter must be left free or swept");
      }
      sweep_req = std::make_pair(free.front(), default_range(cmd.family, free.front()));
    }
    validate_request(req, sweep_req);
    const auto& [p, range] = *sweep_req;
    return crossover_table(crossover_report(req, p, range.lo, range.hi, range.n));
  }

  if (!sweep_req && cmd.family == Family::linear_baseline &&
      fixed_option(o, SweepParameter::alpha)->count() == 0) {
    sweep_req = std::make_pair(SweepParameter::alpha,
                               default_range(cmd.family, SweepParameter::alpha));
  }
  validate_request(req, sweep_req);

  std::vector<CurvePoint> points;
  std::optional<SweepParameter> swept;
  if (sweep_req) {
    const auto& [p, range] = *sweep_req;
    swept = p;
    points = sweep(req, p, range.lo, range.hi, range.n);
  } else {
    points.push_back(run(req));
  }
  return curve_table(cmd, req, points, swept, o.compare_universal);
}

}  // namespace

SweepRange parse_sweep_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("expected lo:hi:n, got '" + std::string(text) + "'");
  SweepRange r;
  r.lo = parse_double(parts[0]);
  r.hi = parse_double(parts[1]);
  std::size_t used = 0;
  try {
    r.n = std::stoi(parts[2], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != parts[2].size()) {
    throw std::invalid_argument("'" + parts[2] + "' is not an integer point count");
  }
  if (r.n < 2) throw std::invalid_argument("point count must be at least 2");
  if (!(r.hi > r.lo)) throw std::invalid_argument("hi must exceed lo");
  return r;
}

std::vector<SchemeSpec> parse_scheme_list(std::string_view text) {
  std::vector<SchemeSpec> schemes;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw std::invalid_argument("empty scheme name");
    schemes.push_back(SchemeSpec::parse(item));
  }
  return schemes;
}

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average-fidelity analysis of nonlinear qubit transformations"};
  app.name("nlqubit");
  app.require_subcommand(1);

  const std::vector<std::pair<Family, std::string>> subcommands = {
      {Family::rotation, "rotation: phase rotation by -beta above delta, +beta below"},
      {Family::orthog, "orthog: orthogonal-state map on the polar caps of half-width delta"},
      {Family::general, "general: theta shift by alpha on the cap [0, delta)"},
      {Family::linear_baseline, "baseline: theta shift by alpha on the whole sphere"},
  };
  std::vector<Options> options(subcommands.size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subcommands.size(); ++i) {
    const auto& [family, help] = subcommands[i];
    const std::string name = family == Family::linear_baseline ? "baseline"
                                                                 : std::string(to_string(family));
    CLI::App* sub = app.add_subcommand(name, help.substr(help.find(':') + 2));
    add_options(sub, command_for(family), options[i]);
    apps.push_back(sub);
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("nlqubit");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::size_t which = 0;
  while (!apps[which]->parsed()) ++which;
  const Command& cmd = command_for(subcommands[which].first);
  const Options& o = options[which];

  try {
    const Table table = execute(cmd, o);
    if (o.output.empty()) {
      write_table(table, o.format, out);
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw UsageError("--output: cannot open '" + o.output + "'");
      write_table(table, o.format, file);
      if (!file) throw std::runtime_error("failed writing '" + o.output + "'");
    }
  } catch (const UsageError& e) {
    err << "nlqubit: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "nlqubit: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "nlqubit: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kSuccess;
}

}  // namespace nlqubit::cli
