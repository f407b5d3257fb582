#include "gwtqft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/frobenius.hpp"
#include "gwtqft/io.hpp"
#include "gwtqft/symchar.hpp"
#include "gwtqft/tqft.hpp"
#include "gwtqft/transforms.hpp"
#include "gwtqft/verify.hpp"

namespace gwtqft {

std::vector<Partition> parse_boundary_spec(const std::string& text, int d) {
  std::vector<Partition> out;
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    Partition p = parse_partition(text.substr(start, end - start), start);
    if (p.size() != d)
      throw ParseError(start, "partition sums to " + std::to_string(p.size()) + ", expected " + std::to_string(d));
    out.push_back(std::move(p));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string render_boundary_spec(const std::vector<Partition>& boundaries) {
  std::string out;
  for (std::size_t i = 0; i < boundaries.size(); ++i) out += (i ? ";" : "") + boundaries[i].spec();
  return out;
}

namespace {

Error usage(const std::string& what) { return Error(ErrorCode::DomainError, what); }

std::size_t order_of(const Command& cmd) {
  const std::size_t n = cmd.order.value_or(kDefaultOrder);
  if (n == 0) throw usage("--order must be positive");
  return n;
}

int require_d(const Command& cmd) {
  if (!cmd.d) throw usage(cmd.name + " needs --d");
  if (*cmd.d < 1) throw usage("--d must be >= 1");
  return *cmd.d;
}

int require_genus(const Command& cmd) {
  if (cmd.genus < 0) throw usage("--genus must be >= 0");
  return cmd.genus;
}

// Series-valued commands print JSON unless --text is given.
std::string emit(const Series& s, const Command& cmd) {
  return cmd.text ? series_to_text(s) : series_to_json(s).dump() + '\n';
}

std::string partitions_command(const Command& cmd) {
  const int d = require_d(cmd);
  const auto& parts = enumerate_partitions(d);
  if (cmd.json) {
    Json list = Json::array();
    for (const auto& p : parts) list.push_back(Json{{"label", p.label()}, {"z", centralizer_order(p).get_str()}});
    return Json{{"d", d}, {"partitions", std::move(list)}}.dump() + '\n';
  }
  std::size_t width = 0;
  for (const auto& p : parts) width = std::max(width, p.label().size());
  std::ostringstream out;
  for (const auto& p : parts)
    out << p.label() << std::string(width - p.label().size(), ' ') << "  z=" << centralizer_order(p).get_str() << '\n';
  return out.str();
}

std::string characters_command(const Command& cmd) {
  const int d = require_d(cmd);
  if (d > 20) throw Error(ErrorCode::TooLarge, "character tables are limited to d <= 20");
  const CharacterTable& table = character_table(d);
  return cmd.json ? character_table_to_json(table).dump() + '\n' : character_table_to_text(table);
}

std::string cap_command(const Command& cmd) {
  const int d = require_d(cmd);
  if (cmd.alpha.empty()) throw usage("cap needs --alpha");
  const auto parts = parse_boundary_spec(cmd.alpha, d);
  if (parts.size() != 1) throw usage("--alpha takes a single partition");
  return emit(cap(d, parts.front(), order_of(cmd)), cmd);
}

std::string closed_command(const Command& cmd) {
  const std::size_t order = order_of(cmd);
  const int g = require_genus(cmd);
  if (cmd.model == "d1") {
    if (cmd.d && *cmd.d != 1) throw usage("model d1 is the degree-1 theory");
    return emit(d1_relative(g, 0, order), cmd);
  }
  if (cmd.model == "d2") {
    if (cmd.d && *cmd.d != 2) throw usage("model d2 is the degree-2 theory");
    return emit(d2_closed(g, order), cmd);
  }
  if (cmd.model == "fp0") {
    if (g != 0) throw usage("model fp0 is the genus-0 formula");
    return emit(fp_genus0(require_d(cmd), order), cmd);
  }
  if (cmd.model == "dw") return emit(Series::constant(gauge_invariant({require_d(cmd), g, {}}), order), cmd);
  throw usage("unknown model '" + cmd.model + "' (expected d1, d2, fp0 or dw)");
}

std::string relative_command(const Command& cmd) {
  const TqftModel model = TqftModel::from_name(cmd.model);
  const int d = cmd.d ? require_d(cmd) : (model.degree() ? model.degree() : require_d(cmd));
  const int g = require_genus(cmd);
  const std::size_t order = order_of(cmd);
  if (cmd.arity) {
    if (!cmd.boundaries.empty()) throw usage("--arity and --boundaries are exclusive");
    const RelativeTensor t = RelativeTensor::build(model, d, g, *cmd.arity, order);
    if (cmd.text) return tensor_to_text(t);
    const auto& parts = enumerate_partitions(d);
    Json entries = Json::array();
    for (std::size_t f = 0; f < t.entry_count(); ++f) {
      Json index = Json::array();
      for (auto i : t.unflat(f)) index.push_back(parts[i].label());
      entries.push_back(Json{{"index", std::move(index)}, {"value", series_to_json(t.flat_entry(f))}});
    }
    return Json{{"d", d}, {"genus", g}, {"arity", t.arity()}, {"entries", std::move(entries)}}.dump() + '\n';
  }
  const SurfaceSpec spec{d, g, parse_boundary_spec(cmd.boundaries, d)};
  return emit(relative_tensor(model, spec, order), cmd);
}

std::string hurwitz_command(const Command& cmd) {
  const int d = require_d(cmd);
  const SurfaceSpec spec{d, require_genus(cmd), parse_boundary_spec(cmd.boundaries, d)};
  if (cmd.workers == 0) throw usage("--workers must be >= 1");
  const Rational value = hurwitz_brute_force(spec, HurwitzOptions{default_hurwitz_budget(), cmd.workers});
  return cmd.json ? Json{{"value", to_string(value)}}.dump() + '\n' : to_string(value) + '\n';
}

FrobeniusAlgebra truncated(const FrobeniusAlgebra& a, std::size_t order) {
  auto cut = [order](std::span<const Series> xs) {
    std::vector<Series> out;
    for (const auto& s : xs) out.push_back(s.with_order(order));
    return out;
  };
  return FrobeniusAlgebra(a.labels(), cut(a.mult_tensor()), cut(a.unit().coords()), cut(a.counit_vector()));
}

std::string lift_command(const Command& cmd) {
  if (cmd.input.empty()) throw usage("lift needs --input");
  std::ifstream in(cmd.input, std::ios::binary);
  if (!in) throw usage("cannot read '" + cmd.input + "'");
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
  FrobeniusAlgebra a = algebra_from_json(j);
  if (cmd.order) {
    if (*cmd.order == 0 || *cmd.order > a.order())
      throw usage("--order may only truncate (input has order " + std::to_string(a.order()) + ")");
    a = truncated(a, *cmd.order);
  }
  const auto seeds = default_seeds(a);
  const LiftResult lifted = lift_idempotents(a, seeds);
  const auto lambdas = eigenvalues_of_lifted(a, lifted);
  if (cmd.text) {
    std::ostringstream out;
    for (std::size_t i = 0; i < lambdas.size(); ++i) out << "lambda_" << i << '\n' << series_to_text(lambdas[i]);
    return out.str();
  }
  Json idem = Json::array(), eig = Json::array();
  for (const auto& e : lifted.idempotents) idem.push_back(element_to_json(e));
  for (const auto& l : lambdas) eig.push_back(series_to_json(l));
  return Json{{"order", a.order()},
              {"labels", a.labels()},
              {"idempotents", std::move(idem)},
              {"eigenvalues", std::move(eig)},
              {"residual_valuations", lifted.residual_valuations}}
             .dump() +
         '\n';
}

std::string connected_command(const Command& cmd) {
  const int g = require_genus(cmd);
  const std::size_t order = order_of(cmd);
  if (cmd.dmax < 1) throw usage("--dmax must be >= 1");
  const auto dmax = static_cast<std::size_t>(cmd.dmax);
  std::vector<Series> rows(dmax + 1, Series(order));
  rows[0] = Series::constant(1, order);
  if (cmd.model == "d1" || cmd.model == "d2") {
    if (cmd.model == "d1" && dmax != 1) throw usage("model d1 only provides degree 1; use --dmax 1");
    if (cmd.model == "d2" && dmax > 2) throw usage("model d2 only provides degrees 1 and 2; use --dmax <= 2");
    rows[1] = d1_relative(g, 0, order);
    if (dmax == 2) rows[2] = d2_closed(g, order);
  } else if (cmd.model == "dw") {
    for (std::size_t d = 1; d <= dmax; ++d)
      rows[d] = Series::constant(gauge_invariant({static_cast<int>(d), g, {}}), order);
  } else {
    throw usage("unknown model '" + cmd.model + "' (expected d1, d2 or dw)");
  }
  const BivariateSeries n = connected_from_disconnected(BivariateSeries(rows));
  Json table = Json::array();
  for (std::size_t d = 1; d <= dmax; ++d) {
    Json terms = Json::array();
    for (std::size_t b = 0; b < order; ++b) {
      if (sgn(n.coeff(d, b)) == 0) continue;
      terms.push_back(Json{{"b", b},
                           {"h", to_string(domain_genus(static_cast<long>(d), g, static_cast<long>(b)))},
                           {"value", to_string(n.coeff(d, b))}});
    }
    table.push_back(Json{{"d", d}, {"series", series_to_json(n[d])}, {"terms", std::move(terms)}});
  }
  return Json{{"model", cmd.model}, {"genus", g}, {"dmax", dmax}, {"order", order}, {"connected", std::move(table)}}
             .dump() +
         '\n';
}

CommandResult verify_command(const Command& cmd) {
  VerifyOptions options;
  options.max_d = cmd.max_d;
  options.order = order_of(cmd);
  options.budget = default_hurwitz_budget();
  const auto results = run_suite(cmd.suite, options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  CommandResult out;
  out.exit_code = failed ? 1 : 0;
  if (cmd.json) {
    Json list = Json::array();
    for (const auto& r : results)
      list.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out.out = Json{{"passed", results.size() - failed}, {"failed", failed}, {"checks", std::move(list)}}.dump() + '\n';
    return out;
  }
  std::ostringstream text;
  for (const auto& r : results) {
    text << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) text << " (" << r.detail << ')';
    text << '\n';
  }
  text << results.size() - failed << " passed, " << failed << " failed\n";
  out.out = text.str();
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DomainError:
    case ErrorCode::IndexError:
      return 2;
    case ErrorCode::TooLarge:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

CommandResult run(const Command& cmd) {
  CommandResult result;
  try {
    if (cmd.json && cmd.text) throw usage("--json and --text are exclusive");
    if (cmd.name == "verify") return verify_command(cmd);
    if (cmd.name == "partitions") result.out = partitions_command(cmd);
    else if (cmd.name == "characters") result.out = characters_command(cmd);
    else if (cmd.name == "cap") result.out = cap_command(cmd);
    else if (cmd.name == "closed") result.out = closed_command(cmd);
    else if (cmd.name == "relative") result.out = relative_command(cmd);
    else if (cmd.name == "hurwitz") result.out = hurwitz_command(cmd);
    else if (cmd.name == "lift") result.out = lift_command(cmd);
    else if (cmd.name == "connected") result.out = connected_command(cmd);
    else throw usage("unknown subcommand '" + cmd.name + "'");
  } catch (const Error& e) {
    result = {exit_code_for(e.code()), "", std::string("error: ") + e.what() + '\n'};
  } catch (const Json::exception& e) {
    result = {2, "", std::string("error: ") + e.what() + '\n'};
  } catch (const std::exception& e) {
    result = {1, "", std::string("error: ") + e.what() + '\n'};
  }
  return result;
}

std::optional<Command> parse_command(const std::vector<std::string>& args, CommandResult& result) {
  Command cmd;
  CLI::App app{"Exact local Gromov-Witten TQFT computations over Q[[t]]", "gwtqft"};
  app.require_subcommand(1);

  auto order_opt = [&](CLI::App* sub) {
    sub->add_option("--order", cmd.order, "truncation order N (number of t-coefficients)");
  };
  auto format_opts = [&](CLI::App* sub) {
    sub->add_flag("--json", cmd.json, "emit JSON");
    sub->add_flag("--text", cmd.text, "emit aligned text");
  };

  auto* partitions = app.add_subcommand("partitions", "partitions of d in canonical order with z(alpha)");
  partitions->add_option("--d", cmd.d, "degree")->required();
  format_opts(partitions);

  auto* characters = app.add_subcommand("characters", "character table of S_d");
  characters->add_option("d,--d", cmd.d, "degree")->required();
  format_opts(characters);

  auto* cap_cmd = app.add_subcommand("cap", "degree-d cap series with boundary condition alpha");
  cap_cmd->add_option("--d", cmd.d, "degree")->required();
  cap_cmd->add_option("--alpha", cmd.alpha, "partition, e.g. \"2,1\"")->required();
  order_opt(cap_cmd);
  format_opts(cap_cmd);

  auto* closed = app.add_subcommand("closed", "closed-surface series");
  closed->add_option("--model", cmd.model, "d1, d2, fp0 or dw")->required();
  closed->add_option("--d", cmd.d, "degree");
  closed->add_option("--genus", cmd.genus, "genus");
  order_opt(closed);
  format_opts(closed);

  auto* relative = app.add_subcommand("relative", "relative invariant of a surface with labelled boundaries");
  relative->add_option("--model", cmd.model, "d1 or dw")->required();
  relative->add_option("--d", cmd.d, "degree");
  relative->add_option("--genus", cmd.genus, "genus");
  relative->add_option("--boundaries", cmd.boundaries, "partitions separated by ';', e.g. \"2,1;3\"");
  relative->add_option("--arity", cmd.arity, "print the whole tensor with this many boundaries");
  order_opt(relative);
  format_opts(relative);

  auto* hurwitz = app.add_subcommand("hurwitz", "brute-force t = 0 count over permutation tuples");
  hurwitz->add_option("--d", cmd.d, "degree")->required();
  hurwitz->add_option("--genus", cmd.genus, "genus");
  hurwitz->add_option("--boundaries", cmd.boundaries, "partitions separated by ';'");
  hurwitz->add_option("--workers", cmd.workers, "enumeration threads");
  format_opts(hurwitz);

  auto* lift = app.add_subcommand("lift", "lift idempotents of a Frobenius algebra read from JSON");
  lift->add_option("--input", cmd.input, "algebra JSON file")->required();
  order_opt(lift);
  format_opts(lift);

  auto* connected = app.add_subcommand("connected", "connected invariants from the disconnected series");
  connected->add_option("--model", cmd.model, "d1, d2 or dw")->required();
  connected->add_option("--genus", cmd.genus, "genus");
  connected->add_option("--dmax", cmd.dmax, "largest degree");
  order_opt(connected);
  format_opts(connected);

  auto* verify = app.add_subcommand("verify", "run the built-in identity checks");
  verify->add_option("--suite", cmd.suite, "suite name or all");
  verify->add_option("--max-d", cmd.max_d, "largest degree for degree-ranging checks");
  order_opt(verify);
  verify->add_flag("--json", cmd.json, "emit JSON");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result = {code == 0 ? 0 : 2, out.str(), err.str()};
    return std::nullopt;
  }
  cmd.name = app.get_subcommands().front()->get_name();
  return cmd;
}

CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  const auto cmd = parse_command(args, result);
  return cmd ? run(*cmd) : result;
}

}  // namespace gwtqft
