#include "multinet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multinet/catalog.hpp"
#include "multinet/document.hpp"
#include "multinet/error.hpp"
#include "multinet/induce.hpp"
#include "multinet/render.hpp"
#include "multinet/report.hpp"

namespace multinet {

namespace {

using nlohmann::json;

struct ConstructArgs {
  std::string family;
  std::optional<std::string> n, k, lambda, mu;
  std::string output;
};

struct ReportArgs {
  std::string input;
  std::string format = "text";
};

struct InduceArgs {
  std::string n;
  std::string plane;
  std::string output;
  std::string format = "text";
};

struct LatinArgs {
  std::string input;
  std::string group;
  bool as_given = false;
};

struct RenderArgs {
  std::string input;
  std::string output;
  std::string chart = "z";
  double span = 4.0;
};

Cyclo parse_param(const std::string& text) { return parse_cyclo(text, infer_conductor(text)); }

int parse_int_param(const std::string& name, const std::string& text) {
  Cyclo v;
  try {
    v = parse_param(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidParams, "--" + name + ": " + e.what());
  }
  if (!v.is_rational() || v.coeffs()[0].get_den() != 1 || !v.coeffs()[0].get_num().fits_sint_p())
    throw Error(ErrorKind::InvalidParams, "--" + name + " must be an integer, got '" + text + "'");
  return static_cast<int>(v.coeffs()[0].get_num().get_si());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IOError, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::IOError, "write failed for " + path);
}

void emit(const VerdictDocument& v, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << v.to_json().dump(2) << "\n";
  else
    out << v.to_text();
}

int cmd_construct(const ConstructArgs& args, std::ostream& out) {
  const std::string& f = args.family;
  auto require = [&](const std::vector<std::string>& needed) {
    const std::vector<std::pair<std::string, bool>> given{
        {"n", args.n.has_value()}, {"k", args.k.has_value()}, {"lambda", args.lambda.has_value()},
        {"mu", args.mu.has_value()}};
    for (const auto& [name, present] : given) {
      const bool wanted = std::find(needed.begin(), needed.end(), name) != needed.end();
      if (wanted && !present) throw Error(ErrorKind::InvalidParams, f + " needs --" + name);
      if (!wanted && present) throw Error(ErrorKind::InvalidParams, f + " does not take --" + name);
    }
  };

  json params = json::object();
  std::optional<MultinetCandidate> a;
  if (f == "fermat" || f == "monomial") {
    require({"n"});
    params["n"] = *args.n;
    const int n = parse_int_param("n", *args.n);
    a = f == "fermat" ? fermat(n) : monomial_g_n13(n);
  } else if (f == "trivial") {
    require({"k"});
    params["k"] = *args.k;
    a = trivial_pencil(parse_int_param("k", *args.k));
  } else if (f == "hesse" || f == "z2z2") {
    require({});
    a = f == "hesse" ? hesse() : z2z2_net();
  } else if (f == "stipins33" || f == "light34") {
    require({"lambda", "mu"});
    params["lambda"] = *args.lambda;
    params["mu"] = *args.mu;
    FamilyParams p;
    try {
      p = {parse_param(*args.lambda), parse_param(*args.mu)};
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidParams, e.what());
    }
    a = f == "stipins33" ? stipins33(p) : light34(p);
  } else {
    throw Error(ErrorKind::UnknownFamily,
                "'" + f + "' is not one of fermat, monomial, hesse, stipins33, light34, z2z2, trivial");
  }

  const auto doc = ArrangementDocument::from_candidate(*a, f, params);
  if (args.output.empty())
    out << doc.to_json().dump(2) << "\n";
  else
    save_document(doc, args.output);
  return kExitOk;
}

int cmd_report(const std::string& command, const ReportArgs& args, std::ostream& out) {
  const auto a = load_document(args.input).to_candidate();
  const VerdictDocument v = build_verdict(a);
  emit(v, args.format, out);
  if (command == "complete") return v.complete.value_or(false) ? kExitOk : kExitNegative;
  return v.is_multinet ? kExitOk : kExitNegative;
}

int cmd_induce(const InduceArgs& args, std::ostream& out) {
  const int n = parse_int_param("n", args.n);
  if (n < 1) throw Error(ErrorKind::InvalidParams, "--n must be at least 1");

  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : args.plane) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  if (parts.size() != 4) throw Error(ErrorKind::InvalidParams, "--plane needs four comma-separated coordinates");
  const int conductor = std::lcm(n, infer_conductor(args.plane));
  Vec4 h;
  for (std::size_t i = 0; i < 4; ++i) h[i] = parse_cyclo(parts[i], conductor);

  const InducedResult r = induce(n, h);
  const VerdictDocument v = build_verdict(r);
  if (!args.output.empty() && r.arrangement) {
    json params{{"n", args.n}, {"plane", parts}};
    save_document(ArrangementDocument::from_candidate(*r.arrangement, "induced", params), args.output);
  }
  emit(v, args.format, out);
  return r.arrangement && v.induced->tag != InducedTag::Unknown ? kExitOk : kExitNegative;
}

int cmd_latin(const LatinArgs& args, std::ostream& out) {
  const auto a = load_document(args.input).to_candidate();
  const LatinSquare sq = extract_latin(a, args.as_given ? LineOrder::AsGiven : LineOrder::Canonical);
  for (const auto& row : sq.cells) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  if (args.group.empty()) return kExitOk;
  const GroupSpec g = GroupSpec::parse(args.group);
  const bool iso = isotopic_to_group(sq, g);
  out << "isotopic to " << g.str() << ": " << (iso ? "yes" : "no") << "\n";
  return iso ? kExitOk : kExitNegative;
}

int cmd_render(const RenderArgs& args, std::ostream& out) {
  const auto a = load_document(args.input).to_candidate();
  if (args.chart.size() != 1) throw Error(ErrorKind::InvalidParams, "--chart must be x, y or z");
  RenderOptions opts;
  opts.chart = args.chart[0];
  opts.span = args.span;
  const std::string svg = render_svg(a, opts);
  if (args.output.empty())
    out << svg;
  else
    write_text(args.output, svg);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with multinets of line arrangements", "multinet"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a catalog arrangement as a JSON document");
  c->add_option("family", construct.family, "fermat, monomial, hesse, stipins33, light34, z2z2 or trivial")
      ->required();
  c->add_option("--n", construct.n, "Degree parameter n");
  c->add_option("--k", construct.k, "Number of blocks (trivial)");
  c->add_option("--lambda", construct.lambda, "Coordinate expression for lambda");
  c->add_option("--mu", construct.mu, "Coordinate expression for mu");
  c->add_option("-o,--output", construct.output, "Output path (default: stdout)");

  ReportArgs report;
  std::vector<CLI::App*> report_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"verify", "Check the multinet axioms"},
           {"classify", "Weight class and block structures"},
           {"complete", "Riemann-Hurwitz completeness test"}}) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("input", report.input, "Arrangement document")->required();
    s->add_option("--format", report.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    report_cmds.push_back(s);
  }

  InduceArgs ind;
  auto* i = app.add_subcommand("induce", "Restrict Q_n in P^3 to a plane");
  i->add_option("--n", ind.n, "Degree parameter n")->required();
  i->add_option("--plane", ind.plane, "Plane coordinates c0,c1,c2,c3")->required();
  i->add_option("-o,--output", ind.output, "Write the induced arrangement here");
  i->add_option("--format", ind.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  LatinArgs lat;
  auto* l = app.add_subcommand("latin", "Latin square of a 3-net");
  l->add_option("input", lat.input, "Arrangement document")->required();
  l->add_option("--group", lat.group, "cyclic:N, klein or dihedral:N");
  l->add_flag("--as-given", lat.as_given, "Keep the document's line order instead of sorting");

  RenderArgs ren;
  auto* r = app.add_subcommand("render", "Draw a real arrangement as SVG");
  r->add_option("input", ren.input, "Arrangement document")->required();
  r->add_option("-o,--output", ren.output, "Output path (default: stdout)");
  r->add_option("--chart", ren.chart, "Affine chart x, y or z")->check(CLI::IsMember({"x", "y", "z"}));
  r->add_option("--span", ren.span, "Viewport width in chart units");

  try {
    std::vector<std::string> args;
    for (int j = argc - 1; j >= 1; --j) args.emplace_back(argv[j]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (c->parsed()) return cmd_construct(construct, out);
    for (auto* s : report_cmds)
      if (s->parsed()) return cmd_report(s->get_name(), report, out);
    if (i->parsed()) return cmd_induce(ind, out);
    if (l->parsed()) return cmd_latin(lat, out);
    if (r->parsed()) return cmd_render(ren, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::IOError ? kExitIO : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace multinet
