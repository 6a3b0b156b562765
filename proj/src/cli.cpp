#include "lbkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lbkit/io.hpp"
#include "lbkit/render.hpp"

namespace lbkit {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("input is not JSON: ") + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects A:B");
  try {
    std::size_t used = 0;
    const int a = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw UsageError("--range expects A:B");
    const auto rest = text.substr(colon + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size() || a > b) throw UsageError("--range expects A:B with A <= B");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects A:B");
  }
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  int p = 0, q = 0, i = 0, j = 0, degree = 2, sign = 1;
  bool closed = false, doubled = false;
  std::string range, format, out, input, a, b;
};

std::string dispatch(const std::string& verb, const Options& o, CLI::App& app) {
  auto require_format = [&](std::initializer_list<const char*> allowed, const char* fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* x : allowed)
      if (f == x) return f;
    throw UsageError("--format " + f + " is not available for " + verb);
  };
  auto dump = [](const json& j) { return j.dump(2) + "\n"; };

  if (verb == "build") {
    require_format({"json"}, "json");
    auto d = build_xpq(o.p, o.q);
    if (o.doubled) d = double_of(d);
    return dump(to_json(d));
  }
  if (verb == "homology" || verb == "boundary") {
    require_format({"json"}, "json");
    const auto d = kirby_from_json(read_input(o.input));
    return dump(to_json(verb == "homology" ? h1(d) : boundary_h1(d)));
  }
  if (verb == "cover") {
    require_format({"json"}, "json");
    const auto input = read_input(o.input);
    if (input.contains("letters")) {
      const auto cover = cyclic_cover_link(normalize_to_writhe(annular_link_from_json(input)), o.degree);
      return dump(to_json(cover.link));
    }
    if (o.degree != 2) throw KirbyError("diagram covers are implemented for degree 2 only");
    return dump(to_json(double_cover_diagram(kirby_from_json(input))));
  }
  if (verb == "double") {
    require_format({"json"}, "json");
    return dump(to_json(double_of(kirby_from_json(read_input(o.input)))));
  }
  if (verb == "slide") {
    require_format({"json"}, "json");
    if (o.a.empty() || o.b.empty()) throw UsageError("slide needs --a and --b");
    return dump(to_json(handle_slide(kirby_from_json(read_input(o.input)), o.a, o.b, o.sign)));
  }
  if (verb == "classify") {
    require_format({"json"}, "json");
    return dump(to_json(classify(o.i, o.j, o.closed)));
  }
  if (verb == "table") {
    require_format({"csv"}, "csv");
    if (o.range.empty()) throw UsageError("table needs --range A:B");
    const auto [lo, hi] = parse_range(o.range);
    std::ostringstream csv;
    csv << "i,j,equivalent,homotopic,concordant,isotopic\n";
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) {
        const auto r = classify(i, j, o.closed);
        csv << i << ',' << j << ',' << flag(r.equivalent) << ',' << flag(r.homotopic) << ',' << flag(r.concordant)
            << ',' << flag(r.isotopic) << '\n';
      }
    return csv.str();
  }
  if (verb == "obstruct") {
    require_format({"json"}, "json");
    return dump(to_json(obstruction_report(o.i, o.j, o.closed)));
  }
  if (verb == "homotopy-class") {
    require_format({"json"}, "json");
    if ((o.i - o.j) % 2 != 0)
      throw NotHomotopic("Sigma_" + std::to_string(o.i) + " and Sigma_" + std::to_string(o.j) + " are not homotopic");
    const auto trace = rho_chain(std::min(o.i, o.j), std::abs(o.i - o.j) / 2);
    return dump(json{{"group", to_json(trace.group)},
                     {"finger_moves", std::count_if(trace.moves.begin(), trace.moves.end(),
                                                    [](const auto& m) { return std::holds_alternative<FingerMove>(m); })},
                     {"crossed_cycles", trace.cycles.size()},
                     {"crossed_class", to_json(crossed_class(trace))},
                     {"lightbulb", lightbulb_check(trace, true, true)}});
  }
  if (verb == "render") {
    const auto format = render_format_from_string(o.format.empty() ? "svg" : o.format);
    const auto input = read_input(o.input);
    if (input.contains("dotted")) return render(kirby_from_json(input), format);
    if (input.contains("arcs")) return render(tangle_from_json(input), format);
    if (input.contains("components") && !input.at("components").empty() &&
        input.at("components").front().contains("framing"))
      return render(annular_link_from_json(input), format);
    return render(bicolored_link_from_json(input), format);
  }
  throw UsageError(app.help());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirby diagrams, covers and sphere concordance in X_{p,q}", "lbkit"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* s) { s->add_option("--format", o.format, "json, csv, svg or text"); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write the result here instead of stdout"); };
  auto add_input = [&](CLI::App* s) { s->add_option("input", o.input, "diagram JSON (default: stdin)"); };
  auto add_pair = [&](CLI::App* s) {
    s->add_option("--i", o.i, "first twist index")->required();
    s->add_option("--j", o.j, "second twist index")->required();
  };

  auto* build = app.add_subcommand("build", "emit X_{p,q}");
  build->add_option("--p", o.p)->required();
  build->add_option("--q", o.q)->required();
  build->add_flag("--double", o.doubled, "emit the double instead");
  for (const char* name : {"homology", "boundary", "double"}) add_input(app.add_subcommand(name));
  app.get_subcommand("homology")->description("H1 of a diagram");
  app.get_subcommand("boundary")->description("H1 of the boundary of a diagram");
  app.get_subcommand("double")->description("the double of a diagram");
  auto* cover = app.add_subcommand("cover", "cyclic cover of a diagram or annular link");
  cover->add_option("--degree", o.degree)->check(CLI::PositiveNumber);
  add_input(cover);
  auto* slide = app.add_subcommand("slide", "slide 2-handle a over b");
  slide->add_option("--a", o.a);
  slide->add_option("--b", o.b);
  slide->add_option("--sign", o.sign)->check(CLI::IsMember({-1, 1}));
  add_input(slide);
  auto* cls = app.add_subcommand("classify", "relation between Sigma_i and Sigma_j");
  add_pair(cls);
  cls->add_flag("--closed", o.closed);
  auto* table = app.add_subcommand("table", "classify over a square grid");
  table->add_option("--range", o.range, "A:B");
  table->add_flag("--closed", o.closed);
  auto* obstruct = app.add_subcommand("obstruct", "concordance obstruction");
  add_pair(obstruct);
  obstruct->add_flag("--closed", o.closed);
  add_pair(app.add_subcommand("homotopy-class", "crossed cycle class of the standard homotopy"));
  auto* rend = app.add_subcommand("render", "draw a diagram");
  add_input(rend);
  for (auto* s : app.get_subcommands({})) {
    add_format(s);
    add_out(s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  std::string result;
  try {
    result = dispatch(verb, o, app);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  if (o.out.empty()) {
    out << result;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "cannot write '" << o.out << "'\n";
      return 2;
    }
    file << result;
  }
  return 0;
}

}  // namespace lbkit
