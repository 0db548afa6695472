#include "tribone/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

namespace tribone {

namespace {

using nlohmann::json;

struct TimeoutError : std::runtime_error {
  TimeoutError() : std::runtime_error("timed out; rerun with a larger --timeout-seconds") {}
};

/* Coarse-grained wall-clock budget: polled between independent work items
 * (per N in a range, per margin in a sweep, per selftest group). */
class Deadline {
 public:
  explicit Deadline(double seconds) {
    if (seconds > 0)
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
  }
  void poll() const {
    if (end_ && Clock::now() > *end_) throw TimeoutError();
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> end_;
};

Polynomial parse_st(const std::string& text) { return parse_polynomial(st_vars(), text); }

/* ---------- formatting ---------- */

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0;  // below print precision; never emit "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string verdict_line(const Verdict& v) {
  std::ostringstream line;
  line << "T_" << v.n << (v.symmetric ? " symmetric" : " plain") << ": "
       << (v.tileable ? "tileable" : "not tileable")
       << " (remainder = " << format_polynomial(v.remainder) << "; closed form "
       << (v.closed_form_check ? "agrees" : "DISAGREES") << ")";
  return line.str();
}

std::string tiling_text(const Tiling& tiling) {
  std::ostringstream text;
  text << "T_" << tiling.region_n << (tiling.symmetric ? " symmetric" : " plain")
       << " certificate: " << tiling.placements.size() << " placements\n";
  for (const Placement& pl : tiling.placements) {
    text << tribone_type_name(pl.type) << " (" << pl.center.p << "," << pl.center.q << ","
         << pl.center.sector << ") " << (pl.weight >= 0 ? "+" : "") << pl.weight << "\n";
  }
  return text.str();
}

/* ---------- SVG ---------- */

struct Vec {
  double x = 0;
  double y = 0;
};

constexpr double kSpacing = 40.0;
const double kRadius = kSpacing / std::sqrt(3.0);

/* Dot (i,j) in the plane: the x-axis points right, the y-axis up-left, so the
 * three tribone directions sit at 0, -120 and -60 degrees. */
Vec dot_point(long i, long j) {
  return {kSpacing * i - 0.5 * kSpacing * j, -0.8660254037844386 * kSpacing * j};
}

Vec axis_direction(TriboneType type) {
  switch (type) {
    case TriboneType::X: return {kSpacing, 0};
    case TriboneType::Y: return {-0.5 * kSpacing, -0.8660254037844386 * kSpacing};
    case TriboneType::Z: return {0.5 * kSpacing, -0.8660254037844386 * kSpacing};
  }
  throw std::logic_error("axis_direction: bad type");
}

}  // namespace

std::string render_svg(const Tiling& tiling) {
  std::vector<Vec> cells;
  if (tiling.region_n > 0)
    for (const Cell& cell : region_T(tiling.region_n).cells) {
      auto [i, j] = monomial_dot(cell_monomial(cell));
      cells.push_back(dot_point(i, j));
    }

  const double bar_width = 1.2 * kRadius;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool seen = false;
  auto expand = [&](const Vec& p, double pad) {
    if (!seen) {
      min_x = p.x - pad;
      max_x = p.x + pad;
      min_y = p.y - pad;
      max_y = p.y + pad;
      seen = true;
      return;
    }
    min_x = std::min(min_x, p.x - pad);
    max_x = std::max(max_x, p.x + pad);
    min_y = std::min(min_y, p.y - pad);
    max_y = std::max(max_y, p.y + pad);
  };
  for (const Vec& c : cells) expand(c, kRadius + 2);
  for (const Placement& pl : tiling.placements) {
    auto [i, j] = monomial_dot(cell_monomial(pl.center));
    expand(dot_point(i, j), kSpacing + bar_width / 2 + 2);
  }
  if (!seen) expand({0, 0}, 50);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x) << " " << num(min_y)
      << " " << num(max_x - min_x) << " " << num(max_y - min_y) << "\">\n";
  svg << "  <defs>\n"
      << "    <pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\""
      << " patternTransform=\"rotate(45)\">\n"
      << "      <rect width=\"6\" height=\"6\" fill=\"#fee2e2\"/>\n"
      << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#b91c1c\" stroke-width=\"2\"/>\n"
      << "    </pattern>\n"
      << "  </defs>\n";

  for (const Vec& c : cells) {
    svg << "  <polygon class=\"cell\" points=\"";
    for (int corner = 0; corner < 6; ++corner) {
      const double angle = (30.0 + 60.0 * corner) * M_PI / 180.0;
      if (corner > 0) svg << " ";
      svg << num(c.x + kRadius * std::cos(angle)) << "," << num(c.y + kRadius * std::sin(angle));
    }
    svg << "\" fill=\"none\" stroke=\"#9ca3af\" stroke-width=\"1\"/>\n";
  }

  for (const Placement& pl : tiling.placements) {
    auto [i, j] = monomial_dot(cell_monomial(pl.center));
    const Vec c = dot_point(i, j);
    const Vec d = axis_direction(pl.type);
    const double angle = std::atan2(d.y, d.x) * 180.0 / M_PI;
    const double length = 2 * kSpacing + bar_width;
    svg << "  <rect class=\"bar\" x=\"" << num(-length / 2) << "\" y=\"" << num(-bar_width / 2)
        << "\" width=\"" << num(length) << "\" height=\"" << num(bar_width) << "\" rx=\""
        << num(bar_width / 2) << "\" transform=\"translate(" << num(c.x) << "," << num(c.y)
        << ") rotate(" << num(angle) << ")\" fill=\""
        << (pl.weight >= 0 ? "#3b82f6" : "url(#hatch)") << "\" fill-opacity=\""
        << (pl.weight >= 0 ? "0.55" : "0.85") << "\" stroke=\""
        << (pl.weight >= 0 ? "#1d4ed8" : "#b91c1c") << "\" stroke-width=\"1.5\">"
        << "<title>" << tribone_type_name(pl.type) << " (" << pl.center.p << "," << pl.center.q
        << "," << pl.center.sector << ") weight " << pl.weight << "</title></rect>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

namespace {

/* ---------- subcommand bodies ---------- */

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool parse_range(const std::string& text, unsigned& a, unsigned& b) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  const std::string first = text.substr(0, pos);
  const std::string second = text.substr(pos + 2);
  if (!all_digits(first) || !all_digits(second)) return false;
  a = static_cast<unsigned>(std::stoul(first));
  b = static_cast<unsigned>(std::stoul(second));
  return a >= 1 && a <= b;
}

void write_payload(const std::string& payload, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
    return;
  }
  std::ofstream file(out_file, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out_file);
  file << payload;
}

int run_check(unsigned n, bool symmetric, const std::string& range_text,
              const std::string& format, const Deadline& deadline, std::ostream& out) {
  auto decide = [&](unsigned side) {
    return symmetric ? symmetric_signed_tileable(side) : signed_tileable(side);
  };
  if (range_text.empty()) {
    deadline.poll();
    const Verdict v = decide(n);
    out << (format == "text" ? verdict_line(v) : verdict_to_json(v)) << "\n";
    return 0;
  }
  unsigned a = 0;
  unsigned b = 0;
  if (!parse_range(range_text, a, b))
    throw CLI::ValidationError("--range expects A..B with 1 <= A <= B");
  json results = json::array();
  for (unsigned side = a; side <= b; ++side) {
    deadline.poll();
    if (symmetric && side % 3 == 1) {
      if (format == "text") {
        out << "T_" << side << " symmetric: fixed central cell (no three-sector decomposition)\n";
      } else {
        results.push_back({{"n", side}, {"symmetric", true}, {"error", "fixed central cell"}});
      }
      continue;
    }
    const Verdict v = decide(side);
    if (format == "text") {
      out << verdict_line(v) << "\n";
    } else {
      results.push_back(json::parse(verdict_to_json(v)));
    }
  }
  if (format != "text") out << results.dump(2) << "\n";
  return 0;
}

int run_certificate(unsigned n, bool symmetric, const std::string& format,
                    const std::string& out_file, const Deadline& deadline, std::ostream& out) {
  deadline.poll();
  const Tiling tiling = symmetric ? extract_symmetric_certificate(n) : extract_certificate(n);
  std::string payload;
  if (format == "svg") {
    payload = render_svg(tiling);
  } else if (format == "text") {
    payload = tiling_text(tiling);
  } else {
    payload = tiling_to_json(tiling);
  }
  write_payload(payload, out_file, out);
  return 0;
}

int run_groebner(const std::string& path, const std::string& order_text, const Deadline& deadline,
                 std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read ideal file " + path);
  std::optional<VariableSet> vars;
  std::vector<Polynomial> generators;
  std::string line;
  while (std::getline(file, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!vars) {
      if (line.rfind("vars:", 0) != 0)
        throw std::runtime_error("ideal file must start with a 'vars:' line");
      std::istringstream names(line.substr(5));
      std::vector<std::string> list;
      for (std::string name; names >> name;) list.push_back(name);
      if (list.empty()) throw std::runtime_error("ideal file 'vars:' line names no variables");
      vars.emplace(list);
      continue;
    }
    generators.push_back(parse_polynomial(*vars, line));
  }
  if (!vars || generators.empty())
    throw std::runtime_error("ideal file needs a 'vars:' line and at least one polynomial");

  const MonomialOrder order = order_text == "lex" ? MonomialOrder::lex : MonomialOrder::deglex;
  deadline.poll();
  const GroebnerBasis basis = buchberger_z(generators, order);
  json result;
  result["vars"] = vars->names();
  result["order"] = order_text;
  json elements = json::array();
  for (const Polynomial& e : basis.elements) elements.push_back(format_polynomial(e));
  result["basis"] = std::move(elements);
  out << result.dump(2) << "\n";
  return 0;
}

int run_oracle(unsigned n, bool symmetric, unsigned margin, bool sweep, const Deadline& deadline,
               std::ostream& out) {
  auto probe = [&](unsigned m) { return symmetric ? oracle_symmetric(n, m) : oracle_signed(n, m); };
  if (!sweep) {
    deadline.poll();
    out << oracle_to_json(probe(margin)) << "\n";
    return 0;
  }
  json reports = json::array();
  std::optional<bool> previous;
  for (unsigned m = margin; m <= margin + 16; ++m) {
    deadline.poll();
    const OracleReport report = probe(m);
    reports.push_back(json::parse(oracle_to_json(report)));
    if (previous && *previous == report.solvable) break;
    previous = report.solvable;
  }
  out << reports.dump(2) << "\n";
  return 0;
}

int run_render(const std::string& input, const std::string& out_file, std::ostream& out) {
  std::ifstream file(input);
  if (!file) throw std::runtime_error("cannot read tiling file " + input);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const Tiling tiling = tiling_from_json(buffer.str());
  if (!verify_tiling(tiling.region_n, tiling, tiling.symmetric))
    throw std::runtime_error("tiling does not verify against T_" +
                             std::to_string(tiling.region_n));
  write_payload(render_svg(tiling), out_file, out);
  return 0;
}

int run_selftest(bool verbose, const Deadline& deadline, std::ostream& out) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };

  // quoted table of the six symmetrized tribone generators
  static const char* const kGeneratorTable[6] = {
      "-3*s1 + 2*s2^2",
      "3*s1 - s2^2 + s1*t",
      "s1^2*s2 - s2^2 - s1*t",
      "-s1^2*s2 + 2*s2^2 - s1*t + s2^2*t",
      "-3*s1 + s1^2*s2 - s2^2",
      "3*s1 - 2*s1^2*s2 - s2^2 + s1*s2^3 + s1*t - s2^2*t",
  };
  deadline.poll();
  const std::vector<Polynomial>& generators = tribone_triplet_generators();
  bool generators_ok = generators.size() == 6;
  for (std::size_t g = 0; generators_ok && g < 6; ++g) {
    const bool entry_ok = st_canonical(generators[g] - parse_st(kGeneratorTable[g])).is_zero();
    if (verbose)
      report(entry_ok, std::string("generator ") + std::to_string(g) + " = " + kGeneratorTable[g]);
    generators_ok = generators_ok && entry_ok;
  }
  report(generators_ok, "six tribone orbit generators match the quoted table");

  deadline.poll();
  report(ideal_equal(invariant_tribone_basis().generators, printed_invariant_basis(),
                     MonomialOrder::lex),
         "completed strong basis generates the quoted eleven-polynomial basis");

  // remainder tables for both region families, one representative per case
  struct TableRow {
    unsigned n;
    const char* p_bar;
    const char* q_bar;
  };
  static const TableRow kRemainderTable[6] = {
      {8, "0", "-s2^2"},  {11, "s1", "-s2^2"},        {14, "-s1", "-s2^2"},
      {9, "0", "s2^2"},   {12, "-s1 + s2^2", "s2^2"}, {15, "s1", "s2^2"},
  };
  deadline.poll();
  auto nf = [](const Polynomial& f) { return reduce_full(f, invariant_tribone_basis()).remainder; };
  bool tables_ok = true;
  for (const TableRow& row : kRemainderTable) {
    const RegionDecomposition dec = region_delta_st(row.n);
    const bool row_ok =
        nf(dec.p) == parse_st(row.p_bar) && nf(dec.q) == parse_st(row.q_bar);
    if (verbose)
      report(row_ok, "N = " + std::to_string(row.n) + ": P -> " + row.p_bar + ", Q -> " + row.q_bar);
    tables_ok = tables_ok && row_ok;
  }
  for (unsigned d = 1; tables_ok && d <= 6; ++d) {
    const bool members = nf(Polynomial::constant(st_vars(), static_cast<long>(d)) * parse_st("s2^2")).is_zero();
    const bool d_ok = members == (d % 3 == 0);
    if (verbose) report(d_ok, std::to_string(d) + "*s2^2 membership pattern");
    tables_ok = tables_ok && d_ok;
  }
  report(tables_ok, "remainder tables match for both region families");

  out << (failures == 0 ? "selftest: all golden tables reproduced"
                        : "selftest: " + std::to_string(failures) + " deviation(s)")
      << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"signed tribone tilings of triangular regions of the hexagonal lattice"};
  app.name("tribone");
  app.require_subcommand(1);

  unsigned n = 0;
  bool symmetric = false;
  std::string range_text;
  std::string format = "json";
  std::string out_file;
  unsigned margin = 3;
  bool sweep = false;
  std::string order_text = "deglex";
  std::string input_file;
  bool verbose = false;
  double timeout_seconds = 0;

  CLI::App* check = app.add_subcommand("check", "decide signed tileability of T_N");
  CLI::Option* check_n = check->add_option("N", n, "triangle side")->check(CLI::PositiveNumber);
  check->add_flag("--symmetric", symmetric, "ask for a Z3-symmetric tiling");
  CLI::Option* check_range =
      check->add_option("--range", range_text, "check every side in A..B instead of a single N");
  check->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  check->add_option("--timeout-seconds", timeout_seconds, "coarse wall-clock budget");
  check_n->excludes(check_range);
  check_range->excludes(check_n);

  CLI::App* certificate = app.add_subcommand("certificate", "extract an explicit signed tiling");
  certificate->add_option("N", n, "triangle side")->required()->check(CLI::PositiveNumber);
  certificate->add_flag("--symmetric", symmetric, "ask for a Z3-symmetric tiling");
  certificate->add_option("--out", out_file, "write the payload to a file instead of stdout");
  certificate->add_option("--format", format, "json, text or svg")
      ->check(CLI::IsMember({"json", "text", "svg"}));
  certificate->add_option("--timeout-seconds", timeout_seconds, "coarse wall-clock budget");

  CLI::App* groebner = app.add_subcommand("groebner", "complete an ideal file to a strong basis");
  groebner->add_option("ideal-file", input_file, "vars: line then one polynomial per line")
      ->required()
      ->check(CLI::ExistingFile);
  groebner->add_option("--order", order_text, "monomial order")
      ->check(CLI::IsMember({"lex", "deglex"}));
  groebner->add_option("--timeout-seconds", timeout_seconds, "coarse wall-clock budget");

  CLI::App* oracle = app.add_subcommand("oracle", "integer-linear-algebra cross-check");
  oracle->add_option("N", n, "triangle side")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--symmetric", symmetric, "restrict to rotation-orbit columns");
  oracle->add_option("--margin", margin, "window margin beyond the bounding triangle");
  oracle->add_flag("--sweep", sweep, "increase the margin until the verdict is stable twice");
  oracle->add_option("--timeout-seconds", timeout_seconds, "coarse wall-clock budget");

  CLI::App* render = app.add_subcommand("render", "draw a tiling JSON file as SVG");
  render->add_option("tiling", input_file, "tiling JSON file")->required()->check(CLI::ExistingFile);
  render->add_option("--out", out_file, "output SVG file")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "reproduce the quoted golden tables");
  selftest->add_flag("--verbose", verbose, "print each table entry");
  selftest->add_option("--timeout-seconds", timeout_seconds, "coarse wall-clock budget");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    const Deadline deadline(timeout_seconds);
    if (app.got_subcommand(check)) {
      if (range_text.empty() && check_n->count() == 0)
        throw CLI::RequiredError("check needs N or --range");
      return run_check(n, symmetric, range_text, format, deadline, out);
    }
    if (app.got_subcommand(certificate))
      return run_certificate(n, symmetric, format, out_file, deadline, out);
    if (app.got_subcommand(groebner)) return run_groebner(input_file, order_text, deadline, out);
    if (app.got_subcommand(oracle)) return run_oracle(n, symmetric, margin, sweep, deadline, out);
    if (app.got_subcommand(render)) return run_render(input_file, out_file, out);
    if (app.got_subcommand(selftest)) return run_selftest(verbose, deadline, out);
    throw std::logic_error("no subcommand dispatched");
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tribone
