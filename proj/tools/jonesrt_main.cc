#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jonesrt/bounds.h"
#include "jonesrt/colored.h"
#include "jonesrt/constructions.h"
#include "jonesrt/diagram_io.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "jonesrt/rt.h"
#include "jonesrt/skein.h"

namespace {

using jonesrt::Arithmetic;
using Json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Config {
  bool exact = true;
  bool use_float = false;
  double tolerance = 1e-9;
  int max_width = jonesrt::EngineOptions::DefaultMaxWidth();
  std::string format = "table";
  int jobs = 1;
  std::string output;
  bool direct = false;

  jonesrt::CheckOptions Check(jonesrt::CableCache* cache) const {
    jonesrt::CheckOptions o;
    o.rt.engine.max_width = max_width;
    o.rt.arithmetic = use_float ? Arithmetic::kFloat : Arithmetic::kExact;
    o.rt.jobs = jobs;
    o.rt.cache = cache;
    o.tolerance = tolerance;
    o.direct_surgery = direct;
    return o;
  }
  bool json() const { return format == "json"; }
};

void Emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw jonesrt::InputError("cannot write " + cfg.output);
  out << text;
}

std::string Approx(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string ValueReport(const Config& cfg, const std::string& what, int r, bool exact,
                        const std::string& value, std::complex<double> approx) {
  if (cfg.json()) {
    Json j;
    j["quantity"] = what;
    j["level"] = r;
    j["mode"] = exact ? "exact" : "float";
    if (exact) j["value"] = value;
    j["approx"] = {approx.real(), approx.imag()};
    if (!exact) j["tolerance"] = cfg.tolerance;
    return j.dump(2) + "\n";
  }
  std::string out = (exact ? value : Approx(approx)) + "\n";
  out += "approx " + Approx(approx);
  if (!exact) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (float mode, tolerance %g)", cfg.tolerance);
    out += buf;
  }
  return out + "\n";
}

std::string PolynomialText(const jonesrt::LaurentPolynomial& in_a) {
  if (auto t = jonesrt::AToT(in_a)) return t->ToString("t");
  return in_a.ToString("A");
}

int RunJones(const Config& cfg, const std::string& file, const std::vector<int>& color_arg,
             std::optional<int> level, bool framed) {
  const jonesrt::LinkDiagram d = jonesrt::ParseDiagram(jonesrt::ReadTextFile(file));
  std::vector<int> colors = color_arg;
  if (colors.empty()) colors.assign(d.num_components(), 2);
  if (colors.size() == 1 && d.num_components() > 1) colors.assign(d.num_components(), colors[0]);
  jonesrt::EngineOptions eng;
  eng.max_width = cfg.max_width;
  if (!level) {
    const auto p = jonesrt::MultiColoredJones(d, colors, framed, eng);
    if (cfg.json()) {
      Json j;
      j["colors"] = colors;
      j["framed"] = framed;
      j["polynomial"] = PolynomialText(p);
      j["bracket_variable"] = p.ToString("A");
      Emit(cfg, j.dump(2) + "\n");
    } else {
      Emit(cfg, PolynomialText(p) + "\n");
    }
    return kPass;
  }
  if (*level < 3) throw jonesrt::InputError("--level must be >= 3");
  if (cfg.use_float) {
    const auto v = jonesrt::MultiColoredJonesAtRootFloat(d, colors, *level, framed, eng);
    Emit(cfg, ValueReport(cfg, "colored_jones", *level, false, "", v));
  } else {
    const auto v = jonesrt::MultiColoredJonesAtRoot(d, colors, *level, framed, eng);
    Emit(cfg, ValueReport(cfg, "colored_jones", *level, true, v.ToString(), v.ToComplex()));
  }
  return kPass;
}

int RunRt(const Config& cfg, const std::string& file, int level) {
  const jonesrt::SurgeryPresentation p = jonesrt::ParsePresentation(jonesrt::ReadTextFile(file));
  jonesrt::CableCache cache;
  const jonesrt::RTValue v = jonesrt::RtInvariant(p, level, cfg.Check(&cache).rt);
  Emit(cfg, ValueReport(cfg, "tau", level, v.exact, v.ToString(), v.approx));
  return kPass;
}

int RunVerify(const Config& cfg, const std::string& scenario, const std::vector<std::string>& files,
              int n, std::vector<int> levels, long q, std::optional<int> color,
              std::optional<int> cable) {
  jonesrt::CableCache cache;
  const jonesrt::CheckOptions opts = cfg.Check(&cache);
  if (scenario == "theorem-1-2" || scenario == "theorem-1-1") {
    if (levels.empty()) throw jonesrt::InputError("--level is required");
    jonesrt::ScenarioReport rep =
        scenario == "theorem-1-2"
            ? jonesrt::VerifyUnknotCongruence(n, levels, color.value_or(1 << 20), opts)
            : jonesrt::VerifyOneOverQSurgery(n, levels, q, opts);
    Emit(cfg, cfg.json() ? rep.ToJson() : rep.ToTable());
    return rep.pass ? kPass : kVerificationFailed;
  }
  if (scenario == "congruence") {
    if (files.size() != 2) throw jonesrt::InputError("congruence needs two knot files");
    if (levels.size() != 1) throw jonesrt::InputError("congruence needs one --level");
    const int r = levels[0];
    const auto k1 = jonesrt::ParseDiagram(jonesrt::ReadTextFile(files[0]));
    const auto k2 = jonesrt::ParseDiagram(jonesrt::ReadTextFile(files[1]));
    const auto rep =
        jonesrt::CheckCongruence(k1, k2, r, color.value_or(r - 1), cable.value_or(2), opts);
    Emit(cfg, cfg.json() ? jonesrt::CongruenceToJson(rep) : jonesrt::CongruenceToTable(rep));
    return rep.pass ? kPass : kVerificationFailed;
  }
  if (scenario == "kirby-stability") {
    if (files.size() != 1) throw jonesrt::InputError("kirby-stability needs one presentation file");
    if (levels.empty()) levels = {3, 4, 5};
    const auto p = jonesrt::ParsePresentation(jonesrt::ReadTextFile(files[0]));
    bool all = true;
    Json j;
    j["scenario"] = scenario;
    Json rows = Json::array();
    std::string table = "kirby-stability " + (p.label.empty() ? files[0] : p.label) + "\n";
    for (int r : levels) {
      const bool ok = jonesrt::VerifyKirbyStability(p, r, opts.rt, cfg.tolerance);
      all = all && ok;
      rows.push_back({{"level", r}, {"stable", ok}});
      table += "r=" + std::to_string(r) + "  " + (ok ? "pass" : "fail") + "\n";
    }
    j["levels"] = std::move(rows);
    j["verdict"] = all ? "pass" : "fail";
    table += std::string("verdict: ") + (all ? "pass" : "fail") + "\n";
    Emit(cfg, cfg.json() ? j.dump(2) + "\n" : table);
    return all ? kPass : kVerificationFailed;
  }
  throw jonesrt::InputError(
      "unknown scenario \"" + scenario +
      "\" (expected theorem-1-2, theorem-1-1, congruence or kirby-stability)");
}

int RunConstruct(const Config& cfg, const std::string& name, const std::vector<int>& orders,
                 std::optional<long> q) {
  const jonesrt::Template t = jonesrt::TemplateByName(name);
  const jonesrt::LinkDiagram k = jonesrt::BuildTwistedKnot(t, orders);
  std::string label = name + "(";
  for (std::size_t i = 0; i < orders.size(); ++i)
    label += (i ? "," : "") + std::to_string(orders[i]);
  label += ")";
  if (q) {
    Emit(cfg, jonesrt::SerializePresentation(jonesrt::SurgeryPresentationOneOverQ(k, *q, label)));
  } else {
    Emit(cfg, jonesrt::SerializeDiagram(k));
  }
  return kPass;
}

int RunBounds(const Config& cfg, int n, std::optional<long> q) {
  const double cusped = jonesrt::CuspedLowerBound(n);
  std::optional<double> filling;
  if (q) filling = jonesrt::FillingLowerBound(n, *q);
  char buf[64];
  if (cfg.json()) {
    Json j;
    j["n"] = n;
    std::snprintf(buf, sizeof(buf), "%.6g", cusped);
    j["cusped"] = std::stod(buf);
    if (filling) {
      j["q"] = *q;
      std::snprintf(buf, sizeof(buf), "%.6g", *filling);
      j["filling"] = std::stod(buf);
      j["exceeds_half_n"] = *filling > n / 2.0;
    }
    Emit(cfg, j.dump(2) + "\n");
    return kPass;
  }
  std::string out;
  std::snprintf(buf, sizeof(buf), "cusped %.6g\n", cusped);
  out += buf;
  if (filling) {
    std::snprintf(buf, sizeof(buf), "filling %.6g\n", *filling);
    out += buf;
  }
  Emit(cfg, out);
  return kPass;
}

void AddCommon(CLI::App* cmd, Config& cfg) {
  auto* exact = cmd->add_flag("--exact", cfg.exact, "Exact cyclotomic arithmetic (default)");
  cmd->add_flag("--float", cfg.use_float, "Floating-point evaluation")->excludes(exact);
  cmd->add_option("--tolerance", cfg.tolerance, "Float comparison tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-width", cfg.max_width, "Frontier width cap")->check(CLI::Range(1, 42));
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--output", cfg.output, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones polynomials and SU(2) quantum invariants"};
  app.require_subcommand(1);
  Config cfg;

  std::string file;
  std::vector<int> colors;
  std::optional<int> level;
  bool framed = false;
  auto* jones = app.add_subcommand("jones", "Colored Jones polynomial of a diagram");
  jones->add_option("diagram", file, "Diagram JSON file")->required();
  jones->add_option("--color", colors, "Color N, or one color per component")->delimiter(',');
  jones->add_option("--level", level, "Evaluate at e_r");
  jones->add_flag("--framed", framed, "Use the stored framing instead of 0");
  AddCommon(jones, cfg);

  int rt_level = 0;
  auto* rt = app.add_subcommand("rt", "SU(2) invariant tau_r of a surgery presentation");
  rt->add_option("presentation", file, "Presentation JSON file")->required();
  rt->add_option("--level", rt_level, "Level r >= 3")->required();
  AddCommon(rt, cfg);

  std::string scenario;
  std::vector<std::string> files;
  int n = 1;
  std::vector<int> levels;
  long q = 2;
  std::optional<int> color;
  std::optional<int> cable;
  auto* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify
      ->add_option("scenario", scenario, "theorem-1-2 | theorem-1-1 | congruence | kirby-stability")
      ->required();
  verify->add_option("files", files, "Input files for congruence / kirby-stability");
  verify->add_option("--n", n, "Number of crossing circles (1 or 2)");
  verify->add_option("--level", levels, "Level(s) r")->delimiter(',');
  verify->add_option("--q", q, "Surgery slope denominator");
  verify->add_option("--color", color, "Largest color tested");
  verify->add_option("--cable", cable, "Largest cable tested");
  verify->add_flag("--direct", cfg.direct,
                   "theorem-1-1: also sum over the cables of the full presentation");
  AddCommon(verify, cfg);

  std::string template_name;
  std::vector<int> orders;
  std::optional<long> construct_q;
  auto* construct = app.add_subcommand("construct", "Build a twisted knot or 1/q presentation");
  construct->add_option("template", template_name, "whitehead | borromean")->required();
  construct->add_option("--orders", orders, "Twist orders, one per site")
      ->delimiter(',')
      ->required();
  construct->add_option("--q", construct_q, "Emit the 1/q surgery presentation");
  AddCommon(construct, cfg);

  int bounds_n = 1;
  std::optional<long> bounds_q;
  auto* bounds = app.add_subcommand("bounds", "Volume lower bounds");
  bounds->add_option("--n", bounds_n, "Number of crossing circles")->required();
  bounds->add_option("--q", bounds_q, "Filling slope denominator");
  AddCommon(bounds, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*jones) return RunJones(cfg, file, colors, level, framed);
    if (*rt) return RunRt(cfg, file, rt_level);
    if (*verify) return RunVerify(cfg, scenario, files, n, levels, q, color, cable);
    if (*construct) return RunConstruct(cfg, template_name, orders, construct_q);
    if (*bounds) return RunBounds(cfg, bounds_n, bounds_q);
  } catch (const jonesrt::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const jonesrt::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const jonesrt::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
