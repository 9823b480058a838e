// oneplane: command-line front end. Every command is a thin wrapper around
// the library; exit codes are 0 pass, 1 check failure, 2 input error,
// 3 proof gap.

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oneplane/analysis.hpp"
#include "oneplane/bounds.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/document.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/render.hpp"
#include "oneplane/report.hpp"

namespace fs = std::filesystem;
using namespace oneplane;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kGap = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text(out, text);
}

OnePlaneDrawing load(const std::string& path) {
  if (path.empty()) throw InputError("no input drawing given");
  return load_drawing(path);
}

int cmd_analyze(const std::string& in, const std::string& out) {
  OnePlaneDrawing d = load(in);
  DrawingAnalysis a = analyze_drawing(d);
  emit(dump(a.report), out);
  return a.passed ? kPass : kFail;
}

int cmd_certify(const std::string& in, std::string out) {
  OnePlaneDrawing d = load(in);
  if (!is_maximal(d).maximal) {
    std::cerr << "certify: drawing is not maximal\n";
    return kFail;
  }
  SkeletonResult s = skeleton(d);
  Certificate cert;
  try {
    cert = certify(s.skeleton);
  } catch (const ProofGapError& gap) {
    std::cerr << "certify: proof gap: " << gap.what() << "\n" << gap.dump() << "\n";
    return kGap;
  }
  if (out.empty()) {
    std::string base = in;
    if (base.ends_with(".opg.json")) base.resize(base.size() - 9);
    out = base + ".cert.json";
  }
  write_text(out, dump(certificate_json(s.skeleton, cert)));
  // Replay what was written, not what is in memory.
  Certificate back = certificate_from_json(Json::parse(read_text(out)));
  VerificationResult v = verify_certificate(s.skeleton, back);
  std::cout << "certificate " << out << ": " << cert.nodes.size() << " nodes, " << cert.leaves.size()
            << " leaves, 9p+10e+7c = " << inequality_lhs(cert.stats)
            << " >= 20n-30 = " << inequality_rhs(cert.stats) << ", "
            << (v.valid ? "verified" : "INVALID: " + v.reason) << "\n";
  return v.valid && check_inequality(cert.stats) ? kPass : kFail;
}

int cmd_render(const std::string& in, const std::string& out) {
  RenderResult r = render_svg(load(in));
  emit(r.svg, out);
  if (!r.note.empty()) std::cerr << "render: " << r.layout << " layout (" << r.note << ")\n";
  return kPass;
}

int cmd_report(const std::string& in, const std::string& format, const std::string& out) {
  if (in.empty()) throw InputError("report needs a directory or census file");
  if (!fs::exists(in)) throw InputError("'" + in + "' does not exist");
  CorpusReport r = corpus_report(in);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  emit(format == "json" ? dump(to_json(r)) : to_csv(r), out);
  if (r.min_slack)
    std::cerr << r.rows.size() << " drawings, min slack " << to_string(*r.min_slack)
              << ", min density " << to_string(*r.min_density) << "\n";
  return r.min_slack && *r.min_slack < Rational(0) ? kFail : kPass;
}

int cmd_bounds(long long from, long long to, const std::string& format, const std::string& out) {
  if (from < 4 || to < from) throw InputError("bounds needs 4 <= --from <= --to");
  if (format == "json") {
    emit(dump(bounds_table_json(from, to)), out);
  } else if (format == "csv") {
    emit(bounds_table_csv(from, to), out);
  } else {
    const LpSolution lp = minimize_F();
    std::ostringstream s;
    s << "min F = E - 20N/9 over the feasible cone: " << to_string(lp.minimum) << " (shift route "
      << to_string(lp.reduction_minimum) << ", " << lp.vertices_checked << " vertices and "
      << lp.rays_checked << " rays: " << to_string(lp.vertex_minimum) << ")\n";
    s << std::setw(4) << "N" << std::setw(10) << "bound" << std::setw(10) << "decimal" << std::setw(6)
      << "ceil" << std::setw(8) << "4N-8" << std::setw(9) << "28N/13" << std::setw(9) << "21N/10"
      << std::setw(9) << "7N/3" << std::setw(9) << "45N/17" << "\n";
    for (long long N = from; N <= to; ++N) {
      const Rational b = density_lower_bound(N);
      s << std::setw(4) << N << std::setw(10) << to_string(b) << std::setw(10) << to_decimal(b)
        << std::setw(6) << ceil_rational(b) << std::setw(8) << 4 * N - 8;
      for (Rational slope : {Rational(28, 13), Rational(21, 10), Rational(7, 3), Rational(45, 17)})
        s << std::setw(9) << to_decimal(slope * Rational(N), 2);
      s << "\n";
    }
    emit(s.str(), out);
  }
  return kPass;
}

int cmd_enumerate(int n, const std::string& out, bool quiet) {
  if (n < 4 || n > 6) throw InputError("enumerate supports 4 <= n <= 6");
  EnumerationResult r = enumerate_maximal(n, [&](const std::string& msg) {
    if (!quiet) std::cerr << msg << "\n";
  });
  emit(dump(census_json(r)), out);
  const long long lo = ceil_rational(density_lower_bound(n));
  std::cerr << "e'(" << n << ") = " << r.e_prime << " (bound " << lo << ", " << r.drawings.size()
            << " maximal drawings, " << r.graph_count << " graphs)\n";
  return r.e_prime >= lo && r.e_prime <= 4 * n - 8 ? kPass : kFail;
}

int cmd_saturate(const std::string& in, std::uint64_t seed, bool first, const std::string& out) {
  OnePlaneDrawing d = saturate(load(in), seed, first ? WitnessChoice::First : WitnessChoice::Random);
  emit(serialize_drawing(d), out);
  return kPass;
}

int cmd_gen(const std::string& kind, int type, int n, std::uint64_t seed, const std::string& out) {
  OnePlaneDrawing d;
  if (kind == "k4")
    d = gen_k4(true);
  else if (kind == "k4-plane")
    d = gen_k4(false);
  else if (kind == "k4-pair")
    d = gen_k4_pair();
  else if (kind == "cycle4")
    d = gen_cycle4();
  else if (kind == "hermit")
    d = gen_hermit_gadget(1);
  else if (kind == "hermit2")
    d = gen_hermit_gadget(2);
  else if (kind == "exceptional") {
    if (type < 1 || type > 4) throw InputError("--template must be 1..4");
    d = gen_exceptional(type);
  } else if (kind == "template") {
    if (type < 1 || type > 4) throw InputError("--template must be 1..4");
    d = exceptional_template(type);
  } else if (kind == "double-exceptional")
    d = gen_double_exceptional();
  else if (kind == "tree")
    d = random_tree(n, seed);
  else if (kind == "saturated")
    d = saturate(random_tree(n, seed), seed);
  else
    throw InputError("unknown generator '" + kind + "'");
  emit(serialize_drawing(d), out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal 1-plane drawings: analysis, certificates, bounds, enumeration"};
  app.require_subcommand(1);

  std::string in, out, format = "text", kind;
  std::uint64_t seed = 0;
  int n = 5, type = 1;
  long long from = 4, to = 20;
  bool quiet = false, first = false;

  auto* analyze = app.add_subcommand("analyze", "Run every check on a drawing and print a JSON report");
  analyze->add_option("path", in, "Drawing document (.opg.json)")->required();
  analyze->add_option("--out", out, "Write the report here instead of stdout");

  auto* certify_cmd = app.add_subcommand("certify", "Write and verify a certificate of 9p+10e+7c >= 20n-30");
  certify_cmd->add_option("path", in, "Maximal drawing document")->required();
  certify_cmd->add_option("--out", out, "Certificate path (default: <input>.cert.json)");

  auto* render = app.add_subcommand("render", "Draw a drawing as SVG");
  render->add_option("path", in, "Drawing document")->required();
  render->add_option("--out", out, "SVG path (default: stdout)");

  auto* report = app.add_subcommand("report", "Density table for a directory of drawings or a census");
  report->add_option("path", in, "Directory of .opg.json files, or a census JSON file")->required();
  report->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
  report->add_option("--out", out, "Output path (default: stdout)");

  auto* bounds = app.add_subcommand("bounds", "Lower-bound table and the exact LP minimum");
  bounds->add_option("--from", from, "Smallest N (>= 4)");
  bounds->add_option("--to", to, "Largest N");
  bounds->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
  bounds->add_option("--out", out, "Output path (default: stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "All maximal drawings on n vertices (4 <= n <= 6)");
  enumerate->add_option("-n", n, "Number of vertices")->required();
  enumerate->add_option("--out", out, "Census JSON path (default: stdout)");
  enumerate->add_flag("--quiet", quiet, "No progress output");

  auto* saturate_cmd = app.add_subcommand("saturate", "Add edges until the drawing is maximal");
  saturate_cmd->add_option("--in", in, "Drawing document")->required();
  saturate_cmd->add_option("--seed", seed, "Seed for the witness choice");
  saturate_cmd->add_flag("--first", first, "Always take the first witness instead of a random one");
  saturate_cmd->add_option("--out", out, "Output path (default: stdout)");

  auto* gen = app.add_subcommand("gen", "Built-in drawings");
  gen->add_option("kind", kind,
                  "k4 | k4-plane | k4-pair | cycle4 | hermit | hermit2 | exceptional | template | "
                  "double-exceptional | tree | saturated")
      ->required();
  gen->add_option("--template", type, "Exceptional template 1..4");
  gen->add_option("-n", n, "Vertex count for tree and saturated");
  gen->add_option("--seed", seed, "Seed for tree and saturated");
  gen->add_option("--out", out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(in, out);
    if (*certify_cmd) return cmd_certify(in, out);
    if (*render) return cmd_render(in, out);
    if (*report) return cmd_report(in, format == "text" ? "csv" : format, out);
    if (*bounds) return cmd_bounds(from, to, format, out);
    if (*enumerate) return cmd_enumerate(n, out, quiet);
    if (*saturate_cmd) return cmd_saturate(in, seed, first, out);
    if (*gen) return cmd_gen(kind, type, n, seed, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DrawingError& e) {
    std::cerr << "invalid drawing: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ProofGapError& e) {
    std::cerr << "proof gap: " << e.what() << "\n" << e.dump() << "\n";
    return kGap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
  return kPass;
}
