#include "mvfilter/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvfilter/errors.hpp"
#include "mvfilter/export.hpp"
#include "mvfilter/expression.hpp"
#include "mvfilter/spec_file.hpp"
#include "mvfilter/spectra.hpp"

namespace mvfilter {

std::string render_report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "target: " << r.target;
  if (r.carrier_size > 0) os << " (" << r.carrier_size << " elements)";
  os << "\nseed: " << r.seed << "\n";
  std::size_t w = 0;
  for (const auto& s : r.results) w = std::max(w, s.id.size());
  for (const auto& s : r.results) {
    os << std::left << std::setw(5) << to_string(s.status) << ' ' << std::setw(static_cast<int>(w))
       << s.id << "  ";
    std::string count = "checked=" + std::to_string(s.checked);
    if (s.failures > 0) count += " failed=" + std::to_string(s.failures);
    os << std::setw(24) << count << "  " << s.formula << '\n';
    if (!s.witness.empty()) os << "      witness: " << s.witness << '\n';
    if (!s.note.empty()) os << "      note: " << s.note << '\n';
  }
  os << "summary: " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Skip) << " skip\n";
  return os.str();
}

std::string render_report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["target"] = r.target;
  j["carrier_size"] = r.carrier_size;
  j["seed"] = r.seed;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"skip", r.count(Status::Skip)}};
  j["seconds"] = r.seconds;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& s : r.results) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["formula"] = s.formula;
    e["status"] = std::string(to_string(s.status));
    e["checked"] = s.checked;
    e["failures"] = s.failures;
    e["witness"] = s.witness;
    e["note"] = s.note;
    e["seconds"] = s.seconds;
    j["results"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

namespace {

/// A usage problem detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraSpec load_spec(const std::string& arg) {
  std::string text;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw UsageError("cannot read spec file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return parse_spec(text);
  } catch (const ParseError& e) {
    throw ParseError(arg.size() > 60 ? std::string("spec: ") + e.what() : arg + ": " + e.what(),
                     e.line(), e.column());
  }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
  f.close();
  if (!f) throw UsageError("cannot write '" + path + "'");
}

struct VerifyArgs {
  std::string spec;
  std::vector<std::string> only;
  std::uint64_t seed = 42;
  std::size_t max_carrier = default_carrier_cap();
  std::string json;
  std::size_t dense_pairs = 10000;
  std::size_t dense_triples = 1000;
};

struct ComputeArgs {
  std::string spec, expr;
  std::size_t max_carrier = default_carrier_cap();
};

struct ExportArgs {
  std::string spec, what, format, output = "-";
  std::size_t p = 0;
  std::size_t max_carrier = default_carrier_cap();
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  auto spec = load_spec(a.spec);
  VerifyOptions opt;
  opt.only = a.only;
  opt.seed = a.seed;
  opt.max_carrier = a.max_carrier;
  opt.dense_pairs = a.dense_pairs;
  opt.dense_triples = a.dense_triples;
  auto rep = spec.is_dense() ? verify_dense(opt)
                             : verify_algebra(build_algebra(spec, a.max_carrier), opt);
  out << render_report_text(rep);
  if (!a.json.empty()) write_output(a.json, render_report_json(rep), out);
  return rep.has_failures() ? kExitFailures : kExitOk;
}

int do_compute(const ComputeArgs& a, std::ostream& out) {
  auto spec = load_spec(a.spec);
  auto ctx = spec.is_dense() ? ExpressionContext::dense()
                             : ExpressionContext::finite(build_algebra(spec, a.max_carrier));
  out << format_value(evaluate_expression(ctx, a.expr)) << '\n';
  return kExitOk;
}

int do_export(const ExportArgs& a, std::ostream& out) {
  auto spec = load_spec(a.spec);
  auto fmt = parse_export_format(a.format);
  if (spec.is_dense()) throw UsageError("export needs a finite algebra");
  auto alg = build_algebra(spec, a.max_carrier);
  std::string content;
  if (a.what == "filters") {
    content = export_filters(alg, fmt, a.max_carrier);
  } else if (a.what == "spectrum" || a.what == "hat") {
    Calculus calc(alg);
    auto primes = enumerate_implication_filters(alg, true, a.max_carrier);
    if (a.p >= primes.size())
      throw UsageError("--p " + std::to_string(a.p) + " out of range: the prime implication filters of " +
                       alg.name() + " are numbered 0.." + std::to_string(primes.size() - 1));
    auto h = build_hat(calc, prime_spectrum(calc, primes[a.p]));
    content = a.what == "hat" ? export_hat(h, fmt) : export_spectrum(h, fmt);
  } else {
    throw UsageError("unknown export target '" + a.what + "' (expected filters, spectrum or hat)");
  }
  write_output(a.output, content, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filter calculus workbench for finite MV-algebras and the rational chain",
               "mvfilter"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check every catalogued statement on an algebra");
  verify->add_option("spec", va.spec, "spec file, or inline JSON")->required();
  verify->add_option("--only", va.only, "comma-separated statement ids")->delimiter(',');
  verify->add_option("--seed", va.seed, "seed for the dense-chain samples");
  verify->add_option("--max-carrier", va.max_carrier, "largest carrier to enumerate");
  verify->add_option("--json", va.json, "also write a JSON report to this path");
  verify->add_option("--dense-pairs", va.dense_pairs, "random pairs per dense statement");
  verify->add_option("--dense-triples", va.dense_triples, "random triples per dense statement");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "evaluate a filter expression");
  compute->add_option("spec", ca.spec, "spec file, or inline JSON")->required();
  compute->add_option("expr", ca.expr, "expression, e.g. sqto(up(1/2),up(1))")->required();
  compute->add_option("--max-carrier", ca.max_carrier, "largest carrier to enumerate");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "write filters, a spectrum or a hat algebra");
  exp->add_option("spec", ea.spec, "spec file, or inline JSON")->required();
  exp->add_option("what", ea.what, "filters | spectrum | hat")->required();
  exp->add_option("--p", ea.p, "index of the prime implication filter, in mask order");
  exp->add_option("--format", ea.format, "dot | csv")->required();
  exp->add_option("-o,--output", ea.output, "output path, - for stdout");
  exp->add_option("--max-carrier", ea.max_carrier, "largest carrier to enumerate");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return do_verify(va, out);
    if (*compute) return do_compute(ca, out);
    return do_export(ea, out);
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << " (cap " << e.cap() << ")\n";
    return kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << '\n';
    return kExitFailures;
  }
}

}  // namespace mvfilter
