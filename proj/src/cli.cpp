#include "chromsym/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "chromsym/coloring.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/gfun.hpp"
#include "chromsym/hikita.hpp"
#include "chromsym/modlaw.hpp"
#include "chromsym/ptab.hpp"
#include "chromsym/serialize.hpp"
#include "chromsym/verify.hpp"

namespace chromsym {

int verify_cap() {
  int cap = kVerifyMaxN;
  if (const char* env = std::getenv("CHROMSYM_NMAX")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1 && v < cap) cap = v;
    } catch (const std::exception&) {
      // Unparseable values leave the cap unchanged.
    }
  }
  return cap;
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct ComputeOptions {
  std::string what;
  std::string m;
  std::string basis = "e";
  int k = -1;
  std::string method = "colorings";
  std::string at_q;
  std::string format = "text";
};

SymFun compute(const ComputeOptions& o) {
  if (o.what == "rho") {
    if (o.k < 0) throw UsageError("--k is required for rho");
    return rho(o.k);
  }
  if (o.m.empty()) throw UsageError("--m is required for " + o.what);
  const HessFn m = parse_hess(o.m);
  const auto need_k = [&](int lo, int hi) {
    if (o.k < lo || o.k > hi) {
      throw UsageError("--k must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] for " + o.what);
    }
  };
  if (o.what == "X") {
    if (o.method == "colorings") return x_colorings(m);
    if (o.method == "hikita") return x_hikita(m);
    if (o.method == "an") return x_an(m);
    if (o.method == "schur") return x_schur(m);
    throw UsageError("unknown method '" + o.method + "'");
  }
  if (o.what == "E") return e_total(m);
  if (o.what == "Ek") {
    need_k(1, m.n());
    return e_part(m, o.k);
  }
  if (o.what == "G") return g_total(m);
  if (o.what == "Gk") {
    need_k(1, m.n());
    return g_cap(m, o.k);
  }
  if (o.what == "S") return s_fun(m);
  if (o.what == "g") {
    need_k(0, m.n() - 1);
    return g(m, o.k);
  }
  throw UsageError("unknown quantity '" + o.what + "'");
}

void print_symfun(const SymFun& f, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(f).dump() << "\n";
  } else if (format == "tsv") {
    out << "partition\tcoefficient\n";
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
      out << to_string(it->first) << "\t" << to_string(it->second) << "\n";
    }
  } else {
    out << to_string(f) << "\n";
  }
}

Json report_json(const SuiteReport& r) {
  return Json{{"suite", r.suite},  {"n_max", r.n_max},       {"checked", r.checked},
              {"pass", r.ok()},    {"failures", r.failures}, {"notes", r.notes}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic quasisymmetric functions of natural unit interval orders", "chromsym"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a symmetric function");
  compute_cmd->add_option("--what", co.what, "X, E, Ek, G, Gk, S, g or rho")
      ->required()
      ->check(CLI::IsMember({"X", "E", "Ek", "G", "Gk", "S", "g", "rho"}));
  compute_cmd->add_option("--m", co.m, "Hessenberg function, e.g. 2,3,5,5,5");
  compute_cmd->add_option("--basis", co.basis, "Output basis")->check(CLI::IsMember({"e", "s", "m", "h"}));
  compute_cmd->add_option("--k", co.k, "Refinement index");
  compute_cmd->add_option("--method", co.method, "Method for X")
      ->check(CLI::IsMember({"colorings", "hikita", "an", "schur"}));
  compute_cmd->add_option("--at-q", co.at_q, "Specialize q to a rational after computing");
  compute_cmd->add_option("--format", co.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));

  std::string suite;
  int n_max = 0;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", n_max, "Largest n to check")->required();
  verify_cmd->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string reduce_m;
  std::string emit = "text";
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce to a combination of unions of paths");
  reduce_cmd->add_option("--m", reduce_m, "Hessenberg function")->required();
  reduce_cmd->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string model;
  std::string trace_m;
  auto* trace_cmd = app.add_subcommand("trace", "Print the growth tree of a model");
  trace_cmd->add_option("model", model, "Model name")->required()->check(CLI::IsMember({"hikita"}));
  trace_cmd->add_option("--m", trace_m, "Hessenberg function")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute_cmd) {
      SymFun f = compute(co);
      if (!co.at_q.empty()) {
        Rational q0;
        if (q0.set_str(co.at_q, 10) != 0 || q0.get_den() == 0) throw UsageError("bad --at-q value '" + co.at_q + "'");
        q0.canonicalize();
        f = specialize(f, q0);
      }
      print_symfun(to_basis(f, parse_basis(co.basis)), co.format, out);
      return 0;
    }
    if (*verify_cmd) {
      const int cap = verify_cap();
      if (n_max < 1 || n_max > cap) throw UsageError("--n must lie in [1, " + std::to_string(cap) + "]");
      const SuiteReport r = run_suite(suite, n_max);
      if (verify_format == "json") {
        out << report_json(r).dump(2) << "\n";
      } else {
        out << (r.ok() ? "PASS" : "FAIL") << " suite=" << r.suite << " n<=" << r.n_max << " checked=" << r.checked
            << "\n";
        for (const auto& f : r.failures) out << "  violation: " << f << "\n";
        for (const auto& note : r.notes) out << "  note: " << note << "\n";
      }
      return r.ok() ? 0 : 1;
    }
    if (*reduce_cmd) {
      const PathCombination c = reduce(parse_hess(reduce_m));
      if (emit == "json") out << to_json(c).dump() << "\n";
      else out << to_string(c) << "\n";
      return 0;
    }
    if (*trace_cmd) {
      const HessFn m = parse_hess(trace_m);
      for (const auto& node : trace_hikita(m)) {
        out << "node=" << node.id << " parent=" << node.parent << " shape=" << to_string(shape_of(node.tableau))
            << " tableau=" << to_string(node.tableau) << " k=" << node.k << " r=" << node.r
            << " weight=" << to_string(node.weight) << " p=" << to_string(node.probability) << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidHessenberg& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace chromsym
