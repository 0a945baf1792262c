// qmock: exact q-series checks for the mock theta functions f, omega, B, nu2.
//
// Exit codes: 0 all pass, 1 some mismatch, 2 usage or construction error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmock/error.hpp"
#include "qmock/mockforms.hpp"
#include "qmock/recursion.hpp"
#include "qmock/verify.hpp"

namespace {

using namespace qmock;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code(const SuiteReport& r) {
  if (r.any(Status::error)) return kExitUsage;
  if (r.any(Status::fail)) return kExitFail;
  return kExitPass;
}

struct VerifyOpts {
  std::string identity;
  bool all = false;
  int order = 100;
  std::string params;
  bool unsafe = false;
  int workers = 1;
  int n_max = -1;
  std::string format = "json";
  bool timing = false;
};

int cmd_list() {
  for (const auto& e : registry()) {
    std::string inst;
    for (const auto& p : e.instances) {
      if (p.empty()) continue;
      inst += (inst.empty() ? "" : " | ") + params_str(p);
    }
    std::cout << e.name << '\t' << (inst.empty() ? "-" : inst) << '\t'
              << (e.bivariate() ? "x=" + e.symbol : "univariate") << '\t' << e.summary << '\n';
  }
  return kExitPass;
}

int cmd_verify(const VerifyOpts& o) {
  SuiteReport rep;
  if (o.all) {
    rep = run_suite(o.order, o.n_max < 0 ? o.order : o.n_max, o.workers);
  } else {
    const IdentityEntry* e = find_identity(o.identity);
    if (!e) throw Error("unknown identity '" + o.identity + "'");
    std::vector<Params> todo;
    if (o.params.empty()) {
      todo = e->instances;
    } else {
      todo.push_back(parse_params(o.params));
    }
    for (const auto& p : todo) {
      if (!o.unsafe) check_instance(*e, p);
    }
    rep.order = o.order;
    std::vector<std::function<VerificationReport()>> jobs;
    for (const auto& p : todo) jobs.emplace_back([e, p, &o] { return verify_entry(*e, p, o.order); });
    rep.results = run_jobs(jobs, o.workers);
    sort_results(rep.results);
  }
  std::cout << (o.format == "json" ? to_json(rep, o.timing) : to_table(rep, o.timing));
  const int code = exit_code(rep);
  if (code == kExitUsage) {
    for (const auto& r : rep.results) {
      if (r.status == Status::error) {
        std::cerr << "qmock: " << r.name << ": " << r.error << '\n';
        break;
      }
    }
  }
  return code;
}

int cmd_coeffs(const std::string& fn, int upto, const std::string& format) {
  const MockName name = parse_mock_name(fn);
  if (name != MockName::f && name != MockName::omega && name != MockName::B && name != MockName::nu2) {
    throw Error("unknown function '" + fn + "'");
  }
  const auto table = coefficient_table(name, upto + 1);
  if (format == "csv") {
    for (int n = 0; n <= upto; ++n) std::cout << n << ',' << (*table)[static_cast<std::size_t>(n)].str() << '\n';
  } else if (format == "json") {
    json cs = json::array();
    for (int n = 0; n <= upto; ++n) cs.push_back((*table)[static_cast<std::size_t>(n)].str());
    json out = {{"function", fn}, {"upto", upto}, {"coefficients", cs}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::size_t w = 1;
    for (int n = 0; n <= upto; ++n) w = std::max(w, (*table)[static_cast<std::size_t>(n)].str().size());
    const std::size_t nw = std::to_string(upto).size();
    for (int n = 0; n <= upto; ++n) {
      const std::string ns = std::to_string(n);
      const std::string cs = (*table)[static_cast<std::size_t>(n)].str();
      std::cout << std::string(nw - ns.size(), ' ') << ns << "  " << std::string(w - cs.size(), ' ') << cs << '\n';
    }
  }
  return kExitPass;
}

int cmd_recursion(const std::string& theorem, int upto, const std::string& reading_s, bool values,
                  const std::string& format) {
  std::vector<Recursion> which;
  if (theorem == "all") {
    which = all_recursions();
  } else {
    which.push_back(parse_recursion(theorem));
  }
  const Reading reading = reading_s == "literal" ? Reading::literal : Reading::corrected;
  bool failed = false;
  json out = json::array();
  for (Recursion r : which) {
    json item = {{"theorem", recursion_name(r)}, {"reading", reading_s}, {"upto", upto}};
    json rows = json::array();
    std::optional<int> first;
    std::string fl, fr;
    for (int n = 1; n <= upto; ++n) {
      const Rational l = lhs_recursion(r, n, reading);
      const Rational h = rhs_theorem(r, n, reading);
      if (values) {
        if (format == "json") {
          rows.push_back({{"n", n}, {"lhs", l.str()}, {"rhs", h.str()}});
        } else {
          std::cout << recursion_name(r) << ',' << n << ',' << l.str() << ',' << h.str() << '\n';
        }
      }
      if (!first && l != h) {
        first = n;
        fl = l.str();
        fr = h.str();
      }
    }
    failed = failed || first.has_value();
    item["status"] = first ? "fail" : "pass";
    item["firstMismatch"] = first ? json{{"n", *first}, {"lhs", fl}, {"rhs", fr}} : json(nullptr);
    if (values && format == "json") item["values"] = rows;
    if (format == "json") {
      out.push_back(item);
    } else if (!values) {
      std::cout << recursion_name(r) << "  " << reading_s << "  n<=" << upto << "  " << (first ? "fail" : "pass");
      if (first) std::cout << "  first mismatch at n=" << *first << ": " << fl << " vs " << fr;
      std::cout << '\n';
    }
  }
  if (format == "json") std::cout << (which.size() == 1 ? out[0] : out).dump(2) << '\n';
  return failed ? kExitFail : kExitPass;
}

int cmd_bench(int order, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport rep = run_suite(order, order, workers);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << to_table(rep, true);
  std::cout << "total  " << rep.results.size() << " checks  " << static_cast<long>(ms + 0.5) << " ms  (order "
            << order << ", workers " << workers << ")\n";
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series checks for the mock theta functions f, omega, B, nu2"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List the registered identities");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Verify one identity or the whole suite");
  auto* id_opt = verify->add_option("--identity", vo.identity, "Registry name");
  auto* all_opt = verify->add_flag("--all", vo.all, "Every identity, recursion and lemma");
  id_opt->excludes(all_opt);
  verify->add_option("--order", vo.order, "Compare coefficients of q^n for n < order")->check(CLI::PositiveNumber);
  verify->add_option("--params", vo.params, "k=v,... (must be a listed instance)");
  verify->add_flag("--unsafe-params", vo.unsafe, "Allow parameters outside the instance list");
  verify->add_option("--workers", vo.workers, "Worker threads")->check(CLI::Range(1, 64));
  verify->add_option("--nmax", vo.n_max, "Recursion and lemma bound for --all (default: order)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"json", "table"}));
  verify->add_flag("--timing", vo.timing, "Report elapsed milliseconds per check");

  std::string fn;
  int upto = 20;
  std::string cformat = "csv";
  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table of a mock theta function");
  coeffs->add_option("--function", fn)->required()->check(CLI::IsMember({"f", "omega", "B", "nu2"}));
  coeffs->add_option("--upto", upto, "Last exponent, inclusive")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--format", cformat)->check(CLI::IsMember({"csv", "json", "table"}));

  std::string theorem;
  int rupto = 300;
  std::string reading = "corrected";
  std::string rformat = "table";
  bool values = false;
  auto* rec = app.add_subcommand("recursion", "Check a coefficient recursion for 1 <= n <= upto");
  rec->add_option("--theorem", theorem, "t1id|t9|t919|t9201|t9202|t920c|t920d|corB|all")->required();
  rec->add_option("--upto", rupto)->check(CLI::PositiveNumber);
  rec->add_option("--reading", reading)->check(CLI::IsMember({"corrected", "literal"}));
  rec->add_flag("--values", values, "Print both sides for every n");
  rec->add_option("--format", rformat)->check(CLI::IsMember({"table", "json"}));

  int border = 100;
  int bworkers = 1;
  auto* bench = app.add_subcommand("bench", "Time the full suite");
  bench->add_option("--order", border)->check(CLI::PositiveNumber);
  bench->add_option("--workers", bworkers)->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::cerr << "qmock: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand(verify)) {
      if (!vo.all && vo.identity.empty()) {
        std::cerr << "qmock: verify needs --identity NAME or --all\n";
        return kExitUsage;
      }
      return cmd_verify(vo);
    }
    if (app.got_subcommand(coeffs)) return cmd_coeffs(fn, upto, cformat);
    if (app.got_subcommand(rec)) return cmd_recursion(theorem, rupto, reading, values, rformat);
    if (app.got_subcommand(bench)) return cmd_bench(border, bworkers);
  } catch (const std::exception& e) {
    std::cerr << "qmock: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
