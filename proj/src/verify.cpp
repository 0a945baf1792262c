#include "qmock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qmock/divisor.hpp"
#include "qmock/error.hpp"
#include "qmock/recursion.hpp"

namespace qmock {

std::string params_str(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ',';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

Params parse_params(std::string_view s) {
  Params out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view item = s.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw Error("malformed parameter '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string val(item.substr(eq + 1));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (val.empty() || used != val.size()) throw Error("parameter '" + key + "' needs an integer value");
    if (!out.emplace(key, v).second) throw Error("parameter '" + key + "' given twice");
    pos = end + 1;
  }
  return out;
}

std::string_view status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

const IdentityEntry* find_identity(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Comparison compare_sides(const std::function<PolarSum(int)>& lhs,
                         const std::function<PolarSum(int)>& rhs, int order) {
  if (order < 1) throw Error("order must be positive");
  for (int pad : {8, 32, 96, 256}) {
    const int w = order + pad;
    const PolarSum l = lhs(w);
    const PolarSum r = rhs(w);
    const LaurentPoly c = lp_normalized(lp_lcm(l.clearing(), r.clearing()));
    const QSeries a = l.cleared(c, order);
    const QSeries b = r.cleared(c, order);
    if (a.order() < order || b.order() < order) continue;
    return {c, first_mismatch(a, b)};
  }
  throw Error("window too short after maximal padding");
}

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport blank_report(std::string name, Params params, int order) {
  VerificationReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.order = order;
  return r;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

VerificationReport verify_entry(const IdentityEntry& e, const Params& params, int order) {
  VerificationReport rep = blank_report(e.name, params, order);
  const auto t0 = Clock::now();
  try {
    const Comparison c = compare_sides([&](int w) { return e.lhs(params, w); },
                                       [&](int w) { return e.rhs(params, w); }, order);
    if (e.clearing && !(lp_normalized(*e.clearing) == c.clearing)) {
      rep.status = Status::error;
      rep.error = "clearing multiplier " + c.clearing.str() + ", expected " + lp_normalized(*e.clearing).str();
    } else if (c.mismatch) {
      rep.status = Status::fail;
      rep.mismatch = c.mismatch;
    }
  } catch (const std::exception& ex) {
    rep.status = Status::error;
    rep.error = ex.what();
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

void check_instance(const IdentityEntry& e, const Params& params) {
  if (std::find(e.instances.begin(), e.instances.end(), params) != e.instances.end()) return;
  std::string allowed;
  for (const auto& p : e.instances) allowed += (allowed.empty() ? "" : " | ") + (p.empty() ? "(none)" : params_str(p));
  throw Error("parameters '" + params_str(params) + "' not in the instance list of " + e.name + ": " + allowed);
}

VerificationReport verify_identity(std::string_view name, const Params& params, int order, bool unsafe) {
  const IdentityEntry* e = find_identity(name);
  if (!e) throw Error("unknown identity '" + std::string(name) + "'");
  if (!unsafe) check_instance(*e, params);
  return verify_entry(*e, params, order);
}

VerificationReport verify_gls(const GlsInstance& inst, int order) {
  VerificationReport rep = blank_report("gls", {}, order);
  const auto t0 = Clock::now();
  try {
    validate_gls(inst);
    const Comparison c = compare_sides([&](int w) { return build_gls_lhs(inst, w); },
                                       [&](int w) { return build_gls_rhs(inst, w); }, order);
    if (c.mismatch) {
      rep.status = Status::fail;
      rep.mismatch = c.mismatch;
    }
  } catch (const std::exception& ex) {
    rep.status = Status::error;
    rep.error = ex.what();
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

bool SuiteReport::any(Status s) const {
  return std::any_of(results.begin(), results.end(), [s](const auto& r) { return r.status == s; });
}

void sort_results(std::vector<VerificationReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) {
    return a.name != b.name ? a.name < b.name : a.params < b.params;
  });
}

std::vector<VerificationReport> run_jobs(const std::vector<std::function<VerificationReport()>>& jobs,
                                         int workers) {
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  const int n = std::clamp(workers, 1, 64);
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

VerificationReport recursion_job(Recursion r, int n_max) {
  VerificationReport rep = blank_report("recursion:" + std::string(recursion_name(r)), {}, n_max);
  const auto t0 = Clock::now();
  try {
    for (int n = 1; n <= n_max; ++n) {
      const Rational l = lhs_recursion(r, n);
      const Rational h = rhs_theorem(r, n);
      if (l != h) {
        rep.status = Status::fail;
        rep.mismatch = Mismatch{n, LaurentPoly(l), LaurentPoly(h)};
        break;
      }
    }
  } catch (const std::exception& ex) {
    rep.status = Status::error;
    rep.error = ex.what();
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport lemma_job(Lemma l, int n_max) {
  VerificationReport rep = blank_report("lemma:" + std::string(lemma_name(l)), {}, n_max);
  const auto t0 = Clock::now();
  try {
    for (int n = 1; n <= n_max; ++n) {
      if (!lemma_check(l, n)) {
        rep.status = Status::fail;
        rep.mismatch = Mismatch{n, LaurentPoly(0), LaurentPoly(0)};
        break;
      }
    }
  } catch (const std::exception& ex) {
    rep.status = Status::error;
    rep.error = ex.what();
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

SuiteReport run_suite(int order, int n_max, int workers) {
  std::vector<std::function<VerificationReport()>> jobs;
  for (const auto& e : registry()) {
    const int ord = e.bivariate() ? std::min(order, kBivariateOrderCap) : order;
    for (const auto& p : e.instances) {
      jobs.emplace_back([&e, p, ord] { return verify_entry(e, p, ord); });
    }
  }
  if (n_max >= 1) {
    for (Recursion r : all_recursions()) jobs.emplace_back([r, n_max] { return recursion_job(r, n_max); });
    for (Lemma l : all_lemmas()) jobs.emplace_back([l, n_max] { return lemma_job(l, n_max); });
  }
  // Longest-first would balance better, but submission order is already
  // roughly that: products with large windows come first in the registry.
  SuiteReport rep{order, n_max, run_jobs(jobs, workers)};
  sort_results(rep.results);
  return rep;
}

std::string to_json(const SuiteReport& r, bool with_timing) {
  using nlohmann::json;
  json out = json::object();
  out["order"] = r.order ? json(*r.order) : json(nullptr);
  out["nMax"] = r.n_max ? json(*r.n_max) : json(nullptr);
  json results = json::array();
  for (const auto& v : r.results) {
    json item = json::object();
    item["name"] = v.name;
    json params = json::object();
    for (const auto& [k, val] : v.params) params[k] = val;
    item["params"] = params;
    item["status"] = std::string(status_str(v.status));
    if (v.mismatch) {
      item["firstMismatch"] = {{"n", v.mismatch->n}, {"lhs", v.mismatch->lhs.str()}, {"rhs", v.mismatch->rhs.str()}};
    } else {
      item["firstMismatch"] = nullptr;
    }
    item["elapsedMs"] = with_timing ? json(static_cast<long>(v.elapsed_ms + 0.5)) : json(nullptr);
    if (v.status == Status::error) item["error"] = v.error;
    results.push_back(std::move(item));
  }
  out["results"] = std::move(results);
  return out.dump(2) + "\n";
}

std::string to_table(const SuiteReport& r, bool with_timing) {
  std::ostringstream os;
  std::size_t w = 4;
  for (const auto& v : r.results) w = std::max(w, v.name.size() + (v.params.empty() ? 0 : params_str(v.params).size() + 2));
  for (const auto& v : r.results) {
    std::string label = v.name;
    if (!v.params.empty()) label += "[" + params_str(v.params) + "]";
    os << label << std::string(w + 2 - label.size(), ' ') << status_str(v.status);
    if (with_timing) os << "  " << static_cast<long>(v.elapsed_ms + 0.5) << " ms";
    if (v.mismatch) {
      os << "  first mismatch at n=" << v.mismatch->n << ": " << v.mismatch->lhs.str() << " vs " << v.mismatch->rhs.str();
    }
    if (v.status == Status::error) os << "  " << v.error;
    os << '\n';
  }
  return os.str();
}

}  // namespace qmock
