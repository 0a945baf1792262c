#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmock/gls.hpp"
#include "qmock/polar.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

using Params = std::map<std::string, int>;

/// "l=1,j=-3" (keys in map order); empty for no parameters.
std::string params_str(const Params& p);
/// Parses "k=v,k=v"; throws on malformed input or repeated keys.
Params parse_params(std::string_view s);

using SideBuilder = std::function<PolarSum(const Params&, int order)>;

struct IdentityEntry {
  std::string name;
  std::string summary;
  std::vector<Params> instances;  // one empty map for unparameterized entries
  SideBuilder lhs;
  SideBuilder rhs;
  std::optional<LaurentPoly> clearing;  // expected multiplier, when pinned
  std::string symbol;                   // what x stands for; empty if none
  [[nodiscard]] bool bivariate() const { return !symbol.empty(); }
};

/// Highest order a bivariate entry is checked at inside the suite.
inline constexpr int kBivariateOrderCap = 120;

const std::vector<IdentityEntry>& registry();
/// nullptr when unknown.
const IdentityEntry* find_identity(std::string_view name);

enum class Status { pass, fail, error };
std::string_view status_str(Status s);

struct VerificationReport {
  std::string name;
  Params params;
  int order = 0;
  Status status = Status::pass;
  std::optional<Mismatch> mismatch;
  std::string error;
  double elapsed_ms = 0;
};

/// Result of comparing two cleared sides below q^order.
struct Comparison {
  LaurentPoly clearing;
  std::optional<Mismatch> mismatch;
};

/// Builds both sides with some headroom, multiplies by the common clearing
/// polynomial and compares every coefficient below q^order. The headroom
/// grows until both cleared sides reach the order.
Comparison compare_sides(const std::function<PolarSum(int)>& lhs,
                         const std::function<PolarSum(int)>& rhs, int order);

/// Throws unless params is one of the entry's listed instances.
void check_instance(const IdentityEntry& e, const Params& params);

/// Throws "unknown identity" or, unless unsafe, on params outside the
/// entry's instance list. Construction errors become status error.
VerificationReport verify_identity(std::string_view name, const Params& params, int order,
                                   bool unsafe = false);
VerificationReport verify_entry(const IdentityEntry& e, const Params& params, int order);
VerificationReport verify_gls(const GlsInstance& inst, int order);

struct SuiteReport {
  std::optional<int> order;
  std::optional<int> n_max;
  std::vector<VerificationReport> results;

  [[nodiscard]] bool any(Status s) const;
};

/// Every registry instance (bivariate ones capped), every recursion for
/// n <= n_max and every lemma for n <= n_max. Results are sorted by name and
/// params, so the report does not depend on the worker count.
SuiteReport run_suite(int order, int n_max, int workers);

/// Runs jobs on a bounded pool; result i belongs to job i.
std::vector<VerificationReport> run_jobs(const std::vector<std::function<VerificationReport()>>& jobs,
                                         int workers);

void sort_results(std::vector<VerificationReport>& rs);

/// {"order","nMax","results":[{"name","params","status","firstMismatch","elapsedMs"}]}
/// elapsedMs is null unless with_timing is set.
std::string to_json(const SuiteReport& r, bool with_timing = false);
std::string to_table(const SuiteReport& r, bool with_timing = false);

}  // namespace qmock
