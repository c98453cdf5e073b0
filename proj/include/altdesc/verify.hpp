#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "altdesc/bigint.hpp"
#include "altdesc/config.hpp"
#include "altdesc/int_poly.hpp"

namespace altdesc {

class TableCache;

namespace verify {

enum class Status { pass, fail, skipped };
enum class Profile { quick, full };

std::string_view to_string(Status s);
std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view s);

/// What a check's parameters range over.
enum class ParamKind {
  n_range,       // n_min..n_max
  series_order,  // z-order n_max; x-truncation x_order
};

struct CheckParams {
  ParamKind kind = ParamKind::n_range;
  int n_min = 1;
  int n_max = 1;
  int x_order = 0;  // series checks only
};

/// Smallest failing instance: n (or the power of z) and the first
/// differing coefficient position (x-degree, subset mask, permutation rank).
struct Witness {
  int n = 0;
  long long position = 0;
  std::string detail;
};

struct IdentityCheck {
  std::string id;
  CheckParams params;
  Status status = Status::pass;
  std::optional<Witness> witness;  // set iff status == fail
  std::string note;
};

/// Perturbs one coefficient of P_n or Q_n wherever a check reads it.
struct Mutation {
  char family = 'Q';  // 'P' or 'Q'
  int n = 0;
  int k = 0;
  long delta = 1;
};

/// Shared inputs of a run. P_n and Q_n are read through p() / q() so a
/// mutation or a cache file applies to every check uniformly.
class Context {
 public:
  EnumerationBounds bounds;
  std::optional<Mutation> mutation;
  TableCache* cache = nullptr;

  IntPoly p(int n) const;
  IntPoly q(int n) const;

 private:
  IntPoly derivative_poly(char family, int n) const;
};

/// Catalog ids in report order.
const std::vector<std::string>& catalog();
bool in_catalog(std::string_view id);

/// Enumeration ranges per profile: quick = (A 6, B 5, series 8),
/// full = (A 8, B 7, series 12).
CheckParams default_params(std::string_view id, Profile profile);

/// Runs one identity. Ranges past ctx.bounds are reported as skipped, never
/// truncated. Throws std::invalid_argument for an unknown id.
IdentityCheck run(std::string_view id, const CheckParams& params, const Context& ctx);

std::vector<IdentityCheck> run_all(Profile profile, const Context& ctx);

/// x-truncation used for a series check of z-order n: the largest x-degree
/// at z^n is n+1 (P_n), so two extra degrees also show vanishing terms.
inline int x_order_for(int order) { return order + 2; }

struct ReportMeta {
  std::string profile;
  EnumerationBounds bounds;
  std::optional<std::string> generated;  // header timestamp; omitted with --no-header
};

nlohmann::json report_json(const std::vector<IdentityCheck>& checks, const ReportMeta& meta);
std::string report_text(const std::vector<IdentityCheck>& checks, const ReportMeta& meta);

bool all_passed(const std::vector<IdentityCheck>& checks);

}  // namespace verify
}  // namespace altdesc
