#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altdesc/altpoly.hpp"
#include "altdesc/config.hpp"
#include "altdesc/derivative_polys.hpp"
#include "altdesc/errors.hpp"
#include "altdesc/perm.hpp"
#include "altdesc/signed_perm.hpp"
#include "altdesc/table_cache.hpp"
#include "altdesc/verify.hpp"

namespace {

using namespace altdesc;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kPlainHelp =
    "Output formats:\n"
    "  plain  polynomial families print one row per n, coefficients space-separated\n"
    "         from degree 0 upward; E and S print all values on one line.\n"
    "  csv    header line, then n,k,value rows (n,value for E and S).\n"
    "  json   {\"family\":F,\"rows\":[{\"n\":1,\"coeffs\":[\"1\",\"1\"]},...],\"version\":1};\n"
    "         E and S rows carry \"value\" instead of \"coeffs\".\n"
    "Integers are always written as decimal strings.\n"
    "Families: A B Bminus Bplus P Q (polynomials), E S (integers). P and Q start\n"
    "at n=0, all others at n=1.";

bool is_polynomial(Family f) { return f != Family::E && f != Family::S; }

int first_n(Family f) { return f == Family::P || f == Family::Q ? 0 : 1; }

std::vector<std::string> routes_for(Family f) {
  switch (f) {
    case Family::A: return {"auto", "brute", "comb", "deriv"};
    case Family::B: return {"auto", "brute", "comb", "deriv", "rec"};
    case Family::Bminus:
    case Family::Bplus: return {"auto", "brute", "comb"};
    case Family::P:
    case Family::Q: return {"auto", "rec", "brute"};
    default: return {"auto"};
  }
}

IntPoly compute_poly(Family f, int n, const std::string& route, const EnumerationBounds& bounds) {
  switch (f) {
    case Family::A:
      if (route == "brute") return a_hat_bruteforce(n, bounds);
      if (route == "comb") return a_hat_combinatorial(n, bounds);
      return a_hat_via_p(n);
    case Family::B:
      if (route == "brute") return b_hat_bruteforce(n, bounds);
      if (route == "comb") return b_hat_combinatorial(n, bounds);
      if (route == "rec") return b_hat_recurrence_rows(std::max(n, 1))[static_cast<std::size_t>(n)];
      return b_hat_via_q(n);
    case Family::Bminus:
      if (route == "brute") return b_hat_split_bruteforce(n, bounds).minus;
      return b_hat_minus_via_descent_sets(n);
    case Family::Bplus:
      if (route == "brute") return b_hat_split_bruteforce(n, bounds).plus;
      return b_hat_plus_via_descent_sets(n);
    case Family::P:
      if (route == "brute") return p_via_statistics(n, bounds);
      return p_poly(n);
    case Family::Q:
      if (route == "brute") return q_via_statistics(n, bounds);
      return q_poly(n);
    case Family::E: return IntPoly::constant(euler_number(n));
    case Family::S: return IntPoly::constant(snake_number(n));
  }
  throw UsageError("unknown family");
}

// Cached values are keyed by family and n only, so only the default route
// reads or writes the cache.
std::vector<BigInt> lookup(Family f, int n, const std::string& route,
                           const EnumerationBounds& bounds, TableCache* cache) {
  if (cache && route == "auto") {
    if (auto hit = cache->get(f, n)) return *hit;
  }
  IntPoly p = compute_poly(f, n, route, bounds);
  std::vector<BigInt> values = p.coeffs();
  if (!is_polynomial(f)) values = {p.coeff(0)};
  if (cache && route == "auto") cache->put(f, n, values);
  return values;
}

std::string join(const std::vector<BigInt>& values) {
  if (values.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_decimal(values[i]);
  }
  return out;
}

Family require_family(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

EnumerationBounds resolve_bounds(std::optional<int> a, std::optional<int> b) {
  EnumerationBounds bounds;
  try {
    bounds = EnumerationBounds::from_env();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a) bounds.type_a = *a;
  if (b) bounds.type_b = *b;
  if (bounds.type_a > kMaxEnumerationA || bounds.type_b > kMaxEnumerationB) {
    throw UsageError("enumeration bounds are capped at A=" + std::to_string(kMaxEnumerationA) +
                     ", B=" + std::to_string(kMaxEnumerationB));
  }
  return bounds;
}

std::unique_ptr<TableCache> open_cache(const std::string& path) {
  if (path.empty()) return nullptr;
  auto cache = std::make_unique<TableCache>(path);
  if (cache->invalidated()) {
    std::cerr << "altdesc: cache " << path << " has another format version; rebuilding\n";
  }
  return cache;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct PolyArgs {
  std::string family;
  int n = 0;
  std::string route = "auto";
};

struct TableArgs {
  std::string family;
  int n_max = 0;
  std::string format = "plain";
};

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::string profile = "quick";
  std::string report = "text";
  std::optional<int> n_min;
  std::optional<int> n_max;
  bool no_header = false;
  std::string mutate;
};

int cmd_poly(const PolyArgs& args, const EnumerationBounds& bounds, TableCache* cache) {
  const Family f = require_family(args.family);
  if (!is_polynomial(f)) throw UsageError("poly takes a polynomial family; use table for E and S");
  const auto routes = routes_for(f);
  if (std::find(routes.begin(), routes.end(), args.route) == routes.end()) {
    throw UsageError("route '" + args.route + "' is not available for family " + args.family);
  }
  const int lowest = f == Family::B ? 0 : first_n(f);
  if (args.n < lowest) {
    throw UsageError("n must be >= " + std::to_string(lowest) + " for family " + args.family);
  }
  std::cout << join(lookup(f, args.n, args.route, bounds, cache)) << '\n';
  return 0;
}

int cmd_table(const TableArgs& args, const EnumerationBounds& bounds, TableCache* cache) {
  const Family f = require_family(args.family);
  if (args.format != "plain" && args.format != "csv" && args.format != "json") {
    throw UsageError("unknown format '" + args.format + "'");
  }
  if (args.n_max < 0) throw UsageError("n_max must be >= 0");
  const bool poly = is_polynomial(f);
  std::vector<std::pair<int, std::vector<BigInt>>> rows;
  for (int n = first_n(f); n <= args.n_max; ++n) {
    rows.emplace_back(n, lookup(f, n, "auto", bounds, cache));
  }

  std::ostringstream out;
  if (args.format == "json") {
    nlohmann::json doc;
    doc["family"] = std::string(family_name(f));
    doc["version"] = 1;
    doc["rows"] = nlohmann::json::array();
    for (const auto& [n, values] : rows) {
      nlohmann::json row{{"n", n}};
      if (poly) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& v : values) coeffs.push_back(to_decimal(v));
        row["coeffs"] = std::move(coeffs);
      } else {
        row["value"] = to_decimal(values.front());
      }
      doc["rows"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    out << (poly ? "n,k,value\n" : "n,value\n");
    for (const auto& [n, values] : rows) {
      if (!poly) {
        out << n << ',' << to_decimal(values.front()) << '\n';
        continue;
      }
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << n << ',' << k << ',' << to_decimal(values[k]) << '\n';
      }
    }
  } else if (poly) {
    for (const auto& row : rows) out << join(row.second) << '\n';
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? " " : "") << to_decimal(rows[i].second.front());
    }
    out << '\n';
  }
  std::cout << out.str();
  return 0;
}

verify::Mutation parse_mutation(const std::string& text) {
  // F:n:k[:delta]
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if ((parts.size() != 3 && parts.size() != 4) || (parts[0] != "P" && parts[0] != "Q")) {
    throw UsageError("--mutate expects P:n:k or Q:n:k[:delta], got '" + text + "'");
  }
  try {
    verify::Mutation m;
    m.family = parts[0][0];
    m.n = std::stoi(parts[1]);
    m.k = std::stoi(parts[2]);
    if (parts.size() == 4) m.delta = std::stol(parts[3]);
    if (m.n < 0 || m.k < 0) throw std::invalid_argument("negative");
    return m;
  } catch (const std::logic_error&) {
    throw UsageError("--mutate expects non-negative integers, got '" + text + "'");
  }
}

int cmd_verify(const VerifyArgs& args, const EnumerationBounds& bounds, TableCache* cache) {
  const auto profile = verify::parse_profile(args.profile);
  if (!profile) throw UsageError("unknown profile '" + args.profile + "'");
  if (args.report != "json" && args.report != "text") {
    throw UsageError("unknown report format '" + args.report + "'");
  }
  if (args.all == !args.ids.empty()) throw UsageError("give identity ids or --all, not both");
  for (const auto& id : args.ids) {
    if (!verify::in_catalog(id)) throw UsageError("unknown identity check '" + id + "'");
  }

  verify::Context ctx;
  ctx.bounds = bounds;
  ctx.cache = cache;
  if (!args.mutate.empty()) ctx.mutation = parse_mutation(args.mutate);

  const std::vector<std::string>& ids = args.all ? verify::catalog() : args.ids;
  std::vector<verify::IdentityCheck> results;
  for (const auto& id : ids) {
    verify::CheckParams params = verify::default_params(id, *profile);
    if (args.n_min) params.n_min = *args.n_min;
    if (args.n_max) {
      params.n_max = *args.n_max;
      if (params.kind == verify::ParamKind::series_order) params.x_order = verify::x_order_for(*args.n_max);
    }
    if (params.n_max < params.n_min || params.n_max < 0) {
      throw UsageError(id + ": --n-min exceeds --n-max");
    }
    results.push_back(verify::run(id, params, ctx));
  }

  verify::ReportMeta meta{args.profile, bounds, std::nullopt};
  if (!args.no_header) meta.generated = utc_timestamp();
  if (args.report == "json") {
    std::cout << verify::report_json(results, meta).dump(2) << '\n';
  } else {
    std::cout << verify::report_text(results, meta);
  }
  return verify::all_passed(results) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating descent polynomials of types A and B: exact computation and "
               "identity verification."};
  app.footer(kPlainHelp);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> bound_a;
  std::optional<int> bound_b;
  std::string cache_path;
  app.add_option("--bound-a", bound_a, "Type A enumeration bound (overrides ALTDESC_ENUM_BOUND_A)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bound-b", bound_b, "Type B enumeration bound (overrides ALTDESC_ENUM_BOUND_B)")
      ->check(CLI::NonNegativeNumber);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Print one polynomial, coefficients low to high");
  poly_cmd->add_option("family", poly.family, "A | B | Bminus | Bplus | P | Q")->required();
  poly_cmd->add_option("n", poly.n, "Index n")->required();
  poly_cmd->add_option("--route", poly.route, "auto | brute | comb | deriv | rec");
  poly_cmd->add_option("--cache", cache_path, "Table cache file (default route only)");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a table of a family up to n_max");
  table_cmd->add_option("family", table.family, "A | B | Bminus | Bplus | P | Q | E | S")->required();
  table_cmd->add_option("n_max", table.n_max, "Largest n")->required();
  table_cmd->add_option("--format", table.format, "plain | csv | json");
  table_cmd->add_option("--cache", cache_path, "Table cache file");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks from the catalog");
  verify_cmd->add_option("ids", ver.ids, "Identity ids");
  verify_cmd->add_flag("--all", ver.all, "Run the whole catalog");
  verify_cmd->add_option("--profile", ver.profile, "quick | full");
  verify_cmd->add_option("--report", ver.report, "text | json");
  verify_cmd->add_option("--cache", cache_path, "Table cache file for P_n and Q_n");
  verify_cmd->add_option("--n-min", ver.n_min, "Override the smallest n");
  verify_cmd->add_option("--n-max", ver.n_max, "Override the largest n (series order for EGF checks)");
  verify_cmd->add_flag("--no-header", ver.no_header, "Omit the timestamp header");
  verify_cmd->add_option("--mutate", ver.mutate, "Perturb a coefficient: P:n:k or Q:n:k[:delta]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const EnumerationBounds bounds = resolve_bounds(bound_a, bound_b);
    auto cache = open_cache(cache_path);
    int code = 0;
    if (*poly_cmd) code = cmd_poly(poly, bounds, cache.get());
    else if (*table_cmd) code = cmd_table(table, bounds, cache.get());
    else code = cmd_verify(ver, bounds, cache.get());
    if (cache) cache->save();
    return code;
  } catch (const UsageError& e) {
    std::cerr << "altdesc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "altdesc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "altdesc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExactnessError& e) {
    std::cerr << "altdesc: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "altdesc: " << e.what() << '\n';
    return kExitFail;
  }
}
