#pragma once

// Named arrangements, suite dispatch, random arrangements and the combined
// analysis document used by the command line tool.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/report.hpp"

namespace linarr {

enum class Origin { published, computed };

std::string to_string(Origin o);

/// Known invariant of a catalog arrangement. Keys: tau, free, d1, d2, mdr,
/// N, N0, N0_min, gens (comma list), dim<k>.
struct ExpectedValue {
  std::string key;
  std::string value;
  Origin origin = Origin::computed;
};

struct CatalogEntry {
  std::string name;
  std::vector<int> defaults;  // parameter values used when none are given
  std::string description;
  std::function<Arrangement(const std::vector<int>&)> builder;
  std::function<std::vector<ExpectedValue>(const std::vector<int>&)> expected;
  bool external = false;  // no coordinates shipped
};

const std::vector<CatalogEntry>& catalog();

struct CatalogName {
  std::string name;
  std::vector<int> params;
};

/// "NAME" or "NAME(a,b,...)". Throws ParseError.
CatalogName parse_catalog_name(const std::string& text);
const CatalogEntry& catalog_entry(const std::string& name);
/// Builds a catalog arrangement; missing parameters take their defaults.
Arrangement build_catalog(const std::string& text);
std::vector<ExpectedValue> catalog_expected(const std::string& text);

/// "catalog:NAME(...)" or a path to an arrangement file.
Arrangement load_target(const std::string& target);

/// Asserts every expected value of a catalog entry.
Report check_expected(const std::string& text, int max_degree = -1);

struct VerifyOptions {
  int max_degree = -1;  // syzygy module degree bound, -1 for the default
};

/// Known suite ids, "full" last.
const std::vector<std::string>& suite_ids();

/// Runs one suite. Throws std::invalid_argument for an unknown id. "full"
/// runs every suite; suites whose hypotheses fail report that status.
Report verify(const Arrangement& a, const std::string& suite, const VerifyOptions& opt = {});

/// Pair with equal intersection lattices and different D_0(f)_5; the
/// coordinates have to be supplied by the user.
Report verify_ziegler_pair(const Arrangement& a, const Arrangement& b);

/// d distinct lines over Q with coefficients in [-max_coeff, max_coeff],
/// deterministic in the seed. Throws MathError for d < 3.
Arrangement random_arrangement(std::uint64_t seed, int d, int max_coeff);

/// Lattice, tau, syzygy profile, Hilbert function of the Jacobian module,
/// freeness, local derivations, g_p table, covers and the cover conjecture.
Report analyze(const Arrangement& a, const VerifyOptions& opt = {});

}  // namespace linarr
