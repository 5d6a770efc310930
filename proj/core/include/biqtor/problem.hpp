#pragma once

#include <cstdint>
#include <string>

#include "biqtor/biquotient.hpp"
#include "biqtor/diag_tor.hpp"
#include "biqtor/root_datum.hpp"

namespace biqtor {

inline constexpr int kSchemaVersion = 1;

/// A subgroup of the maximal torus, given either by cocharacters (rows span
/// the subtorus) or by a k-lattice basis (characters vanishing on it).
struct SubgroupInput {
  enum class Kind { Cocharacters, KBasis };
  Kind kind = Kind::KBasis;
  IntMatrix matrix;  // possibly 0 x r

  TorusSubgroup realize(std::size_t ambient_rank) const;
};

struct ProblemOptions {
  FieldTag field = FieldTag::rational();
  std::uint64_t seed = 0;
  GroebnerBudget budget{};
  int retries_per_window = 64;
  int window_doublings = 10;
  bool certify = false;
};

/// The parsed problem statement: a group, two subgroups, and options.
struct BiquotientSpec {
  int schema_version = kSchemaVersion;
  GroupSpec group;
  SubgroupInput subgroup1;
  SubgroupInput subgroup2;
  ProblemOptions options;
};

enum class Command { Check, Tor, KTheory, Enlarge };

Command parse_command(const std::string& name);
std::string to_string(Command c);

/// Parses and validates a JSON problem spec; throws std::invalid_argument
/// with a description on malformed input.
BiquotientSpec parse_spec(const std::string& json_text);

/// Canonical JSON for the spec (used to echo the problem in reports).
std::string spec_to_json(const BiquotientSpec& spec);

/// Exit codes: 0 success (for tor: consistent or vacuous), 1 usage/validation
/// error, 2 resource budget exhausted (inconclusive), 3 theorem inconsistency
/// (implementation bug; the report carries a minimized witness).
struct RunResult {
  int exit_code = 0;
  std::string report_json;  // byte-identical across runs for fixed spec/seed/budgets
};

RunResult run_command(Command cmd, const BiquotientSpec& spec);

}  // namespace biqtor
