#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mvfilter/filter.hpp"
#include "mvfilter/mv_algebra.hpp"

namespace mvfilter {

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s);

/// Finite statements run against an explicit algebra; dense ones against the
/// rational chain through the cut-filter closed forms and oracle.
enum class Scope { Finite, Dense };
std::string_view to_string(Scope s);

struct StatementInfo {
  std::string id;
  Scope scope;
  std::string formula;
};

/// Every checkable statement, in report order. Ids are unique.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo* find_statement(std::string_view id);

struct StatementResult {
  std::string id;
  std::string formula;
  Status status = Status::Skip;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing instance
  std::string note;     // why skipped, or extra context
  double seconds = 0;
};

struct VerifyOptions {
  std::vector<std::string> only;  // empty: every statement
  std::uint64_t seed = 42;
  std::size_t max_carrier = default_carrier_cap();
  std::size_t dense_pairs = 10000;
  std::size_t dense_triples = 1000;
  int max_denominator = 1000;
};

struct VerificationReport {
  std::string target;  // algebra name or "dense"
  std::size_t carrier_size = 0;
  std::uint64_t seed = 0;
  std::vector<StatementResult> results;
  double seconds = 0;

  std::size_t count(Status s) const;
  bool has_failures() const { return count(Status::Fail) > 0; }
  const StatementResult* find(std::string_view id) const;
};

/// Runs the selected statements on a finite algebra. Dense statements are
/// reported as skipped. Throws InvalidArgument for an unknown id and
/// ResourceLimit when the carrier exceeds options.max_carrier.
VerificationReport verify_algebra(const MvAlgebra& a, const VerifyOptions& options);

/// Runs the selected statements on the rational chain; finite statements are
/// reported as skipped.
VerificationReport verify_dense(const VerifyOptions& options);

/// Ł2..Ł8, Ł2×Ł3, Ł3×Ł3 and Ł2×Ł2×Ł2.
std::vector<MvAlgebra> reference_algebras();

}  // namespace mvfilter
