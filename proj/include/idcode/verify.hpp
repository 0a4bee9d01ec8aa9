#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace idcode {

struct VerifyParams {
  int max_n = 4;
  int samples = 1000;
  std::uint64_t seed = 1;
  int workers = 1;
  bool oriented = false;
};

struct VerifyFailure {
  std::uint64_t index = 0;  // reproduces the instance via the enumerators
  std::string instance;     // serialized instance
  std::string expected;
  std::string actual;
};

// At most this many failure records are kept (in index order);
// failures_total always counts all of them.
inline constexpr std::size_t kMaxRecordedFailures = 100;

struct VerifyReport {
  std::string theorem_id;
  VerifyParams params;
  std::uint64_t instances_checked = 0;
  std::uint64_t failures_total = 0;
  std::vector<VerifyFailure> failures;
  std::chrono::milliseconds elapsed{0};
  bool passed() const { return failures_total == 0; }
};

std::vector<std::string> known_theorems();

// Runs the sweep for one theorem id:
//   gamma-bounds      separating codes fit in n-1 vertices; the identifying
//                     minimum exceeds the separating minimum by at most one
//   extremal-digraphs the identifying minimum equals n exactly on the
//                     closure family
//   prop4             gamma_id = n iff gamma_s = n-1 and every minimum
//                     separating code leaves an undominated vertex
//   symmetric-arc     a symmetric arc pair forces gamma_id <= n-1
//   bondy             every square distinct system has a deletable element
//   extremal-systems  direct, characterized and constructive extremality
//                     checks agree, certificates validate
//   prop6             reduction keeping traces nonempty and distinct
//   induction-bound   gamma_id(D) <= gamma_id(D-S) + |S|
//
// Digraph sweeps cover n = 1..max_n exhaustively (all digraphs, or oriented
// ones with params.oriented). System sweeps cover exactly the systems of
// max_n subsets of a max_n-set. Sampled sweeps (prop6, induction-bound) draw
// `samples` seeded instances. Reports are deterministic for fixed parameters;
// the worker count changes timing only.
VerifyReport verify(const std::string& theorem_id, const VerifyParams& params);

// Human-readable report, includes elapsed time.
std::string report_to_text(const VerifyReport& r);

// Machine-readable report; timing is omitted so identical parameters produce
// byte-identical output.
std::string report_to_json(const VerifyReport& r);

namespace detail {

// Checks one instance by index; nullopt means pass. Must be safe to call
// concurrently from multiple workers.
using InstanceCheck = std::function<std::optional<VerifyFailure>(std::uint64_t)>;

// Partitions [0, count) into contiguous per-worker ranges and merges the
// failure lists in index order. Exposed for tests.
void run_indexed(std::uint64_t count, int workers, const InstanceCheck& check,
                 std::vector<VerifyFailure>& failures, std::uint64_t& failures_total);

}  // namespace detail

}  // namespace idcode
