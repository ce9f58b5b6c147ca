#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loopdual/loop_oracle.hpp"

namespace loopdual {

inline constexpr int kSchemaVersion = 1;
/// Part of every cache key; bump whenever a cached document could change.
inline constexpr const char* kCacheVersion = "loopdual-cache-1";

enum ExitCode : int { kExitPass = 0, kExitError = 1, kExitMismatch = 2, kExitBudget = 3, kExitBadInput = 4 };

struct RunConfig {
  std::string preset;
  std::string datum_file;
  /// Empty: Q for centralizer, Q and every F_p with p <= 13 for check-all.
  std::vector<std::string> rings;
  int truncation = 40;
  std::optional<std::size_t> budget;
  std::string out;
  std::string cache_dir;
  bool inject_sign_error = false;
  /// check-all only: presets of rank above this are skipped.
  int max_rank = 2;
  std::size_t jobs = 1;

  /// Throws InvalidInput on a bad truncation, ring or datum source.
  void validate() const;
  RootDatum load_datum() const;
  std::vector<Ring> parsed_rings() const;
};

std::string presentation_document(const CentralizerPresentation& pres);
std::string verdict_document(const Verdict& v);

/// FNV-1a, used for content-addressed cache keys.
std::uint64_t fnv1a(const std::string& text);

/// Result of one (datum, ring) centralizer job, possibly served from the cache.
struct CentralizerRun {
  std::string presentation;  // JSON document
  Verdict verdict;
  std::vector<std::int64_t> series;
  bool from_cache = false;
};

/// Runs present_centralizer and compare_report (no flatness) for one ring,
/// reading and writing `cache_dir` when it is non-empty.
CentralizerRun run_centralizer(const RootDatum& d, const Ring& ring, int truncation,
                               const GroebnerOptions& options, const std::string& cache_dir);

/// Commands write their structured output to `out` and return an ExitCode.
int cmd_datum_info(const RunConfig& cfg, std::ostream& out);
int cmd_centralizer(const RunConfig& cfg, std::ostream& out);
/// One summary line per check on `out`; the JSON document goes to cfg.out when set.
int cmd_check_all(const RunConfig& cfg, std::ostream& out);

/// Maps library exceptions to exit codes and prints a diagnostic to `err`.
int run_guarded(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace loopdual
