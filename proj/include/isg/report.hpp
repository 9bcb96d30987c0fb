#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::string subject;
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::string norm_csv;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  const CheckResult* find(std::string_view name) const;
  /// Deterministic text rendering.
  std::string render() const;
};

enum class Suite { kUniversal, kTight, kExtension, kAlgebra, kAll };

/// Errors: kUnknownName.
Suite parse_suite(std::string_view name);
const char* suite_name(Suite s);

struct SuiteOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0x15c0ffee;
};

VerificationReport run_suite(const std::string& subject, std::shared_ptr<const InverseSemigroup> s,
                             Suite suite, const SuiteOptions& options = {});

}  // namespace isg
