#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psl4cd {

enum class Status { pass, fail, vacuous };

std::string status_name(Status status);

struct Witness {
  std::string label;
  std::vector<std::string> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one verifier at one q. A fail carries at least one witness
/// labelled as a counterexample.
struct CheckReport {
  std::string id;
  std::uint64_t q = 0;
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  std::string details;

  void witness(std::string label, std::vector<std::string> values) {
    witnesses.push_back({std::move(label), std::move(values)});
  }
  /// Records a counterexample and marks the report failed.
  void fail(std::string label, std::vector<std::string> values) {
    status = Status::fail;
    witness("counterexample: " + std::move(label), std::move(values));
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace psl4cd
