#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace tracecert {

/// Outcome of one machine-checked claim. A failed report always names a
/// concrete offending entry or monomial in `witness`.
struct ProofReport {
  std::string claim;
  bool verified = false;
  nlohmann::json witness = nlohmann::json::object();

  static ProofReport pass(std::string claim, nlohmann::json details = nlohmann::json::object()) {
    return {std::move(claim), true, std::move(details)};
  }
  static ProofReport fail(std::string claim, nlohmann::json witness) {
    return {std::move(claim), false, std::move(witness)};
  }

  nlohmann::json to_json() const {
    return {{"claim", claim}, {"status", verified ? "verified" : "failed"}, {"witness", witness}};
  }
};

}  // namespace tracecert
