#pragma once

#include <stdexcept>
#include <string>

namespace hdbscan {

/// Malformed input data: files, matrices, labelings.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside run_pipeline, prefixed with the stage that raised it.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(stage) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hdbscan
