#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace quotvol::cli {

// Schema violation in a job document. `pointer` is a JSON pointer to the
// offending field ("" for the document root). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct RunOptions {
  unsigned threads = 1;
  bool timing = false;  // adds "meta.wall_time_ms", which breaks byte-identical output
};

/// Validates and executes one job document (schema 1). Commands:
/// abelian-volume, acyclic-volume, quot-volume, grothendieck-degree,
/// verify, sweep. Throws InputError or quotvol::ComputationError.
nlohmann::json run_job(const nlohmann::json& spec, const RunOptions& options = {});

/// Renders a result document as "json", "latex" or "plain".
std::string render(const nlohmann::json& result, std::string_view format);

}  // namespace quotvol::cli
