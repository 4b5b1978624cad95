#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

// Thrown for semantically invalid arguments that parse fine.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  bool json = false;
  bool exact = false;
};

struct BispinorOptions {
  std::string type = "weyl";
  int index = 1;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<double> energy;
};

struct BraidOptions {
  std::string word;
  std::string init = "00";
  std::vector<int> inverse;  // 1-based steps whose exponent is flipped
};

int cmd_verify(const GlobalOptions& g, const std::string& suite, std::ostream& out, std::ostream& err);
int cmd_tables(const GlobalOptions& g, bool csv, std::ostream& out);
int cmd_bispinor(const GlobalOptions& g, const BispinorOptions& o, std::ostream& out);
int cmd_braid(const GlobalOptions& g, const BraidOptions& o, std::ostream& out);

}  // namespace cli
