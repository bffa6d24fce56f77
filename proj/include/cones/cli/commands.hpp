#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cones/decision.hpp"

namespace cones::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kUnknown = 3 };

// Ordered output of one command: free text lines and asserted checks.
class Report {
 public:
  void note(std::string line);
  void check(std::string name, std::string subject, Decision verdict,
             double seconds = 0);

  // Worst verdict wins: any False gives kFailed, else any Unknown gives
  // kUnknown.
  int exit_code() const;
  void print(std::ostream& out, bool timing) const;

 private:
  struct Entry {
    bool is_check = false;
    std::string text;  // note text, or the check name
    std::string subject;
    Decision verdict = Decision::yes();
    double seconds = 0;
  };
  std::vector<Entry> entries_;
};

// Runs one command line (without the program name) and returns its exit
// code.  Reports go to `out`, usage and parse errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cones::cli
