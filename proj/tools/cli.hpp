#ifndef LMONOID_TOOLS_CLI_HPP
#define LMONOID_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lmonoid::cli {

  // Exit codes.
  inline constexpr int ok          = 0;
  inline constexpr int answer_no   = 1;
  inline constexpr int usage_error = 2;
  inline constexpr int cap_error   = 3;

  //! args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace lmonoid::cli

#endif  // LMONOID_TOOLS_CLI_HPP
