#pragma once

#include <stdexcept>
#include <string>

namespace telepathy {

// Caller passed arguments outside an operation's domain.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Erdos-Ko-Rado precondition n >= (k-t+1)(t+1) does not hold.
struct ekr_inapplicable : usage_error {
  using usage_error::usage_error;
};

// Question pair is neither equal nor at distance N/2.
struct promise_violation : std::domain_error {
  using std::domain_error::domain_error;
};

// Search exceeded its vertex or node budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant (e.g. state normalization) was found broken.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace telepathy

namespace telepathy {

// The proof pipeline could not establish its conclusion; `section` names the
// offending certificate section.
struct pipeline_error : std::runtime_error {
  pipeline_error(std::string section, const std::string& what)
      : std::runtime_error(section + ": " + what), section(std::move(section)) {}
  std::string section;
};

}  // namespace telepathy
