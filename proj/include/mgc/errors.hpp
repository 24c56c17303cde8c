#pragma once

#include <stdexcept>
#include <string>

namespace mgc {

// Error taxonomy mirrors the CLI exit statuses:
//   InvalidInput -> 1, SemanticMismatch -> 2, IoError -> 3, LimitError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A single input is malformed (parse failures, invariant violations inside
// one file or one operation argument).
struct InvalidInput : Error {
  using Error::Error;
};

// Two inputs disagree (weight dimension vs. edge-type count, clustering node
// set vs. graph node set).
struct SemanticMismatch : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// A configured budget or cap was exceeded.
struct LimitError : Error {
  using Error::Error;
};

}  // namespace mgc
