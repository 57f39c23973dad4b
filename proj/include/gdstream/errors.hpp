#pragma once

#include <stdexcept>
#include <string>

namespace gdstream {

// Root of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (edge lists, dataset bundles,
// descriptor files).
class data_error : public error {
 public:
  using error::error;
};

// Graph too large for a brute-force routine.
class size_error : public error {
 public:
  using error::error;
};

// Budget cannot hold the edges a pattern needs.
class budget_error : public error {
 public:
  using error::error;
};

}  // namespace gdstream
