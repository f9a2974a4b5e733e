// SPDX-License-Identifier: Apache-2.0
//
// Error types thrown by the library. Everything derives from std exceptions
// so callers can catch broadly; the distinct types exist because tests and
// the CLI map them to different exit codes.

#ifndef RIS_ERRORS_HPP
#define RIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ris {

// Bad argument values (non-positive spacing, even subcarrier count, ...).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scene geometry that cannot be evaluated (TX behind the array, coincident
// positions, ...).
class degenerate_geometry : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Division by a zero calibration/waveform weight.
class calibration_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard resource guard (exhaustive search for K > 20).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// File read/write failure; carries the offending path in the message.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ris

#endif
