// Copyright 2026 The matgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace matgen {

// Error hierarchy. Ops throw the most specific subtype; the CLI maps
// ArgumentError/IoError to exit code 2 and everything else to 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid/tensor shape disagreement between arguments.
struct DimensionError : Error {
    using Error::Error;
};

// Value outside its documented domain (e.g. channel not in [0,1]).
struct DomainError : Error {
    using Error::Error;
};

// Well-shaped data violating a format invariant (e.g. packed R != 1).
struct FormatError : Error {
    using Error::Error;
};

// Malformed input file; message carries the line number where known.
struct ParseError : Error {
    using Error::Error;
};

// Bad call arguments (unsupported view count, missing mask, ...).
struct ArgumentError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace matgen
