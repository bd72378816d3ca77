#pragma once

#include <string>
#include <vector>

#include "affkm/loop.hpp"
#include "affkm/text.hpp"

namespace affkm {

/// Parsed algebra file:
///
///   schema 1
///   type A2            # or D4, ..., or TABLE
///   diagram 2 1        # optional, 1-based images of the simple roots
///   cartan 2 -1        # TABLE only, one row per line
///   constant a1 a2 1   # TABLE only, [X_a, X_b] = N X_{a+b}
struct AlgebraDescription {
  RootDatum datum;
  std::vector<int> diagram;  // 0-based; empty means the identity
};

/// Throws ParseError for malformed text and Unsupported for unknown types.
AlgebraDescription parse_description(const std::string& text);
AlgebraDescription read_description(const std::string& path);

LoopAlgebraPtr build_algebra(const AlgebraDescription& desc);
/// A file path, or a bare type name such as "A2" for the untwisted algebra.
LoopAlgebraPtr load_algebra(const std::string& path_or_type);

}  // namespace affkm
