#pragma once

#include <stdexcept>
#include <string>

namespace treegf {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The edge list does not describe a tree (cycle, disconnection, self-loop,
/// duplicate edge, vertex id out of range, wrong edge count).
struct NotATree : Error {
  using Error::Error;
};

/// Weight tokens from incompatible ring instantiations were mixed.
struct MixedRings : Error {
  using Error::Error;
};

/// Requested contraction target is not a pendant vertex of the live tree.
struct NotPendant : Error {
  using Error::Error;
};

/// Requested vertex has already been eliminated.
struct NotLive : Error {
  using Error::Error;
};

/// Two-vertex operation called with identical vertices.
struct SameVertex : Error {
  using Error::Error;
};

/// Input exceeds a hard enumeration cap.
struct TooLarge : Error {
  using Error::Error;
};

/// Family or transformation parameters violate their admissible range.
struct BadParameters : Error {
  using Error::Error;
};

/// Branch root is not adjacent to the pivot vertex.
struct NotNeighbor : Error {
  using Error::Error;
};

/// Removing the branch would leave fewer than two vertices behind.
struct BranchTooLarge : Error {
  using Error::Error;
};

/// The claimed leg is not a pendant path ending at the given leaf.
struct NotPendantPath : Error {
  using Error::Error;
};

/// Leg length below the lemma hypothesis (s, t >= 2).
struct LegTooShort : Error {
  using Error::Error;
};

/// Tree file could not be parsed; carries the offending 1-based line.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace treegf
