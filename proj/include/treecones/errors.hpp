#pragma once

#include <stdexcept>

namespace treecones {

// Malformed text input (tree lists, permutations, rationals, point files).
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a semantic precondition
// (edge list is not a spanning tree, mixed n, non-bijective values, ...).
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point landed on a cone facet: some tree coordinate is exactly zero.
// Indicators are only defined at generic points; the caller must resample.
struct BoundaryPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplingExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The joint kernel of the inflow operators did not come out one-dimensional.
struct KernelDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The symbolic pairing and its closed form disagreed.
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace treecones
