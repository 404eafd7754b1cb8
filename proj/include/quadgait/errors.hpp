#pragma once

#include <stdexcept>
#include <string>

namespace quadgait {

/// Base class for every error raised by the gait library.
class GaitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A planner could not produce a feasible plan (stroke, workspace, stability or
/// clearance constraint cannot be met).
class InfeasibleError : public GaitError {
public:
  using GaitError::GaitError;
};

/// A state does not satisfy a geometric precondition (e.g. foot outside its workspace).
class InfeasibleStateError : public GaitError {
public:
  using GaitError::GaitError;
};

/// No foot is in contact, so no support polygon exists.
class NoSupportError : public GaitError {
public:
  using GaitError::GaitError;
};

/// Timeline structure is broken (gaps, overlapping swings, bad durations).
class MalformedTimelineError : public GaitError {
public:
  using GaitError::GaitError;
};

}  // namespace quadgait
