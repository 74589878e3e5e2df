#pragma once

#include <stdexcept>
#include <string>

namespace tdlc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& w) : Error("NotASubgroup: " + w) {}
};

struct InfiniteIndex : Error {
  explicit InfiniteIndex(const std::string& w) : Error("InfiniteIndex: " + w) {}
};

struct LevelExceeded : Error {
  explicit LevelExceeded(const std::string& w) : Error("LevelExceeded: " + w) {}
};

struct NotRepresentable : Error {
  explicit NotRepresentable(const std::string& w) : Error("NotRepresentable: " + w) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& w) : Error("NotClosed: " + w) {}
};

struct NotNested : Error {
  explicit NotNested(const std::string& w) : Error("NotNested: " + w) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error("TooLarge: " + w) {}
};

struct RadiusExceeded : Error {
  explicit RadiusExceeded(const std::string& w) : Error("RadiusExceeded: " + w) {}
};

struct SegmentUnavailable : Error {
  explicit SegmentUnavailable(const std::string& w) : Error("SegmentUnavailable: " + w) {}
};

struct UnsupportedAutomorphism : Error {
  explicit UnsupportedAutomorphism(const std::string& w)
      : Error("UnsupportedAutomorphism: " + w) {}
};

struct BackendUnsupported : Error {
  explicit BackendUnsupported(const std::string& w) : Error("BackendUnsupported: " + w) {}
};

struct BadInput : Error {
  explicit BadInput(const std::string& w) : Error("BadInput: " + w) {}
};

}  // namespace tdlc
