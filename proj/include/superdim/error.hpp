#pragma once

#include <stdexcept>
#include <string>

namespace superdim {

// Failure kinds of the domain operations. Parse failures are kept apart so
// callers can distinguish bad input syntax from violated preconditions.
enum class Errc {
  DominanceViolation,
  BadShape,
  CardinalityMismatch,
  NotMaximalAtypical,
  NotMaximalAtypicalBlock,
  DifferentBlocks,
  NotKostant,
  FullyNested,
  NonTermination,
  BadIndex,
  HookViolation,
  NonDominant,
  ParseError,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DominanceViolation: return "DominanceViolation";
    case Errc::BadShape: return "BadShape";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::NotMaximalAtypical: return "NotMaximalAtypical";
    case Errc::NotMaximalAtypicalBlock: return "NotMaximalAtypicalBlock";
    case Errc::DifferentBlocks: return "DifferentBlocks";
    case Errc::NotKostant: return "NotKostant";
    case Errc::FullyNested: return "FullyNested";
    case Errc::NonTermination: return "NonTermination";
    case Errc::BadIndex: return "BadIndex";
    case Errc::HookViolation: return "HookViolation";
    case Errc::NonDominant: return "NonDominant";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace superdim
