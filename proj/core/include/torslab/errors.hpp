#ifndef TORSLAB_ERRORS_HPP
#define TORSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torslab {

enum class ErrKind {
  NotAPoset,
  NotALattice,
  UnknownElement,
  NoUniqueMax,
  NotJoinIrreducible,
  NotCanonical,
  TooLarge,
  InvalidKupisch,
  UnsupportedShape,
  ShapeMismatch,
  NotIntertwiner,
  NotExtensionClosed,
  OracleUnsupported,
  NotMinimalExtending,
  NotABrick,
  NotMonobrick,
  NotSemibrick,
  UnknownCheck,
  IoError,
};

inline const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::NotAPoset: return "NotAPoset";
    case ErrKind::NotALattice: return "NotALattice";
    case ErrKind::UnknownElement: return "UnknownElement";
    case ErrKind::NoUniqueMax: return "NoUniqueMax";
    case ErrKind::NotJoinIrreducible: return "NotJoinIrreducible";
    case ErrKind::NotCanonical: return "NotCanonical";
    case ErrKind::TooLarge: return "TooLarge";
    case ErrKind::InvalidKupisch: return "InvalidKupisch";
    case ErrKind::UnsupportedShape: return "UnsupportedShape";
    case ErrKind::ShapeMismatch: return "ShapeMismatch";
    case ErrKind::NotIntertwiner: return "NotIntertwiner";
    case ErrKind::NotExtensionClosed: return "NotExtensionClosed";
    case ErrKind::OracleUnsupported: return "OracleUnsupported";
    case ErrKind::NotMinimalExtending: return "NotMinimalExtending";
    case ErrKind::NotABrick: return "NotABrick";
    case ErrKind::NotMonobrick: return "NotMonobrick";
    case ErrKind::NotSemibrick: return "NotSemibrick";
    case ErrKind::UnknownCheck: return "UnknownCheck";
    case ErrKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const noexcept { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace torslab

#endif
