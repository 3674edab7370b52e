#include "mtv/error.hpp"

namespace mtv {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ReversalViolation: return "ReversalViolation";
    case ErrorKind::CocycleViolation: return "CocycleViolation";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::EmptyComponent: return "EmptyComponent";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DegreeInBadSet: return "DegreeInBadSet";
    case ErrorKind::BadDegreeSample: return "BadDegreeSample";
    case ErrorKind::NoValidH: return "NoValidH";
    case ErrorKind::BadBFunction: return "BadBFunction";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InadmissibleLabel: return "InadmissibleLabel";
    case ErrorKind::InadmissibleState: return "InadmissibleState";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::BadLink: return "BadLink";
    case ErrorKind::NotQuasiRegular: return "NotQuasiRegular";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::InadmissibleEdge: return "InadmissibleEdge";
    case ErrorKind::GuardFailed: return "GuardFailed";
    case ErrorKind::HamiltonicityLost: return "HamiltonicityLost";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::UnsupportedDecoration: return "UnsupportedDecoration";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mtv
