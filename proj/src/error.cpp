#include "precrossed/error.hpp"

namespace precrossed {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotSelfDistributive: return "NotSelfDistributive";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::ActionInvalid: return "ActionInvalid";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotByAutomorphisms: return "NotByAutomorphisms";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::NotChainMap: return "NotChainMap";
    case ErrorKind::NotChainComplex: return "NotChainComplex";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace precrossed
