#include "plumb/error.hpp"

namespace plumb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::degenerate: return "degenerate expansion";
    case ErrorKind::not_reduced: return "not a reduced cycle";
    case ErrorKind::not_blowdown_candidate: return "not a blowdown candidate";
    case ErrorKind::irreducible: return "irreducible";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::bound_exceeded: return "bound exceeded";
    case ErrorKind::imbalanced_annulus: return "imbalanced annulus";
    case ErrorKind::unreachable_framing: return "cannot reach framing by stabilization";
    case ErrorKind::malformed_front: return "malformed front";
    case ErrorKind::length_mismatch: return "length mismatch";
    case ErrorKind::singular: return "d3 undefined for this presentation";
    case ErrorKind::overflow: return "overflow";
  }
  return "unknown";
}

}  // namespace plumb
