#include "moduli/error.hpp"

namespace moduli {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::non_curve_class: return "non-curve class";
    case Errc::inconsistent_sequence: return "inconsistent sequence";
    case Errc::invalid_rank: return "invalid rank";
    case Errc::invalid_family: return "invalid family";
    case Errc::h0_not_justified: return "h0 formula not justified";
    case Errc::vanishing_not_justified: return "Riemann-Roch vanishing not justified";
    case Errc::empty_grassmannian: return "empty Grassmannian";
    case Errc::not_k3: return "not a K3 model";
    case Errc::out_of_range: return "out of range";
    case Errc::not_admissible: return "not admissible";
    case Errc::chi_unknown: return "chi(O_S) unknown";
    case Errc::bad_input: return "bad input";
  }
  return "unknown";
}

}  // namespace moduli
