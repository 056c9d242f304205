#pragma once

#include <stdexcept>
#include <string>

namespace subcorona {

enum class errc {
  invalid_params,
  non_square,
  not_monic,
  not_symmetric,
  complex_roots,
  reg_required,
  inexact_division,
  edge_required,
  disconnected,
  too_large,
  hypothesis_not_met,
};

inline const char* name(errc c) {
  switch (c) {
    case errc::invalid_params: return "INVALID_PARAMS";
    case errc::non_square: return "NON_SQUARE";
    case errc::not_monic: return "NOT_MONIC";
    case errc::not_symmetric: return "NOT_SYMMETRIC";
    case errc::complex_roots: return "COMPLEX_ROOTS";
    case errc::reg_required: return "REG_REQUIRED";
    case errc::inexact_division: return "INEXACT_DIVISION";
    case errc::edge_required: return "EDGE_REQUIRED";
    case errc::disconnected: return "DISCONNECTED";
    case errc::too_large: return "TOO_LARGE";
    case errc::hypothesis_not_met: return "HYPOTHESIS_NOT_MET";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace subcorona
