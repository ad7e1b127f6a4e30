#include "srsim/state.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace srsim {

SystemState::SystemState(double tau, ModeField psi00, ModeField psi11,
                         ModeField psim1m1)
    : tau_(tau),
      psi00_(std::move(psi00)),
      psi11_(std::move(psi11)),
      psim1m1_(std::move(psim1m1)) {
  if (!(tau_ >= 0.0))
    throw std::invalid_argument("SystemState: tau must be >= 0, got " +
                                std::to_string(tau_));
  if (psi00_.mode() != Mode::condensate || psi11_.mode() != Mode::forward ||
      psim1m1_.mode() != Mode::backward)
    throw std::invalid_argument("SystemState: fields passed in wrong order");
  if (!(psi00_.grid() == psi11_.grid()) ||
      !(psi00_.grid() == psim1m1_.grid()))
    throw std::invalid_argument(
        "SystemState: all three fields must share one grid");
}

double SystemState::total_norm() const {
  return psi00_.norm() + psi11_.norm() + psim1m1_.norm();
}

}  // namespace srsim
