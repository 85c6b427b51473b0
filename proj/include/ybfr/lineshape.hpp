#pragma once

#include <optional>

#include "ybfr/atomdata.hpp"

namespace ybfr {

// Dispersive lineshape (center - omega) / ((center - omega)^2 + (width/2)^2).
// Units: s/rad. Odd about the center, with extrema +-1/width at
// center - omega = +-width/2.
double dispersive(double center, double omega, double width);

// Peak-normalized Lorentzian (width/2)^2 / ((center - omega)^2 + (width/2)^2),
// in (0, 1]. Multiplies sigma0 and a line strength to give an effective cross
// section.
double lorentzian_absorption(double center, double omega, double width);

// Squared Rabi frequency gamma^2 I / (2 I_sat), (rad/s)^2.
double rabi_squared(double intensity, const TransitionConstants& constants);

// Photon scattering rate of a two-level atom,
// (gamma/4) Omega^2 / (detuning^2 + (gamma/2)^2 + (Omega/2)^2), 1/s.
// Always evaluated with the natural gamma, never a Doppler substitute.
double scattering_rate(double intensity, double detuning, const TransitionConstants& constants);

// The T2* -> T2 substitution: the Doppler-broadened width replaces the natural
// one wherever a broadening is configured, otherwise the natural width is kept.
double effective_linewidth(double natural, std::optional<double> doppler);

}  // namespace ybfr
