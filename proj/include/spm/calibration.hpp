#pragma once

// Constants fitted by tools/calibrate on seeds and grids disjoint from the
// verification sweeps, then frozen. Each is twice the observed maximum.

namespace spm::calibration {

// oscillatory large sieve ratio, max 1.88235
inline constexpr double kSieveC = 3.7647058823529478;
// |What(u/A)| / A against min(1/|u|, (|B|/A)/(1 + u^2)), max 0.316321
inline constexpr double kHatC = 0.63264233090380961;
// |W(x)| (1 + (A + |x|)/|B|)^K for K = 0..4
inline constexpr double kDecayC[5] = {1.2788161056487317, 1.3997704251189755, 1.5366955121963068, 4.9800868172290578, 63.435316785242243};
// (S - S_1 bound) / error envelope, max 0.0161549
inline constexpr double kEnvelopeC = 0.032309741255868205;

}  // namespace spm::calibration
