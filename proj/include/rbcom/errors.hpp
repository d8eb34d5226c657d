#pragma once

#include <stdexcept>

namespace rbcom {

/// Element or resonator geometry violating a structural invariant
/// (negative propagation distance, zero focal length, l < f, ...).
class InvalidGeometryError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Resonator outside the stable range 0 < g1* g2* < 1; no confined eigenmode.
class UnstableResonatorError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Stability parameters for which the eigenmode formula is singular.
class DegenerateResonatorError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// q-parameter transform hit an exact focus (c q + d = 0).
class BeamCollapseError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Beam state that is not a confined Gaussian beam (Im(1/q) >= 0).
class InvalidBeamError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Loss budget with round-trip amplitude factor r1 r2 outside (0, 1).
class NonphysicalLossBudgetError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Configuration file or override that fails to parse or validate.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rbcom
