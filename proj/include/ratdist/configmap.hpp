#pragma once

#include <utility>

#include "ratdist/curve_family.hpp"

namespace ratdist {

/// Phi(x:y:z) = ((-c(z^2-x^2) - 2dxz : a(z^2-x^2) + 2bxz), (z^2-x^2 : 2xz)).
/// Both slopes are Pythagorean and lie on F_eta; Phi is constant on Gamma-orbits.
std::pair<SlopePair, SlopePair> phi(const MatrixEta& eta, const WProjPoint& p);

/// A point of H_eta over (alpha1, alpha2). Picks the least (x:z) over alpha2
/// and y > 0; the rest of the fibre is gamma_orbit of the result.
WProjPoint phi_lift(const MatrixEta& eta, const SlopePair& alpha1, const SlopePair& alpha2);

}  // namespace ratdist
