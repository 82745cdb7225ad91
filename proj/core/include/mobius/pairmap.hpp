#pragma once

#include "mobius/pair.hpp"

namespace mobius {

/// Pointwise data of the point-pair map H = Y ^ Yhat into the Grassmannian
/// of 2-dim Minkowski subspaces.
struct PairMapPoint {
  Complex hh;        // <H, H>, must equal -1
  Complex hz_hz;     // <H_z, H_z>  = theta
  Complex hz_hzb;    // <H_z, H_zb> = (rho + rhobar)/2
  double harmonic_residual = 0.0;
};

/// First and second fundamental data of H by jet differentiation of the
/// factors, plus the harmonicity defect: the component of H_zzb along the
/// admissible variations w ^ Yhat + Y ^ what with w, what orthogonal to
/// Span{Y, Yhat}.
PairMapPoint pairmap_fundamental(const JetVec& Y, const JetVec& Yhat);

/// E(H) = 2 * integral of (rho + rhobar) du dv over the grid.
double pair_energy(const std::vector<std::vector<Complex>>& rho,
                   const Domain& dom, const GridSpec& grid);

}  // namespace mobius
