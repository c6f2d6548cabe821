#ifndef MLHARM_MLHARM_HPP
#define MLHARM_MLHARM_HPP

#include "mlharm/errors.hpp"
#include "mlharm/family.hpp"
#include "mlharm/grid.hpp"
#include "mlharm/harmonic.hpp"
#include "mlharm/operator.hpp"
#include "mlharm/sampling.hpp"
#include "mlharm/specfun.hpp"
#include "mlharm/verify.hpp"

#endif  // MLHARM_MLHARM_HPP
