#pragma once

// Exact computational toolkit for finite-dimensional asymmetric normed
// spaces: rational LP with certificates, polyhedral asymmetric norms and
// quasi-metric balls, mixed binary-intersection checks, Hahn-Banach
// extension engines, and the glued-norm non-injectivity pipeline.

#include "asymspace/balls.hpp"
#include "asymspace/bip.hpp"
#include "asymspace/errors.hpp"
#include "asymspace/extend.hpp"
#include "asymspace/geometry2d.hpp"
#include "asymspace/hull.hpp"
#include "asymspace/linalg.hpp"
#include "asymspace/lp.hpp"
#include "asymspace/mu_norm.hpp"
#include "asymspace/norms.hpp"
#include "asymspace/operators.hpp"
#include "asymspace/pair_tables.hpp"
#include "asymspace/random.hpp"
#include "asymspace/rational.hpp"
#include "asymspace/vec.hpp"
