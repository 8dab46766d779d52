#pragma once

#include "sigfrac/bits.hpp"
#include "sigfrac/catalog.hpp"
#include "sigfrac/circulant.hpp"
#include "sigfrac/coloring.hpp"
#include "sigfrac/errors.hpp"
#include "sigfrac/fractional.hpp"
#include "sigfrac/homomorphism.hpp"
#include "sigfrac/independent_sets.hpp"
#include "sigfrac/limits.hpp"
#include "sigfrac/lp.hpp"
#include "sigfrac/persistence.hpp"
#include "sigfrac/rational.hpp"
#include "sigfrac/report.hpp"
#include "sigfrac/sg_format.hpp"
#include "sigfrac/signed_graph.hpp"
#include "sigfrac/verify.hpp"
