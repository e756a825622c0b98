#ifndef PARMETRIC_PARMETRIC_HPP
#define PARMETRIC_PARMETRIC_HPP

#include "parmetric/chain_closure.hpp"
#include "parmetric/construct.hpp"
#include "parmetric/delta.hpp"
#include "parmetric/distances.hpp"
#include "parmetric/dyadic.hpp"
#include "parmetric/generate.hpp"
#include "parmetric/io.hpp"
#include "parmetric/metric_space.hpp"
#include "parmetric/oracle.hpp"
#include "parmetric/parallel.hpp"
#include "parmetric/partition.hpp"
#include "parmetric/point_set.hpp"
#include "parmetric/scale_cover.hpp"
#include "parmetric/semicontinuity.hpp"

#endif
