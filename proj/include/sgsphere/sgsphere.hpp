#pragma once

#include "complex.hpp"
#include "equivariant.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "kneser.hpp"
#include "labels.hpp"
#include "morse.hpp"
#include "phi.hpp"
#include "pipeline.hpp"
#include "planarity.hpp"
#include "realization.hpp"
#include "ring_sphere.hpp"
#include "stable_set.hpp"
#include "surface.hpp"
