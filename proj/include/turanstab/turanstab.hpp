#pragma once

// Umbrella header.

#include "turanstab/cli.hpp"
#include "turanstab/errors.hpp"
#include "turanstab/generators.hpp"
#include "turanstab/graph.hpp"
#include "turanstab/homomorphism.hpp"
#include "turanstab/io.hpp"
#include "turanstab/limits.hpp"
#include "turanstab/oracle.hpp"
#include "turanstab/partitioner.hpp"
#include "turanstab/rng.hpp"
#include "turanstab/stability.hpp"
#include "turanstab/vertex_set.hpp"
