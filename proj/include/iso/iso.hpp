#pragma once

// Umbrella header: isolating-set verifiers, exact solvers, constructive
// bounds, gadget builders, and instance generators.

#include "iso/certificate.hpp"
#include "iso/coloring.hpp"
#include "iso/constructive.hpp"
#include "iso/errors.hpp"
#include "iso/exact.hpp"
#include "iso/gadgets.hpp"
#include "iso/generators.hpp"
#include "iso/graph.hpp"
#include "iso/io.hpp"
#include "iso/isolation.hpp"
#include "iso/kcolor.hpp"
#include "iso/rng.hpp"
#include "iso/sweep.hpp"
#include "iso/vertex_set.hpp"
