#pragma once

#include "sepoly/conjectures.hpp"
#include "sepoly/context.hpp"
#include "sepoly/errors.hpp"
#include "sepoly/facets.hpp"
#include "sepoly/geometry.hpp"
#include "sepoly/graph.hpp"
#include "sepoly/interior.hpp"
#include "sepoly/io.hpp"
#include "sepoly/jaeger.hpp"
#include "sepoly/numeric.hpp"
#include "sepoly/poly.hpp"
#include "sepoly/shelling.hpp"
