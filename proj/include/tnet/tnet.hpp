#pragma once

#include "tnet/applications.hpp"
#include "tnet/cover.hpp"
#include "tnet/dims.hpp"
#include "tnet/entropy.hpp"
#include "tnet/error.hpp"
#include "tnet/generators.hpp"
#include "tnet/geometry.hpp"
#include "tnet/hypergraph.hpp"
#include "tnet/io.hpp"
#include "tnet/nets.hpp"
#include "tnet/subset.hpp"
#include "tnet/tuples.hpp"
