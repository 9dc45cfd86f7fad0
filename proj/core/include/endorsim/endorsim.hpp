#pragma once

#include "endorsim/analysis.hpp"
#include "endorsim/endorsement_set.hpp"
#include "endorsim/error.hpp"
#include "endorsim/graph.hpp"
#include "endorsim/growth.hpp"
#include "endorsim/io.hpp"
#include "endorsim/local_search.hpp"
#include "endorsim/pattern.hpp"
#include "endorsim/random.hpp"
#include "endorsim/reduction.hpp"
#include "endorsim/sampling.hpp"
#include "endorsim/serialization.hpp"
