// Umbrella header for the hamgraph library.
#pragma once

#include "bounds.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "corpus.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "params.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "transitions.hpp"
#include "word.hpp"
