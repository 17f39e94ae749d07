#pragma once

#include "bitrow.hpp"
#include "checker.hpp"
#include "clique_cover.hpp"
#include "combinator.hpp"
#include "ekr.hpp"
#include "errors.hpp"
#include "game.hpp"
#include "hamming_graph.hpp"
#include "independence.hpp"
#include "level_bound.hpp"
#include "pipeline.hpp"
#include "quantum.hpp"
#include "reduction.hpp"
#include "symmetry.hpp"
#include "word.hpp"
