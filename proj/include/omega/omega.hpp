#pragma once

#include "omega/acceptor.hpp"
#include "omega/automaton.hpp"
#include "omega/dma_inclusion.hpp"
#include "omega/dpa_inclusion.hpp"
#include "omega/io.hpp"
#include "omega/product.hpp"
#include "omega/right_congruence.hpp"
#include "omega/scc.hpp"
#include "omega/witness.hpp"
