#pragma once

#include "isr/augmenting.hpp"
#include "isr/bipartite.hpp"
#include "isr/claw.hpp"
#include "isr/generate.hpp"
#include "isr/graph.hpp"
#include "isr/instance.hpp"
#include "isr/io.hpp"
#include "isr/mis.hpp"
#include "isr/modular.hpp"
#include "isr/oracle.hpp"
#include "isr/patterns.hpp"
#include "isr/reach.hpp"
#include "isr/reductions.hpp"
#include "isr/solver.hpp"
#include "isr/subdivision.hpp"
#include "isr/vertex_set.hpp"
