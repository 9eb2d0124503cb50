#pragma once

#include "toeplitz/cliques.hpp"
#include "toeplitz/degrees.hpp"
#include "toeplitz/dense_graph.hpp"
#include "toeplitz/hole.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/spec.hpp"
#include "toeplitz/structure.hpp"
