#ifndef RNAFOLD_RNAFOLD_HPP
#define RNAFOLD_RNAFOLD_HPP

#include "rnafold/approx.hpp"
#include "rnafold/bounds.hpp"
#include "rnafold/enumerate.hpp"
#include "rnafold/error.hpp"
#include "rnafold/io.hpp"
#include "rnafold/lattice.hpp"
#include "rnafold/matching.hpp"
#include "rnafold/reduction.hpp"
#include "rnafold/render.hpp"
#include "rnafold/solver.hpp"

#endif  // RNAFOLD_RNAFOLD_HPP
