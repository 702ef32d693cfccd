#pragma once

#include "sbatch/model.hpp"
#include "sbatch/heap.hpp"
#include "sbatch/csf.hpp"
#include "sbatch/trace.hpp"
#include "sbatch/bounded_solver.hpp"
#include "sbatch/prec_solver.hpp"
#include "sbatch/pareto.hpp"
#include "sbatch/oracle.hpp"
#include "sbatch/io.hpp"
#include "sbatch/verify.hpp"
#include "sbatch/bench.hpp"
